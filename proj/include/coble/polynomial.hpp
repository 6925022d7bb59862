#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coble/rational.hpp"

namespace coble {

// A polynomial ring is an ordered variable list plus a Laurent flag.
// Rings are compared by content, so independently built rings with the
// same variables are interchangeable.
struct Ring {
    std::vector<std::string> vars;
    bool laurent = false;

    std::size_t arity() const { return vars.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("Ring: unknown variable '" + name + "'");
    }

    bool operator==(const Ring& o) const {
        return laurent == o.laurent && vars == o.vars;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, bool laurent = false) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->laurent = laurent;
    return r;
}

// t1..tn (or another stem).
inline RingPtr make_var_ring(int n, const std::string& stem = "t",
                             bool laurent = false) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return make_ring(std::move(names), laurent);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector; entries may be negative in Laurent mode.
using Exp = std::vector<int>;

inline long total_degree(const Exp& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

// Graded lexicographic order: total degree first, then lexicographic on
// the exponent vector. This is a translation-invariant total order on
// Z^n, so leading terms are multiplicative also in Laurent mode.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
    }
};

class Polynomial {
public:
    using TermMap = std::map<Exp, Rat, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
        if (sgn(c) != 0) terms_.emplace(Exp(ring_->arity(), 0), c);
    }

    static Polynomial constant(RingPtr ring, const Rat& c) {
        return Polynomial(std::move(ring), c);
    }

    static Polynomial variable(RingPtr ring, int i) {
        Polynomial p(ring);
        if (i < 0 || static_cast<std::size_t>(i) >= ring->arity())
            throw std::out_of_range("Polynomial::variable: index");
        Exp e(ring->arity(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static Polynomial monomial(RingPtr ring, Exp e, const Rat& c) {
        Polynomial p(ring);
        if (e.size() != ring->arity())
            throw std::invalid_argument("Polynomial::monomial: arity mismatch");
        p.check_exp(e, *ring);
        if (sgn(c) != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
                *std::max_element(terms_.begin()->first.begin(),
                                  terms_.begin()->first.end()) == 0 &&
                *std::min_element(terms_.begin()->first.begin(),
                                  terms_.begin()->first.end()) == 0);
    }

    // Leading term in graded-lex order.
    const std::pair<const Exp, Rat>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading(): zero polynomial");
        return *terms_.rbegin();
    }

    long degree() const {  // max total degree; 0 for the zero polynomial
        long d = 0;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long t = total_degree(e);
            if (first || t > d) d = t;
            first = false;
        }
        return d;
    }

    long min_degree() const {
        long d = 0;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long t = total_degree(e);
            if (first || t < d) d = t;
            first = false;
        }
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = total_degree(terms_.begin()->first);
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a -= b;
        return a;
    }
    Polynomial operator-() const {
        Polynomial r(ring_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial r(a.ring_);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                Exp e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rat& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rat& c) {
        p *= c;
        return p;
    }
    friend Polynomial operator*(const Rat& c, Polynomial p) {
        p *= c;
        return p;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("Polynomial::pow: negative");
        Polynomial r = constant(ring_, Rat(1));
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Total order for use as map keys; compares term maps grlex-wise.
    bool operator<(const Polynomial& o) const {
        auto it = terms_.begin(), jt = o.terms_.begin();
        GrlexLess less;
        for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
            if (less(it->first, jt->first)) return true;
            if (less(jt->first, it->first)) return false;
            int cmp = cmp_rat(it->second, jt->second);
            if (cmp != 0) return cmp < 0;
        }
        return it == terms_.end() && jt != o.terms_.end();
    }

    // p or -p, whichever has positive leading coefficient.
    Polynomial canonical_sign() const {
        if (terms_.empty())
            throw std::invalid_argument("canonical_sign: zero polynomial");
        if (sgn(leading().second) > 0) return *this;
        return -*this;
    }

    Polynomial derivative(int var) const {
        Polynomial r(ring_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp d = e;
            d[var] -= 1;
            r.add_term(std::move(d), c * Rat(e[var]));
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (point.size() != ring_->arity())
            throw std::invalid_argument("evaluate: arity mismatch");
        Rat total(0);
        for (auto& [e, c] : terms_) {
            Rat m = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (e[i] < 0 && sgn(point[i]) == 0)
                    throw std::domain_error("evaluate: 0 to negative power");
                Rat p(1);
                int k = e[i] < 0 ? -e[i] : e[i];
                Rat base = point[i];
                while (k-- > 0) p *= base;
                if (e[i] < 0) p = 1 / p;
                m *= p;
            }
            total += m;
        }
        return total;
    }

    // Substitutes images[i] for variable i; all images share one ring,
    // which becomes the result's ring. Negative exponents are rejected.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->arity())
            throw std::invalid_argument("substitute: arity mismatch");
        RingPtr out = images.empty() ? ring_ : images[0].ring();
        Polynomial r(out);
        std::map<std::pair<int, int>, Polynomial> powers;
        for (auto& [e, c] : terms_) {
            Polynomial m = constant(out, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (e[i] < 0)
                    throw std::domain_error("substitute: negative exponent");
                auto key = std::make_pair(static_cast<int>(i), e[i]);
                auto it = powers.find(key);
                if (it == powers.end())
                    it = powers.emplace(key, images[i].pow(e[i])).first;
                m = m * it->second;
            }
            r += m;
        }
        return r;
    }

    // Fast path for variable permutations: term exponents are permuted,
    // coefficients unchanged. perm[i] = index the i-th variable maps to.
    Polynomial permute_variables(const std::vector<int>& perm) const {
        if (perm.size() != ring_->arity())
            throw std::invalid_argument("permute_variables: arity mismatch");
        Polynomial r(ring_);
        for (auto& [e, c] : terms_) {
            Exp d(e.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) d[perm[i]] = e[i];
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }

    // t -> -t on every variable.
    Polynomial negate_variables() const {
        Polynomial r(ring_);
        for (auto& [e, c] : terms_)
            r.terms_.emplace(e, (total_degree(e) % 2 == 0) ? c : -c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            Rat a = abs(c);
            bool has_var = total_degree(it->first) != 0 ||
                           *std::min_element(it->first.begin(), it->first.end()) < 0;
            if (a != 1 || !has_var) os << to_string(a);
            bool star = (a != 1);
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (star) os << "*";
                os << ring_->vars[i];
                if (e != 1) os << "^" << e;
                star = true;
            }
        }
        return os.str();
    }

private:
    static int cmp_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

    void check_exp(const Exp& e, const Ring& ring) const {
        if (ring.laurent) return;
        for (int v : e)
            if (v < 0)
                throw std::invalid_argument(
                    "Polynomial: negative exponent outside Laurent mode");
    }

    void require_same_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_))
            throw std::invalid_argument(
                "Polynomial: operands from different rings");
    }

    void add_term(Exp e, Rat c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    RingPtr ring_;
    TermMap terms_;

    friend std::optional<Polynomial> exact_divide(const Polynomial&,
                                                  const Polynomial&);
};

// Reinterprets p in another ring, sending variable i to index_map[i].
inline Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                                const std::vector<int>& index_map) {
    if (index_map.size() != p.ring()->arity())
        throw std::invalid_argument("map_variables: arity mismatch");
    Polynomial out(target);
    for (auto& [e, c] : p.terms()) {
        Exp d(target->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            d.at(index_map[i]) += e[i];
        }
        out += Polynomial::monomial(target, std::move(d), c);
    }
    return out;
}

inline Polynomial linear_form(const RingPtr& ring, const std::vector<Rat>& coef) {
    if (coef.size() != ring->arity())
        throw std::invalid_argument("linear_form: arity mismatch");
    Polynomial p(ring);
    for (std::size_t i = 0; i < coef.size(); ++i)
        if (sgn(coef[i]) != 0)
            p += Polynomial::monomial(ring, [&] {
                Exp e(ring->arity(), 0);
                e[i] = 1;
                return e;
            }(), coef[i]);
    return p;
}

// Coefficient vector of a polynomial of degree <= 1 with zero constant term.
inline std::vector<Rat> linear_coefficients(const Polynomial& p) {
    std::vector<Rat> c(p.ring()->arity(), Rat(0));
    for (auto& [e, v] : p.terms()) {
        if (total_degree(e) != 1)
            throw std::invalid_argument("linear_coefficients: not linear");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) c[i] = v;
    }
    return c;
}

// Exact division. Returns the quotient when p = q * r exactly, otherwise
// nullopt. Single-divisor reduction along graded-lex leading terms; the
// per-variable exponent box of the true quotient bounds the search so the
// loop terminates in Laurent mode as well.
inline std::optional<Polynomial> exact_divide(const Polynomial& p,
                                              const Polynomial& q) {
    if (!same_ring(p.ring(), q.ring()))
        throw std::invalid_argument("exact_divide: ring mismatch");
    if (q.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    Polynomial quot(p.ring());
    if (p.is_zero()) return quot;

    const std::size_t n = p.ring()->arity();
    // Exponent box: for exact quotients, min/max exponents per variable
    // are differences of those of p and q.
    std::vector<int> lo(n), hi(n);
    {
        std::vector<int> pmin(n, 0), pmax(n, 0), qmin(n, 0), qmax(n, 0);
        bool first = true;
        for (auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                if (first || e[i] < pmin[i]) pmin[i] = e[i];
                if (first || e[i] > pmax[i]) pmax[i] = e[i];
            }
            first = false;
        }
        first = true;
        for (auto& [e, c] : q.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                if (first || e[i] < qmin[i]) qmin[i] = e[i];
                if (first || e[i] > qmax[i]) qmax[i] = e[i];
            }
            first = false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = pmin[i] - qmin[i];
            hi[i] = pmax[i] - qmax[i];
        }
    }

    Polynomial rem = p;
    const auto& qlead = q.leading();
    const bool laurent = p.ring()->laurent;
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        Exp m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = rlead.first[i] - qlead.first[i];
            if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
            if (!laurent && m[i] < 0) return std::nullopt;
        }
        Rat c = rlead.second / qlead.second;
        Polynomial t = Polynomial::monomial(p.ring(), m, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

// Linear change of variables acting on polynomials: apply() substitutes
// t_i -> sum_j m[i][j] t_j. Monomial images are memoized per instance,
// so reuse one substitution across many polynomials when possible.
class LinearSubstitution {
public:
    LinearSubstitution() = default;
    LinearSubstitution(RingPtr ring, std::vector<std::vector<Rat>> m)
        : ring_(std::move(ring)), m_(std::move(m)) {
        const std::size_t n = ring_->arity();
        if (m_.size() != n)
            throw std::invalid_argument("LinearSubstitution: shape");
        for (auto& row : m_)
            if (row.size() != n)
                throw std::invalid_argument("LinearSubstitution: shape");
        classify();
    }

    static LinearSubstitution identity(RingPtr ring) {
        const std::size_t n = ring->arity();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
        return LinearSubstitution(std::move(ring), std::move(m));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::vector<Rat>>& matrix() const { return m_; }

    bool is_identity() const {
        const std::size_t n = ring_->arity();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m_[i][j] != Rat(i == j ? 1 : 0)) return false;
        return true;
    }

    bool operator==(const LinearSubstitution& o) const { return m_ == o.m_; }

    Polynomial apply(const Polynomial& p) const {
        if (!same_ring(p.ring(), ring_))
            throw std::invalid_argument("LinearSubstitution: ring mismatch");
        if (signed_perm_) {
            Polynomial r(ring_);
            for (auto& [e, c] : p.terms()) {
                Exp d(e.size(), 0);
                Rat v = c;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    d[perm_[i]] = e[i];
                    if (sign_[i] < 0 && (e[i] & 1)) v = -v;
                }
                r += Polynomial::monomial(ring_, std::move(d), v);
            }
            return r;
        }
        Polynomial r(ring_);
        for (auto& [e, c] : p.terms()) r += monomial_image(e) * c;
        return r;
    }

    // compose(a, b): apply a first, then b. Matrix is a.m * b.m.
    friend LinearSubstitution compose(const LinearSubstitution& a,
                                      const LinearSubstitution& b) {
        if (!same_ring(a.ring_, b.ring_))
            throw std::invalid_argument("compose: ring mismatch");
        const std::size_t n = a.ring_->arity();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(a.m_[i][k]) == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    m[i][j] += a.m_[i][k] * b.m_[k][j];
            }
        return LinearSubstitution(a.ring_, std::move(m));
    }

    LinearSubstitution inverse() const {
        const std::size_t n = ring_->arity();
        std::vector<std::vector<Rat>> a = m_;
        std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && sgn(a[piv][col]) == 0) ++piv;
            if (piv == n)
                throw std::domain_error("LinearSubstitution: singular matrix");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            Rat d = a[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[col][j] /= d;
                inv[col][j] /= d;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || sgn(a[r][col]) == 0) continue;
                Rat f = a[r][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        return LinearSubstitution(ring_, std::move(inv));
    }

    bool is_signed_permutation() const { return signed_perm_; }

private:
    void classify() {
        const std::size_t n = ring_->arity();
        perm_.assign(n, 0);
        sign_.assign(n, 1);
        signed_perm_ = true;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n && signed_perm_; ++i) {
            int nz = -1;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(m_[i][j]) == 0) continue;
                if (nz >= 0 || (m_[i][j] != Rat(1) && m_[i][j] != Rat(-1))) {
                    signed_perm_ = false;
                    break;
                }
                nz = static_cast<int>(j);
            }
            if (!signed_perm_ || nz < 0 || used[nz]) {
                signed_perm_ = false;
                break;
            }
            used[nz] = true;
            perm_[i] = nz;
            sign_[i] = (m_[i][nz] == Rat(1)) ? 1 : -1;
        }
    }

    const Polynomial& monomial_image(const Exp& e) const {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        long deg = total_degree(e);
        if (deg == 0) {
            return memo_
                .emplace(e, Polynomial::constant(ring_, Rat(1)))
                .first->second;
        }
        int v = -1;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                v = static_cast<int>(i);
                break;
            }
        if (v < 0)
            throw std::domain_error("LinearSubstitution: negative exponent");
        Exp prev = e;
        prev[v] -= 1;
        Polynomial img = monomial_image(prev) * row_form(v);
        return memo_.emplace(e, std::move(img)).first->second;
    }

    const Polynomial& row_form(int i) const {
        if (rows_.empty()) {
            rows_.reserve(ring_->arity());
            for (std::size_t r = 0; r < ring_->arity(); ++r)
                rows_.push_back(linear_form(ring_, m_[r]));
        }
        return rows_[i];
    }

    RingPtr ring_;
    std::vector<std::vector<Rat>> m_;
    bool signed_perm_ = false;
    std::vector<int> perm_;
    std::vector<int> sign_;
    mutable std::map<Exp, Polynomial, GrlexLess> memo_;
    mutable std::vector<Polynomial> rows_;
};

}  // namespace coble
