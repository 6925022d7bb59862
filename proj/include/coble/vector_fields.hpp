#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coble/chart.hpp"
#include "coble/linalg.hpp"
#include "coble/polynomial.hpp"

namespace coble {

// A polynomial vector field sum_i comp[i] d/dt_i.
struct PolyVectorField {
    std::vector<Polynomial> comp;

    const RingPtr& ring() const { return comp.at(0).ring(); }
    bool operator==(const PolyVectorField& o) const { return comp == o.comp; }

    PolyVectorField& operator+=(const PolyVectorField& o) {
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
        return *this;
    }
    PolyVectorField& operator-=(const PolyVectorField& o) {
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
        return *this;
    }
    friend PolyVectorField operator*(const PolyVectorField& x, const Rat& c) {
        PolyVectorField r = x;
        for (auto& f : r.comp) f *= c;
        return r;
    }
    friend PolyVectorField operator*(const Polynomial& p,
                                     const PolyVectorField& x) {
        PolyVectorField r = x;
        for (auto& f : r.comp) f = p * f;
        return r;
    }
    friend PolyVectorField operator+(PolyVectorField a,
                                     const PolyVectorField& b) {
        a += b;
        return a;
    }
    friend PolyVectorField operator-(PolyVectorField a,
                                     const PolyVectorField& b) {
        a -= b;
        return a;
    }

    bool is_zero() const {
        for (auto& f : comp)
            if (!f.is_zero()) return false;
        return true;
    }

    std::vector<Rat> evaluate(const std::vector<Rat>& point) const {
        std::vector<Rat> v;
        v.reserve(comp.size());
        for (auto& f : comp) v.push_back(f.evaluate(point));
        return v;
    }
};

inline PolyVectorField zero_field(const RingPtr& ring) {
    PolyVectorField x;
    x.comp.assign(ring->arity(), Polynomial(ring));
    return x;
}

inline PolyVectorField euler_field(const RingPtr& ring) {
    PolyVectorField x;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        x.comp.push_back(Polynomial::variable(ring, static_cast<int>(i)));
    return x;
}

// Image of a field under a linear substitution: sigma X sigma^{-1}.
inline PolyVectorField pushforward(const PolyVectorField& x,
                                   const LinearSubstitution& sub) {
    const auto inv = sub.inverse();
    const auto& b = inv.matrix();
    const std::size_t n = x.comp.size();
    PolyVectorField out = zero_field(x.ring());
    std::vector<Polynomial> imgs;
    imgs.reserve(n);
    for (auto& f : x.comp) imgs.push_back(sub.apply(f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(b[i][j]) != 0) out.comp[i] += imgs[j] * b[i][j];
    return out;
}

inline PolyVectorField lie_bracket(const PolyVectorField& x,
                                   const PolyVectorField& y) {
    const std::size_t n = x.comp.size();
    PolyVectorField out = zero_field(x.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.comp[i] += x.comp[j] * y.comp[i].derivative(static_cast<int>(j));
            out.comp[i] -= y.comp[j] * x.comp[i].derivative(static_cast<int>(j));
        }
    return out;
}

inline Polynomial elementary_symmetric(const RingPtr& ring, int k) {
    const int n = static_cast<int>(ring->arity());
    // dp over variables: e_k of first m variables
    std::vector<Polynomial> dp(k + 1, Polynomial(ring));
    dp[0] = Polynomial::constant(ring, Rat(1));
    for (int v = 0; v < n; ++v) {
        Polynomial t = Polynomial::variable(ring, v);
        for (int j = std::min(k, v + 1); j >= 1; --j) dp[j] += dp[j - 1] * t;
    }
    return dp[k];
}

// Coefficients of the tangency conditions: the degree-six polynomial
// 2 c2 t^6 + 3 a2 t^5 + 2 c1 t^4 + 3 a1 t^3 + 3 a0 t^2 - b1 t - b0
// vanishes at t_1..t_6 with c2 = 1. Solved as a 6x6 linear system over the
// polynomial ring by Cramer's rule (entries are monomials).
struct TangencyCoefficients {
    Polynomial a2, c1, a1, a0, b1, b0;
};

inline TangencyCoefficients solve_tangency_system(const RingPtr& ring6) {
    if (ring6->arity() != 6)
        throw std::invalid_argument("solve_tangency_system: need 6 variables");
    auto t = [&](int i) { return Polynomial::variable(ring6, i); };
    Mat<Polynomial> a(6, std::vector<Polynomial>(6, Polynomial(ring6)));
    std::vector<Polynomial> rhs;
    for (int i = 0; i < 6; ++i) {
        Polynomial ti = t(i);
        a[i][0] = ti.pow(5) * Rat(3);
        a[i][1] = ti.pow(4) * Rat(2);
        a[i][2] = ti.pow(3) * Rat(3);
        a[i][3] = ti.pow(2) * Rat(3);
        a[i][4] = ti * Rat(-1);
        a[i][5] = Polynomial::constant(ring6, Rat(-1));
        rhs.push_back(ti.pow(6) * Rat(-2));
    }
    Polynomial det = determinant(a);
    if (det.is_zero()) throw std::logic_error("tangency system degenerate");
    std::array<Polynomial, 6> sol;
    for (int col = 0; col < 6; ++col) {
        Mat<Polynomial> ac = a;
        for (int i = 0; i < 6; ++i) ac[i][col] = rhs[i];
        auto q = exact_divide(determinant(ac), det);
        if (!q) throw std::logic_error("tangency solve: non-exact division");
        sol[col] = *q;
    }
    return {sol[0], sol[1], sol[2], sol[3], sol[4], sol[5]};
}

// The invariant degree-three field on six coordinates:
// component_i = 2/3 s4 - 2/3 s3 t_i + s2 t_i^2 - 2/3 s1 t_i^3 + t_i^4.
inline PolyVectorField hat_field_deg3(const RingPtr& ring) {
    const int n = static_cast<int>(ring->arity());
    Polynomial s1 = elementary_symmetric(ring, 1);
    Polynomial s2 = elementary_symmetric(ring, 2);
    Polynomial s3 = elementary_symmetric(ring, 3);
    Polynomial s4 = elementary_symmetric(ring, 4);
    PolyVectorField x;
    for (int i = 0; i < n; ++i) {
        Polynomial ti = Polynomial::variable(ring, i);
        x.comp.push_back(s4 * make_rat(2, 3) - s3 * ti * make_rat(2, 3) +
                         s2 * ti.pow(2) - s1 * ti.pow(3) * make_rat(2, 3) +
                         ti.pow(4));
    }
    return x;
}

// component_i = 2/3 s3 - 2/3 s2 t_i + s1 t_i^2 - 2/3 t_i^3.
inline PolyVectorField hat_field_deg2(const RingPtr& ring) {
    const int n = static_cast<int>(ring->arity());
    Polynomial s1 = elementary_symmetric(ring, 1);
    Polynomial s2 = elementary_symmetric(ring, 2);
    Polynomial s3 = elementary_symmetric(ring, 3);
    PolyVectorField x;
    for (int i = 0; i < n; ++i) {
        Polynomial ti = Polynomial::variable(ring, i);
        x.comp.push_back(s3 * make_rat(2, 3) - s2 * ti * make_rat(2, 3) +
                         s1 * ti.pow(2) - ti.pow(3) * make_rat(2, 3));
    }
    return x;
}

// --- invariant polynomials and fields, by exact kernel computation ---

// Splits the chart's simple substitutions into variable permutations and the
// rest. For these lattices the permutation part generates the full symmetric
// group on the t's.
struct GeneratorSplit {
    std::vector<LinearSubstitution> permutations;
    std::vector<LinearSubstitution> dense;
};

inline GeneratorSplit split_generators(const TChart& chart) {
    GeneratorSplit gs;
    for (auto& s : chart.simple_substitutions()) {
        if (s.is_signed_permutation()) gs.permutations.push_back(s);
        else gs.dense.push_back(s);
    }
    return gs;
}

// Monomial-orbit sums under the full symmetric group: one basis element per
// exponent multiset.
inline std::vector<Polynomial> symmetric_monomial_basis(const RingPtr& ring,
                                                        int degree) {
    const int n = static_cast<int>(ring->arity());
    std::vector<Exp> partitions;
    Exp cur(n, 0);
    // non-increasing exponent vectors summing to `degree`
    auto rec = [&](auto&& self, int pos, int remaining, int cap) -> void {
        if (pos == n) {
            if (remaining == 0) partitions.push_back(cur);
            return;
        }
        for (int v = std::min(cap, remaining); v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v, v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree, degree);
    std::vector<Polynomial> basis;
    for (auto& shape : partitions) {
        Exp e = shape;
        std::sort(e.begin(), e.end());
        Polynomial b(ring);
        do {
            b += Polynomial::monomial(ring, e, Rat(1));
        } while (std::next_permutation(e.begin(), e.end()));
        basis.push_back(std::move(b));
    }
    return basis;
}

// Basis of the simultaneous kernel of (w - id) over all simple reflections,
// on the space of homogeneous polynomials of the given degree.
inline std::vector<Polynomial> invariant_polynomials(const TChart& chart,
                                                     int degree) {
    auto gs = split_generators(chart);
    auto sym = symmetric_monomial_basis(chart.ring(), degree);
    // residuals of the dense generators on the symmetric basis
    std::vector<Polynomial> residuals;
    for (auto& b : sym)
        for (auto& g : gs.dense) residuals.push_back(g.apply(b) - b);
    auto support = monomial_support(residuals);
    if (support.empty()) return sym;
    std::map<Exp, int, GrlexLess> col;
    for (std::size_t i = 0; i < support.size(); ++i)
        col.emplace(support[i], static_cast<int>(i));
    const std::size_t rows = support.size() * gs.dense.size();
    Mat<Rat> m(rows, std::vector<Rat>(sym.size(), Rat(0)));
    for (std::size_t j = 0; j < sym.size(); ++j)
        for (std::size_t g = 0; g < gs.dense.size(); ++g) {
            const Polynomial& r = residuals[j * gs.dense.size() + g];
            for (auto& [e, c] : r.terms())
                m[g * support.size() + col.at(e)][j] = c;
        }
    auto ker = kernel_basis(std::move(m));
    std::vector<Polynomial> out;
    for (auto& coeffs : ker) {
        Polynomial p(chart.ring());
        for (std::size_t j = 0; j < sym.size(); ++j)
            if (sgn(coeffs[j]) != 0) p += sym[j] * coeffs[j];
        out.push_back(p.canonical_sign());
    }
    // every member must be fixed by every simple substitution
    for (auto& p : out)
        for (auto& s : chart.simple_substitutions())
            if (!(s.apply(p) == p))
                throw std::logic_error("invariant_polynomials: not invariant");
    return out;
}

// Equivariant-field basis under the symmetric group: orbit sums of
// monomial-times-coordinate-direction terms.
inline std::vector<PolyVectorField> symmetric_field_basis(const RingPtr& ring,
                                                          int coeff_degree) {
    const int n = static_cast<int>(ring->arity());
    std::vector<Exp> exps;
    Exp cur(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0) exps.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, coeff_degree);

    // canonical representative of the S_n-orbit of (direction, exponent)
    auto canonical = [&](int dir, const Exp& e) {
        // the direction's exponent first, the rest sorted
        std::pair<int, Exp> key;
        key.first = e[dir];
        Exp rest;
        for (int i = 0; i < n; ++i)
            if (i != dir) rest.push_back(e[i]);
        std::sort(rest.begin(), rest.end());
        key.second = rest;
        return key;
    };
    std::map<std::pair<int, Exp>, PolyVectorField> orbits;
    for (auto& e : exps)
        for (int dir = 0; dir < n; ++dir) {
            auto key = canonical(dir, e);
            auto it = orbits.find(key);
            if (it == orbits.end())
                it = orbits.emplace(key, zero_field(ring)).first;
            it->second.comp[dir] += Polynomial::monomial(ring, e, Rat(1));
        }
    std::vector<PolyVectorField> basis;
    for (auto& [key, field] : orbits) basis.push_back(field);
    return basis;
}

// Basis of the W-invariant homogeneous fields of the given coefficient
// degree, by exact kernel computation on the equivariant basis.
inline std::vector<PolyVectorField> invariant_fields(const TChart& chart,
                                                     int coeff_degree) {
    auto gs = split_generators(chart);
    auto sym = symmetric_field_basis(chart.ring(), coeff_degree);
    // sanity: the symmetric basis must be fixed by the permutation part
    for (auto& b : sym)
        for (auto& p : gs.permutations)
            if (!(pushforward(b, p) == b))
                throw std::logic_error("symmetric_field_basis: not equivariant");

    const int n = static_cast<int>(chart.ring()->arity());
    std::vector<PolyVectorField> residuals;
    for (auto& b : sym)
        for (auto& g : gs.dense) residuals.push_back(pushforward(b, g) - b);
    // flatten: coordinates are (component, monomial)
    std::vector<Polynomial> all;
    for (auto& r : residuals)
        for (auto& f : r.comp) all.push_back(f);
    auto support = monomial_support(all);
    std::map<Exp, int, GrlexLess> col;
    for (std::size_t i = 0; i < support.size(); ++i)
        col.emplace(support[i], static_cast<int>(i));
    const std::size_t block = support.size();
    Mat<Rat> m(block * n * gs.dense.size(),
               std::vector<Rat>(sym.size(), Rat(0)));
    for (std::size_t j = 0; j < sym.size(); ++j)
        for (std::size_t g = 0; g < gs.dense.size(); ++g) {
            const auto& r = residuals[j * gs.dense.size() + g];
            for (int cidx = 0; cidx < n; ++cidx)
                for (auto& [e, c] : r.comp[cidx].terms())
                    m[(g * n + cidx) * block + col.at(e)][j] = c;
        }
    auto ker = kernel_basis(std::move(m));
    std::vector<PolyVectorField> out;
    for (auto& coeffs : ker) {
        PolyVectorField x = zero_field(chart.ring());
        for (std::size_t j = 0; j < sym.size(); ++j) {
            if (sgn(coeffs[j]) == 0) continue;
            x += sym[j] * coeffs[j];
        }
        out.push_back(std::move(x));
    }
    for (auto& x : out)
        for (auto& s : chart.simple_substitutions())
            if (!(pushforward(x, s) == x))
                throw std::logic_error("invariant_fields: not invariant");
    return out;
}

// Gradient of f with indices raised by the invariant quadratic form.
inline PolyVectorField gradient_field(const Polynomial& f,
                                      const Polynomial& f2) {
    const RingPtr& ring = f.ring();
    const std::size_t n = ring->arity();
    Mat<Rat> b(n, std::vector<Rat>(n, Rat(0)));
    for (auto& [e, c] : f2.terms()) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(static_cast<int>(i));
        if (idx.size() != 2)
            throw std::invalid_argument("gradient_field: f2 not quadratic");
        if (idx[0] == idx[1]) b[idx[0]][idx[0]] = c;
        else {
            b[idx[0]][idx[1]] = c / 2;
            b[idx[1]][idx[0]] = c / 2;
        }
    }
    Mat<Rat> binv = matrix_inverse(b);  // throws when degenerate
    PolyVectorField grad = zero_field(ring);
    std::vector<Polynomial> partials;
    for (std::size_t j = 0; j < n; ++j)
        partials.push_back(f.derivative(static_cast<int>(j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(binv[i][j]) != 0) grad.comp[i] += partials[j] * binv[i][j];
    return grad;
}

// Exact scalar coordinates of x in a list of fields, when x lies in their
// span; coefficients are rationals.
inline std::optional<std::vector<Rat>> express_in_fields(
    const PolyVectorField& x, const std::vector<PolyVectorField>& gens) {
    std::vector<Polynomial> all;
    for (auto& f : x.comp) all.push_back(f);
    for (auto& g : gens)
        for (auto& f : g.comp) all.push_back(f);
    auto support = monomial_support(all);
    std::map<Exp, int, GrlexLess> col;
    for (std::size_t i = 0; i < support.size(); ++i)
        col.emplace(support[i], static_cast<int>(i));
    const std::size_t n = x.comp.size();
    const std::size_t block = support.size();
    Mat<Rat> a(n * block, std::vector<Rat>(gens.size(), Rat(0)));
    std::vector<Rat> rhs(n * block, Rat(0));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t ci = 0; ci < n; ++ci)
            for (auto& [e, c] : gens[g].comp[ci].terms())
                a[ci * block + col.at(e)][g] = c;
    for (std::size_t ci = 0; ci < n; ++ci)
        for (auto& [e, c] : x.comp[ci].terms())
            rhs[ci * block + col.at(e)] = c;
    auto sol = solve_any(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    PolyVectorField check = x;
    for (std::size_t g = 0; g < gens.size(); ++g)
        check -= gens[g] * (*sol)[g];
    if (!check.is_zero()) return std::nullopt;
    return sol;
}

// All monomial multiples m * y with deg(m) = degree.
inline std::vector<PolyVectorField> monomial_multiples(const PolyVectorField& y,
                                                       int degree) {
    const RingPtr& ring = y.ring();
    const int n = static_cast<int>(ring->arity());
    std::vector<PolyVectorField> out;
    Exp cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n) {
            if (rem == 0)
                out.push_back(Polynomial::monomial(ring, cur, Rat(1)) * y);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// The polynomial g with x = g * Euler, when x is a multiple of the Euler
// field.
inline std::optional<Polynomial> euler_coefficient(const PolyVectorField& x) {
    const RingPtr& ring = x.ring();
    Polynomial g(ring);
    for (std::size_t i = 0; i < x.comp.size(); ++i) {
        auto q = exact_divide(x.comp[i],
                              Polynomial::variable(ring, static_cast<int>(i)));
        if (!q) return std::nullopt;
        if (i == 0) g = *q;
        else if (!(*q == g)) return std::nullopt;
    }
    return g;
}

// A field is invariant as a field on projective space when every generator
// moves it by a multiple of the Euler field. Returns those multiples, in
// generator order.
inline std::optional<std::vector<Polynomial>> projective_invariance(
    const PolyVectorField& x, const std::vector<LinearSubstitution>& subs) {
    std::vector<Polynomial> out;
    for (auto& s : subs) {
        auto g = euler_coefficient(pushforward(x, s) - x);
        if (!g) return std::nullopt;
        out.push_back(std::move(*g));
    }
    return out;
}

// x = c * y + h * Euler with c rational and h polynomial, when solvable.
struct EulerDecomposition {
    Rat c;
    Polynomial h;
};

inline std::optional<EulerDecomposition> euler_decompose(
    const PolyVectorField& x, const PolyVectorField& y, int h_degree) {
    std::vector<PolyVectorField> gens{y};
    auto eulers = monomial_multiples(euler_field(x.ring()), h_degree);
    for (auto& e : eulers) gens.push_back(e);
    auto sol = express_in_fields(x, gens);
    if (!sol) return std::nullopt;
    Polynomial h(x.ring());
    PolyVectorField check = x - y * (*sol)[0];
    auto g = euler_coefficient(check);
    if (!g) return std::nullopt;
    return EulerDecomposition{(*sol)[0], *g};
}

// Deterministic sample points with all 2x2 minors of (x(p); y(p)) nonzero;
// at each point the span of x, y, [x,y] together with the radial direction
// must have rank at most three (the plane distribution on projective space
// is closed under the bracket).
struct FrobeniusReport {
    int points_checked = 0;
    bool projective_rank_at_most_2 = true;
};

inline FrobeniusReport frobenius_rank_check(const PolyVectorField& x,
                                            const PolyVectorField& y,
                                            int num_points, unsigned seed) {
    PolyVectorField bracket = lie_bracket(x, y);
    FrobeniusReport rep;
    unsigned long long state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next_int = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % 19) - 9;  // in [-9, 9]
    };
    const std::size_t n = x.comp.size();
    int accepted = 0;
    int guard = 0;
    while (accepted < num_points && guard < 10000) {
        ++guard;
        std::vector<Rat> p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(Rat(next_int()));
        auto vx = x.evaluate(p);
        auto vy = y.evaluate(p);
        bool minors_ok = true;
        for (std::size_t i = 0; i < n && minors_ok; ++i)
            for (std::size_t j = i + 1; j < n && minors_ok; ++j)
                if (sgn(vx[i] * vy[j] - vx[j] * vy[i]) == 0) minors_ok = false;
        if (!minors_ok) continue;
        ++accepted;
        auto vb = bracket.evaluate(p);
        Mat<Rat> m{p, vx, vy, vb};
        if (rank_rational(m) > 3) rep.projective_rank_at_most_2 = false;
    }
    rep.points_checked = accepted;
    return rep;
}

// --- the tangent-line cross ratio identity ---

struct CrossRatioReport {
    bool numerators_match = false;
    bool denominators_match = false;
    bool rational_identity = false;
    bool numeric_instance = false;
    bool degenerate_collapse = false;
};

inline CrossRatioReport cross_ratio_check() {
    auto lat = build_lattice(4);  // five points, chart t1..t5
    TChart chart(lat);
    const auto& ring = chart.ring();
    auto t = [&](int i) { return Polynomial::variable(ring, i - 1); };
    auto tangent_value = [&](int j) {
        return t(j) * t(j) + t(j) * t(1) + t(1) * t(1);
    };
    const int i = 5;
    Polynomial num_t =
        (tangent_value(i) - tangent_value(2)) * (tangent_value(4) - tangent_value(3));
    Polynomial den_t =
        (tangent_value(i) - tangent_value(3)) * (tangent_value(4) - tangent_value(2));
    Polynomial num_r = chart.root_form(lat->root_ij(2, i)) *
                       chart.root_form(lat->root_ijk(1, 2, i)) *
                       chart.root_form(lat->root_ij(3, 4)) *
                       chart.root_form(lat->root_ijk(1, 3, 4));
    Polynomial den_r = chart.root_form(lat->root_ij(3, i)) *
                       chart.root_form(lat->root_ijk(1, 3, i)) *
                       chart.root_form(lat->root_ij(2, 4)) *
                       chart.root_form(lat->root_ijk(1, 2, 4));
    CrossRatioReport rep;
    rep.numerators_match = (num_t == num_r);
    rep.denominators_match = (den_t == den_r);
    rep.rational_identity = (num_t * den_r == den_t * num_r);

    std::vector<Rat> pt{Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)};
    Rat dt = den_t.evaluate(pt), dr = den_r.evaluate(pt);
    rep.numeric_instance = sgn(dt) != 0 && sgn(dr) != 0 &&
                           num_t.evaluate(pt) * dr == num_r.evaluate(pt) * dt;

    // t3 := t2 collapses both cross ratios to 1
    std::vector<Polynomial> images;
    for (int v = 0; v < 5; ++v)
        images.push_back(Polynomial::variable(ring, v == 2 ? 1 : v));
    rep.degenerate_collapse = (num_t.substitute(images) == den_t.substitute(images)) &&
                              (num_r.substitute(images) == den_r.substitute(images));
    return rep;
}

}  // namespace coble
