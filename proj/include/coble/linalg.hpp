#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "coble/polynomial.hpp"
#include "coble/rational.hpp"

namespace coble {

template <class T>
using Mat = std::vector<std::vector<T>>;

// Fraction-free (Bareiss) elimination over the integers. Returns the rank.
// Every intermediate division is exact; this is asserted.
inline int bareiss_rank(Mat<Int> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

// Clears denominators row by row (rank is unchanged) and runs Bareiss.
inline int rank_rational(const Mat<Rat>& a) {
    Mat<Int> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        Int l(1);
        for (const auto& x : row) l = lcm(l, Int(x.get_den()));
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(Int(x.get_num()) * (l / Int(x.get_den())));
        m.push_back(std::move(r));
    }
    return bareiss_rank(std::move(m));
}

// Row-reduces in place; returns pivot column per row of the echelon form.
inline std::vector<int> rref(Mat<Rat>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat d = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Basis of the right kernel of a (rows x cols), as cols-vectors.
inline Mat<Rat> kernel_basis(Mat<Rat> a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat<Rat> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Sorted union of the monomials of a polynomial family.
inline std::vector<Exp> monomial_support(const std::vector<Polynomial>& polys) {
    std::map<Exp, char, GrlexLess> seen;
    for (const auto& p : polys)
        for (auto& [e, c] : p.terms()) seen.emplace(e, 0);
    std::vector<Exp> out;
    out.reserve(seen.size());
    for (auto& [e, unused] : seen) out.push_back(e);
    return out;
}

inline Mat<Rat> coefficient_matrix(const std::vector<Polynomial>& polys,
                                   const std::vector<Exp>& support) {
    std::map<Exp, int, GrlexLess> col;
    for (std::size_t i = 0; i < support.size(); ++i)
        col.emplace(support[i], static_cast<int>(i));
    Mat<Rat> m(polys.size(), std::vector<Rat>(support.size(), Rat(0)));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (auto& [e, c] : polys[i].terms()) {
            auto it = col.find(e);
            if (it == col.end())
                throw std::invalid_argument("coefficient_matrix: support");
            m[i][it->second] = c;
        }
    return m;
}

// Rank over the rationals of the family's coefficient matrix in the
// graded-lex monomial basis.
inline int span_dimension(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return 0;
    for (const auto& p : polys)
        if (!same_ring(p.ring(), polys[0].ring()))
            throw std::invalid_argument("span_dimension: ring mismatch");
    auto support = monomial_support(polys);
    return rank_rational(coefficient_matrix(polys, support));
}

// Expresses polynomials in a fixed basis of polynomials. Build once, then
// express() solves each instance against the precomputed echelon form.
class LinearSolver {
public:
    explicit LinearSolver(std::vector<Polynomial> basis) : basis_(std::move(basis)) {
        if (basis_.empty()) throw std::invalid_argument("LinearSolver: empty");
        support_ = monomial_support(basis_);
        for (std::size_t i = 0; i < support_.size(); ++i)
            col_.emplace(support_[i], static_cast<int>(i));
        // Echelonize the transpose: columns are basis vectors.
        ech_.assign(support_.size(),
                    std::vector<Rat>(basis_.size(), Rat(0)));
        for (std::size_t j = 0; j < basis_.size(); ++j)
            for (auto& [e, c] : basis_[j].terms()) ech_[col_.at(e)][j] = c;
        perm_ = echelonize();
        if (perm_.size() != basis_.size())
            throw std::invalid_argument("LinearSolver: dependent basis");
    }

    // Coordinates of p in the basis, or nullopt if p lies outside the span.
    std::optional<std::vector<Rat>> express(const Polynomial& p) const {
        std::vector<Rat> rhs(support_.size(), Rat(0));
        for (auto& [e, c] : p.terms()) {
            auto it = col_.find(e);
            if (it == col_.end()) return std::nullopt;
            rhs[it->second] = c;
        }
        // Forward-eliminate rhs with the recorded operations.
        for (const auto& op : ops_) {
            if (op.kind == Op::Swap) std::swap(rhs[op.i], rhs[op.j]);
            else if (op.kind == Op::Scale) rhs[op.i] *= op.f;
            else rhs[op.i] -= op.f * rhs[op.j];
        }
        std::vector<Rat> x(basis_.size(), Rat(0));
        for (std::size_t r = 0; r < perm_.size(); ++r) x[perm_[r]] = rhs[r];
        for (std::size_t r = perm_.size(); r < rhs.size(); ++r)
            if (sgn(rhs[r]) != 0) return std::nullopt;
        return x;
    }

    bool contains(const Polynomial& p) const { return express(p).has_value(); }

private:
    struct Op {
        enum Kind { Swap, Scale, AddMul } kind;
        std::size_t i, j;
        Rat f;
    };

    // Gauss-Jordan on ech_ (support x basis), recording row operations so
    // the same reduction can be replayed on right-hand sides.
    std::vector<int> echelonize() {
        const std::size_t rows = ech_.size();
        const std::size_t cols = basis_.size();
        std::vector<int> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && sgn(ech_[piv][c]) == 0) ++piv;
            if (piv == rows) continue;
            if (piv != r) {
                std::swap(ech_[piv], ech_[r]);
                ops_.push_back({Op::Swap, r, piv, Rat(0)});
            }
            Rat d = ech_[r][c];
            if (d != 1) {
                Rat inv = 1 / d;
                for (auto& x : ech_[r]) x *= inv;
                ops_.push_back({Op::Scale, r, r, inv});
            }
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || sgn(ech_[i][c]) == 0) continue;
                Rat f = ech_[i][c];
                for (std::size_t j = 0; j < cols; ++j)
                    ech_[i][j] -= f * ech_[r][j];
                ops_.push_back({Op::AddMul, i, r, f});
            }
            pivot_cols.push_back(static_cast<int>(c));
            ++r;
        }
        return pivot_cols;
    }

    std::vector<Polynomial> basis_;
    std::vector<Exp> support_;
    std::map<Exp, int, GrlexLess> col_;
    Mat<Rat> ech_;
    std::vector<Op> ops_;
    std::vector<int> perm_;
};

// Dimension of { M : M G_i = G_i M for all i }, via iterated exact kernel
// intersection on the r^2-dimensional matrix space.
inline int commutant_dimension(const std::vector<Mat<Rat>>& gens) {
    if (gens.empty()) throw std::invalid_argument("commutant_dimension: empty");
    const std::size_t r = gens[0].size();
    for (const auto& g : gens)
        if (g.size() != r || (r && g[0].size() != r))
            throw std::invalid_argument("commutant_dimension: shape mismatch");
    const std::size_t dim = r * r;
    // Current basis of the candidate space, each vector flattening an r x r
    // matrix row-major.
    Mat<Rat> space;
    space.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Rat> v(dim, Rat(0));
        v[i] = Rat(1);
        space.push_back(std::move(v));
    }
    for (const auto& g : gens) {
        // L(M) = M g - g M on each basis vector; kernel of the stacked map.
        Mat<Rat> lmap(dim, std::vector<Rat>(space.size(), Rat(0)));
        for (std::size_t b = 0; b < space.size(); ++b) {
            const auto& v = space[b];
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    Rat s(0);
                    for (std::size_t k = 0; k < r; ++k)
                        s += v[i * r + k] * g[k][j] - g[i][k] * v[k * r + j];
                    lmap[i * r + j][b] = s;
                }
        }
        Mat<Rat> ker = kernel_basis(std::move(lmap));
        Mat<Rat> next;
        next.reserve(ker.size());
        for (const auto& coeffs : ker) {
            std::vector<Rat> v(dim, Rat(0));
            for (std::size_t b = 0; b < space.size(); ++b) {
                if (sgn(coeffs[b]) == 0) continue;
                for (std::size_t t = 0; t < dim; ++t)
                    v[t] += coeffs[b] * space[b][t];
            }
            next.push_back(std::move(v));
        }
        space = std::move(next);
        if (space.empty()) return 0;
    }
    return static_cast<int>(space.size());
}

// Determinant by expansion over column subsets; entries from any
// commutative ring with +,-,*. Intended for small matrices.
template <class T>
inline T determinant_expansion(const Mat<T>& a, const T& zero) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("determinant: empty");
    // minors[mask] = det of rows 0..k-1 against column set `mask`.
    std::map<unsigned, T> cur;
    for (std::size_t c = 0; c < n; ++c) cur.emplace(1u << c, a[0][c]);
    for (std::size_t row = 1; row < n; ++row) {
        std::map<unsigned, T> next;
        for (auto& [mask, val] : cur) {
            int parity = 0;
            for (std::size_t c = 0; c < n; ++c) {
                unsigned bit = 1u << c;
                if (mask & bit) {
                    ++parity;
                    continue;
                }
                // Column inserted above `parity` columns already used that
                // are smaller; sign comes from position within new mask.
                int below = 0;
                for (std::size_t cc = 0; cc < c; ++cc)
                    if (mask & (1u << cc)) ++below;
                T contrib = a[row][c] * val;
                if ((static_cast<int>(row) - below) % 2 != 0) contrib = zero - contrib;
                auto [it, inserted] = next.try_emplace(mask | bit, contrib);
                if (!inserted) it->second = it->second + contrib;
            }
        }
        cur = std::move(next);
    }
    return cur.at((n >= 32 ? ~0u : (1u << n) - 1u));
}

inline Polynomial determinant(const Mat<Polynomial>& a) {
    if (a.empty()) throw std::invalid_argument("determinant: empty");
    return determinant_expansion(a, Polynomial(a[0][0].ring()));
}

inline Rat determinant(const Mat<Rat>& a) {
    Mat<Rat> m = a;
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Solves A x = b exactly; nullopt when inconsistent or underdetermined.
inline std::optional<std::vector<Rat>> solve_linear(Mat<Rat> a,
                                                    std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    std::vector<Rat> x(cols, Rat(0));
    std::vector<bool> piv_col(cols + 1, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1
        piv_col[pivots[r]] = true;
        x[pivots[r]] = a[r][cols];
    }
    for (std::size_t c = 0; c < cols; ++c)
        if (!piv_col[c]) return std::nullopt;  // underdetermined
    return x;
}

// Any particular solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_any(Mat<Rat> a,
                                                 std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(cols)) return std::nullopt;
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

inline Mat<Rat> matrix_inverse(const Mat<Rat>& a) {
    const std::size_t n = a.size();
    Mat<Rat> m = a;
    Mat<Rat> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) throw std::domain_error("matrix_inverse: singular");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rat d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace coble
