#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "coble/covariants.hpp"
#include "coble/plane_config.hpp"

namespace coble {

// Product of pairwise differences in index order:
// prod_{a<b} (t_{idx[a]} - t_{idx[b]}), indices 1-based.
inline Polynomial difference_product(const RingPtr& ring,
                                     const std::vector<int>& idx) {
    Polynomial p = Polynomial::constant(ring, Rat(1));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            p = p * (Polynomial::variable(ring, idx[a] - 1) -
                     Polynomial::variable(ring, idx[b] - 1));
    return p;
}

// The configuration of points (1, t_i, t_i^3) on the cuspidal cubic, with
// symbolic parameters.
inline PointConfig<Polynomial> cuspidal_points(const RingPtr& ring) {
    PointConfig<Polynomial> pts;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        Polynomial t = Polynomial::variable(ring, static_cast<int>(i));
        pts.push_back({Polynomial::constant(ring, Rat(1)), t, t.pow(3)});
    }
    return pts;
}

// det of the rows (1, t_a, t_a^3) equals the difference product times
// -(t_i + t_j + t_k), as an exact polynomial identity.
inline bool det3_identity() {
    auto ring = make_var_ring(3);
    auto pts = cuspidal_points(ring);
    Polynomial lhs = det3(pts, 1, 2, 3);
    Polynomial sum(ring);
    for (int i = 0; i < 3; ++i) sum += Polynomial::variable(ring, i);
    Polynomial rhs = difference_product(ring, {1, 2, 3}) * (-sum);
    return lhs == rhs;
}

// The 6x6 determinant on squared coordinates in the basis
// (u^2, uv, uw, v^2, vw, w^2) equals +-(sum t)(difference product); the
// realized sign is returned through `sign_out`.
inline bool det6_identity(int* sign_out = nullptr) {
    auto ring = make_var_ring(6);
    Mat<Polynomial> rows;
    for (int i = 0; i < 6; ++i) {
        Polynomial t = Polynomial::variable(ring, i);
        Polynomial one = Polynomial::constant(ring, Rat(1));
        // (u^2, uv, uw, v^2, vw, w^2) at (1, t, t^3)
        rows.push_back({one, t, t.pow(3), t.pow(2), t.pow(4), t.pow(6)});
    }
    Polynomial lhs = determinant(rows);
    Polynomial sum(ring);
    for (int i = 0; i < 6; ++i) sum += Polynomial::variable(ring, i);
    Polynomial rhs = sum * difference_product(ring, {1, 2, 3, 4, 5, 6});
    if (lhs == rhs) {
        if (sign_out) *sign_out = 1;
        return true;
    }
    if (lhs == -rhs) {
        if (sign_out) *sign_out = -1;
        return true;
    }
    return false;
}

// Restriction exponent of the cubic monomial u^a v^b w^c on the cuspidal
// parametrization.
inline int restriction_degree(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != 3)
        throw std::invalid_argument("restriction_degree: not a cubic monomial");
    return b + 3 * c;
}

struct RestrictionTable {
    std::set<int> image;   // exponents realized by cubic monomials
    int collision_value = -1;  // the exponent realized twice
};

inline RestrictionTable restriction_table() {
    RestrictionTable t;
    std::map<int, int> count;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            int c = 3 - a - b;
            ++count[restriction_degree(a, b, c)];
        }
    for (auto& [k, n] : count) {
        t.image.insert(k);
        if (n == 2) t.collision_value = k;
    }
    return t;
}

// Evaluates a covariant structure on the cuspidal points and identifies the
// quotient by the full difference product with a covariant of the space.
struct DictionaryMatch {
    int covariant_index = -1;
    int sign = 0;  // quotient == sign * covariant polynomial
};

// The quotient (product of factor determinants) / (full difference product)
// is accumulated factor by factor: each pair of indices is divided out of
// the first factor determinant covering it, so intermediate polynomials stay
// at the size of the final quotient.
inline std::optional<DictionaryMatch> covariant_identity_check(
    const CobleSpace& cs, const CovariantStructure& s) {
    if (s.d != cs.d)
        throw std::invalid_argument("covariant_identity_check: degree mismatch");
    const RingPtr& ring = cs.chart.ring();
    auto pts = cuspidal_points(ring);
    const int n = s.points();
    std::vector<std::vector<bool>> assigned(n + 1, std::vector<bool>(n + 1, false));
    Polynomial q = Polynomial::constant(ring, Rat(1));
    for (auto& f : s.factors) {
        Polynomial v = f.is_six()
                           ? det6(pts, std::array<int, 6>{f.idx[0], f.idx[1],
                                                          f.idx[2], f.idx[3],
                                                          f.idx[4], f.idx[5]})
                           : det3(pts, f.idx[0], f.idx[1], f.idx[2]);
        for (std::size_t a = 0; a < f.idx.size(); ++a)
            for (std::size_t b = a + 1; b < f.idx.size(); ++b) {
                int i = f.idx[a], j = f.idx[b];
                if (assigned[i][j]) continue;
                auto next =
                    exact_divide(v, Polynomial::variable(ring, i - 1) -
                                        Polynomial::variable(ring, j - 1));
                if (!next) return std::nullopt;
                v = *next;
                assigned[i][j] = true;
            }
        q = q * v;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!assigned[i][j]) return std::nullopt;
    Polynomial canon = q.canonical_sign();
    DictionaryMatch m;
    try {
        m.covariant_index = cs.index_of(canon);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    m.sign = (q == canon) ? 1 : -1;
    return m;
}

// Full dictionary sweep: every structure must map to a distinct covariant,
// and the shape classes must correspond.
struct DictionaryReport {
    bool all_matched = false;
    bool bijective = false;
    bool classes_correspond = false;
    long structures = 0;
};

inline DictionaryReport cuspidal_dictionary_check(const CobleSpace& cs) {
    DictionaryReport rep;
    auto structures = enumerate_structures(cs.d);
    rep.structures = static_cast<long>(structures.size());
    std::set<int> seen;
    rep.all_matched = true;
    rep.classes_correspond = true;
    for (auto& s : structures) {
        auto m = covariant_identity_check(cs, s);
        if (!m) {
            rep.all_matched = false;
            continue;
        }
        seen.insert(m->covariant_index);
        const Covariant& c = cs.covariants[m->covariant_index];
        // sixtuple-free structures pair with the all-pairs shapes
        if (cs.d == 3) {
            bool expects_six = (c.cls == CovariantClass::SplitHalves);
            if (expects_six != s.has_six()) rep.classes_correspond = false;
        } else if (cs.d == 2) {
            bool expects_six = (c.cls == CovariantClass::TypeA);
            if (expects_six != s.has_six()) rep.classes_correspond = false;
        }
    }
    rep.bijective = rep.all_matched &&
                    (seen.size() == cs.covariants.size()) &&
                    (structures.size() == cs.covariants.size());
    return rep;
}

}  // namespace coble
