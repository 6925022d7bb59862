#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coble/linalg.hpp"
#include "coble/polynomial.hpp"
#include "coble/rational.hpp"

namespace coble {

// Projective points with coordinates in an exact commutative ring
// (rationals, polynomials or Laurent polynomials).
template <class T>
using Point3 = std::array<T, 3>;

template <class T>
using PointConfig = std::vector<Point3<T>>;

namespace detail {
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.ring()); }
inline bool value_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool value_is_zero(const Polynomial& p) { return p.is_zero(); }
}  // namespace detail

// 3x3 determinant of the coordinate rows of points i, j, k (1-based), rows
// in the given index order.
template <class T>
T det3(const PointConfig<T>& pts, int i, int j, int k) {
    if (i == j || j == k || i == k)
        throw std::invalid_argument("det3: repeated index");
    const auto& a = pts.at(i - 1);
    const auto& b = pts.at(j - 1);
    const auto& c = pts.at(k - 1);
    return a[0] * (b[1] * c[2] - b[2] * c[1]) -
           a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// 6x6 determinant of squared-coordinate rows in the monomial basis
// (x^2, y^2, z^2, yz, zx, xy), rows in the given index order.
template <class T>
T det6(const PointConfig<T>& pts, const std::array<int, 6>& idx) {
    std::set<int> distinct(idx.begin(), idx.end());
    if (distinct.size() != 6) throw std::invalid_argument("det6: repeated index");
    Mat<T> rows;
    for (int i : idx) {
        const auto& p = pts.at(i - 1);
        rows.push_back({p[0] * p[0], p[1] * p[1], p[2] * p[2], p[1] * p[2],
                        p[2] * p[0], p[0] * p[1]});
    }
    return determinant_expansion(rows, detail::zero_like(rows[0][0]));
}

// A Coble factor: a triple or a sixtuple of point indices (stored sorted).
struct Factor {
    std::vector<int> idx;

    bool is_six() const { return idx.size() == 6; }
    auto operator<=>(const Factor&) const = default;
};

inline Factor triple(int i, int j, int k) {
    Factor f{{i, j, k}};
    std::sort(f.idx.begin(), f.idx.end());
    return f;
}

inline Factor sixtuple(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return Factor{std::move(v)};
}

// A covariant structure: a multiset of factors in which every index carries
// total weight three (1 per triple membership, 2 per sixtuple membership),
// the determinant weights add up to 9-d, and every unordered index pair
// appears inside some factor.
struct CovariantStructure {
    std::vector<Factor> factors;  // sorted
    int d = 0;

    int points() const { return 9 - d; }
    bool has_six() const {
        for (auto& f : factors)
            if (f.is_six()) return true;
        return false;
    }
    auto operator<=>(const CovariantStructure&) const = default;
};

inline bool structure_rules_hold(const CovariantStructure& s) {
    const int n = s.points();
    std::vector<int> weight(n + 1, 0);
    int det_weight = 0;
    std::vector<std::vector<bool>> covered(n + 1, std::vector<bool>(n + 1, false));
    for (auto& f : s.factors) {
        det_weight += f.is_six() ? 4 : 1;
        for (std::size_t a = 0; a < f.idx.size(); ++a) {
            weight[f.idx[a]] += f.is_six() ? 2 : 1;
            for (std::size_t b = a + 1; b < f.idx.size(); ++b)
                covered[f.idx[a]][f.idx[b]] = true;
        }
    }
    if (det_weight != n) return false;
    for (int i = 1; i <= n; ++i)
        if (weight[i] != 3) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!covered[i][j]) return false;
    return true;
}

// All structures for Del Pezzo degree d. Factors are distinct by default;
// with allow_repeated_factors the search runs over genuine multisets, which
// admits ten extra doubled-triple structures for d = 4 whose quotients carry
// squared linear forms (these are not covariants of the surface and are
// exposed only for reporting).
inline std::vector<CovariantStructure> enumerate_structures(
    int d, bool allow_repeated_factors = false) {
    if (d < 2 || d > 5)
        throw std::invalid_argument("enumerate_structures: d in {2,3,4,5}");
    const int n = 9 - d;
    std::vector<Factor> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) triples.push_back(triple(i, j, k));
    std::vector<Factor> sixes;
    if (n >= 6) {
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (pick.size() == 6) {
                sixes.push_back(sixtuple(pick));
                return;
            }
            for (int v = start; v <= n; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
    }

    std::set<CovariantStructure> found;
    std::vector<int> weight(n + 1, 0);
    std::vector<Factor> chosen;

    auto try_finish = [&]() {
        CovariantStructure s;
        s.factors = chosen;
        std::sort(s.factors.begin(), s.factors.end());
        s.d = d;
        if (structure_rules_hold(s)) found.insert(std::move(s));
    };

    // pick `count` triples with non-decreasing position, respecting weights
    auto pick_triples = [&](auto&& self, int start, int count) -> void {
        if (count == 0) {
            try_finish();
            return;
        }
        for (int t = start; t < static_cast<int>(triples.size()); ++t) {
            bool ok = true;
            for (int v : triples[t].idx)
                if (weight[v] + 1 > 3) ok = false;
            if (!ok) continue;
            for (int v : triples[t].idx) ++weight[v];
            chosen.push_back(triples[t]);
            self(self, allow_repeated_factors ? t : t + 1, count - 1);
            chosen.pop_back();
            for (int v : triples[t].idx) --weight[v];
        }
    };

    for (int s_count = 0; 4 * s_count <= n; ++s_count) {
        int t_count = n - 4 * s_count;
        if (s_count > 0 && n < 6) continue;
        if (s_count == 0) {
            pick_triples(pick_triples, 0, t_count);
        } else if (s_count == 1) {
            for (auto& six : sixes) {
                for (int v : six.idx) weight[v] += 2;
                chosen.push_back(six);
                pick_triples(pick_triples, 0, t_count);
                chosen.pop_back();
                for (int v : six.idx) weight[v] -= 2;
            }
        }
        // two or more sixtuples would need determinant weight >= 8 > n
    }
    return {found.begin(), found.end()};
}

template <class T>
T evaluate(const PointConfig<T>& pts, const CovariantStructure& s) {
    if (static_cast<int>(pts.size()) != s.points())
        throw std::invalid_argument("evaluate: configuration size mismatch");
    std::optional<T> acc;
    for (auto& f : s.factors) {
        T v = f.is_six() ? det6(pts, std::array<int, 6>{f.idx[0], f.idx[1],
                                                        f.idx[2], f.idx[3],
                                                        f.idx[4], f.idx[5]})
                         : det3(pts, f.idx[0], f.idx[1], f.idx[2]);
        if (!acc) acc = std::move(v);
        else acc = *acc * v;
    }
    return *acc;
}

// --- the degree five system, with a symbolic fifth point ---

struct Degree5Report {
    std::vector<Polynomial> values;  // the 12 evaluated cubics
    int span = 0;
    bool generators_independent = false;
    bool all_in_generator_span = false;
    bool worked_product_matches = false;
};

inline Degree5Report degree5_explicit_check() {
    auto ring = make_ring({"z0", "z1", "z2"});
    auto z = [&](int i) { return Polynomial::variable(ring, i); };
    auto c = [&](long v) { return Polynomial::constant(ring, Rat(v)); };
    PointConfig<Polynomial> pts{{c(1), c(0), c(0)},
                                {c(0), c(1), c(0)},
                                {c(0), c(0), c(1)},
                                {c(1), c(1), c(1)},
                                {z(0), z(1), z(2)}};
    Degree5Report rep;
    auto structures = enumerate_structures(4);  // five points, twelve structures
    for (auto& s : structures) rep.values.push_back(evaluate(pts, s));
    rep.span = span_dimension(rep.values);

    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            gens.push_back(z(0) * z(1) * z(2) - z(i) * z(i) * z(j));
        }
    rep.generators_independent = (span_dimension(gens) == 6);
    LinearSolver solver(gens);
    rep.all_in_generator_span = true;
    for (auto& v : rep.values)
        if (!solver.contains(v)) rep.all_in_generator_span = false;

    CovariantStructure worked;
    worked.d = 4;
    worked.factors = {triple(4, 1, 5), triple(1, 5, 2), triple(5, 2, 3),
                      triple(2, 3, 4), triple(3, 4, 1)};
    std::sort(worked.factors.begin(), worked.factors.end());
    // the factor values are (z1-z2), -z2, z0, 1, -1
    Polynomial expected = z(0) * z(1) * z(2) - z(0) * z(2) * z(2);
    rep.worked_product_matches = (evaluate(pts, worked) == expected);
    return rep;
}

// --- the six points on the coordinate triangle ---

// Laurent ring in (b0, b1, b2, al0, al1, al2); the points use a_i = al_i b_i.
struct NarukiModel {
    RingPtr ring;             // the 6-variable Laurent ring
    RingPtr invariant_ring;   // (al0, al1, al2, delta), Laurent
    PointConfig<Polynomial> points;  // p0, p1, p2, q0, q1, q2

    Polynomial b(int i) const { return Polynomial::variable(ring, i); }
    Polynomial al(int i) const { return Polynomial::variable(ring, 3 + i); }
    Polynomial a(int i) const { return al(i) * b(i); }
};

inline NarukiModel naruki_config() {
    NarukiModel m;
    m.ring = make_ring({"b0", "b1", "b2", "al0", "al1", "al2"}, true);
    m.invariant_ring = make_ring({"al0", "al1", "al2", "delta"}, true);
    auto zero = Polynomial(m.ring);
    auto one = Polynomial::constant(m.ring, Rat(1));
    m.points = {{zero, one, m.a(0)},  {m.a(1), zero, one},
                {one, m.a(2), zero},  {zero, one, m.b(0)},
                {m.b(1), zero, one},  {one, m.b(2), zero}};
    return m;
}

// Rewrites a b-balanced Laurent polynomial through delta = -b0 b1 b2:
// every monomial must have equal exponents of b0, b1, b2.
inline std::optional<Polynomial> collapse_b_to_delta(const NarukiModel& m,
                                                     const Polynomial& p) {
    Polynomial out(m.invariant_ring);
    for (auto& [e, c] : p.terms()) {
        if (e[0] != e[1] || e[1] != e[2]) return std::nullopt;
        int de = e[0];
        Exp img{e[3], e[4], e[5], de};
        Rat coeff = (de % 2 == 0) ? c : -c;
        out += Polynomial::monomial(m.invariant_ring, img, coeff);
    }
    return out;
}

// The forty reference expressions in (al0, al1, al2, delta).
inline std::vector<Polynomial> naruki_reference_table(const RingPtr& ring) {
    auto al = [&](int i) { return Polynomial::variable(ring, ((i % 3) + 3) % 3); };
    auto dl = Polynomial::variable(ring, 3);
    auto one = Polynomial::constant(ring, Rat(1));
    auto al_all = al(0) * al(1) * al(2);
    std::vector<Polynomial> t;
    t.push_back(dl * (one - al(0)) * (one - al(1)) * (one - al(2)));
    // The second entry carries delta^3: the six-point swap a_i <-> b_i acts
    // by al -> 1/al, delta -> al0 al1 al2 delta, and the forty values are
    // closed under it only with the cube.
    t.push_back(al_all * dl * dl * dl * (one - al(0)) * (one - al(1)) *
                (one - al(2)));
    t.push_back((one - al(0) * dl) * (one - al(1) * dl) * (one - al(2) * dl));
    t.push_back(al_all * dl * (one - al(0) * dl) * (one - al(1) * dl) *
                (one - al(2) * dl));
    t.push_back((one - al(0) * al(1) * dl) * (one - al(1) * al(2) * dl) *
                (one - al(2) * al(0) * dl));
    t.push_back(dl * (one - al(0) * al(1) * dl) * (one - al(1) * al(2) * dl) *
                (one - al(2) * al(0) * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back((one - al(i - 1) * dl) * (one - al(i + 1) * dl) *
                    (one - al_all * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(al(i) * dl * (one - al(i - 1)) * (one - al(i + 1)) *
                    (one - al_all * dl * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(dl * (one - al(i - 1)) * (one - al(i + 1)) *
                    (one - al_all * dl * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(al(i - 1) * al(i + 1) * dl * (one - dl) *
                    (one - al(i) * al(i - 1) * dl) *
                    (one - al(i) * al(i + 1) * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back((one - dl) * (one - al(i) * al(i + 1) * dl) *
                    (one - al(i) * al(i - 1) * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(al(i) * dl * (one - al(i + 1) * dl) * (one - al(i - 1) * dl) *
                    (one - al_all * dl));
    t.push_back((one - dl) * (one - al_all * dl) * (one - al_all * dl * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(al(i - 1) * al(i + 1) * dl * (one - dl) * (one - al(i)) *
                    (one - al(i) * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back((one - al(i) * dl) * (one - al(i - 1) * al(i + 1) * dl) *
                    (one - al_all * dl * dl));
    for (int i = 0; i < 3; ++i)
        t.push_back(dl * (one - al(i)) * (one - al(i - 1) * al(i + 1) * dl) *
                    (one - al_all * dl));
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms)
        t.push_back(al(p[0]) * dl * (one - al(p[1])) * (one - al(p[2]) * dl) *
                    (one - al(p[1]) * al(p[2]) * dl));
    return t;
}

struct NarukiReport {
    bool divisions_exact = true;
    bool b_balanced = true;
    bool multiset_matches = false;
    bool worked_example_six = false;    // the sixtuple-carrying worked product
    bool worked_example_triples = false;  // the six-triple worked product
    std::vector<Polynomial> reduced;    // canonical, in (al, delta)
};

inline NarukiReport naruki_table_check() {
    NarukiModel m = naruki_config();
    NarukiReport rep;
    Polynomial divisor = Polynomial::constant(m.ring, Rat(1));
    for (int i = 0; i < 3; ++i) divisor = divisor * (m.b(i) - m.a(i));

    auto reduce = [&](const CovariantStructure& s) -> std::optional<Polynomial> {
        Polynomial v = evaluate(m.points, s);
        auto q = exact_divide(v, divisor);
        if (!q) {
            rep.divisions_exact = false;
            return std::nullopt;
        }
        auto r = collapse_b_to_delta(m, *q);
        if (!r) {
            rep.b_balanced = false;
            return std::nullopt;
        }
        return r->canonical_sign();
    };

    auto structures = enumerate_structures(3);
    std::multiset<Polynomial> got;
    std::map<CovariantStructure, Polynomial> by_structure;
    for (auto& s : structures) {
        auto r = reduce(s);
        if (!r) return rep;
        got.insert(*r);
        by_structure.emplace(s, *r);
        rep.reduced.push_back(*r);
    }
    std::multiset<Polynomial> expected;
    for (auto& p : naruki_reference_table(m.invariant_ring))
        expected.insert(p.canonical_sign());
    rep.multiset_matches = (got == expected);

    // worked products; labels (p0,p1,p2,q0,q1,q2) = (1..6)
    auto ref = naruki_reference_table(m.invariant_ring);
    {
        CovariantStructure s;
        s.d = 3;
        s.factors = {sixtuple({1, 2, 3, 4, 5, 6}), triple(1, 4, 2),
                     triple(5, 3, 6)};
        std::sort(s.factors.begin(), s.factors.end());
        auto it = by_structure.find(s);
        // family 8 with i = 1: al1 dl (1-al0)(1-al2)(1-al0 al1 al2 dl^2)
        rep.worked_example_six =
            it != by_structure.end() && it->second == ref[10].canonical_sign();
    }
    {
        CovariantStructure s;
        s.d = 3;
        s.factors = {triple(1, 4, 2), triple(1, 4, 6), triple(2, 5, 6),
                     triple(2, 3, 6), triple(1, 5, 3), triple(4, 5, 3)};
        std::sort(s.factors.begin(), s.factors.end());
        auto it = by_structure.find(s);
        // family 17 with (i,j,k) = (1,0,2): al1 dl (1-al0)(1-al2 dl)(1-al0 al2 dl)
        rep.worked_example_triples =
            it != by_structure.end() && it->second == ref[36].canonical_sign();
    }
    return rep;
}

// --- factor conversion under the standard quadratic marking change ---

struct FactorTransformReport {
    bool base_triple = false;        // |123|' = |123| = 1
    bool two_fixed = false;          // |12k|' = |23k||31k|
    bool one_fixed = false;          // |1jk|' = -x1(aj)x1(ak)|1jk|
    bool none_fixed = false;         // |ijk|' = |123ijk|
    bool six_with_base = false;      // |123ijk|' = prod x1x2x3(a) |ijk|
    bool six_with_two = false;       // |12ijkl|' = prod x1x2(a) |12ijkl|
    bool covariant_cyclic = false;   // six-triple product -> -delta |124||356||123456|
    bool covariant_split = false;    // |123||456||123456| -> delta times itself
};

inline FactorTransformReport weyl_factor_transform_check(int n = 7) {
    if (n < 6) throw std::invalid_argument("factor transform: need n >= 6");
    std::vector<std::string> names;
    for (int k = 4; k <= n; ++k)
        for (int j = 1; j <= 3; ++j)
            names.push_back("u" + std::to_string(k) + std::to_string(j));
    auto ring = make_ring(names);
    auto u = [&](int k, int j) {
        return Polynomial::variable(ring, (k - 4) * 3 + (j - 1));
    };
    auto zero = Polynomial(ring);
    auto one = Polynomial::constant(ring, Rat(1));

    PointConfig<Polynomial> old_pts{{one, zero, zero},
                                    {zero, one, zero},
                                    {zero, zero, one}};
    PointConfig<Polynomial> new_pts = old_pts;
    for (int k = 4; k <= n; ++k) {
        old_pts.push_back({u(k, 1), u(k, 2), u(k, 3)});
        new_pts.push_back({u(k, 2) * u(k, 3), u(k, 3) * u(k, 1),
                           u(k, 1) * u(k, 2)});
    }

    FactorTransformReport rep;
    rep.base_triple = (det3(new_pts, 1, 2, 3) == one) &&
                      (det3(old_pts, 1, 2, 3) == one);
    rep.two_fixed = (det3(new_pts, 1, 2, 4) == u(4, 1) * u(4, 2)) &&
                    (det3(new_pts, 1, 2, 4) ==
                     det3(old_pts, 2, 3, 4) * det3(old_pts, 3, 1, 4));
    rep.one_fixed =
        (det3(new_pts, 1, 4, 5) ==
         zero - u(4, 1) * u(5, 1) * det3(old_pts, 1, 4, 5));
    rep.none_fixed = (det3(new_pts, 4, 5, 6) ==
                      det6(old_pts, {1, 2, 3, 4, 5, 6}));
    {
        Polynomial scale = one;
        for (int k = 4; k <= 6; ++k) scale = scale * u(k, 1) * u(k, 2) * u(k, 3);
        rep.six_with_base = (det6(new_pts, {1, 2, 3, 4, 5, 6}) ==
                             scale * det3(old_pts, 4, 5, 6));
    }
    if (n >= 7) {
        Polynomial scale = one;
        for (int k = 4; k <= 7; ++k) scale = scale * u(k, 1) * u(k, 2);
        rep.six_with_two = (det6(new_pts, {1, 2, 4, 5, 6, 7}) ==
                            scale * det6(old_pts, {1, 2, 4, 5, 6, 7}));
    }
    {
        // The two covariant conversions in the six-point frame. With row
        // determinants taken in the written index order the first identity
        // realizes the sign +1.
        Polynomial delta = one;
        for (int k = 4; k <= 6; ++k) delta = delta * u(k, 1) * u(k, 2) * u(k, 3);
        Polynomial lhs = det3(new_pts, 1, 3, 4) * det3(new_pts, 2, 3, 4) *
                         det3(new_pts, 3, 5, 6) * det3(new_pts, 4, 5, 6) *
                         det3(new_pts, 5, 1, 2) * det3(new_pts, 6, 1, 2);
        Polynomial rhs = delta * det3(old_pts, 1, 2, 4) *
                         det3(old_pts, 3, 5, 6) *
                         det6(old_pts, {1, 2, 3, 4, 5, 6});
        rep.covariant_cyclic = (lhs == rhs);
        Polynomial lhs2 = det3(new_pts, 1, 2, 3) * det3(new_pts, 4, 5, 6) *
                          det6(new_pts, {1, 2, 3, 4, 5, 6});
        Polynomial rhs2 = delta * det3(old_pts, 1, 2, 3) *
                          det3(old_pts, 4, 5, 6) *
                          det6(old_pts, {1, 2, 3, 4, 5, 6});
        rep.covariant_split = (lhs2 == rhs2);
    }
    return rep;
}

// --- rational configurations: genericity, covariant vectors, separation ---

struct GenericityReport {
    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<std::array<int, 6>> conic_sextuples;
    bool generic() const {
        return collinear_triples.empty() && conic_sextuples.empty();
    }
};

inline GenericityReport genericity_check(const PointConfig<Rat>& pts) {
    GenericityReport rep;
    const int n = static_cast<int>(pts.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (sgn(det3(pts, i, j, k)) == 0)
                    rep.collinear_triples.push_back({i, j, k});
    if (n >= 6) {
        std::array<int, 6> idx{};
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (pick.size() == 6) {
                std::copy(pick.begin(), pick.end(), idx.begin());
                if (detail::value_is_zero(det6(pts, idx)))
                    rep.conic_sextuples.push_back(idx);
                return;
            }
            for (int v = start; v <= n; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
    }
    return rep;
}

struct CovariantVector {
    std::vector<Rat> values;  // one per structure, in canonical structure order
    bool all_zero = true;
};

inline CovariantVector covariant_vector(const PointConfig<Rat>& pts, int d) {
    auto structures = enumerate_structures(d);
    if (static_cast<int>(pts.size()) != 9 - d)
        throw std::invalid_argument("covariant_vector: size mismatch");
    CovariantVector v;
    for (auto& s : structures) {
        Rat x = evaluate(pts, s);
        if (sgn(x) != 0) v.all_zero = false;
        v.values.push_back(std::move(x));
    }
    return v;
}

inline bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    // equal zero patterns (rules out zero vs nonzero vectors)
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((sgn(a[i]) == 0) != (sgn(b[i]) == 0)) return false;
    return true;
}

inline PointConfig<Rat> apply_projective(const Mat<Rat>& g,
                                         const PointConfig<Rat>& pts) {
    PointConfig<Rat> out;
    for (auto& p : pts) {
        Point3<Rat> q{Rat(0), Rat(0), Rat(0)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q[i] += g[i][j] * p[j];
        out.push_back(std::move(q));
    }
    return out;
}

// Canonical form: the transform carrying p1..p4 to the standard frame is
// applied and every later point is scaled to have first nonzero entry 1.
// Two generic configurations are projectively equivalent iff their
// canonical forms agree.
inline std::optional<PointConfig<Rat>> canonical_projective_form(
    const PointConfig<Rat>& pts) {
    if (pts.size() < 5) throw std::invalid_argument("canonical form: need >= 5");
    Mat<Rat> b(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = pts[j][i];
    if (sgn(determinant(b)) == 0) return std::nullopt;
    Mat<Rat> binv = matrix_inverse(b);
    std::vector<Rat> lambda(3, Rat(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lambda[i] += binv[i][j] * pts[3][j];
    for (auto& l : lambda)
        if (sgn(l) == 0) return std::nullopt;
    // t = diag(1/lambda) * binv sends p_i -> e_i (i<=3), p_4 -> (1,1,1)
    Mat<Rat> t(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = binv[i][j] / lambda[i];
    PointConfig<Rat> out = apply_projective(t, pts);
    for (auto& p : out) {
        Rat scale(0);
        for (auto& c : p)
            if (sgn(c) != 0) {
                scale = c;
                break;
            }
        if (sgn(scale) == 0) return std::nullopt;
        for (auto& c : p) c /= scale;
    }
    return out;
}

}  // namespace coble
