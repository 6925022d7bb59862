#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coble/chart.hpp"
#include "coble/linalg.hpp"
#include "coble/subsystem.hpp"
#include "coble/weyl.hpp"

namespace coble {

// Orbit of a polynomial, up to sign, under a list of substitutions.
// Deterministic: returned sorted, all members sign-canonical.
inline std::vector<std::pair<Polynomial, std::vector<int>>>
substitution_orbit_up_to_sign(const std::vector<LinearSubstitution>& gens,
                              const Polynomial& seed) {
    std::map<Polynomial, std::vector<int>> seen;
    std::vector<Polynomial> work;
    Polynomial s0 = seed.canonical_sign();
    seen.emplace(s0, std::vector<int>{});
    work.push_back(s0);
    while (!work.empty()) {
        Polynomial cur = std::move(work.back());
        work.pop_back();
        std::vector<int> word = seen.at(cur);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Polynomial img = gens[g].apply(cur).canonical_sign();
            if (!seen.count(img)) {
                auto w = word;
                w.push_back(static_cast<int>(g));
                seen.emplace(img, std::move(w));
                work.push_back(img);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// Connected components of a subsystem under the non-orthogonality graph.
inline std::vector<std::vector<RootIndex>> summands(const Lattice& lat,
                                                    const RootSubsystem& s) {
    std::map<RootIndex, int> comp;
    std::vector<std::vector<RootIndex>> out;
    for (RootIndex r : s.roots) {
        if (comp.count(r)) continue;
        std::vector<RootIndex> nodes{r};
        comp[r] = static_cast<int>(out.size());
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (RootIndex t : s.roots)
                if (!comp.count(t) &&
                    (lat.pair(nodes[q], t) != 0)) {
                    comp[t] = static_cast<int>(out.size());
                    nodes.push_back(t);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

// The unique antipodal pair orthogonal to three mutually orthogonal roots;
// throws if the perp is not a single pair.
inline RootIndex unique_perp_root(const Lattice& lat,
                                  const std::vector<RootIndex>& triple) {
    std::vector<RootIndex> found;
    for (int r = 0; r < lat.root_count(); ++r) {
        bool ok = true;
        for (RootIndex t : triple)
            if (lat.pair(static_cast<RootIndex>(r), t) != 0) {
                ok = false;
                break;
            }
        if (ok) found.push_back(static_cast<RootIndex>(r));
    }
    if (found.size() != 2)
        throw std::domain_error("unique_perp_root: perp is not a single pair");
    return lat.positive(found[0]) ? found[0] : found[1];
}

enum class CovariantClass {
    Single,      // d = 5
    OrbitSeed,   // d = 4 (no shape split)
    CyclicPairs, // d = 3, thirty covariants
    SplitHalves, // d = 3, ten covariants
    TypeA,       // d = 2, 105 covariants
    TypeB        // d = 2, 30 covariants
};

struct Covariant {
    Polynomial poly;  // sign-canonical
    // Every covariant is a product of root forms; `roots` holds the sorted
    // positive representatives of those factors.
    std::vector<RootIndex> roots;
    std::optional<RootSubsystem> source;
    std::vector<int> word;  // generator word from the orbit seed (d = 4)
    CovariantClass cls = CovariantClass::Single;
};

// The space spanned by the Coble covariants for Del Pezzo degree d, realized
// as homogeneous root polynomials of degree d(9-d)/2 in the t-chart.
struct CobleSpace {
    int d = 0;
    LatticePtr lattice;
    TChart chart;
    std::vector<Covariant> covariants;  // sorted by polynomial
    int dimension = 0;
    std::vector<int> basis;  // indices of a maximal independent subset

    long covariant_degree() const { return static_cast<long>(d) * (9 - d) / 2; }

    std::vector<Polynomial> polys() const {
        std::vector<Polynomial> ps;
        ps.reserve(covariants.size());
        for (auto& c : covariants) ps.push_back(c.poly);
        return ps;
    }

    int index_of(const Polynomial& canonical) const {
        auto it =
            std::lower_bound(covariants.begin(), covariants.end(), canonical,
                             [](const Covariant& c, const Polynomial& p) {
                                 return c.poly < p;
                             });
        if (it == covariants.end() || !(it->poly == canonical))
            throw std::invalid_argument("CobleSpace: unknown covariant");
        return static_cast<int>(it - covariants.begin());
    }
};

// Greedy maximal independent subset, in input order.
inline std::vector<int> greedy_basis(const std::vector<Polynomial>& polys) {
    auto support = monomial_support(polys);
    std::map<Exp, int, GrlexLess> col;
    for (std::size_t i = 0; i < support.size(); ++i)
        col.emplace(support[i], static_cast<int>(i));
    Mat<Rat> ech;  // echelon rows
    std::vector<int> pivots;
    std::vector<int> chosen;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        std::vector<Rat> row(support.size(), Rat(0));
        for (auto& [e, c] : polys[i].terms()) row[col.at(e)] = c;
        for (std::size_t r = 0; r < ech.size(); ++r) {
            if (sgn(row[pivots[r]]) == 0) continue;
            Rat f = row[pivots[r]];
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] -= f * ech[r][j];
        }
        int piv = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (sgn(row[j]) != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) continue;
        Rat inv = 1 / row[piv];
        for (auto& x : row) x *= inv;
        ech.push_back(std::move(row));
        pivots.push_back(piv);
        chosen.push_back(static_cast<int>(i));
    }
    return chosen;
}

// Rational linear forms eps_1..eps_5 on the degree-4 chart solving
// eps_i - eps_{i+1} = form(h_{i,i+1}) (i = 1..4), eps_4 + eps_5 = form(h123).
inline std::vector<Polynomial> epsilon_forms(const TChart& chart) {
    const auto& lat = *chart.lattice();
    if (lat.n() != 5)
        throw std::invalid_argument("epsilon_forms: requires the D5 lattice");
    Mat<Rat> a(5, std::vector<Rat>(5, Rat(0)));
    Mat<Rat> b(5, std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 4; ++i) {
        a[i][i] = Rat(1);
        a[i][i + 1] = Rat(-1);
        b[i] = linear_coefficients(chart.root_form(lat.root_ij(i + 1, i + 2)));
    }
    a[4][3] = Rat(1);
    a[4][4] = Rat(1);
    b[4] = linear_coefficients(chart.root_form(lat.root_ijk(1, 2, 3)));
    Mat<Rat> inv = matrix_inverse(a);
    std::vector<Polynomial> eps;
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> coef(5, Rat(0));
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) coef[k] += inv[i][j] * b[j][k];
        eps.push_back(linear_form(chart.ring(), coef));
    }
    return eps;
}

inline Polynomial degree4_seed(const TChart& chart) {
    auto eps = epsilon_forms(chart);
    Polynomial p = Polynomial::constant(chart.ring(), Rat(1));
    for (int i = 0; i < 5; ++i) {
        const Polynomial& a = eps[i];
        const Polynomial& b = eps[(i + 1) % 5];
        p = p * (a * a - b * b);
    }
    return p.canonical_sign();
}

// The ten roots whose forms multiply to the degree-4 seed: the linear forms
// eps_i -+ eps_{i+1} around the cycle, reconstructed as lattice roots.
inline std::vector<RootIndex> degree4_seed_roots(const TChart& chart) {
    const auto& lat = *chart.lattice();
    auto eps = epsilon_forms(chart);
    std::vector<RootIndex> roots;
    for (int i = 0; i < 5; ++i) {
        for (int s : {-1, 1}) {
            Polynomial form = eps[i] + eps[(i + 1) % 5] * Rat(s);
            auto coef = linear_coefficients(form);
            Vec v(lat.n() + 1, 0);
            long sum = 0;
            for (int j = 0; j < lat.n(); ++j) {
                if (coef[j].get_den() != 1)
                    throw std::logic_error("degree4_seed_roots: non-integral");
                v[j + 1] = static_cast<int>(coef[j].get_num().get_si());
                sum += v[j + 1];
            }
            if (sum % 3 != 0)
                throw std::logic_error("degree4_seed_roots: bad form");
            v[0] = static_cast<int>(-sum / 3);
            roots.push_back(lat.positive_rep(lat.index_of(v)));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Number of antipodal pairs whose roots have l-coefficient zero.
inline int l_zero_pairs(const Lattice& lat, const RootSubsystem& s) {
    int n = 0;
    for (RootIndex r : s.positive)
        if (lat.root(r)[0] == 0) ++n;
    return n;
}

inline CobleSpace coble_basis(const LatticePtr& lat) {
    CobleSpace cs{9 - lat->n(), lat, TChart(lat), {}, 0, {}};
    const int d = cs.d;
    if (d == 5) {
        SubsystemEnumerator en(lat);
        auto a4 = en.enumerate(CartanType::parse("A4"));
        if (a4.size() != 1)
            throw std::logic_error("coble_basis: expected a unique A4");
        cs.covariants.push_back({cs.chart.discriminant(a4[0]), a4[0].positive,
                                 a4[0], {}, CovariantClass::Single});
    } else if (d == 4) {
        // orbit of the ten-root seed set under the simple reflections
        std::vector<std::vector<RootIndex>> perms;
        for (const auto& g : simple_reflections(*lat))
            perms.push_back(root_permutation(*lat, g));
        auto seed = degree4_seed_roots(cs.chart);
        std::map<std::vector<RootIndex>, std::vector<int>> seen;
        std::vector<std::vector<RootIndex>> work{seed};
        seen.emplace(seed, std::vector<int>{});
        while (!work.empty()) {
            auto cur = std::move(work.back());
            work.pop_back();
            auto word = seen.at(cur);
            for (std::size_t g = 0; g < perms.size(); ++g) {
                std::vector<RootIndex> img;
                img.reserve(cur.size());
                for (RootIndex r : cur)
                    img.push_back(lat->positive_rep(perms[g][r]));
                std::sort(img.begin(), img.end());
                if (!seen.count(img)) {
                    auto w = word;
                    w.push_back(static_cast<int>(g));
                    seen.emplace(img, std::move(w));
                    work.push_back(img);
                }
            }
        }
        for (auto& [roots, word] : seen)
            cs.covariants.push_back(
                {cs.chart.product_of_forms(roots).canonical_sign(), roots,
                 std::nullopt, word, CovariantClass::OrbitSeed});
    } else if (d == 3 || d == 2) {
        SubsystemEnumerator en(lat);
        auto systems =
            en.enumerate(CartanType::parse(d == 3 ? "3A2" : "7A1"));
        for (auto& s : systems) {
            Covariant c{cs.chart.discriminant(s), s.positive, s, {},
                        CovariantClass::Single};
            if (d == 3)
                c.cls = (l_zero_pairs(*lat, s) == 3) ? CovariantClass::CyclicPairs
                                                     : CovariantClass::SplitHalves;
            else
                c.cls = (l_zero_pairs(*lat, s) == 0) ? CovariantClass::TypeB
                                                     : CovariantClass::TypeA;
            cs.covariants.push_back(std::move(c));
        }
    } else {
        throw std::invalid_argument("coble_basis: d must be in {2,3,4,5}");
    }
    std::sort(cs.covariants.begin(), cs.covariants.end(),
              [](const Covariant& a, const Covariant& b) {
                  return a.poly < b.poly;
              });
    for (std::size_t i = 1; i < cs.covariants.size(); ++i)
        if (cs.covariants[i].poly == cs.covariants[i - 1].poly)
            throw std::logic_error("coble_basis: covariants collapsed");
    auto ps = cs.polys();
    cs.basis = greedy_basis(ps);
    cs.dimension = static_cast<int>(cs.basis.size());
    return cs;
}

inline CobleSpace coble_basis(int d) { return coble_basis(build_lattice(d)); }

// --- crosses ---

// (1 - s_alpha) Delta(S+) for a 3A2 system S and a root alpha that is not
// orthogonal to any summand. Not sign-normalized.
inline Polynomial cross(const TChart& chart, const RootSubsystem& s,
                        RootIndex alpha) {
    const auto& lat = *chart.lattice();
    if (!(s.type == CartanType::parse("3A2")))
        throw std::invalid_argument("cross: S must have type 3A2");
    auto parts = summands(lat, s);
    for (auto& part : parts) {
        bool all_orth = true;
        for (RootIndex r : part)
            if (lat.pair(alpha, r) != 0) {
                all_orth = false;
                break;
            }
        if (all_orth)
            throw std::invalid_argument(
                "cross: alpha is orthogonal to a summand");
    }
    // roots of S orthogonal to alpha must form a 3A1 meeting every summand
    std::vector<RootIndex> fixed;
    for (RootIndex r : s.roots)
        if (lat.pair(alpha, r) == 0) fixed.push_back(r);
    if (fixed.size() != 6)
        throw std::invalid_argument("cross: fixed roots do not form a 3A1");
    for (auto& part : parts) {
        int hits = 0;
        for (RootIndex r : fixed)
            if (std::binary_search(part.begin(), part.end(), r)) ++hits;
        if (hits != 2)
            throw std::invalid_argument("cross: fixed roots miss a summand");
    }
    Polynomial delta = chart.positive_product(s);
    std::vector<RootIndex> reflected;
    for (RootIndex r : s.positive) reflected.push_back(lat.reflect_root(alpha, r));
    return delta - chart.product_of_forms(reflected);
}

// The two 3A2 systems containing three mutually orthogonal roots.
inline std::vector<const RootSubsystem*> systems_containing_triple(
    const std::vector<RootSubsystem>& all_3a2,
    const std::vector<RootIndex>& triple_pos, const Lattice& lat) {
    std::vector<const RootSubsystem*> found;
    for (auto& s : all_3a2) {
        bool ok = true;
        for (RootIndex r : triple_pos)
            if (!s.contains(r) && !s.contains(lat.negate(r))) {
                ok = false;
                break;
            }
        if (ok) found.push_back(&s);
    }
    return found;
}

// Cross attached to a 4A1 subsystem: three of its pairs divide, the fourth
// is the reflection root. Canonical up to sign; `which` picks the pair used
// as the reflection root.
inline Polynomial cross_from_4a1(const TChart& chart, const RootSubsystem& s4a1,
                                 const std::vector<RootSubsystem>& all_3a2,
                                 int which = 0) {
    const auto& lat = *chart.lattice();
    if (!(s4a1.type == CartanType::parse("4A1")))
        throw std::invalid_argument("cross_from_4a1: type must be 4A1");
    std::vector<RootIndex> pos = s4a1.positive;
    RootIndex alpha = pos.at(which);
    std::vector<RootIndex> triple;
    for (RootIndex r : pos)
        if (r != alpha) triple.push_back(r);
    auto hosts = systems_containing_triple(all_3a2, triple, lat);
    if (hosts.size() != 2)
        throw std::domain_error("cross_from_4a1: expected two host systems");
    return cross(chart, *hosts[0], alpha).canonical_sign();
}

// --- relation checks ---

struct D4RelationResult {
    bool relation_holds = false;       // f = s(f) + s'(f), non-commuting pair
    bool commuting_pair_fails = false; // same identity fails for a commuting pair
    bool classes_consistent = false;   // commuting is an equivalence on the 8
    bool plane_rank2 = false;          // three 4A1 discriminants span a plane
};

inline D4RelationResult verify_d4_relation(const TChart& chart,
                                           const RootSubsystem& d4,
                                           const RootSubsystem& inner_4a1) {
    const auto& lat = *chart.lattice();
    D4RelationResult res;
    if (!(d4.type == CartanType::parse("D4")) ||
        !(inner_4a1.type == CartanType::parse("4A1")))
        throw std::invalid_argument("verify_d4_relation: type mismatch");
    // reflections of W(S) - W(S_o), as positive roots
    std::vector<RootIndex> extra;
    for (RootIndex r : d4.positive)
        if (!inner_4a1.contains(r)) extra.push_back(r);
    if (extra.size() != 8) throw std::logic_error("verify_d4_relation: count");
    // two classes: same class iff the reflections commute
    std::vector<RootIndex> cls_a{extra[0]}, cls_b;
    for (std::size_t i = 1; i < extra.size(); ++i)
        (lat.pair(extra[0], extra[i]) == 0 ? cls_a : cls_b).push_back(extra[i]);
    res.classes_consistent = true;
    auto commutes = [&](RootIndex x, RootIndex y) {
        return lat.pair(x, y) == 0;
    };
    for (auto* cls : {&cls_a, &cls_b})
        for (std::size_t i = 0; i < cls->size(); ++i)
            for (std::size_t j = i + 1; j < cls->size(); ++j)
                if (!commutes((*cls)[i], (*cls)[j])) res.classes_consistent = false;
    for (RootIndex x : cls_a)
        for (RootIndex y : cls_b)
            if (commutes(x, y)) res.classes_consistent = false;

    Polynomial f = chart.positive_product(inner_4a1);
    auto img = [&](RootIndex r) {
        std::vector<RootIndex> reflected;
        for (RootIndex x : inner_4a1.positive)
            reflected.push_back(lat.reflect_root(r, x));
        return chart.product_of_forms(reflected);
    };
    res.relation_holds = (f == img(cls_a[0]) + img(cls_b[0]));
    res.commuting_pair_fails = !(f == img(cls_a[0]) + img(cls_a[1]));

    // the three 4A1 discriminants
    std::vector<Polynomial> discs{f.canonical_sign()};
    for (RootIndex r : {cls_a[0], cls_b[0]}) {
        auto perm = root_permutation(lat, reflection(lat, r));
        RootSubsystem moved;
        moved.roots = apply_to_index_set(perm, inner_4a1.roots);
        for (RootIndex x : moved.roots)
            if (lat.positive(x)) moved.positive.push_back(x);
        discs.push_back(chart.positive_product(moved).canonical_sign());
    }
    res.plane_rank2 = (span_dimension(discs) == 2);
    return res;
}

// Degree-4 identity in the E7 chart: the product of the forms of
// h_7, h_12, h_34, h_56 equals (1 - (34)) applied to the product of the
// forms of h_246, h_235, h_145, h_136.
inline bool verify_ab_relation(const TChart& chart, bool with_transposition = true) {
    const auto& lat = *chart.lattice();
    if (lat.n() != 7)
        throw std::invalid_argument("verify_ab_relation: requires E7");
    auto form = [&](const Vec& v) { return chart.root_form(v); };
    Polynomial lhs = form(lat.root_hi(7)) * form(lat.root_ij(1, 2)) *
                     form(lat.root_ij(3, 4)) * form(lat.root_ij(5, 6));
    Polynomial g = form(lat.root_ijk(2, 4, 6)) * form(lat.root_ijk(2, 3, 5)) *
                   form(lat.root_ijk(1, 4, 5)) * form(lat.root_ijk(1, 3, 6));
    Polynomial rhs = g;
    if (with_transposition) {
        std::vector<int> perm{0, 1, 3, 2, 4, 5, 6};  // swap t3, t4
        rhs = g - g.permute_variables(perm);
    }
    return lhs == rhs;
}

// Signed sum over the six permutations of {t_i, t_j, t_k} (1-based indices).
inline Polynomial signed_s3_sum(const Polynomial& p, int i, int j, int k) {
    const int n = static_cast<int>(p.ring()->arity());
    std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                             {1, 2, 0},
                                             {2, 0, 1},
                                             {1, 0, 2},
                                             {0, 2, 1},
                                             {2, 1, 0}}};
    std::array<int, 6> sign{1, 1, 1, -1, -1, -1};
    std::array<int, 3> pos{i - 1, j - 1, k - 1};
    Polynomial total(p.ring());
    for (int w = 0; w < 6; ++w) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        for (int v = 0; v < 3; ++v) perm[pos[v]] = pos[perms[w][v]];
        Polynomial img = p.permute_variables(perm);
        if (sign[w] < 0) total -= img;
        else total += img;
    }
    return total;
}

inline bool verify_s3_annihilation(const Polynomial& g, int i, int j, int k) {
    return signed_s3_sum(g, i, j, k).is_zero();
}

// --- cross sums against a fixed D5 ---

struct CrossSumResult {
    bool intersection_type_ok = false;  // S cap R_o of type 2A1+A2
    bool reflections_in_ro = false;     // the three extra reflections lie in R_o
    bool sum_identity = false;          // 2 Delta = sum of the three crosses
    std::vector<RootIndex> intersection;
};

inline CrossSumResult verify_cross_sum(const TChart& chart,
                                       const RootSubsystem& s,
                                       const RootSubsystem& r_o) {
    const auto& lat = *chart.lattice();
    CrossSumResult res;
    auto inter = subsystem_intersection(s, r_o);
    res.intersection = inter;
    RootSubsystem si;
    si.roots = inter;
    for (RootIndex r : inter)
        if (lat.positive(r)) si.positive.push_back(r);
    si.type = classify_simple_system(lat, extract_simple_roots(lat, inter));
    res.intersection_type_ok = (si.type == CartanType::parse("2A1+A2"));
    if (!res.intersection_type_ok) return res;

    auto parts = summands(lat, si);
    std::vector<RootIndex> a1_pos;
    std::vector<RootIndex> a2_pos;
    for (auto& part : parts) {
        std::vector<RootIndex> pos;
        for (RootIndex r : part)
            if (lat.positive(r)) pos.push_back(r);
        if (part.size() == 2) a1_pos.push_back(pos[0]);
        else a2_pos = pos;
    }
    if (a1_pos.size() != 2 || a2_pos.size() != 3)
        throw std::logic_error("verify_cross_sum: summand shapes");

    Polynomial delta = chart.positive_product(s);
    Polynomial total(chart.ring());
    res.reflections_in_ro = true;
    for (RootIndex rho : a2_pos) {
        std::vector<RootIndex> triple{a1_pos[0], a1_pos[1], rho};
        RootIndex alpha = unique_perp_root(lat, triple);
        if (!r_o.contains(alpha)) res.reflections_in_ro = false;
        std::vector<RootIndex> reflected;
        for (RootIndex r : s.positive)
            reflected.push_back(lat.reflect_root(alpha, r));
        total += delta - chart.product_of_forms(reflected);
    }
    res.sum_identity = (total == delta + delta);
    return res;
}

struct PlaneDecomposition {
    // for each of the 5 D4 subsystems: the three crosses, sign-canonical
    std::vector<std::vector<Polynomial>> planes;
    std::vector<bool> plane_rank2;
    std::vector<bool> signed_sum_zero;
    int total_span = 0;
    std::vector<int> drop_one_rank;  // span of the union of any 4 planes
    bool pairwise_direct = false;    // every pair of planes spans rank 4
};

inline PlaneDecomposition d5_plane_decomposition(
    const TChart& chart, const RootSubsystem& r_o,
    const std::vector<RootSubsystem>& all_3a2) {
    const auto& lat = *chart.lattice();
    if (!(r_o.type == CartanType::parse("D5")))
        throw std::invalid_argument("d5_plane_decomposition: R_o must be D5");
    SubsystemEnumerator inner(chart.lattice(), r_o.roots);
    auto d4s = inner.enumerate(CartanType::parse("D4"));
    PlaneDecomposition out;
    for (auto& d4 : d4s) {
        SubsystemEnumerator in4(chart.lattice(), d4.roots);
        auto quads = in4.enumerate(CartanType::parse("4A1"));
        std::vector<Polynomial> crosses;
        for (auto& q : quads)
            crosses.push_back(cross_from_4a1(chart, q, all_3a2));
        bool rank2 = (span_dimension(crosses) == 2);
        bool sum_zero = false;
        if (crosses.size() == 3) {
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    Polynomial t = crosses[0] + crosses[1] * Rat(s2) +
                                   crosses[2] * Rat(s3);
                    if (t.is_zero()) sum_zero = true;
                }
        }
        out.planes.push_back(std::move(crosses));
        out.plane_rank2.push_back(rank2);
        out.signed_sum_zero.push_back(sum_zero);
    }
    std::vector<Polynomial> all;
    for (auto& p : out.planes) all.insert(all.end(), p.begin(), p.end());
    out.total_span = span_dimension(all);
    for (std::size_t skip = 0; skip < out.planes.size(); ++skip) {
        std::vector<Polynomial> rest;
        for (std::size_t i = 0; i < out.planes.size(); ++i)
            if (i != skip)
                rest.insert(rest.end(), out.planes[i].begin(),
                            out.planes[i].end());
        out.drop_one_rank.push_back(span_dimension(rest));
    }
    out.pairwise_direct = true;
    for (std::size_t i = 0; i < out.planes.size(); ++i)
        for (std::size_t j = i + 1; j < out.planes.size(); ++j) {
            std::vector<Polynomial> two = out.planes[i];
            two.insert(two.end(), out.planes[j].begin(), out.planes[j].end());
            if (span_dimension(two) != 4) out.pairwise_direct = false;
        }
    (void)lat;
    return out;
}

// --- representation checks ---

// Matrices of the simple reflections on the chosen basis of the span. The
// image of a basis covariant is computed through the root permutation of
// the generator; this agrees with the substitution action on the product
// of root forms.
inline std::vector<Mat<Rat>> reflection_matrices(const CobleSpace& cs) {
    const auto& lat = *cs.lattice;
    std::vector<Polynomial> basis_polys;
    for (int b : cs.basis) basis_polys.push_back(cs.covariants[b].poly);
    LinearSolver solver(basis_polys);
    // coordinates of every covariant in the basis
    std::vector<std::vector<Rat>> coords;
    for (auto& c : cs.covariants) {
        auto x = solver.express(c.poly);
        if (!x)
            throw std::logic_error("reflection_matrices: covariant not in span");
        coords.push_back(std::move(*x));
    }
    std::vector<Mat<Rat>> mats;
    for (const auto& gen : simple_reflections(lat)) {
        auto perm = root_permutation(lat, gen);
        const int r = static_cast<int>(cs.basis.size());
        Mat<Rat> g(r, std::vector<Rat>(r, Rat(0)));
        for (int j = 0; j < r; ++j) {
            Polynomial img =
                cs.chart.permuted_product(cs.covariants[cs.basis[j]].roots, perm);
            Polynomial canon = img.canonical_sign();
            int k = cs.index_of(canon);
            int sgn_img = (img == canon) ? 1 : -1;
            for (int i = 0; i < r; ++i)
                g[i][j] = coords[k][i] * Rat(sgn_img);
        }
        mats.push_back(std::move(g));
    }
    return mats;
}

inline int coble_commutant_dimension(const CobleSpace& cs) {
    return commutant_dimension(reflection_matrices(cs));
}

// t -> -t sends every covariant to its negative (odd degree).
inline bool central_negation_check(const CobleSpace& cs) {
    for (auto& c : cs.covariants)
        if (!(c.poly.negate_variables() == -c.poly)) return false;
    return true;
}

// The covariant set, up to sign, is stable under every simple reflection.
inline bool orbit_stability_check(const CobleSpace& cs) {
    const auto& lat = *cs.lattice;
    for (const auto& gen : simple_reflections(lat)) {
        auto perm = root_permutation(lat, gen);
        for (auto& c : cs.covariants) {
            Polynomial img =
                cs.chart.permuted_product(c.roots, perm).canonical_sign();
            bool found = true;
            try {
                cs.index_of(img);
            } catch (const std::invalid_argument&) {
                found = false;
            }
            if (!found) return false;
        }
    }
    return true;
}

// --- zero locus combinatorics ---

struct ZeroLocusResult {
    bool sweep_ok = false;       // every covariant system meets every witness system
    bool witness_disjoint = false;
    long checked = 0;
};

inline ZeroLocusResult zero_locus_check_d3(const LatticePtr& lat) {
    ZeroLocusResult res;
    SubsystemEnumerator en(lat);
    auto tri = en.enumerate(CartanType::parse("3A2"));
    auto a3 = en.enumerate(CartanType::parse("A3"));
    res.sweep_ok = true;
    for (auto& s : tri)
        for (auto& t : a3) {
            ++res.checked;
            if (!subsystems_meet(s, t)) res.sweep_ok = false;
        }
    auto witness_cov = subsystem_from_generators(
        *lat, {lat->root_ij(1, 2), lat->root_ij(2, 3), lat->root_ij(4, 5),
               lat->root_ij(5, 6), lat->root_ijk(1, 2, 3), lat->root_h()});
    auto witness_other = subsystem_from_generators(
        *lat, {lat->root_ij(1, 6), lat->root_ijk(1, 2, 5), lat->root_ij(3, 4),
               lat->root_ijk(1, 3, 6), lat->root_ij(2, 5)});
    res.witness_disjoint =
        (witness_cov.type == CartanType::parse("3A2")) &&
        (witness_other.type == CartanType::parse("2A2+A1")) &&
        !subsystems_meet(witness_cov, witness_other);
    return res;
}

inline ZeroLocusResult zero_locus_check_d2(const LatticePtr& lat) {
    ZeroLocusResult res;
    SubsystemEnumerator en(lat);
    auto sevens = en.enumerate(CartanType::parse("7A1"));
    auto d4s = en.enumerate(CartanType::parse("D4"));
    auto a5s = en.enumerate(CartanType::parse("A5"));
    res.sweep_ok = true;
    for (auto& s : sevens) {
        for (auto& t : d4s) {
            ++res.checked;
            if (!subsystems_meet(s, t)) res.sweep_ok = false;
        }
        for (auto& t : a5s) {
            if (!is_special_a5(*lat, t)) continue;
            ++res.checked;
            if (!subsystems_meet(s, t)) res.sweep_ok = false;
        }
    }
    // the seven-triple witness vs the nonsaturated A7 root set
    auto witness = subsystem_from_generators(
        *lat, {lat->root_ijk(1, 2, 3), lat->root_ijk(1, 4, 5),
               lat->root_ijk(1, 6, 7), lat->root_ijk(2, 5, 6),
               lat->root_ijk(2, 4, 7), lat->root_ijk(3, 5, 7),
               lat->root_ijk(3, 4, 6)});
    std::vector<RootIndex> a7;
    for (int i = 1; i <= 7; ++i) {
        for (int j = i + 1; j <= 7; ++j) {
            a7.push_back(lat->index_of(lat->root_ij(i, j)));
            a7.push_back(lat->index_of(lat->root_ij(j, i)));
        }
        a7.push_back(lat->index_of(lat->root_hi(i)));
        a7.push_back(lat->index_of(vec_neg(lat->root_hi(i))));
    }
    std::sort(a7.begin(), a7.end());
    RootSubsystem a7sys;
    a7sys.roots = a7;
    for (RootIndex r : a7) if (lat->positive(r)) a7sys.positive.push_back(r);
    a7sys.type = classify_simple_system(*lat, extract_simple_roots(*lat, a7));
    bool witness_ok = (witness.type == CartanType::parse("7A1")) &&
                      (a7sys.type == CartanType::parse("A7"));
    res.witness_disjoint = witness_ok && !subsystems_meet(witness, a7sys);
    return res;
}

// --- restriction quintics (degree four chart, classical coordinates) ---

struct QuinticOrbitReport {
    std::size_t orbit_size = 0;
    bool family1_in_orbit = false;
    bool family2_in_orbit = false;
    bool orbit_is_union = false;  // the orbit equals family1 + family2
};

// Both families of quintics in the sign-permutation model x_1..x_5 lie in
// one orbit under permutations and even sign changes.
inline QuinticOrbitReport d3_restriction_quintics() {
    auto ring = make_var_ring(5, "x");
    auto x = [&](int i) { return Polynomial::variable(ring, i - 1); };
    auto sq_diff = [&](int l, int m) {
        return x(l) * x(l) - x(m) * x(m);
    };
    std::set<Polynomial> family;
    std::vector<Polynomial> family1, family2;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                std::vector<int> rest;
                for (int v = 1; v <= 5; ++v)
                    if (v != i && v != j && v != k) rest.push_back(v);
                Polynomial q = (x(i) - x(j)) * (x(j) - x(k)) * (x(i) - x(k)) *
                               sq_diff(rest[0], rest[1]);
                family1.push_back(q.canonical_sign());
            }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k) {
                if (k == i || k == j) continue;
                std::vector<int> rest;
                for (int v = 1; v <= 5; ++v)
                    if (v != i && v != j && v != k) rest.push_back(v);
                Polynomial q = (x(i) - x(j)) * (x(j) + x(k)) * (x(i) + x(k)) *
                               sq_diff(rest[0], rest[1]);
                family2.push_back(q.canonical_sign());
            }
    for (auto& q : family1) family.insert(q);
    for (auto& q : family2) family.insert(q);

    // W(D5) generators: adjacent transpositions and the double sign change
    std::vector<LinearSubstitution> gens;
    for (int i = 0; i < 4; ++i) {
        std::vector<std::vector<Rat>> m(5, std::vector<Rat>(5, Rat(0)));
        for (int v = 0; v < 5; ++v) m[v][v] = Rat(1);
        m[i][i] = m[i + 1][i + 1] = Rat(0);
        m[i][i + 1] = m[i + 1][i] = Rat(1);
        gens.emplace_back(ring, std::move(m));
    }
    {
        std::vector<std::vector<Rat>> m(5, std::vector<Rat>(5, Rat(0)));
        for (int v = 0; v < 3; ++v) m[v][v] = Rat(1);
        m[3][4] = Rat(-1);
        m[4][3] = Rat(-1);
        gens.emplace_back(ring, std::move(m));
    }
    auto orbit = substitution_orbit_up_to_sign(gens, family1[0]);
    std::set<Polynomial> orbit_set;
    for (auto& [p, w] : orbit) orbit_set.insert(p);

    QuinticOrbitReport rep;
    rep.orbit_size = orbit_set.size();
    rep.family1_in_orbit = true;
    for (auto& q : family1)
        if (!orbit_set.count(q)) rep.family1_in_orbit = false;
    rep.family2_in_orbit = true;
    for (auto& q : family2)
        if (!orbit_set.count(q)) rep.family2_in_orbit = false;
    rep.orbit_is_union = (orbit_set == family);
    return rep;
}

}  // namespace coble
