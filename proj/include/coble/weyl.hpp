#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coble/lattice.hpp"
#include "coble/subsystem.hpp"

namespace coble {

// An orthogonal transformation of the lattice fixing k, as an integer matrix
// on the (l, e1..en) basis acting by v -> m v. An optional generator word
// records how the element was produced.
struct WeylElement {
    Mat<int> m;
    std::vector<int> word;  // indices into the generating reflections

    int dim() const { return static_cast<int>(m.size()); }

    Vec apply(const Vec& v) const {
        const int n = dim();
        Vec r(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
        return r;
    }

    bool operator==(const WeylElement& o) const { return m == o.m; }
    bool operator<(const WeylElement& o) const { return m < o.m; }
};

inline WeylElement weyl_identity(const Lattice& lat) {
    WeylElement w;
    w.m.assign(lat.dim(), std::vector<int>(lat.dim(), 0));
    for (int i = 0; i < lat.dim(); ++i) w.m[i][i] = 1;
    return w;
}

inline WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
    const int n = a.dim();
    WeylElement r;
    r.m.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a.m[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
        }
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

// For pairing-preserving m, the inverse is J m^T J with J = diag(1,-1,..,-1).
inline WeylElement weyl_inverse(const WeylElement& a) {
    const int n = a.dim();
    WeylElement r;
    r.m.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int sgn_ij = ((i == 0) == (j == 0)) ? 1 : -1;
            r.m[i][j] = sgn_ij * a.m[j][i];
        }
    return r;
}

inline bool preserves_pairing(const Lattice& lat, const WeylElement& w) {
    const int n = lat.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Vec ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (pairing(w.apply(ei), w.apply(ej)) != pairing(ei, ej))
                return false;
        }
    return true;
}

inline bool fixes_k(const Lattice& lat, const WeylElement& w) {
    return w.apply(lat.k()) == lat.k();
}

inline WeylElement reflection(const Lattice& lat, const Vec& alpha) {
    if (!lat.is_root(alpha))
        throw std::invalid_argument("reflection: not a root");
    const int n = lat.dim();
    WeylElement w;
    w.m.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j) {
        Vec ej(n, 0);
        ej[j] = 1;
        Vec img = reflect(alpha, ej);
        for (int i = 0; i < n; ++i) w.m[i][j] = img[i];
    }
    return w;
}

inline WeylElement reflection(const Lattice& lat, RootIndex r) {
    return reflection(lat, lat.root(r));
}

// The simple reflections, in the simple-root order of the lattice.
inline std::vector<WeylElement> simple_reflections(const Lattice& lat) {
    std::vector<WeylElement> gens;
    int i = 0;
    for (RootIndex r : lat.simple_roots()) {
        WeylElement w = reflection(lat, r);
        w.word = {i++};
        gens.push_back(std::move(w));
    }
    return gens;
}

// The permutation a Weyl element induces on root indices.
inline std::vector<RootIndex> root_permutation(const Lattice& lat,
                                               const WeylElement& w) {
    std::vector<RootIndex> p(lat.root_count());
    for (int i = 0; i < lat.root_count(); ++i)
        p[i] = lat.index_of(w.apply(lat.root(i)));
    return p;
}

inline std::vector<RootIndex> apply_to_index_set(
    const std::vector<RootIndex>& perm, const std::vector<RootIndex>& set) {
    std::vector<RootIndex> out;
    out.reserve(set.size());
    for (RootIndex r : set) out.push_back(perm[r]);
    std::sort(out.begin(), out.end());
    return out;
}

// Breadth-first orbit of a root set under a list of root-index permutations.
// Deterministic: members are emitted in sorted order.
inline std::vector<std::vector<RootIndex>> orbit_of_root_set(
    const std::vector<std::vector<RootIndex>>& perms,
    const std::vector<RootIndex>& seed) {
    std::set<std::vector<RootIndex>> seen{seed};
    std::vector<std::vector<RootIndex>> work{seed};
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        for (const auto& p : perms) {
            auto img = apply_to_index_set(p, cur);
            if (seen.insert(img).second) work.push_back(img);
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<RootSubsystem> weyl_orbit_of_subsystem(
    const Lattice& lat, const std::vector<WeylElement>& gens,
    const RootSubsystem& seed) {
    std::vector<std::vector<RootIndex>> perms;
    for (const auto& g : gens) perms.push_back(root_permutation(lat, g));
    std::vector<RootSubsystem> out;
    for (auto& set : orbit_of_root_set(perms, seed.roots)) {
        RootSubsystem s;
        s.roots = std::move(set);
        for (RootIndex r : s.roots)
            if (lat.positive(r)) s.positive.push_back(r);
        s.type = seed.type;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Orbit of a single root under generators.
inline std::vector<RootIndex> weyl_orbit_of_root(
    const Lattice& lat, const std::vector<WeylElement>& gens, RootIndex seed) {
    std::vector<std::vector<RootIndex>> perms;
    for (const auto& g : gens) perms.push_back(root_permutation(lat, g));
    std::vector<bool> seen(lat.root_count(), false);
    std::vector<RootIndex> members{seed}, work{seed};
    seen[seed] = true;
    while (!work.empty()) {
        RootIndex cur = work.back();
        work.pop_back();
        for (const auto& p : perms)
            if (!seen[p[cur]]) {
                seen[p[cur]] = true;
                members.push_back(p[cur]);
                work.push_back(p[cur]);
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Reflections in e_i - e_{i+1}: generators of the index-permutation subgroup.
inline std::vector<WeylElement> permutation_generators(const Lattice& lat) {
    std::vector<WeylElement> gens;
    for (int i = 1; i < lat.n(); ++i)
        gens.push_back(reflection(lat, lat.root_ij(i, i + 1)));
    return gens;
}

struct S7Split {
    std::vector<RootSubsystem> type_a;  // orbit of size 105
    std::vector<RootSubsystem> type_b;  // orbit of size 30
};

// Splits the 7A1 subsystems of E7 into the two orbits of the subgroup
// permuting e_1..e_7. Type A systems contain a root with l-coefficient 0;
// type B systems consist of l-coefficient +-1 roots only.
inline S7Split s7_orbit_split(const Lattice& lat,
                              const std::vector<RootSubsystem>& all) {
    if (lat.n() != 7)
        throw std::invalid_argument("s7_orbit_split: requires E7");
    auto gens = permutation_generators(lat);
    std::vector<std::vector<RootIndex>> perms;
    for (auto& g : gens) perms.push_back(root_permutation(lat, g));

    std::set<std::vector<RootIndex>> remaining;
    for (auto& s : all) remaining.insert(s.roots);
    S7Split split;
    std::map<std::vector<RootIndex>, const RootSubsystem*> lookup;
    for (auto& s : all) lookup[s.roots] = &s;
    while (!remaining.empty()) {
        auto seed = *remaining.begin();
        auto orbit = orbit_of_root_set(perms, seed);
        for (auto& member : orbit) {
            auto it = remaining.find(member);
            if (it == remaining.end())
                throw std::invalid_argument(
                    "s7_orbit_split: input not closed under the permutation "
                    "action");
            remaining.erase(it);
        }
        auto& bucket = (orbit.size() == 105) ? split.type_a : split.type_b;
        for (auto& member : orbit) bucket.push_back(*lookup.at(member));
    }
    std::sort(split.type_a.begin(), split.type_a.end());
    std::sort(split.type_b.begin(), split.type_b.end());
    return split;
}

// Order of the S7-stabilizer of a subsystem: 7! / orbit size.
inline long s7_stabilizer_order(const Lattice& lat, const RootSubsystem& s) {
    auto gens = permutation_generators(lat);
    std::vector<std::vector<RootIndex>> perms;
    for (auto& g : gens) perms.push_back(root_permutation(lat, g));
    auto orbit = orbit_of_root_set(perms, s.roots);
    long fact = 1;
    for (int i = 2; i <= lat.n(); ++i) fact *= i;
    if (fact % static_cast<long>(orbit.size()) != 0)
        throw std::logic_error("s7_stabilizer_order: orbit does not divide");
    return fact / static_cast<long>(orbit.size());
}

// Full Weyl group as matrices, by BFS over generators. Only used where an
// exhaustive sum is genuinely required (Reynolds cross-checks); orbit BFS
// is the normal route everywhere else.
inline std::vector<WeylElement> enumerate_weyl_group(const Lattice& lat) {
    auto gens = simple_reflections(lat);
    std::set<Mat<int>> seen;
    std::vector<WeylElement> out;
    std::vector<WeylElement> work{weyl_identity(lat)};
    seen.insert(work[0].m);
    out.push_back(work[0]);
    while (!work.empty()) {
        WeylElement cur = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            WeylElement next = weyl_multiply(g, cur);
            next.word.clear();
            if (seen.insert(next.m).second) {
                out.push_back(next);
                work.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace coble
