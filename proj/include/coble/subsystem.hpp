#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coble/lattice.hpp"

namespace coble {

// An irreducible simply-laced type, e.g. {'A', 2} or {'D', 5}.
struct IrreducibleType {
    char letter;
    int rank;
    auto operator<=>(const IrreducibleType&) const = default;
};

// A multiset of irreducible types, kept sorted.
class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<IrreducibleType> parts)
        : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
    }

    static CartanType parse(const std::string& s) {
        std::vector<IrreducibleType> parts;
        std::size_t i = 0;
        while (i < s.size()) {
            int mult = 0;
            while (i < s.size() && isdigit(s[i]))
                mult = mult * 10 + (s[i++] - '0');
            if (mult == 0) mult = 1;
            if (i >= s.size() || (s[i] != 'A' && s[i] != 'D' && s[i] != 'E'))
                throw std::invalid_argument("CartanType: bad type '" + s + "'");
            char letter = s[i++];
            int rank = 0;
            while (i < s.size() && isdigit(s[i])) rank = rank * 10 + (s[i++] - '0');
            if (rank == 0)
                throw std::invalid_argument("CartanType: bad rank in '" + s + "'");
            for (int m = 0; m < mult; ++m) parts.push_back({letter, rank});
            if (i < s.size()) {
                if (s[i] != '+')
                    throw std::invalid_argument("CartanType: bad separator in '" +
                                                s + "'");
                ++i;
            }
        }
        if (parts.empty())
            throw std::invalid_argument("CartanType: empty type string");
        return CartanType(std::move(parts));
    }

    const std::vector<IrreducibleType>& parts() const { return parts_; }
    int rank() const {
        int r = 0;
        for (auto& p : parts_) r += p.rank;
        return r;
    }

    std::string str() const {
        // groups equal parts: A1+A1+A2 -> "2A1+A2"
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (i) os << "+";
            if (j - i > 1) os << (j - i);
            os << parts_[i].letter << parts_[i].rank;
            i = j;
        }
        return os.str();
    }

    auto operator<=>(const CartanType&) const = default;

private:
    std::vector<IrreducibleType> parts_;
};

// A root subsystem: a reflection-closed set of roots of one lattice, stored
// as a sorted index list containing both signs of every root.
struct RootSubsystem {
    std::vector<RootIndex> roots;     // sorted, antipodally closed
    std::vector<RootIndex> positive;  // canonical positive half, sorted
    CartanType type;

    int pair_count() const { return static_cast<int>(roots.size()) / 2; }
    bool contains(RootIndex r) const {
        return std::binary_search(roots.begin(), roots.end(), r);
    }
    bool operator==(const RootSubsystem& o) const { return roots == o.roots; }
    bool operator<(const RootSubsystem& o) const { return roots < o.roots; }
};

// Smallest reflection-closed root set containing the seed (both signs added).
inline std::vector<RootIndex> reflection_closure(const Lattice& lat,
                                                 std::vector<RootIndex> seed) {
    std::vector<bool> in(lat.root_count(), false);
    std::vector<RootIndex> members;
    std::vector<RootIndex> work;
    auto push = [&](RootIndex r) {
        if (!in[r]) {
            in[r] = true;
            members.push_back(r);
            work.push_back(r);
        }
    };
    for (RootIndex r : seed) {
        push(r);
        push(lat.negate(r));
    }
    while (!work.empty()) {
        RootIndex a = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            RootIndex b = members[i];
            push(lat.reflect_root(a, b));
            push(lat.reflect_root(b, a));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Simple roots of a closed root set: positive members not expressible as a
// sum of two positive members.
inline std::vector<RootIndex> extract_simple_roots(
    const Lattice& lat, const std::vector<RootIndex>& closed) {
    std::vector<RootIndex> pos;
    for (RootIndex r : closed)
        if (lat.positive(r)) pos.push_back(r);
    std::set<Vec> pos_set;
    for (RootIndex r : pos) pos_set.insert(lat.root(r));
    std::vector<RootIndex> simple;
    for (RootIndex r : pos) {
        bool decomposable = false;
        for (RootIndex s : pos) {
            if (s == r) continue;
            Vec diff = vec_add(lat.root(r), vec_neg(lat.root(s)));
            if (pos_set.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    return simple;
}

// Classifies the Dynkin graph of a simple-root set. Components must be
// simply-laced trees of type A, D, E6 or E7.
inline CartanType classify_simple_system(const Lattice& lat,
                                         const std::vector<RootIndex>& simple) {
    const int m = static_cast<int>(simple.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (lat.pair(simple[i], simple[j]) != 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> comp(m, -1);
    std::vector<IrreducibleType> parts;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = s;
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (int t : adj[nodes[q]])
                if (comp[t] < 0) {
                    comp[t] = s;
                    nodes.push_back(t);
                }
        const int r = static_cast<int>(nodes.size());
        int edges = 0, deg3 = 0, deg_high = 0, branch = -1;
        for (int v : nodes) {
            edges += static_cast<int>(adj[v].size());
            if (adj[v].size() == 3) {
                ++deg3;
                branch = v;
            }
            if (adj[v].size() > 3) ++deg_high;
        }
        edges /= 2;
        if (edges != r - 1 || deg_high > 0 || deg3 > 1)
            throw std::domain_error("classify: not a Dynkin tree");
        if (deg3 == 0) {
            parts.push_back({'A', r});
            continue;
        }
        // arm lengths from the branch node
        std::vector<int> arms;
        for (int t : adj[branch]) {
            int len = 1, prev = branch, cur = t;
            while (true) {
                int next = -1;
                for (int u : adj[cur])
                    if (u != prev) next = u;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            parts.push_back({'D', arms[2] + 3});
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2)
            parts.push_back({'E', 6});
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3)
            parts.push_back({'E', 7});
        else
            throw std::domain_error("classify: unrecognized diagram");
    }
    return CartanType(std::move(parts));
}

inline RootSubsystem make_subsystem(const Lattice& lat,
                                    std::vector<RootIndex> closed) {
    RootSubsystem s;
    s.roots = std::move(closed);
    for (RootIndex r : s.roots)
        if (lat.positive(r)) s.positive.push_back(r);
    s.type = classify_simple_system(lat, extract_simple_roots(lat, s.roots));
    return s;
}

inline RootSubsystem subsystem_from_generators(const Lattice& lat,
                                               const std::vector<Vec>& gens) {
    std::vector<RootIndex> seed;
    for (const auto& v : gens) seed.push_back(lat.index_of(v));
    return make_subsystem(lat, reflection_closure(lat, seed));
}

inline RootSubsystem subsystem_from_indices(const Lattice& lat,
                                            std::vector<RootIndex> seed) {
    return make_subsystem(lat, reflection_closure(lat, std::move(seed)));
}

// All roots of `ambient` orthogonal to every root of s, as a subsystem.
// Empty result is returned as a subsystem with empty root list and rank-0
// type; callers should check.
inline RootSubsystem perp(const Lattice& lat, const RootSubsystem& s,
                          const std::vector<RootIndex>* ambient = nullptr) {
    std::vector<RootIndex> out;
    auto consider = [&](RootIndex r) {
        for (RootIndex a : s.roots)
            if (lat.pair(r, a) != 0) return;
        out.push_back(r);
    };
    if (ambient) {
        for (RootIndex r : *ambient) consider(r);
    } else {
        for (int r = 0; r < lat.root_count(); ++r)
            consider(static_cast<RootIndex>(r));
    }
    std::sort(out.begin(), out.end());
    RootSubsystem res;
    res.roots = std::move(out);
    for (RootIndex r : res.roots)
        if (lat.positive(r)) res.positive.push_back(r);
    if (!res.roots.empty())
        res.type =
            classify_simple_system(lat, extract_simple_roots(lat, res.roots));
    return res;
}

// An A5 subsystem of E7 is special iff its orthogonal complement has type A2.
inline bool is_special_a5(const Lattice& lat, const RootSubsystem& s) {
    if (lat.n() != 7 || !(s.type == CartanType::parse("A5")))
        throw std::invalid_argument("is_special_a5: requires an A5 in E7");
    return perp(lat, s).type == CartanType::parse("A2");
}

// Enumeration of all subsystems of a given Cartan type inside an ambient
// root set (the whole lattice by default). Irreducible subsystems of rank r
// are produced by closing rank r-1 irreducible subsystems extended by one
// positive root; composite types by backtracking over orthogonal irreducible
// components.
class SubsystemEnumerator {
public:
    explicit SubsystemEnumerator(LatticePtr lat,
                                 std::vector<RootIndex> ambient = {})
        : lat_(std::move(lat)), ambient_(std::move(ambient)) {
        if (ambient_.empty()) {
            ambient_.resize(lat_->root_count());
            for (int i = 0; i < lat_->root_count(); ++i)
                ambient_[i] = static_cast<RootIndex>(i);
        }
        for (RootIndex r : ambient_)
            if (lat_->positive(r)) pos_.push_back(r);
    }

    std::vector<RootSubsystem> enumerate(const CartanType& type) {
        std::vector<std::vector<const RootSubsystem*>> pools;
        for (auto& part : type.parts()) {
            auto& pool = irreducibles(part);
            pools.emplace_back();
            for (auto& s : pool) pools.back().push_back(&s);
        }
        // Backtrack over one component per part; identical parts are chosen
        // with strictly increasing pool position to avoid duplicates.
        std::vector<RootSubsystem> out;
        std::vector<const RootSubsystem*> chosen;
        std::vector<int> pick(type.parts().size(), -1);
        backtrack(type, pools, 0, chosen, pick, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    // All irreducible subsystems of one type, cached per rank.
    const std::vector<RootSubsystem>& irreducibles(const IrreducibleType& t) {
        const auto& by_type = rank_level(t.rank);
        auto it = by_type.find(t);
        if (it != by_type.end()) return it->second;
        static const std::vector<RootSubsystem> empty;
        return empty;
    }

    const LatticePtr& lattice() const { return lat_; }

private:
    // All irreducible subsystems of rank r inside the ambient, grouped by
    // type. Rank r sets are closures of rank r-1 sets extended by one
    // connected positive root.
    const std::map<IrreducibleType, std::vector<RootSubsystem>>& rank_level(
        int rank) {
        auto cached = rank_cache_.find(rank);
        if (cached != rank_cache_.end()) return cached->second;
        std::map<IrreducibleType, std::vector<RootSubsystem>> level;
        if (rank == 1) {
            auto& list = level[{'A', 1}];
            for (RootIndex r : pos_) {
                RootSubsystem s;
                s.roots = {r, lat_->negate(r)};
                std::sort(s.roots.begin(), s.roots.end());
                s.positive = {r};
                s.type = CartanType({{'A', 1}});
                list.push_back(std::move(s));
            }
            std::sort(list.begin(), list.end());
        } else {
            std::set<std::vector<RootIndex>> seen;
            for (auto& [prev_t, bases] : rank_level(rank - 1)) {
                for (auto& base : bases) {
                    for (RootIndex r : pos_) {
                        if (base.contains(r)) continue;
                        bool connected = false;
                        for (RootIndex b : base.positive)
                            if (lat_->pair(r, b) != 0) {
                                connected = true;
                                break;
                            }
                        if (!connected) continue;
                        std::vector<RootIndex> seed = base.roots;
                        seed.push_back(r);
                        auto closed = closure_in_ambient(seed);
                        if (closed.empty()) continue;  // escaped the ambient
                        if (!seen.insert(closed).second) continue;
                        auto simple = extract_simple_roots(*lat_, closed);
                        if (static_cast<int>(simple.size()) != rank) continue;
                        CartanType ct;
                        try {
                            ct = classify_simple_system(*lat_, simple);
                        } catch (const std::domain_error&) {
                            continue;
                        }
                        if (ct.parts().size() != 1) continue;
                        RootSubsystem s;
                        s.roots = closed;
                        for (RootIndex x : closed)
                            if (lat_->positive(x)) s.positive.push_back(x);
                        s.type = ct;
                        level[ct.parts()[0]].push_back(std::move(s));
                    }
                }
            }
            for (auto& [t, list] : level) std::sort(list.begin(), list.end());
        }
        return rank_cache_.emplace(rank, std::move(level)).first->second;
    }

    // Closure inside the ambient set; empty vector when it leaves ambient.
    std::vector<RootIndex> closure_in_ambient(
        const std::vector<RootIndex>& seed) {
        auto closed = reflection_closure(*lat_, seed);
        if (ambient_.size() == static_cast<std::size_t>(lat_->root_count()))
            return closed;
        for (RootIndex r : closed)
            if (!std::binary_search(ambient_.begin(), ambient_.end(), r))
                return {};
        return closed;
    }

    bool orthogonal(const RootSubsystem& a, const RootSubsystem& b) const {
        for (RootIndex x : a.positive)
            for (RootIndex y : b.positive)
                if (lat_->pair(x, y) != 0) return false;
        return true;
    }

    void backtrack(const CartanType& type,
                   const std::vector<std::vector<const RootSubsystem*>>& pools,
                   std::size_t part,
                   std::vector<const RootSubsystem*>& chosen,
                   std::vector<int>& pick, std::vector<RootSubsystem>& out) {
        if (part == pools.size()) {
            std::vector<RootIndex> all;
            for (auto* s : chosen)
                all.insert(all.end(), s->roots.begin(), s->roots.end());
            std::sort(all.begin(), all.end());
            RootSubsystem s;
            s.roots = std::move(all);
            for (RootIndex r : s.roots)
                if (lat_->positive(r)) s.positive.push_back(r);
            s.type = type;
            out.push_back(std::move(s));
            return;
        }
        int start = 0;
        if (part > 0 && type.parts()[part] == type.parts()[part - 1])
            start = pick[part - 1] + 1;
        const auto& pool = pools[part];
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            bool ok = true;
            for (auto* c : chosen)
                if (!orthogonal(*c, *pool[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(pool[i]);
            pick[part] = i;
            backtrack(type, pools, part + 1, chosen, pick, out);
            chosen.pop_back();
            pick[part] = -1;
        }
    }

    LatticePtr lat_;
    std::vector<RootIndex> ambient_;
    std::vector<RootIndex> pos_;
    std::map<int, std::map<IrreducibleType, std::vector<RootSubsystem>>>
        rank_cache_;
};

inline std::vector<RootSubsystem> enumerate_subsystems(const LatticePtr& lat,
                                                       const std::string& type) {
    SubsystemEnumerator en(lat);
    return en.enumerate(CartanType::parse(type));
}

// Do two subsystems share a root?
inline bool subsystems_meet(const RootSubsystem& a, const RootSubsystem& b) {
    auto i = a.roots.begin();
    auto j = b.roots.begin();
    while (i != a.roots.end() && j != b.roots.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

// Intersection as a (closed) root set.
inline std::vector<RootIndex> subsystem_intersection(const RootSubsystem& a,
                                                     const RootSubsystem& b) {
    std::vector<RootIndex> out;
    std::set_intersection(a.roots.begin(), a.roots.end(), b.roots.begin(),
                          b.roots.end(), std::back_inserter(out));
    return out;
}

}  // namespace coble
