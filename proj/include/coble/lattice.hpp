#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coble/linalg.hpp"
#include "coble/rational.hpp"

namespace coble {

// Lattice vectors are integer coordinate tuples (l, e1..en) in the basis of
// the rank-(1,n) lattice with diagonal pairing (+1, -1, ..., -1).
using Vec = std::vector<int>;

inline long pairing(const Vec& a, const Vec& b) {
    long s = static_cast<long>(a[0]) * b[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        s -= static_cast<long>(a[i]) * b[i];
    return s;
}

inline long norm(const Vec& a) { return pairing(a, a); }

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Vec& a, int c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// s_alpha(x) = x + <x, alpha> alpha for a norm -2 root alpha.
inline Vec reflect(const Vec& alpha, const Vec& x) {
    long ip = pairing(x, alpha);
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] + static_cast<int>(ip) * alpha[i];
    return r;
}

using RootIndex = std::int16_t;

// The lattice of a marked Del Pezzo surface of degree d = 9 - n, together
// with its full root set (norm -2, orthogonal to k) and lookup tables.
//
// Root indices are positions in `roots`, which is sorted; every root and its
// negative are both present. A root is positive when the first nonzero entry
// of its coordinate vector in the fixed simple-root basis of k-perp is
// positive (the basis is h123, h12, h23, ..., h_{n-1,n}).
class Lattice {
public:
    explicit Lattice(int degree) : d_(degree), n_(9 - degree) {
        if (degree < 2 || degree > 5)
            throw std::invalid_argument("Lattice: degree must be in {2,3,4,5}");
        k_ = Vec(n_ + 1, 1);
        k_[0] = -3;
        build_simple_roots();
        enumerate_roots();
        build_tables();
    }

    int degree() const { return d_; }
    int n() const { return n_; }
    int dim() const { return n_ + 1; }
    const Vec& k() const { return k_; }

    const std::vector<Vec>& roots() const { return roots_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    const Vec& root(RootIndex i) const { return roots_[i]; }

    bool is_root(const Vec& v) const {
        return norm(v) == -2 && pairing(v, k_) == 0;
    }

    RootIndex index_of(const Vec& v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw std::invalid_argument("Lattice: not a root of this lattice");
        return it->second;
    }

    RootIndex negate(RootIndex i) const { return neg_[i]; }
    int pair(RootIndex i, RootIndex j) const { return pair_table_[i][j]; }
    RootIndex reflect_root(RootIndex alpha, RootIndex x) const {
        return refl_table_[alpha][x];
    }
    bool positive(RootIndex i) const { return positive_[i]; }
    RootIndex positive_rep(RootIndex i) const {
        return positive_[i] ? i : neg_[i];
    }

    // Simple roots in the order h123, h12, h23, ..., h_{n-1,n}.
    const std::vector<RootIndex>& simple_roots() const { return simple_; }

    // --- labeled roots ---

    // e_i - e_j (1-based indices).
    Vec root_ij(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) throw std::invalid_argument("root_ij: equal indices");
        Vec v(n_ + 1, 0);
        v[i] = 1;
        v[j] = -1;
        return v;
    }

    // l - e_i - e_j - e_k.
    Vec root_ijk(int i, int j, int k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j || j == k || i == k)
            throw std::invalid_argument("root_ijk: repeated index");
        Vec v(n_ + 1, 0);
        v[0] = 1;
        v[i] = v[j] = v[k] = -1;
        return v;
    }

    // (2l - e_1 - ... - e_7) + e_i; defined only when n = 7.
    Vec root_hi(int i) const {
        if (n_ != 7)
            throw std::invalid_argument("root_hi: requires n = 7");
        check_index(i);
        Vec v(n_ + 1, -1);
        v[0] = 2;
        v[i] = 0;
        return v;
    }

    // 2l - e_1 - ... - e_6; defined only when n = 6.
    Vec root_h() const {
        if (n_ != 6)
            throw std::invalid_argument("root_h: requires n = 6");
        Vec v(n_ + 1, -1);
        v[0] = 2;
        return v;
    }

    RootIndex idx_ij(int i, int j) const { return index_of(root_ij(i, j)); }
    RootIndex idx_ijk(int i, int j, int k) const {
        return index_of(root_ijk(i, j, k));
    }

    // Coordinates of a k-perp vector in the simple-root basis (integral for
    // lattice vectors).
    std::vector<Rat> simple_coordinates(const Vec& v) const {
        std::vector<Rat> rhs(n_);
        for (int i = 0; i < n_; ++i)
            rhs[i] = Rat(static_cast<long>(pairing(roots_[simple_[i]], v)));
        std::vector<Rat> out(n_, Rat(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[i] += gram_inv_[i][j] * rhs[j];
        return out;
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw std::invalid_argument("Lattice: point index out of range");
    }

    void build_simple_roots() {
        simple_vecs_.push_back(root_ijk(1, 2, 3));
        for (int i = 1; i < n_; ++i) simple_vecs_.push_back(root_ij(i, i + 1));
        Mat<Rat> gram(n_, std::vector<Rat>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                gram[i][j] =
                    Rat(static_cast<long>(pairing(simple_vecs_[i], simple_vecs_[j])));
        gram_inv_ = matrix_inverse(gram);
    }

    // Norm -2 vectors orthogonal to k, by bounded coordinate search:
    // a = l-coefficient satisfies a^2 (9-n) <= 2n and sum b_i = -3a,
    // sum b_i^2 = a^2 + 2, so |b_i| <= sqrt(a^2 + 2).
    void enumerate_roots() {
        int amax = 0;
        while ((amax + 1) * (amax + 1) * (9 - n_) <= 2 * n_) ++amax;
        for (int a = -amax; a <= amax; ++a) {
            int target_sum = -3 * a;
            int target_sq = a * a + 2;
            int bmax = 0;
            while ((bmax + 1) * (bmax + 1) <= target_sq) ++bmax;
            Vec v(n_ + 1, 0);
            v[0] = a;
            search_b(v, 1, target_sum, target_sq, bmax);
        }
        std::sort(roots_.begin(), roots_.end());
        for (std::size_t i = 0; i < roots_.size(); ++i)
            index_.emplace(roots_[i], static_cast<RootIndex>(i));
    }

    void search_b(Vec& v, int pos, int rem_sum, int rem_sq, int bmax) {
        if (pos == n_ + 1) {
            if (rem_sum == 0 && rem_sq == 0) roots_.push_back(v);
            return;
        }
        int left = n_ - pos;  // coordinates after this one
        for (int b = -bmax; b <= bmax; ++b) {
            int sq = rem_sq - b * b;
            int sum = rem_sum - b;
            if (sq < 0) continue;
            if (left == 0) {
                if (sum != 0 || sq != 0) continue;
            } else if (static_cast<long>(sum) * sum >
                       static_cast<long>(sq) * left) {
                continue;  // Cauchy-Schwarz: unreachable
            }
            v[pos] = b;
            search_b(v, pos + 1, sum, sq, bmax);
            v[pos] = 0;
        }
    }

    void build_tables() {
        const int m = root_count();
        simple_.reserve(n_);
        for (auto& s : simple_vecs_) simple_.push_back(index_of(s));

        neg_.resize(m);
        positive_.resize(m);
        pair_table_.assign(m, std::vector<std::int8_t>(m));
        refl_table_.assign(m, std::vector<RootIndex>(m));
        for (int i = 0; i < m; ++i) {
            neg_[i] = index_of(vec_neg(roots_[i]));
            auto coords = simple_coordinates(roots_[i]);
            int s = 0;
            for (auto& c : coords) {
                if (sgn(c) != 0) {
                    s = sgn(c);
                    break;
                }
            }
            positive_[i] = s > 0;
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                pair_table_[i][j] =
                    static_cast<std::int8_t>(pairing(roots_[i], roots_[j]));
                refl_table_[i][j] = index_of(reflect(roots_[i], roots_[j]));
            }
    }

    int d_, n_;
    Vec k_;
    std::vector<Vec> roots_;
    std::map<Vec, RootIndex> index_;
    std::vector<Vec> simple_vecs_;
    std::vector<RootIndex> simple_;
    Mat<Rat> gram_inv_;
    std::vector<RootIndex> neg_;
    std::vector<bool> positive_;
    std::vector<std::vector<std::int8_t>> pair_table_;
    std::vector<std::vector<RootIndex>> refl_table_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr build_lattice(int degree) {
    return std::make_shared<Lattice>(degree);
}

}  // namespace coble
