#pragma once

#include <stdexcept>
#include <vector>

#include "coble/lattice.hpp"
#include "coble/polynomial.hpp"
#include "coble/subsystem.hpp"
#include "coble/weyl.hpp"

namespace coble {

// Linear coordinates t_1..t_n on the Cartan algebra of a lattice: the
// functional phi with phi(l) = 0 and phi(e_i) = t_i. Roots become linear
// forms and Weyl elements become linear substitutions of the t's.
class TChart {
public:
    explicit TChart(LatticePtr lat)
        : lat_(std::move(lat)), ring_(make_var_ring(lat_->n())) {}

    const LatticePtr& lattice() const { return lat_; }
    const RingPtr& ring() const { return ring_; }

    // phi(a l + sum b_i e_i) = sum b_i t_i.
    Polynomial root_form(const Vec& alpha) const {
        if (!lat_->is_root(alpha))
            throw std::invalid_argument("root_form: not a root");
        std::vector<Rat> c;
        c.reserve(lat_->n());
        for (int i = 1; i <= lat_->n(); ++i) c.push_back(Rat(alpha[i]));
        return linear_form(ring_, c);
    }

    Polynomial root_form(RootIndex r) const { return root_form(lat_->root(r)); }

    // The substitution realizing w on polynomials in the t's:
    // t_i -> phi(w^{-1} e_i) - phi(w^{-1} l)/3. It satisfies
    // sub(s_alpha)(root_form(beta)) == root_form(s_alpha(beta)) and
    // sub(v w) == compose(sub(v), sub(w)).
    LinearSubstitution weyl_substitution(const WeylElement& w) const {
        if (!fixes_k(*lat_, w))
            throw std::invalid_argument("weyl_substitution: w does not fix k");
        WeylElement winv = weyl_inverse(w);
        const int n = lat_->n();
        Vec l(n + 1, 0);
        l[0] = 1;
        Vec l_img = winv.apply(l);
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i) {
            Vec e(n + 1, 0);
            e[i + 1] = 1;
            Vec img = winv.apply(e);
            for (int j = 0; j < n; ++j)
                m[i][j] = Rat(img[j + 1]) - make_rat(l_img[j + 1], 3);
        }
        return LinearSubstitution(ring_, std::move(m));
    }

    LinearSubstitution reflection_substitution(RootIndex r) const {
        return weyl_substitution(reflection(*lat_, r));
    }

    // Substitutions of the simple reflections, in simple-root order.
    std::vector<LinearSubstitution> simple_substitutions() const {
        std::vector<LinearSubstitution> subs;
        for (const auto& g : simple_reflections(*lat_))
            subs.push_back(weyl_substitution(g));
        return subs;
    }

    // Product of the root forms of the canonical positive half, with
    // positive leading coefficient.
    Polynomial discriminant(const RootSubsystem& s) const {
        Polynomial p = Polynomial::constant(ring_, Rat(1));
        for (RootIndex r : s.positive) p = p * root_form(r);
        return p.canonical_sign();
    }

    // Same product without sign normalization.
    Polynomial positive_product(const RootSubsystem& s) const {
        Polynomial p = Polynomial::constant(ring_, Rat(1));
        for (RootIndex r : s.positive) p = p * root_form(r);
        return p;
    }

    Polynomial product_of_forms(const std::vector<RootIndex>& roots) const {
        Polynomial p = Polynomial::constant(ring_, Rat(1));
        for (RootIndex r : roots) p = p * root_form(r);
        return p;
    }

    // Image of a product of root forms under a Weyl element, computed
    // through the induced root permutation. Agrees with applying
    // weyl_substitution to the product.
    Polynomial permuted_product(const std::vector<RootIndex>& roots,
                                const std::vector<RootIndex>& perm) const {
        Polynomial p = Polynomial::constant(ring_, Rat(1));
        for (RootIndex r : roots) p = p * root_form(perm[r]);
        return p;
    }

private:
    LatticePtr lat_;
    RingPtr ring_;
};

}  // namespace coble
