#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coble/chart.hpp"

using namespace coble;

TEST_CASE("root forms in the t-chart") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    auto t = [&](int i) { return Polynomial::variable(ch.ring(), i - 1); };
    CHECK(ch.root_form(e6->root_ij(1, 2)) == t(1) - t(2));
    CHECK(ch.root_form(e6->root_ijk(1, 2, 3)) == -(t(1) + t(2) + t(3)));
    Polynomial sum(ch.ring());
    for (int i = 1; i <= 6; ++i) sum += t(i);
    CHECK(ch.root_form(e6->root_h()) == -sum);
    CHECK_THROWS_AS(ch.root_form(Vec{1, 0, 0, 0, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("root form is linear over root addition") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    Vec a = e6->root_ij(1, 2), b = e6->root_ij(2, 3);
    Vec sum = vec_add(a, b);
    REQUIRE(e6->is_root(sum));
    CHECK(ch.root_form(sum) == ch.root_form(a) + ch.root_form(b));
}

TEST_CASE("weyl substitutions on the chart") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    CHECK(ch.weyl_substitution(weyl_identity(*e6)).is_identity());

    auto s12 = ch.weyl_substitution(reflection(*e6, e6->root_ij(1, 2)));
    CHECK(s12.is_signed_permutation());
    auto t = [&](int i) { return Polynomial::variable(ch.ring(), i - 1); };
    CHECK(s12.apply(t(1)) == t(2));

    Vec h123 = e6->root_ijk(1, 2, 3);
    auto s123 = ch.weyl_substitution(reflection(*e6, h123));
    CHECK(s123.apply(ch.root_form(h123)) == -ch.root_form(h123));

    // an element moving k is rejected
    WeylElement bad = weyl_identity(*e6);
    bad.m[0][0] = 2;
    CHECK_THROWS_AS(ch.weyl_substitution(bad), std::invalid_argument);
}

TEST_CASE("chart equivariance over all pairs in the rank-4 lattice") {
    auto a4 = build_lattice(5);
    TChart ch(a4);
    for (int a = 0; a < a4->root_count(); ++a) {
        auto sub = ch.reflection_substitution(static_cast<RootIndex>(a));
        for (int b = 0; b < a4->root_count(); ++b) {
            RootIndex img = a4->reflect_root(static_cast<RootIndex>(a),
                                             static_cast<RootIndex>(b));
            CHECK(sub.apply(ch.root_form(static_cast<RootIndex>(b))) ==
                  ch.root_form(img));
        }
    }
}

TEST_CASE("chart equivariance sampled in E7") {
    auto e7 = build_lattice(2);
    TChart ch(e7);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = static_cast<RootIndex>(rng() % e7->root_count());
        auto b = static_cast<RootIndex>(rng() % e7->root_count());
        auto sub = ch.reflection_substitution(a);
        CHECK(sub.apply(ch.root_form(b)) == ch.root_form(e7->reflect_root(a, b)));
    }
}

TEST_CASE("substitution respects composition") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    auto gens = simple_reflections(*e6);
    WeylElement w1 = weyl_multiply(gens[0], gens[2]);
    WeylElement w2 = weyl_multiply(gens[4], gens[1]);
    auto lhs = ch.weyl_substitution(weyl_multiply(w1, w2));
    auto rhs = compose(ch.weyl_substitution(w1), ch.weyl_substitution(w2));
    CHECK(lhs == rhs);
}

TEST_CASE("span dimension is substitution invariant") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    auto sub = ch.reflection_substitution(
        e6->index_of(e6->root_ijk(2, 3, 5)));
    std::vector<Polynomial> polys;
    for (auto r : {e6->root_ij(1, 3), e6->root_ijk(1, 2, 4), e6->root_h()}) {
        Polynomial f = ch.root_form(r);
        polys.push_back(f * f + f);
    }
    std::vector<Polynomial> moved;
    for (auto& p : polys) moved.push_back(sub.apply(p));
    CHECK(span_dimension(polys) == span_dimension(moved));
}

TEST_CASE("discriminant of a single pair") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    auto a1 = subsystem_from_generators(*e6, {e6->root_ij(1, 2)});
    auto t = [&](int i) { return Polynomial::variable(ch.ring(), i - 1); };
    CHECK(ch.discriminant(a1) == t(1) - t(2));
}

TEST_CASE("permuted products agree with substitutions") {
    auto e6 = build_lattice(3);
    TChart ch(e6);
    auto d4 = subsystem_from_generators(
        *e6, {e6->root_ij(1, 2), e6->root_ij(3, 4), e6->root_ij(5, 6),
              e6->root_ijk(1, 3, 5)});
    Vec alpha = e6->root_ijk(2, 4, 6);
    auto g = reflection(*e6, alpha);
    auto sub = ch.weyl_substitution(g);
    auto perm = root_permutation(*e6, g);
    Polynomial p = ch.positive_product(d4);
    CHECK(sub.apply(p) == ch.permuted_product(d4.positive, perm));
}
