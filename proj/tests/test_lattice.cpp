#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coble/lattice.hpp"

using namespace coble;

namespace {

// Independent oracle: enumerate norm -2 vectors orthogonal to k over the
// coordinate box [-3,3]^{n+1}, which contains every root.
std::set<Vec> brute_force_roots(int n) {
    Vec k(n + 1, 1);
    k[0] = -3;
    std::set<Vec> out;
    Vec v(n + 1, -3);
    while (true) {
        if (norm(v) == -2 && pairing(v, k) == 0) out.insert(v);
        int pos = 0;
        while (pos <= n && v[pos] == 3) v[pos++] = -3;
        if (pos > n) break;
        ++v[pos];
    }
    return out;
}

}  // namespace

TEST_CASE("lattice construction and canonical class") {
    for (auto [d, n, kk] : {std::tuple{3, 6, 3}, {2, 7, 2}, {5, 4, 5}, {4, 5, 4}}) {
        auto lat = build_lattice(d);
        CHECK(lat->n() == n);
        CHECK(pairing(lat->k(), lat->k()) == kk);
    }
    CHECK_THROWS_AS(build_lattice(1), std::invalid_argument);
    CHECK_THROWS_AS(build_lattice(6), std::invalid_argument);
}

TEST_CASE("root counts against the box oracle") {
    const int expected[4][2] = {{4, 20}, {5, 40}, {6, 72}, {7, 126}};
    for (auto [n, count] : expected) {
        auto lat = build_lattice(9 - n);
        auto oracle = brute_force_roots(n);
        CHECK(static_cast<int>(oracle.size()) == count);
        CHECK(lat->root_count() == count);
        std::set<Vec> got(lat->roots().begin(), lat->roots().end());
        CHECK(got == oracle);
    }
}

TEST_CASE("labeled roots") {
    auto e6 = build_lattice(3);
    Vec h123 = e6->root_ijk(1, 2, 3);
    CHECK(h123 == Vec{1, -1, -1, -1, 0, 0, 0});
    CHECK(norm(h123) == -2);
    CHECK(pairing(h123, e6->k()) == 0);
    CHECK(e6->root_ij(2, 1) == vec_neg(e6->root_ij(1, 2)));
    CHECK(e6->root_h() == Vec{2, -1, -1, -1, -1, -1, -1});
    CHECK_THROWS_AS(e6->root_hi(3), std::invalid_argument);
    CHECK_THROWS_AS(e6->root_ij(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(e6->root_ijk(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(e6->root_ij(0, 1), std::invalid_argument);

    auto e7 = build_lattice(2);
    Vec h7 = e7->root_hi(7);
    CHECK(h7 == Vec{2, -1, -1, -1, -1, -1, -1, 0});
    CHECK(norm(h7) == -2);
    CHECK_THROWS_AS(e7->root_h(), std::invalid_argument);
}

TEST_CASE("reflection formula") {
    auto e6 = build_lattice(3);
    Vec h12 = e6->root_ij(1, 2);
    Vec e1(7, 0);
    e1[1] = 1;
    Vec e2(7, 0);
    e2[2] = 1;
    CHECK(reflect(h12, e1) == e2);
    CHECK(reflect(h12, h12) == vec_neg(h12));
    Vec l(7, 0);
    l[0] = 1;
    CHECK(reflect(e6->root_ijk(1, 2, 3), l) == Vec{2, -1, -1, -1, 0, 0, 0});
}

TEST_CASE("reflection is a pairing-preserving involution fixing k") {
    auto e6 = build_lattice(3);
    Vec alpha = e6->root_ijk(2, 4, 6);
    for (int i = 0; i < e6->root_count(); i += 7) {
        Vec x = e6->root(static_cast<RootIndex>(i));
        Vec y = reflect(alpha, x);
        CHECK(reflect(alpha, y) == x);
        CHECK(norm(y) == norm(x));
    }
    CHECK(reflect(alpha, e6->k()) == e6->k());
}

TEST_CASE("positivity picks one root per antipodal pair") {
    for (int d : {5, 4, 3, 2}) {
        auto lat = build_lattice(d);
        int positives = 0;
        for (int i = 0; i < lat->root_count(); ++i) {
            auto r = static_cast<RootIndex>(i);
            CHECK(lat->positive(r) != lat->positive(lat->negate(r)));
            if (lat->positive(r)) ++positives;
        }
        CHECK(positives * 2 == lat->root_count());
        // simple roots are positive
        for (RootIndex s : lat->simple_roots()) CHECK(lat->positive(s));
    }
}

TEST_CASE("reflection tables agree with the formula") {
    auto d5 = build_lattice(4);
    for (int a = 0; a < d5->root_count(); a += 3)
        for (int b = 0; b < d5->root_count(); b += 5) {
            auto ia = static_cast<RootIndex>(a);
            auto ib = static_cast<RootIndex>(b);
            CHECK(d5->root(d5->reflect_root(ia, ib)) ==
                  reflect(d5->root(ia), d5->root(ib)));
            CHECK(d5->pair(ia, ib) == pairing(d5->root(ia), d5->root(ib)));
        }
}
