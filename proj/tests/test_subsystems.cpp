#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coble/subsystem.hpp"
#include "coble/weyl.hpp"

using namespace coble;

TEST_CASE("cartan type parsing and printing") {
    CHECK(CartanType::parse("3A2").str() == "3A2");
    CHECK(CartanType::parse("A1+D4").str() == "A1+D4");
    CHECK(CartanType::parse("2A1+A2").rank() == 4);
    CHECK(CartanType::parse("7A1").parts().size() == 7);
    CHECK_THROWS_AS(CartanType::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("B2"), std::invalid_argument);
}

TEST_CASE("closure from generators") {
    auto e6 = build_lattice(3);
    auto a2 = subsystem_from_generators(
        *e6, {e6->root_ij(1, 2), e6->root_ijk(1, 3, 4)});
    CHECK(a2.type == CartanType::parse("A2"));
    CHECK(a2.roots.size() == 6);

    auto d4 = subsystem_from_generators(
        *e6, {e6->root_ij(1, 2), e6->root_ij(3, 4), e6->root_ij(5, 6),
              e6->root_ijk(1, 3, 5)});
    CHECK(d4.type == CartanType::parse("D4"));
    CHECK(d4.roots.size() == 24);

    auto a1 = subsystem_from_generators(*e6, {e6->root_ij(1, 2)});
    CHECK(a1.type == CartanType::parse("A1"));
    CHECK(a1.roots.size() == 2);
}

TEST_CASE("subsystem enumeration counts") {
    auto e6 = build_lattice(3);
    SubsystemEnumerator en(e6);
    CHECK(en.enumerate(CartanType::parse("3A2")).size() == 40);
    CHECK(en.enumerate(CartanType::parse("A3")).size() == 270);
    CHECK(en.enumerate(CartanType::parse("4A1")).size() == 135);

    auto d5s = en.enumerate(CartanType::parse("D5"));
    CHECK(d5s.size() == 27);
    SubsystemEnumerator inner(e6, d5s[0].roots);
    CHECK(inner.enumerate(CartanType::parse("D4")).size() == 5);

    auto d4s = en.enumerate(CartanType::parse("D4"));
    SubsystemEnumerator in4(e6, d4s[0].roots);
    CHECK(in4.enumerate(CartanType::parse("4A1")).size() == 3);

    auto d5 = build_lattice(4);
    SubsystemEnumerator en5(d5);
    CHECK(en5.enumerate(CartanType::parse("2A1+A2")).size() == 40);
}

TEST_CASE("E7 subsystem enumeration") {
    auto e7 = build_lattice(2);
    SubsystemEnumerator en(e7);
    auto sevens = en.enumerate(CartanType::parse("7A1"));
    CHECK(sevens.size() == 135);
    auto split = s7_orbit_split(*e7, sevens);
    CHECK(split.type_a.size() == 105);
    CHECK(split.type_b.size() == 30);

    auto type_a_rep = subsystem_from_generators(
        *e7, {e7->root_hi(7), e7->root_ij(1, 2), e7->root_ij(3, 4),
              e7->root_ij(5, 6), e7->root_ijk(1, 2, 7), e7->root_ijk(3, 4, 7),
              e7->root_ijk(5, 6, 7)});
    auto type_b_rep = subsystem_from_generators(
        *e7, {e7->root_ijk(1, 2, 3), e7->root_ijk(1, 4, 5),
              e7->root_ijk(1, 6, 7), e7->root_ijk(2, 5, 6),
              e7->root_ijk(2, 4, 7), e7->root_ijk(3, 5, 7),
              e7->root_ijk(3, 4, 6)});
    auto in = [](const std::vector<RootSubsystem>& v, const RootSubsystem& s) {
        return std::binary_search(v.begin(), v.end(), s);
    };
    CHECK(in(split.type_a, type_a_rep));
    CHECK(in(split.type_b, type_b_rep));
    CHECK(s7_stabilizer_order(*e7, type_b_rep) == 168);
}

TEST_CASE("perp computations") {
    auto e7 = build_lattice(2);
    SubsystemEnumerator en(e7);
    auto two = en.enumerate(CartanType::parse("2A1"));
    CHECK(perp(*e7, two[0]).type == CartanType::parse("A1+D4"));
    auto d4 = en.enumerate(CartanType::parse("D4"));
    CHECK(perp(*e7, d4[0]).type == CartanType::parse("3A1"));

    auto e6 = build_lattice(3);
    auto triple = subsystem_from_generators(
        *e6, {e6->root_ij(1, 2), e6->root_ij(3, 4), e6->root_ij(5, 6)});
    auto p = perp(*e6, triple);
    CHECK(p.roots.size() == 2);
    CHECK(e6->root(p.positive[0]) == e6->root_h());
}

TEST_CASE("perp of perp contains the subsystem") {
    auto e6 = build_lattice(3);
    SubsystemEnumerator en(e6);
    for (auto& s : en.enumerate(CartanType::parse("A2"))) {
        auto pp = perp(*e6, perp(*e6, s));
        for (RootIndex r : s.roots) CHECK(pp.contains(r));
    }
}

TEST_CASE("special A5 systems") {
    auto e7 = build_lattice(2);
    auto special = subsystem_from_generators(
        *e7, {e7->root_ijk(1, 2, 3), e7->root_ij(3, 4), e7->root_ij(4, 5),
              e7->root_ij(5, 6), e7->root_ij(6, 7)});
    CHECK(special.type == CartanType::parse("A5"));
    CHECK(is_special_a5(*e7, special));

    auto plain = subsystem_from_generators(
        *e7, {e7->root_ij(2, 3), e7->root_ij(3, 4), e7->root_ij(4, 5),
              e7->root_ij(5, 6), e7->root_ij(6, 7)});
    CHECK(plain.type == CartanType::parse("A5"));
    CHECK_FALSE(is_special_a5(*e7, plain));
    CHECK(perp(*e7, plain).type == CartanType::parse("A1"));

    // a Weyl image of a special system stays special
    auto gens = simple_reflections(*e7);
    auto w = weyl_multiply(gens[0], weyl_multiply(gens[3], gens[5]));
    auto perm = root_permutation(*e7, w);
    RootSubsystem moved;
    moved.roots = apply_to_index_set(perm, special.roots);
    for (RootIndex r : moved.roots)
        if (e7->positive(r)) moved.positive.push_back(r);
    moved.type = special.type;
    CHECK(is_special_a5(*e7, moved));

    CHECK_THROWS_AS(is_special_a5(*e7, subsystem_from_generators(
                                           *e7, {e7->root_ij(1, 2)})),
                    std::invalid_argument);
}

TEST_CASE("orbits agree with enumeration") {
    auto e6 = build_lattice(3);
    SubsystemEnumerator en(e6);
    auto gens = simple_reflections(*e6);
    auto tri = en.enumerate(CartanType::parse("3A2"));
    auto orbit = weyl_orbit_of_subsystem(*e6, gens, tri[0]);
    CHECK(orbit == tri);

    auto e7 = build_lattice(2);
    SubsystemEnumerator en7(e7);
    auto sevens = en7.enumerate(CartanType::parse("7A1"));
    auto orbit7 =
        weyl_orbit_of_subsystem(*e7, simple_reflections(*e7), sevens[0]);
    CHECK(orbit7 == sevens);

    // inside a D4 ambient, the 4A1 systems form a single orbit
    auto d4s = en.enumerate(CartanType::parse("D4"));
    SubsystemEnumerator in4(e6, d4s[0].roots);
    auto quads = in4.enumerate(CartanType::parse("4A1"));
    std::vector<WeylElement> d4_gens;
    for (RootIndex r : extract_simple_roots(*e6, d4s[0].roots))
        d4_gens.push_back(reflection(*e6, r));
    CHECK(weyl_orbit_of_subsystem(*e6, d4_gens, quads[0]) == quads);

    // a root orbit covers all roots
    CHECK(weyl_orbit_of_root(*e6, gens, 0).size() ==
          static_cast<std::size_t>(e6->root_count()));
}

TEST_CASE("orthogonal triples in E6 extend two ways") {
    auto e6 = build_lattice(3);
    SubsystemEnumerator en(e6);
    auto tri = en.enumerate(CartanType::parse("3A2"));
    auto triples = en.enumerate(CartanType::parse("3A1"));
    CHECK(triples.size() == 540);
    for (std::size_t i = 0; i < triples.size(); i += 13) {
        auto& t = triples[i];
        // the perp of the triple is a single antipodal pair
        auto p = perp(*e6, t);
        REQUIRE(p.roots.size() == 2);
        // exactly two 3A2 systems contain the triple, swapped by the pair
        std::vector<const RootSubsystem*> hosts;
        for (auto& s : tri) {
            bool ok = true;
            for (RootIndex r : t.positive)
                if (!s.contains(r)) ok = false;
            if (ok) hosts.push_back(&s);
        }
        REQUIRE(hosts.size() == 2);
        auto perm = root_permutation(*e6, reflection(*e6, p.positive[0]));
        CHECK(apply_to_index_set(perm, hosts[0]->roots) == hosts[1]->roots);
    }
}

TEST_CASE("unsupported enumeration input") {
    auto e6 = build_lattice(3);
    SubsystemEnumerator en(e6);
    // E8 simply cannot occur in rank 6; the result is empty, not an error
    CHECK(en.enumerate(CartanType::parse("D6")).empty());
}
