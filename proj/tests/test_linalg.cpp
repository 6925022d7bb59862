#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coble/linalg.hpp"

using namespace coble;

TEST_CASE("bareiss rank on integer matrices") {
    CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(3), Int(4)}}) == 2);
    CHECK(bareiss_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    // wide matrix
    CHECK(bareiss_rank({{Int(1), Int(0), Int(1)}, {Int(0), Int(1), Int(1)}}) ==
          2);
}

TEST_CASE("bareiss stays integral on random integer input") {
    // divisions inside bareiss_rank assert exactness; a crash or assert here
    // would fail the test
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Mat<Int> m(6, std::vector<Int>(9));
        for (auto& row : m)
            for (auto& x : row) x = Int(static_cast<int>(rng() % 19) - 9);
        int r = bareiss_rank(m);
        CHECK(r >= 0);
        CHECK(r <= 6);
    }
}

TEST_CASE("span dimension") {
    auto r = make_var_ring(2);
    auto t1 = Polynomial::variable(r, 0), t2 = Polynomial::variable(r, 1);
    CHECK(span_dimension({t1, t2, t1 + t2}) == 2);
    CHECK(span_dimension({t1 * t2}) == 1);
    CHECK(span_dimension({Polynomial(r)}) == 0);
}

TEST_CASE("kernel basis") {
    Mat<Rat> a{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] * Rat(1) + ker[0][1] * Rat(1) == Rat(0));
    CHECK(ker[0][2] == Rat(0));
}

TEST_CASE("linear solver expresses polynomials in a basis") {
    auto r = make_var_ring(2);
    auto t1 = Polynomial::variable(r, 0), t2 = Polynomial::variable(r, 1);
    LinearSolver solver({t1 + t2, t1 - t2});
    auto c = solver.express(t1 * Rat(2));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rat(1));
    CHECK((*c)[1] == Rat(1));
    CHECK_FALSE(solver.express(t1 * t2).has_value());
    CHECK_THROWS_AS(LinearSolver({t1, t1}), std::invalid_argument);
}

TEST_CASE("commutant dimension basics") {
    // single identity generator of size 3: everything commutes
    Mat<Rat> id(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id[i][i] = Rat(1);
    CHECK(commutant_dimension({id}) == 9);
    // a matrix with distinct eigenvalues commutes only with its polynomials
    Mat<Rat> diag(3, std::vector<Rat>(3, Rat(0)));
    diag[0][0] = Rat(1);
    diag[1][1] = Rat(2);
    diag[2][2] = Rat(3);
    CHECK(commutant_dimension({diag}) == 3);
    // adding a cyclic permutation drops it to the scalars
    Mat<Rat> cyc(3, std::vector<Rat>(3, Rat(0)));
    cyc[0][1] = cyc[1][2] = cyc[2][0] = Rat(1);
    CHECK(commutant_dimension({diag, cyc}) == 1);
}

TEST_CASE("polynomial determinant via expansion") {
    auto r = make_var_ring(2);
    auto t1 = Polynomial::variable(r, 0), t2 = Polynomial::variable(r, 1);
    Mat<Polynomial> m{{t1, t2}, {t2, t1}};
    CHECK(determinant(m) == t1 * t1 - t2 * t2);
    Mat<Polynomial> v{{Polynomial::constant(r, Rat(1)), t1},
                      {Polynomial::constant(r, Rat(1)), t2}};
    CHECK(determinant(v) == t2 - t1);
}

TEST_CASE("exact linear solves") {
    Mat<Rat> a{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}};
    auto x = solve_linear(a, {Rat(4), Rat(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(3));
    // inconsistent
    Mat<Rat> b{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_FALSE(solve_linear(b, {Rat(0), Rat(1)}).has_value());
    // underdetermined is rejected by solve_linear but allowed by solve_any
    Mat<Rat> c{{Rat(1), Rat(1)}};
    CHECK_FALSE(solve_linear(c, {Rat(2)}).has_value());
    auto any = solve_any(c, {Rat(2)});
    REQUIRE(any.has_value());
    CHECK((*any)[0] + (*any)[1] == Rat(2));
}

TEST_CASE("matrix inverse") {
    Mat<Rat> a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto inv = matrix_inverse(a);
    CHECK(inv[0][0] == Rat(-2));
    CHECK(inv[0][1] == Rat(1));
    CHECK_THROWS_AS(matrix_inverse(Mat<Rat>{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}),
                    std::domain_error);
}
