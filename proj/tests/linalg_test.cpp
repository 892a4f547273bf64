#include <catch2/catch_amalgamated.hpp>

#include "gpoly/matrix.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gpoly;

namespace {

RatMatrix M(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (int v : row) {
            out.back().emplace_back(v);
        }
    }
    return RatMatrix::from_rows(out);
}

}  // namespace

TEST_CASE("minor deletes rows and columns in place order") {
    CHECK(minor_matrix(RatMatrix::identity(3), {0}, {0}) == RatMatrix::identity(2));
    const RatMatrix m = M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(minor_matrix(m, {}, {}) == m);
    // Entries x_st = s + t (1-based): deleting the last row and column keeps
    // the upper-left block.
    RatMatrix x(3);
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t t = 0; t < 3; ++t) {
            x(s, t) = Rat(s + t + 2);
        }
    }
    CHECK(minor_matrix(x, {2}, {2}) ==
          M({{2, 3}, {3, 4}}));
    CHECK_THROWS_AS(minor_matrix(m, {3}, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(minor_matrix(m, {0, 1}, {0}), Error);
    // Duplicate indices collapse (set semantics).
    CHECK(minor_matrix(m, {0, 0}, {1, 1}).size() == 2);
}

TEST_CASE("masking zeroes a symmetric pair of entries") {
    RatMatrix x(3);
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t t = 0; t < 3; ++t) {
            x(s, t) = Rat(1 + std::min(s, t) * 3 + std::max(s, t));
        }
    }
    const RatMatrix y = masked(x, 0, 1);
    CHECK(y(0, 1) == 0);
    CHECK(y(1, 0) == 0);
    CHECK(masked(x, 0, 1) == masked(x, 1, 0));
    CHECK(y(0, 2) == x(0, 2));

    RatMatrix with_zero = x;
    with_zero(0, 1) = 0;
    with_zero(1, 0) = 0;
    CHECK(masked(with_zero, 0, 1) == with_zero);

    RatMatrix diag = masked(RatMatrix::identity(2), 0, 0);
    CHECK(diag == RatMatrix::from_rows({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}));

    CHECK_THROWS_AS(masked(x, 0, 5), IndexOutOfRange);
    CHECK_THROWS_AS(masked(M({{1, 2}, {3, 4}}), 0, 1), NotSymmetric);
}

TEST_CASE("determinant matches hand values and conventions") {
    CHECK(det(M({{2, 1}, {1, 2}})) == Rat(3));
    CHECK(det(RatMatrix::identity(5)) == Rat(1));
    CHECK(det(RatMatrix(0)) == Rat(1));
    CHECK(det(RatMatrix(3)) == Rat(0));
    // Forces a pivot swap in the elimination.
    CHECK(det(M({{0, 1}, {1, 0}})) == Rat(-1));
    CHECK(det(M({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == Rat(-1));
    // Singular with a nonzero first pivot.
    CHECK(det(M({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == Rat(0));
}

TEST_CASE("determinant equals the permutation expansion", "[property]") {
    testing::Rng rng(11);
    for (int iteration = 0; iteration < 60; ++iteration) {
        const std::size_t n = 1 + iteration % 6;
        const RatMatrix m = testing::random_symmetric(rng, n, iteration % 3 == 0 ? 0.3 : 0.0);
        CHECK(det(m) == testing::leibniz_det(m));
    }
}

TEST_CASE("permanent matches hand values and conventions") {
    CHECK(perm(M({{1, 1}, {1, 1}})) == Rat(2));
    CHECK(perm(M({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == Rat(6));
    CHECK(perm(RatMatrix::identity(3)) == Rat(1));
    CHECK(perm(RatMatrix(0)) == Rat(1));
    CHECK_THROWS_AS(perm(RatMatrix(4), 3), DimensionTooLarge);
}

TEST_CASE("permanent equals the permutation expansion", "[property]") {
    testing::Rng rng(13);
    for (int iteration = 0; iteration < 40; ++iteration) {
        const std::size_t n = 1 + iteration % 7;
        const RatMatrix m = testing::random_symmetric(rng, n, iteration % 4 == 0 ? 0.4 : 0.0);
        CHECK(perm(m) == testing::leibniz_perm(m));
    }
}

TEST_CASE("characteristic polynomial") {
    CHECK(charpoly(M({{0, 1}, {1, 0}})) == Poly({Rat(-1), Rat(0), Rat(1)}));
    CHECK(charpoly(RatMatrix(3)) == Poly::monomial(Rat(1), 3));
    CHECK(charpoly(M({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) ==
          Poly({Rat(-2), Rat(-3), Rat(0), Rat(1)}));
    CHECK(charpoly(RatMatrix(0)) == Poly::constant(1));
}

TEST_CASE("charpoly is monic and consistent with det", "[property]") {
    testing::Rng rng(17);
    for (int iteration = 0; iteration < 30; ++iteration) {
        const std::size_t n = 1 + iteration % 5;
        const RatMatrix m = testing::random_symmetric(rng, n);
        const Poly p = charpoly(m);
        REQUIRE(p.degree() == n);
        CHECK(p.coeff(n) == 1);
        for (int t : {0, 2, -3}) {
            CHECK(p(Rat(t)) == det(testing::shifted_negation(m, Rat(t))));
        }
    }
}

TEST_CASE("permanental polynomial") {
    CHECK(permpoly(M({{0, 1}, {1, 0}})) == Poly({Rat(1), Rat(0), Rat(1)}));
    CHECK(permpoly(RatMatrix(2)) == Poly::monomial(Rat(1), 2));
    CHECK(permpoly(M({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) ==
          Poly({Rat(-2), Rat(3), Rat(0), Rat(1)}));
    CHECK(permpoly(RatMatrix(0)) == Poly::constant(1));
    CHECK_THROWS_AS(permpoly(RatMatrix(5), 4), DimensionTooLarge);
}

TEST_CASE("permpoly is monic and consistent with perm", "[property]") {
    testing::Rng rng(19);
    for (int iteration = 0; iteration < 20; ++iteration) {
        const std::size_t n = 1 + iteration % 5;
        const RatMatrix m = testing::random_symmetric(rng, n);
        const Poly p = permpoly(m);
        REQUIRE(p.degree() == n);
        CHECK(p.coeff(n) == 1);
        for (int t : {1, -2, 7}) {
            CHECK(p(Rat(t)) == perm(testing::shifted_negation(m, Rat(t))));
        }
    }
}

TEST_CASE("masking a diagonal entry splits det and per", "[property]") {
    testing::Rng rng(23);
    for (int iteration = 0; iteration < 40; ++iteration) {
        const std::size_t n = 1 + iteration % 5;
        const RatMatrix x = testing::random_symmetric(rng, n);
        const std::size_t s = iteration % n;
        CHECK(det(masked(x, s, s)) == det(x) - x(s, s) * det(minor_matrix(x, {s}, {s})));
        CHECK(perm(masked(x, s, s)) == perm(x) - x(s, s) * perm(minor_matrix(x, {s}, {s})));
    }
}

TEST_CASE("masking an off-diagonal pair splits det and per", "[property]") {
    testing::Rng rng(29);
    for (int iteration = 0; iteration < 40; ++iteration) {
        const std::size_t n = 2 + iteration % 4;
        const RatMatrix x = testing::random_symmetric(rng, n);
        const std::size_t i = iteration % n;
        const std::size_t j = (i + 1 + iteration % (n - 1)) % n;
        REQUIRE(i != j);
        const Rat sign = (i + j) % 2 == 0 ? Rat(1) : Rat(-1);
        CHECK(det(masked(x, i, j)) ==
              det(x) - sign * x(i, j) * det(minor_matrix(x, {i}, {j})) -
                  sign * x(j, i) * det(minor_matrix(x, {j}, {i})) -
                  x(i, j) * x(i, j) * det(minor_matrix(x, {i, j}, {i, j})));
        CHECK(perm(masked(x, i, j)) ==
              perm(x) - x(i, j) * perm(minor_matrix(x, {i}, {j})) -
                  x(j, i) * perm(minor_matrix(x, {j}, {i})) +
                  x(i, j) * x(i, j) * perm(minor_matrix(x, {i, j}, {i, j})));
    }
}
