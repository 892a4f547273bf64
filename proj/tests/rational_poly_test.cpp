#include <catch2/catch_amalgamated.hpp>

#include "gpoly/poly.hpp"
#include "gpoly/rational.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gpoly;

namespace {

Poly P(std::initializer_list<int> coeffs) {
    std::vector<Rat> out;
    for (int c : coeffs) {
        out.emplace_back(c);
    }
    return Poly(std::move(out));
}

}  // namespace

TEST_CASE("rationals are always canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(to_string(make_rat(2, 4)) == "1/2");
    CHECK(denominator(make_rat(3, -6)) == 2);
    CHECK(numerator(make_rat(3, -6)) == -1);
    CHECK(to_string(make_rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(make_rat(1, 0), MalformedRational);
}

TEST_CASE("rational parsing accepts p and p/q, nothing else") {
    CHECK(parse_rat("5") == Rat(5));
    CHECK(parse_rat("-7/21") == make_rat(-1, 3));
    CHECK(parse_rat("+3/9") == make_rat(1, 3));
    CHECK(parse_rat("4/-6") == make_rat(-2, 3));
    CHECK(to_string(parse_rat("0/5")) == "0");
    CHECK_THROWS_AS(parse_rat(""), MalformedRational);
    CHECK_THROWS_AS(parse_rat("1.5"), MalformedRational);
    CHECK_THROWS_AS(parse_rat("1e3"), MalformedRational);
    CHECK_THROWS_AS(parse_rat("1/0"), MalformedRational);
    CHECK_THROWS_AS(parse_rat("1/"), MalformedRational);
    CHECK_THROWS_AS(parse_rat("/2"), MalformedRational);
    CHECK_THROWS_AS(parse_rat("one"), MalformedRational);
}

TEST_CASE("polynomial canonical form and degree") {
    CHECK(Poly{}.is_zero());
    CHECK(!Poly{}.degree().has_value());
    CHECK(Poly({Rat(1), Rat(0), Rat(0)}) == Poly::constant(1));
    CHECK(P({0, 0, 1}).degree() == std::size_t(2));
    CHECK(Poly({Rat(0)}).is_zero());
}

TEST_CASE("polynomial addition") {
    CHECK(P({-1, 0, 1}) + P({1, 0, 1}) == P({0, 0, 2}));
    const Poly p = P({3, -2, 5});
    CHECK(p + Poly{} == p);
    CHECK(P({-2, -3, 0, 1}) + P({-2, 3, 0, 1}) == P({-4, 0, 0, 2}));
}

TEST_CASE("polynomial multiplication") {
    CHECK(P({-1, 1}) * P({1, 1}) == P({-1, 0, 1}));
    CHECK((P({4, 2, 7}) * Poly{}).is_zero());
    const Poly cube = P({1, 1}) * P({1, 1}) * P({1, 1});
    CHECK(cube * P({-3, 1}) == P({-3, -8, -6, 0, 1}));
}

TEST_CASE("evaluation is a ring homomorphism", "[property]") {
    testing::Rng rng(2024);
    for (int iteration = 0; iteration < 50; ++iteration) {
        const Poly p = testing::random_poly(rng, 8);
        const Poly q = testing::random_poly(rng, 8);
        for (int sample = 0; sample < 5; ++sample) {
            const Rat t = testing::small_rat(rng);
            CHECK((p * q)(t) == p(t) * q(t));
            CHECK((p + q)(t) == p(t) + q(t));
        }
    }
}

TEST_CASE("product rule holds exactly", "[property]") {
    testing::Rng rng(77);
    for (int iteration = 0; iteration < 50; ++iteration) {
        const Poly p = testing::random_poly(rng, 8);
        const Poly q = testing::random_poly(rng, 8);
        CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
    }
}

TEST_CASE("formal derivative") {
    CHECK(derivative(P({-1, 0, 1})) == P({0, 2}));
    CHECK(derivative(Poly::constant(5)).is_zero());
    CHECK(derivative(P({0, 9, -6, 1})) == P({9, -12, 3}));
}

TEST_CASE("evaluation examples") {
    CHECK(P({-1, 0, 1})(Rat(0)) == Rat(-1));
    CHECK(Poly{}(make_rat(7, 3)) == Rat(0));
    // 2 is an adjacency eigenvalue of the triangle.
    CHECK(P({-2, -3, 0, 1})(Rat(2)) == Rat(0));
}

TEST_CASE("interpolation recovers known polynomials") {
    CHECK(Poly::interpolate({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(-1), Rat(0)}}) ==
          P({-1, 0, 1}));
    CHECK(Poly::interpolate({{Rat(0), Rat(5)}}) == Poly::constant(5));
    CHECK_THROWS_AS(Poly::interpolate({{Rat(1), Rat(0)}, {Rat(1), Rat(2)}}), DuplicateAbscissa);
}

TEST_CASE("interpolation through permanent evaluations of the triangle") {
    // per(tI - A(K3)) sampled by the permutation-expansion oracle at four
    // points determines the cubic exactly.
    const RatMatrix a = RatMatrix::from_rows({{Rat(0), Rat(1), Rat(1)},
                                              {Rat(1), Rat(0), Rat(1)},
                                              {Rat(1), Rat(1), Rat(0)}});
    std::vector<std::pair<Rat, Rat>> points;
    for (int t : {0, 1, 2, -1}) {
        points.emplace_back(Rat(t), testing::leibniz_perm(testing::shifted_negation(a, Rat(t))));
    }
    CHECK(Poly::interpolate(points) == P({-2, 3, 0, 1}));
}

TEST_CASE("interpolation round-trips random polynomials", "[property]") {
    testing::Rng rng(99);
    for (int iteration = 0; iteration < 30; ++iteration) {
        const Poly p = testing::random_poly(rng, 6);
        const std::size_t samples = (p.degree().value_or(0)) + 1;
        std::vector<std::pair<Rat, Rat>> points;
        for (std::size_t i = 0; i < samples; ++i) {
            points.emplace_back(Rat(i), p(Rat(i)));
        }
        CHECK(Poly::interpolate(points) == p);
    }
}

TEST_CASE("coefficient string serialization round-trips") {
    const Poly p = Poly({make_rat(-1, 2), Rat(0), Rat(3)});
    const auto strings = coefficient_strings(p);
    REQUIRE(strings == std::vector<std::string>{"-1/2", "0", "3"});
    CHECK(poly_from_strings(strings) == p);
    CHECK(coefficient_strings(Poly{}) == std::vector<std::string>{"0"});
    CHECK(poly_from_strings({"0"}).is_zero());
}
