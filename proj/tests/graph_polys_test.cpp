#include <catch2/catch_amalgamated.hpp>

#include "gpoly/graph_polys.hpp"
#include "gpoly/identities.hpp"

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

const Graph kTriangle(3, {{0, 1}, {0, 2}, {1, 2}});
const Graph kSingleEdge(2, {{0, 1}});

}  // namespace

TEST_CASE("named polynomials on small graphs") {
    CHECK(sigma(SigmaKind::Sigma1, kTriangle) == P({-2, -3, 0, 1}));
    CHECK(sigma(SigmaKind::Sigma2, kTriangle) == P({0, 9, -6, 1}));
    CHECK(sigma(SigmaKind::Sigma3, kTriangle) == P({-4, 9, -6, 1}));
    CHECK(sigma(SigmaKind::Sigma4, kSingleEdge) == P({1, 0, 1}));
    for (SigmaKind kind :
         {SigmaKind::Sigma1, SigmaKind::Sigma2, SigmaKind::Sigma3, SigmaKind::Sigma4}) {
        CHECK(sigma(kind, Graph(0)) == Poly::constant(1));
    }
}

TEST_CASE("sigma values agree with the permutation-expansion oracle", "[property]") {
    testing::Rng rng(41);
    for (int iteration = 0; iteration < 15; ++iteration) {
        const Graph g = testing::random_graph(rng, 1 + iteration % 5);
        const RatMatrix a = g.adjacency_matrix();
        const RatMatrix laplacian = graph_matrix(g, Rat(1), Rat(-1));
        const RatMatrix signless = graph_matrix(g, Rat(1), Rat(1));
        for (int t : {0, 1, -2}) {
            const Rat x0(t);
            CHECK(sigma(SigmaKind::Sigma1, g)(x0) ==
                  testing::leibniz_det(testing::shifted_negation(a, x0)));
            CHECK(sigma(SigmaKind::Sigma2, g)(x0) ==
                  testing::leibniz_det(testing::shifted_negation(laplacian, x0)));
            CHECK(sigma(SigmaKind::Sigma3, g)(x0) ==
                  testing::leibniz_det(testing::shifted_negation(signless, x0)));
            CHECK(sigma(SigmaKind::Sigma4, g)(x0) ==
                  testing::leibniz_perm(testing::shifted_negation(a, x0)));
        }
    }
}

TEST_CASE("generalized polynomials specialize to the named ones") {
    CHECK(tau(MatrixFn::Det, kSingleEdge, Rat(1), Rat(-1)) == P({0, -2, 1}));
    CHECK(tau(MatrixFn::Per, kTriangle, Rat(0), Rat(1)) == P({-2, 3, 0, 1}));
    CHECK_THROWS_AS(tau(MatrixFn::Det, kTriangle, Rat(1), Rat(0)), ZeroGamma);

    const auto graphs = testing::load_fixture("all_n5.g6");
    for (const Graph& g : graphs) {
        CHECK(tau(MatrixFn::Det, g, Rat(0), Rat(1)) == sigma(SigmaKind::Sigma1, g));
        CHECK(tau(MatrixFn::Det, g, Rat(1), Rat(-1)) == sigma(SigmaKind::Sigma2, g));
        CHECK(tau(MatrixFn::Det, g, Rat(1), Rat(1)) == sigma(SigmaKind::Sigma3, g));
        CHECK(tau(MatrixFn::Per, g, Rat(0), Rat(1)) == sigma(SigmaKind::Sigma4, g));
    }
}

TEST_CASE("weighted generalized polynomials") {
    // Unit weights specialize to the unweighted polynomial.
    testing::Rng rng(43);
    for (int iteration = 0; iteration < 10; ++iteration) {
        const Graph g = testing::random_graph(rng, 2 + iteration % 4);
        const WeightedGraph unit(g, std::vector<Rat>(g.edge_count(), Rat(1)));
        CHECK(tau(MatrixFn::Det, unit, Rat(1), Rat(2)) == tau(MatrixFn::Det, g, Rat(1), Rat(2)));
        CHECK(tau(MatrixFn::Per, unit, Rat(1), Rat(2)) == tau(MatrixFn::Per, g, Rat(1), Rat(2)));
    }

    const Rat w(5);
    const WeightedGraph weighted_edge(kSingleEdge, {w});
    CHECK(tau(MatrixFn::Det, weighted_edge, Rat(0), Rat(1)) ==
          Poly({-w * w, Rat(0), Rat(1)}));

    const WeightedGraph lone_vertex(Graph(1), {});
    CHECK(tau(MatrixFn::Det, lone_vertex, Rat(3), Rat(1)) == Poly::monomial(Rat(1), 1));
    CHECK_THROWS_AS(tau(MatrixFn::Det, lone_vertex, Rat(1), Rat(0)), ZeroGamma);
}

TEST_CASE("endpoint-deleted minor terms") {
    // With beta = 0 the minor term is the polynomial of the endpoint-deleted
    // subgraph itself.
    testing::Rng rng(47);
    for (int iteration = 0; iteration < 15; ++iteration) {
        const Graph g = testing::random_graph(rng, 2 + iteration % 5);
        for (const Edge& e : g.edges()) {
            CHECK(minor_term(MatrixFn::Det, g, Rat(0), Rat(1), e) ==
                  sigma(SigmaKind::Sigma1, g.without_endpoints(e)));
            CHECK(minor_term(MatrixFn::Per, g, Rat(0), Rat(1), e) ==
                  sigma(SigmaKind::Sigma4, g.without_endpoints(e)));
        }
    }

    CHECK(minor_term(MatrixFn::Det, kSingleEdge, Rat(0), Rat(1), {0, 1}) == Poly::constant(1));
    // Minor of the triangle keeps the full-graph degree 2 on the diagonal.
    CHECK(minor_term(MatrixFn::Det, kTriangle, Rat(1), Rat(1), {0, 1}) == P({-2, 1}));
    CHECK_THROWS_AS(minor_term(MatrixFn::Det, kTriangle, Rat(0), Rat(1), {0, 3}), NoSuchEdge);
}

TEST_CASE("coefficient structure across the small-graph corpus") {
    for (const std::string fixture : {"all_n1.g6", "all_n2.g6", "all_n3.g6", "all_n4.g6",
                                      "all_n5.g6", "all_n6.g6"}) {
        for (const Graph& g : testing::load_fixture(fixture)) {
            const std::size_t n = g.vertex_count();
            const Rat m(g.edge_count());
            const Poly s1 = sigma(SigmaKind::Sigma1, g);
            REQUIRE(s1.degree() == n);
            CHECK(s1.coeff(n) == 1);
            CHECK(s1.coeff(n - 1) == 0);
            if (n >= 2) {
                CHECK(s1.coeff(n - 2) == -m);
            }
            const Poly s4 = sigma(SigmaKind::Sigma4, g);
            CHECK(s4.coeff(n) == 1);
            CHECK(s4.coeff(n - 1) == 0);
            if (n >= 2) {
                CHECK(s4.coeff(n - 2) == m);
            }
            const Poly s2 = sigma(SigmaKind::Sigma2, g);
            const Poly s3 = sigma(SigmaKind::Sigma3, g);
            CHECK(s2.coeff(n - 1) == -2 * m);
            CHECK(s3.coeff(n - 1) == -2 * m);
            CHECK(s2(Rat(0)) == 0);
        }
    }
}

TEST_CASE("principal minors sum to the derivative", "[property]") {
    const std::vector<std::pair<Rat, Rat>> params = {
        {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {make_rat(1, 2), Rat(-3)}};
    for (const Graph& g : testing::load_fixture("all_n4.g6")) {
        for (const auto& [beta, gamma] : params) {
            CHECK(verify_derivative_identity(MatrixFn::Det, g, beta, gamma).holds);
            CHECK(verify_derivative_identity(MatrixFn::Per, g, beta, gamma).holds);
        }
    }
}
