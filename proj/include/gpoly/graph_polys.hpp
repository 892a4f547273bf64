#pragma once

#include <cstddef>
#include <string>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/matrix.hpp"
#include "gpoly/poly.hpp"

namespace gpoly {

/// The four named graph polynomials: characteristic (adjacency), Laplacian,
/// signless Laplacian and permanental.
enum class SigmaKind { Sigma1 = 1, Sigma2 = 2, Sigma3 = 3, Sigma4 = 4 };

/// Which multilinear expansion a generalized polynomial uses.
enum class MatrixFn { Det, Per };

inline std::string to_string(SigmaKind kind) {
    return "sigma" + std::to_string(int(kind));
}

inline SigmaKind sigma_kind_from_string(const std::string& name) {
    for (SigmaKind kind :
         {SigmaKind::Sigma1, SigmaKind::Sigma2, SigmaKind::Sigma3, SigmaKind::Sigma4}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw MalformedInput("unknown polynomial kind \"" + name + "\"");
}

namespace detail {

inline void require_nonzero_gamma(const Rat& gamma) {
    if (gamma == 0) {
        throw ZeroGamma("gamma must be nonzero");
    }
}

}  // namespace detail

/// beta*D + gamma*A.
inline RatMatrix graph_matrix(const Graph& g, const Rat& beta, const Rat& gamma) {
    RatMatrix m = g.adjacency_matrix();
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = i == j ? beta * Rat(g.degree(i)) : gamma * m(i, j);
        }
    }
    return m;
}

/// Weighted variant: A carries the edge weights while D stays the plain
/// vertex-degree matrix of the underlying graph (the weighted identities
/// only hold with unweighted degrees; see the verifier tests).
inline RatMatrix graph_matrix(const WeightedGraph& wg, const Rat& beta, const Rat& gamma) {
    RatMatrix m = wg.weighted_adjacency_matrix();
    const std::size_t n = wg.graph().vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = i == j ? beta * Rat(wg.graph().degree(i)) : gamma * m(i, j);
        }
    }
    return m;
}

/// The four named polynomials. The empty graph yields the constant 1.
inline Poly sigma(SigmaKind kind, const Graph& g, std::size_t cap = kDefaultPermanentCap) {
    switch (kind) {
        case SigmaKind::Sigma1:
            return charpoly(g.adjacency_matrix());
        case SigmaKind::Sigma2:
            return charpoly(graph_matrix(g, Rat(1), Rat(-1)));  // D - A
        case SigmaKind::Sigma3:
            return charpoly(graph_matrix(g, Rat(1), Rat(1)));  // D + A
        case SigmaKind::Sigma4:
            return permpoly(g.adjacency_matrix(), cap);
    }
    throw Error("unreachable");
}

/// Generalized polynomial det/per(xI - beta*D - gamma*A).
inline Poly tau(MatrixFn fn, const Graph& g, const Rat& beta, const Rat& gamma,
                std::size_t cap = kDefaultPermanentCap) {
    detail::require_nonzero_gamma(gamma);
    const RatMatrix m = graph_matrix(g, beta, gamma);
    return fn == MatrixFn::Det ? charpoly(m) : permpoly(m, cap);
}

inline Poly tau(MatrixFn fn, const WeightedGraph& wg, const Rat& beta, const Rat& gamma,
                std::size_t cap = kDefaultPermanentCap) {
    detail::require_nonzero_gamma(gamma);
    const RatMatrix m = graph_matrix(wg, beta, gamma);
    return fn == MatrixFn::Det ? charpoly(m) : permpoly(m, cap);
}

namespace detail {

inline Poly minor_term_of(MatrixFn fn, const RatMatrix& m, Edge e, std::size_t cap) {
    const RatMatrix sub = minor_matrix(m, {e.first, e.second}, {e.first, e.second});
    return fn == MatrixFn::Det ? charpoly(sub) : permpoly(sub, cap);
}

}  // namespace detail

/// det/per of (xI - beta*D - gamma*A) with the rows and columns of the two
/// edge endpoints deleted. D keeps the degrees of the whole graph, not of
/// any subgraph; the distinction is what the differential identities hinge
/// on. Result has degree n - 2.
inline Poly minor_term(MatrixFn fn, const Graph& g, const Rat& beta, const Rat& gamma, Edge e,
                       std::size_t cap = kDefaultPermanentCap) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) {
        throw NoSuchEdge("no edge (" + std::to_string(e.first) + ", " +
                         std::to_string(e.second) + ")");
    }
    return detail::minor_term_of(fn, graph_matrix(g, beta, gamma), e, cap);
}

inline Poly minor_term(MatrixFn fn, const WeightedGraph& wg, const Rat& beta, const Rat& gamma,
                       Edge e, std::size_t cap = kDefaultPermanentCap) {
    e = make_edge(e.first, e.second);
    if (!wg.graph().has_edge(e.first, e.second)) {
        throw NoSuchEdge("no edge (" + std::to_string(e.first) + ", " +
                         std::to_string(e.second) + ")");
    }
    return detail::minor_term_of(fn, graph_matrix(wg, beta, gamma), e, cap);
}

}  // namespace gpoly
