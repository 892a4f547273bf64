#pragma once

#include <cstddef>
#include <utility>

#include "gpoly/graph.hpp"
#include "gpoly/graph_polys.hpp"
#include "gpoly/matrix.hpp"
#include "gpoly/poly.hpp"

namespace gpoly {

/// Both sides of an identity, so a failure is diagnosable from the report
/// alone. holds is exact equality; there are no tolerances anywhere.
template <class Value>
struct IdentityReport {
    Value lhs;
    Value rhs;
    bool holds = false;
};

using ScalarIdentity = IdentityReport<Rat>;
using PolyIdentity = IdentityReport<Poly>;

template <class Value>
IdentityReport<Value> make_report(Value lhs, Value rhs) {
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

/// Zero-pattern bookkeeping of a symmetric matrix: m = number of unordered
/// off-diagonal nonzero pairs, c = zero diagonal entries, k = unordered
/// off-diagonal zero pairs (so m + k = n(n-1)/2).
struct SparsityCounts {
    std::size_t nonzero_offdiag_pairs = 0;  // m
    std::size_t zero_diagonal = 0;          // c
    std::size_t zero_offdiag_pairs = 0;     // k
};

struct SparseScalarIdentity {
    Rat lhs;
    Rat rhs;
    bool holds = false;
    SparsityCounts counts;
};

inline SparsityCounts sparsity_counts(const RatMatrix& x) {
    SparsityCounts counts;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x(i, i) == 0) {
            ++counts.zero_diagonal;
        }
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x(i, j) == 0) {
                ++counts.zero_offdiag_pairs;
            } else {
                ++counts.nonzero_offdiag_pairs;
            }
        }
    }
    return counts;
}

/// Masking identity for determinants over all index pairs:
/// (n^2-n)/2 * det(X) equals the sum of det over every masked matrix plus
/// the x_ij^2-weighted two-row minors.
inline ScalarIdentity verify_det_identity(const RatMatrix& x) {
    detail::require_symmetric(x, "verify_det_identity");
    const std::size_t n = x.size();
    const Rat lhs = Rat(Int(n) * (Int(n) - 1) / 2) * det(x);
    Rat rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            rhs += det(masked(x, i, j));
            if (i < j) {
                rhs += x(i, j) * x(i, j) * det(minor_matrix(x, {i, j}, {i, j}));
            }
        }
    }
    return make_report(lhs, rhs);
}

/// Permanent analogue of the masking identity (minor sum subtracted).
inline ScalarIdentity verify_perm_identity(const RatMatrix& x,
                                           std::size_t cap = kDefaultPermanentCap) {
    detail::require_symmetric(x, "verify_perm_identity");
    const std::size_t n = x.size();
    const Rat lhs = Rat(Int(n) * (Int(n) - 1) / 2) * perm(x, cap);
    Rat rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            rhs += perm(masked(x, i, j), cap);
            if (i < j) {
                rhs -= x(i, j) * x(i, j) * perm(minor_matrix(x, {i, j}, {i, j}), cap);
            }
        }
    }
    return make_report(lhs, rhs);
}

/// Sparse form of the determinant masking identity: only nonzero entries
/// contribute, and the multiplier drops to (m - c).
inline SparseScalarIdentity verify_det_identity_sparse(const RatMatrix& x) {
    detail::require_symmetric(x, "verify_det_identity_sparse");
    const std::size_t n = x.size();
    const SparsityCounts counts = sparsity_counts(x);
    const Rat lhs =
        (Rat(counts.nonzero_offdiag_pairs) - Rat(counts.zero_diagonal)) * det(x);
    Rat rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (x(i, j) == 0) {
                continue;
            }
            rhs += det(masked(x, i, j));
            if (i < j) {
                rhs += x(i, j) * x(i, j) * det(minor_matrix(x, {i, j}, {i, j}));
            }
        }
    }
    const bool holds = lhs == rhs;
    return {lhs, rhs, holds, counts};
}

inline SparseScalarIdentity verify_perm_identity_sparse(const RatMatrix& x,
                                                        std::size_t cap = kDefaultPermanentCap) {
    detail::require_symmetric(x, "verify_perm_identity_sparse");
    const std::size_t n = x.size();
    const SparsityCounts counts = sparsity_counts(x);
    const Rat lhs =
        (Rat(counts.nonzero_offdiag_pairs) - Rat(counts.zero_diagonal)) * perm(x, cap);
    Rat rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (x(i, j) == 0) {
                continue;
            }
            rhs += perm(masked(x, i, j), cap);
            if (i < j) {
                rhs -= x(i, j) * x(i, j) * perm(minor_matrix(x, {i, j}, {i, j}), cap);
            }
        }
    }
    const bool holds = lhs == rhs;
    return {lhs, rhs, holds, counts};
}

namespace detail {

inline Poly differential_lhs(const Poly& p, std::size_t m, std::size_t n) {
    // (m - n) * p + x * p'
    return (Rat(m) - Rat(n)) * p + Poly::monomial(Rat(1), 1) * derivative(p);
}

}  // namespace detail

/// Differential identity for the generalized polynomials:
/// (m-n) tau + x tau' = sum over edge-deleted subgraphs, plus
/// (gamma^2 - beta^2) (det) or minus (gamma^2 + beta^2) (per) times the
/// endpoint-deleted minor terms of the full-graph matrix.
inline PolyIdentity verify_tau_identity(MatrixFn fn, const Graph& g, const Rat& beta,
                                        const Rat& gamma,
                                        std::size_t cap = kDefaultPermanentCap) {
    detail::require_nonzero_gamma(gamma);
    const Poly lhs =
        detail::differential_lhs(tau(fn, g, beta, gamma, cap), g.edge_count(), g.vertex_count());
    Poly deck_sum, minor_sum;
    for (const Edge& e : g.edges()) {
        deck_sum += tau(fn, g.without_edge(e), beta, gamma, cap);
        minor_sum += minor_term(fn, g, beta, gamma, e, cap);
    }
    const Rat factor = fn == MatrixFn::Det ? Rat(gamma * gamma - beta * beta)
                                           : Rat(-(gamma * gamma + beta * beta));
    return make_report(lhs, deck_sum + factor * minor_sum);
}

/// Weighted variant: the minor-term factor becomes per-edge,
/// gamma^2 w(e)^2 -+ beta^2.
inline PolyIdentity verify_tau_identity_weighted(MatrixFn fn, const WeightedGraph& wg,
                                                 const Rat& beta, const Rat& gamma,
                                                 std::size_t cap = kDefaultPermanentCap) {
    detail::require_nonzero_gamma(gamma);
    const Graph& g = wg.graph();
    const Poly lhs =
        detail::differential_lhs(tau(fn, wg, beta, gamma, cap), g.edge_count(), g.vertex_count());
    Poly rhs;
    for (const Edge& e : g.edges()) {
        rhs += tau(fn, wg.without_edge(e), beta, gamma, cap);
        const Rat w = wg.weight(e);
        const Rat factor = fn == MatrixFn::Det ? Rat(gamma * gamma * w * w - beta * beta)
                                               : Rat(-(gamma * gamma * w * w + beta * beta));
        rhs += factor * minor_term(fn, wg, beta, gamma, e, cap);
    }
    return make_report(lhs, rhs);
}

/// Differential identity for the four named polynomials: the right-hand side
/// uses the edge deck plus (sigma1) / minus (sigma4) the vertex-pair deck,
/// and the edge deck alone for sigma2/sigma3.
inline PolyIdentity verify_sigma_identity(SigmaKind kind, const Graph& g,
                                          std::size_t cap = kDefaultPermanentCap) {
    const Poly lhs =
        detail::differential_lhs(sigma(kind, g, cap), g.edge_count(), g.vertex_count());
    Poly rhs;
    for (const Edge& e : g.edges()) {
        rhs += sigma(kind, g.without_edge(e), cap);
        if (kind == SigmaKind::Sigma1) {
            rhs += sigma(kind, g.without_endpoints(e), cap);
        } else if (kind == SigmaKind::Sigma4) {
            rhs -= sigma(kind, g.without_endpoints(e), cap);
        }
    }
    return make_report(lhs, rhs);
}

/// The vertex-deleted principal minors of xI - beta D - gamma A sum to the
/// derivative of the corresponding generalized polynomial.
inline PolyIdentity verify_derivative_identity(MatrixFn fn, const Graph& g, const Rat& beta,
                                               const Rat& gamma,
                                               std::size_t cap = kDefaultPermanentCap) {
    detail::require_nonzero_gamma(gamma);
    const RatMatrix m = graph_matrix(g, beta, gamma);
    Poly minor_sum;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const RatMatrix sub = minor_matrix(m, {i}, {i});
        minor_sum += fn == MatrixFn::Det ? charpoly(sub) : permpoly(sub, cap);
    }
    return make_report(minor_sum, derivative(tau(fn, g, beta, gamma, cap)));
}

}  // namespace gpoly
