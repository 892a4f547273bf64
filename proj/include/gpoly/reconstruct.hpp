#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/graph_polys.hpp"
#include "gpoly/identities.hpp"
#include "gpoly/poly.hpp"

namespace gpoly {

/// Reconstruction input: the polynomials of the edge deck (and, for sigma1/
/// sigma4, the vertex-pair deck) of some n-vertex, m-edge graph.
struct DeckBundle {
    SigmaKind kind = SigmaKind::Sigma1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Poly> edge_polys;
    std::optional<std::vector<Poly>> pair_polys;
};

inline bool uses_pair_deck(SigmaKind kind) {
    return kind == SigmaKind::Sigma1 || kind == SigmaKind::Sigma4;
}

/// Checks the bundle invariants: deck lengths match m, the pair deck is
/// present exactly for sigma1/sigma4, edge polynomials have degree n and
/// pair polynomials degree n-2.
inline void validate(const DeckBundle& bundle) {
    if (bundle.edge_polys.size() != bundle.m) {
        throw MalformedInput("edge deck has " + std::to_string(bundle.edge_polys.size()) +
                             " entries, expected m = " + std::to_string(bundle.m));
    }
    if (uses_pair_deck(bundle.kind)) {
        if (!bundle.pair_polys.has_value()) {
            throw MissingPairDeck("kind " + to_string(bundle.kind) +
                                  " requires the vertex-pair deck");
        }
        if (bundle.pair_polys->size() != bundle.m) {
            throw MalformedInput("pair deck has " + std::to_string(bundle.pair_polys->size()) +
                                 " entries, expected m = " + std::to_string(bundle.m));
        }
    } else if (bundle.pair_polys.has_value()) {
        throw MalformedInput("kind " + to_string(bundle.kind) + " takes no vertex-pair deck");
    }
    for (const Poly& p : bundle.edge_polys) {
        if (p.degree() != std::optional<std::size_t>(bundle.n)) {
            throw DegreeMismatch("edge deck polynomial of degree != n");
        }
    }
    if (bundle.pair_polys.has_value() && bundle.n >= 2) {
        for (const Poly& p : *bundle.pair_polys) {
            if (p.degree() != std::optional<std::size_t>(bundle.n - 2)) {
                throw DegreeMismatch("pair deck polynomial of degree != n - 2");
            }
        }
    }
}

/// Computes the deck from a graph (the CLI `deck` command and the round-trip
/// driver share this).
inline DeckBundle make_deck(const Graph& g, SigmaKind kind,
                            std::size_t cap = kDefaultPermanentCap) {
    DeckBundle bundle;
    bundle.kind = kind;
    bundle.n = g.vertex_count();
    bundle.m = g.edge_count();
    bundle.edge_polys.reserve(bundle.m);
    for (const Edge& e : g.edges()) {
        bundle.edge_polys.push_back(sigma(kind, g.without_edge(e), cap));
    }
    if (uses_pair_deck(kind)) {
        bundle.pair_polys.emplace();
        bundle.pair_polys->reserve(bundle.m);
        for (const Edge& e : g.edges()) {
            bundle.pair_polys->push_back(sigma(kind, g.without_endpoints(e), cap));
        }
    }
    return bundle;
}

/// Deck-sum polynomial: edge polynomials plus (sigma1) / minus (sigma4) the
/// pair polynomials, edge polynomials alone for sigma2/sigma3.
inline Poly rhs_poly(const DeckBundle& bundle) {
    validate(bundle);
    Poly sum;
    for (const Poly& p : bundle.edge_polys) {
        sum += p;
    }
    if (bundle.kind == SigmaKind::Sigma1) {
        for (const Poly& p : *bundle.pair_polys) {
            sum += p;
        }
    } else if (bundle.kind == SigmaKind::Sigma4) {
        for (const Poly& p : *bundle.pair_polys) {
            sum -= p;
        }
    }
    return sum;
}

enum class ReconstructionStatus { Unique, Underdetermined, Inconsistent };

inline std::string to_string(ReconstructionStatus status) {
    switch (status) {
        case ReconstructionStatus::Unique:
            return "unique";
        case ReconstructionStatus::Underdetermined:
            return "underdetermined";
        case ReconstructionStatus::Inconsistent:
            return "inconsistent";
    }
    throw Error("unreachable");
}

struct ReconstructionReport {
    ReconstructionStatus status = ReconstructionStatus::Unique;
    /// Solved polynomial; coefficients at free indices are 0 placeholders.
    Poly poly;
    /// Full ascending coefficient list of length n + 1 (poly trims zeros).
    std::vector<Rat> coefficients;
    std::vector<std::size_t> free_indices;
    /// Consistency values that must all be zero for a genuine deck: the
    /// deck-sum coefficient at the degenerate index, plus any failed
    /// cross-check (monicity at n, vanishing trace coefficient at n-1).
    std::map<std::size_t, Rat> residuals;
};

/// Solves the coefficient system (m - n + k) c_k = r_k, k = 0..n, where r is
/// the deck-sum polynomial. The index k0 = n - m (when it lands in range) has
/// a degenerate equation 0 = r_k0; it is settled by the initial condition
/// c_0 = 0 for sigma2 at m = n, by monicity at m = 0, and is otherwise
/// reported as a free index rather than guessed.
inline ReconstructionReport solve(const DeckBundle& bundle) {
    const Poly r = rhs_poly(bundle);
    const std::size_t n = bundle.n;
    const std::size_t m = bundle.m;
    ReconstructionReport report;
    report.coefficients.assign(n + 1, Rat());
    for (std::size_t k = 0; k <= n; ++k) {
        const Int factor = Int(m) - Int(n) + Int(k);
        if (factor != 0) {
            report.coefficients[k] = r.coeff(k) / Rat(factor);
        }
    }
    if (m <= n) {
        const std::size_t degenerate = n - m;
        report.residuals[degenerate] = r.coeff(degenerate);
        if (bundle.kind == SigmaKind::Sigma2 && degenerate == 0) {
            // The Laplacian polynomial vanishes at 0 for every graph.
            report.coefficients[0] = 0;
        } else if (degenerate == n) {
            // Empty deck: the polynomial is monic x^n.
            report.coefficients[n] = 1;
        } else {
            report.free_indices.push_back(degenerate);
        }
    }
    // Cross-checks at indices the system does determine.
    if (m > 0 && report.coefficients[n] != 1) {
        report.residuals[n] = report.coefficients[n] - 1;
    }
    if (uses_pair_deck(bundle.kind) && n >= 1 && m != 1 && report.coefficients[n - 1] != 0) {
        report.residuals[n - 1] = report.coefficients[n - 1];
    }
    bool inconsistent = false;
    for (const auto& [index, value] : report.residuals) {
        if (value != 0) {
            inconsistent = true;
        }
    }
    report.status = inconsistent            ? ReconstructionStatus::Inconsistent
                    : report.free_indices.empty() ? ReconstructionStatus::Unique
                                                  : ReconstructionStatus::Underdetermined;
    report.poly = Poly(report.coefficients);
    return report;
}

/// End-to-end driver: deck the graph, solve, and compare every determined
/// coefficient against the directly computed polynomial.
inline PolyIdentity roundtrip_check(const Graph& g, SigmaKind kind,
                                    std::size_t cap = kDefaultPermanentCap) {
    const ReconstructionReport report = solve(make_deck(g, kind, cap));
    const Poly direct = sigma(kind, g, cap);
    bool holds = report.status != ReconstructionStatus::Inconsistent;
    for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
        const bool free = std::find(report.free_indices.begin(), report.free_indices.end(), k) !=
                          report.free_indices.end();
        if (!free && report.coefficients[k] != direct.coeff(k)) {
            holds = false;
        }
    }
    PolyIdentity result;
    result.lhs = direct;
    result.rhs = report.poly;
    result.holds = holds;
    return result;
}

}  // namespace gpoly
