#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/matrix.hpp"
#include "gpoly/rational.hpp"

namespace gpoly {

/// Undirected edge, stored with smaller endpoint first.
using Edge = std::pair<std::size_t, std::size_t>;

inline Edge make_edge(std::size_t s, std::size_t t) {
    if (s == t) {
        throw Error("self-loops are not allowed");
    }
    return s < t ? Edge{s, t} : Edge{t, s};
}

/// Simple undirected graph: adjacency bitsets (one 64-bit row per vertex,
/// so n <= 64) plus the lexicographically sorted edge list. Immutable after
/// construction; edits produce new graphs.
class Graph {
public:
    explicit Graph(std::size_t n = 0) : n_(n), adj_(n, 0) {
        if (n > 64) {
            throw TooManyVertices("at most 64 vertices are supported");
        }
    }

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
        for (Edge e : edges) {
            e = make_edge(e.first, e.second);
            if (e.second >= n_) {
                throw IndexOutOfRange("edge endpoint " + std::to_string(e.second) +
                                      " out of range for n = " + std::to_string(n_));
            }
            adj_[e.first] |= std::uint64_t(1) << e.second;
            adj_[e.second] |= std::uint64_t(1) << e.first;
        }
        rebuild_edge_list();
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::uint64_t neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return std::size_t(std::popcount(adj_[v])); }

    bool has_edge(std::size_t s, std::size_t t) const {
        return s != t && s < n_ && t < n_ && ((adj_[s] >> t) & 1);
    }

    /// Decodes one graph6 record (printable-ASCII, single-byte header,
    /// n <= 62): byte 0 is n + 63, then the upper triangle column by column,
    /// packed 6 bits per byte, zero-padded.
    static Graph from_graph6(std::string_view record) {
        if (record.empty()) {
            throw MalformedGraph6("empty record");
        }
        for (char ch : record) {
            if (ch < 63 || ch > 126) {
                throw MalformedGraph6("character out of graph6 range");
            }
        }
        const std::size_t n = std::size_t(record[0] - 63);
        if (n > 62) {
            throw MalformedGraph6("vertex counts above 62 are not supported");
        }
        const std::size_t bits = n * (n - 1) / 2;
        const std::size_t expected = 1 + (bits + 5) / 6;
        if (record.size() != expected) {
            throw MalformedGraph6("record length " + std::to_string(record.size()) +
                                  ", expected " + std::to_string(expected) + " for n = " +
                                  std::to_string(n));
        }
        Graph g(n);
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i, ++bit) {
                const unsigned byte = unsigned(record[1 + bit / 6]) - 63;
                if ((byte >> (5 - bit % 6)) & 1) {
                    g.adj_[i] |= std::uint64_t(1) << j;
                    g.adj_[j] |= std::uint64_t(1) << i;
                }
            }
        }
        // Trailing pad bits must be zero in a well-formed record.
        for (std::size_t pad = bit; pad < (expected - 1) * 6; ++pad) {
            const unsigned byte = unsigned(record[1 + pad / 6]) - 63;
            if ((byte >> (5 - pad % 6)) & 1) {
                throw MalformedGraph6("nonzero padding bits");
            }
        }
        g.rebuild_edge_list();
        return g;
    }

    std::string to_graph6() const {
        if (n_ > 62) {
            throw TooManyVertices("graph6 output supports at most 62 vertices");
        }
        const std::size_t bits = n_ * (n_ - 1) / 2;
        std::string out(1 + (bits + 5) / 6, char(63));
        out[0] = char(63 + n_);
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n_; ++j) {
            for (std::size_t i = 0; i < j; ++i, ++bit) {
                if ((adj_[i] >> j) & 1) {
                    out[1 + bit / 6] += char(1 << (5 - bit % 6));
                }
            }
        }
        return out;
    }

    RatMatrix adjacency_matrix() const {
        RatMatrix a(n_);
        for (const Edge& e : edges_) {
            a(e.first, e.second) = 1;
            a(e.second, e.first) = 1;
        }
        return a;
    }

    RatMatrix degree_matrix() const {
        RatMatrix d(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            d(i, i) = Rat(degree(i));
        }
        return d;
    }

    /// Same vertex set with one edge removed.
    Graph without_edge(Edge e) const {
        e = make_edge(e.first, e.second);
        require_edge(e);
        Graph g = *this;
        g.adj_[e.first] &= ~(std::uint64_t(1) << e.second);
        g.adj_[e.second] &= ~(std::uint64_t(1) << e.first);
        g.rebuild_edge_list();
        return g;
    }

    /// Deletes both endpoints of an edge and every incident edge; remaining
    /// vertices keep their relative order.
    Graph without_endpoints(Edge e) const {
        e = make_edge(e.first, e.second);
        require_edge(e);
        std::vector<std::size_t> keep;
        keep.reserve(n_ - 2);
        for (std::size_t v = 0; v < n_; ++v) {
            if (v != e.first && v != e.second) {
                keep.push_back(v);
            }
        }
        Graph g(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            for (std::size_t j = i + 1; j < keep.size(); ++j) {
                if (has_edge(keep[i], keep[j])) {
                    g.adj_[i] |= std::uint64_t(1) << j;
                    g.adj_[j] |= std::uint64_t(1) << i;
                }
            }
        }
        g.rebuild_edge_list();
        return g;
    }

    /// One entry per edge, in canonical (sorted) edge order.
    std::vector<Graph> edge_deck() const {
        std::vector<Graph> deck;
        deck.reserve(edges_.size());
        for (const Edge& e : edges_) {
            deck.push_back(without_edge(e));
        }
        return deck;
    }

    std::vector<Graph> vertex_pair_deck() const {
        std::vector<Graph> deck;
        deck.reserve(edges_.size());
        for (const Edge& e : edges_) {
            deck.push_back(without_endpoints(e));
        }
        return deck;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void require_edge(const Edge& e) const {
        if (!has_edge(e.first, e.second)) {
            throw NoSuchEdge("no edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ")");
        }
    }

    void rebuild_edge_list() {
        edges_.clear();
        for (std::size_t s = 0; s + 1 < n_; ++s) {
            std::uint64_t higher = adj_[s] >> (s + 1) << (s + 1);
            while (higher != 0) {
                const std::size_t t = std::size_t(std::countr_zero(higher));
                edges_.emplace_back(s, t);
                higher &= higher - 1;
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

/// Graph with a nonzero rational weight per edge, stored parallel to the
/// canonical edge order.
class WeightedGraph {
public:
    WeightedGraph(Graph graph, std::vector<Rat> weights)
        : graph_(std::move(graph)), weights_(std::move(weights)) {
        if (weights_.size() != graph_.edge_count()) {
            throw Error("expected one weight per edge");
        }
        for (const Rat& w : weights_) {
            if (w == 0) {
                throw ZeroWeight("edge weights must be nonzero");
            }
        }
    }

    const Graph& graph() const { return graph_; }
    const std::vector<Rat>& weights() const { return weights_; }

    const Rat& weight(Edge e) const {
        e = make_edge(e.first, e.second);
        const auto& edges = graph_.edges();
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) {
            throw NoSuchEdge("no edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ")");
        }
        return weights_[std::size_t(it - edges.begin())];
    }

    RatMatrix weighted_adjacency_matrix() const {
        RatMatrix a(graph_.vertex_count());
        const auto& edges = graph_.edges();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            a(edges[k].first, edges[k].second) = weights_[k];
            a(edges[k].second, edges[k].first) = weights_[k];
        }
        return a;
    }

    WeightedGraph without_edge(Edge e) const {
        e = make_edge(e.first, e.second);
        Graph g = graph_.without_edge(e);
        std::vector<Rat> kept;
        kept.reserve(weights_.size() - 1);
        const auto& edges = graph_.edges();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (edges[k] != e) {
                kept.push_back(weights_[k]);
            }
        }
        return WeightedGraph(std::move(g), std::move(kept));
    }

private:
    Graph graph_;
    std::vector<Rat> weights_;
};

}  // namespace gpoly
