#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/graph_polys.hpp"
#include "gpoly/identities.hpp"
#include "gpoly/parallel.hpp"
#include "gpoly/reconstruct.hpp"

namespace gpoly {

struct CorpusRecord {
    std::size_t line_number = 0;
    std::string text;
};

/// Reads newline-separated graph6 records; blank lines and ">>..." header
/// lines are skipped, trailing carriage returns stripped.
inline std::vector<CorpusRecord> read_graph6_records(std::istream& in) {
    std::vector<CorpusRecord> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.rfind(">>", 0) == 0) {
            continue;
        }
        records.push_back({line_number, line});
    }
    return records;
}

/// Identity checks the scanner knows how to run on a plain graph. The 2.x
/// ids exercise the scalar masking identities on x0*I - (beta*D + gamma*A)
/// instances; 3.1 the generalized differential identity; 3.3/3.4 the named
/// polynomial identities.
inline const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {"2.1", "2.2", "2.3", "2.4",
                                                 "3.1", "3.3", "3.4"};
    return ids;
}

namespace detail {

inline RatMatrix shift_matrix(const RatMatrix& m, const Rat& x0) {
    RatMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out(i, j) = (i == j ? x0 : Rat(0)) - m(i, j);
        }
    }
    return out;
}

/// Deterministic sample points for the scalar identity checks.
inline const std::vector<std::pair<Rat, Rat>>& scan_beta_gamma() {
    static const std::vector<std::pair<Rat, Rat>> pairs = {
        {Rat(0), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(1), Rat(1)}};
    return pairs;
}

inline const std::vector<Rat>& scan_shifts() {
    static const std::vector<Rat> shifts = {Rat(0), Rat(1), Rat(5, 2)};
    return shifts;
}

inline bool run_check(const std::string& id, const Graph& g, std::size_t cap) {
    if (id == "2.1" || id == "2.2" || id == "2.3" || id == "2.4") {
        for (const auto& [beta, gamma] : scan_beta_gamma()) {
            for (const Rat& x0 : scan_shifts()) {
                const RatMatrix x = shift_matrix(graph_matrix(g, beta, gamma), x0);
                bool holds = true;
                if (id == "2.1") {
                    holds = verify_det_identity(x).holds;
                } else if (id == "2.2") {
                    holds = verify_perm_identity(x, cap).holds;
                } else if (id == "2.3") {
                    holds = verify_det_identity_sparse(x).holds;
                } else {
                    holds = verify_perm_identity_sparse(x, cap).holds;
                }
                if (!holds) {
                    return false;
                }
            }
        }
        return true;
    }
    if (id == "3.1") {
        for (const auto& [beta, gamma] : std::vector<std::pair<Rat, Rat>>{
                 {Rat(0), Rat(1)}, {Rat(1), Rat(2)}}) {
            if (!verify_tau_identity(MatrixFn::Det, g, beta, gamma, cap).holds ||
                !verify_tau_identity(MatrixFn::Per, g, beta, gamma, cap).holds) {
                return false;
            }
        }
        return true;
    }
    if (id == "3.3") {
        return verify_sigma_identity(SigmaKind::Sigma1, g, cap).holds &&
               verify_sigma_identity(SigmaKind::Sigma4, g, cap).holds;
    }
    if (id == "3.4") {
        return verify_sigma_identity(SigmaKind::Sigma2, g, cap).holds &&
               verify_sigma_identity(SigmaKind::Sigma3, g, cap).holds;
    }
    throw MalformedInput("unknown check id \"" + id + "\"");
}

}  // namespace detail

struct CheckCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct ScanFailure {
    std::string check;
    std::string graph6;
};

struct ScanSummary {
    std::size_t records = 0;
    std::size_t parsed = 0;
    std::vector<std::pair<std::size_t, std::string>> malformed;  // (line, message)
    std::map<std::string, CheckCounts> checks;
    std::vector<ScanFailure> failures;
};

/// Runs the requested identity checks on every record. In strict mode a
/// malformed record throws; otherwise it is recorded and skipped. A check
/// failure is recorded, never thrown: the caller decides how loudly to abort.
inline ScanSummary scan_verify(const std::vector<CorpusRecord>& records,
                               const std::vector<std::string>& check_ids, bool strict,
                               std::size_t cap = kDefaultPermanentCap) {
    for (const std::string& id : check_ids) {
        // Fail fast on a typo before grinding through the corpus.
        if (std::find(all_check_ids().begin(), all_check_ids().end(), id) ==
            all_check_ids().end()) {
            throw MalformedInput("unknown check id \"" + id + "\"");
        }
    }
    ScanSummary summary;
    summary.records = records.size();
    for (const std::string& id : check_ids) {
        summary.checks[id] = CheckCounts{};
    }

    struct RecordResult {
        bool parsed = false;
        std::string error;
        std::vector<bool> holds;
    };
    const auto results = detail::parallel_map(records, [&](const CorpusRecord& record) {
        RecordResult result;
        Graph g;
        try {
            g = Graph::from_graph6(record.text);
            result.parsed = true;
        } catch (const MalformedGraph6& e) {
            if (strict) {
                throw MalformedGraph6("line " + std::to_string(record.line_number) + ": " +
                                      e.what());
            }
            result.error = e.what();
            return result;
        }
        result.holds.reserve(check_ids.size());
        for (const std::string& id : check_ids) {
            result.holds.push_back(detail::run_check(id, g, cap));
        }
        return result;
    });

    for (std::size_t i = 0; i < records.size(); ++i) {
        const RecordResult& result = results[i];
        if (!result.parsed) {
            summary.malformed.emplace_back(records[i].line_number, result.error);
            continue;
        }
        ++summary.parsed;
        for (std::size_t c = 0; c < check_ids.size(); ++c) {
            if (result.holds[c]) {
                ++summary.checks[check_ids[c]].passed;
            } else {
                ++summary.checks[check_ids[c]].failed;
                summary.failures.push_back({check_ids[c], records[i].text});
            }
        }
    }
    return summary;
}

enum class DeckFilter { All, EdgesEqualVertices, EdgesLessThanVertices };

struct CollisionMember {
    std::string graph6;
    Poly polynomial;
};

/// Graphs sharing an identical deck multiset. "Separating" means they also
/// share the full polynomial, i.e. the deck did not conflate distinct
/// polynomials; a non-separating group is a genuine collision.
struct CollisionGroup {
    std::string deck_key;
    std::vector<CollisionMember> members;
    bool separating = true;
};

struct CollisionProbeResult {
    std::size_t records = 0;
    std::size_t considered = 0;  // records surviving the m-vs-n filter
    std::vector<std::pair<std::size_t, std::string>> malformed;
    std::vector<CollisionGroup> groups;  // only groups with >= 2 members
};

namespace detail {

inline std::string poly_key(const Poly& p) {
    std::string out;
    for (const std::string& c : coefficient_strings(p)) {
        out += c;
        out += ',';
    }
    return out;
}

/// Canonical serialization of (kind, n, m, sorted deck multisets); two decks
/// compare equal exactly when their keys do.
inline std::string deck_key(const DeckBundle& bundle) {
    std::vector<std::string> edge_keys;
    edge_keys.reserve(bundle.edge_polys.size());
    for (const Poly& p : bundle.edge_polys) {
        edge_keys.push_back(poly_key(p));
    }
    std::sort(edge_keys.begin(), edge_keys.end());
    std::string key = "kind=" + to_string(bundle.kind) + ";n=" + std::to_string(bundle.n) +
                      ";m=" + std::to_string(bundle.m) + ";edges=";
    for (const std::string& k : edge_keys) {
        key += k;
        key += '|';
    }
    if (bundle.pair_polys.has_value()) {
        std::vector<std::string> pair_keys;
        pair_keys.reserve(bundle.pair_polys->size());
        for (const Poly& p : *bundle.pair_polys) {
            pair_keys.push_back(poly_key(p));
        }
        std::sort(pair_keys.begin(), pair_keys.end());
        key += ";pairs=";
        for (const std::string& k : pair_keys) {
            key += k;
            key += '|';
        }
    }
    return key;
}

}  // namespace detail

/// Groups the corpus by deck multiset and reports every group with at least
/// two members. A colliding group (same deck, different polynomial) is the
/// interesting find; output is sorted by deck key and therefore independent
/// of both corpus order and worker count.
inline CollisionProbeResult collision_probe(const std::vector<CorpusRecord>& records,
                                            SigmaKind kind, DeckFilter filter, bool strict,
                                            std::size_t cap = kDefaultPermanentCap) {
    CollisionProbeResult result;
    result.records = records.size();

    struct RecordResult {
        bool parsed = false;
        std::string error;
        bool considered = false;
        std::string key;
        Poly polynomial;
    };
    const auto per_record = detail::parallel_map(records, [&](const CorpusRecord& record) {
        RecordResult out;
        Graph g;
        try {
            g = Graph::from_graph6(record.text);
            out.parsed = true;
        } catch (const MalformedGraph6& e) {
            if (strict) {
                throw MalformedGraph6("line " + std::to_string(record.line_number) + ": " +
                                      e.what());
            }
            out.error = e.what();
            return out;
        }
        const std::size_t n = g.vertex_count();
        const std::size_t m = g.edge_count();
        if ((filter == DeckFilter::EdgesEqualVertices && m != n) ||
            (filter == DeckFilter::EdgesLessThanVertices && m >= n)) {
            return out;
        }
        out.considered = true;
        out.key = detail::deck_key(make_deck(g, kind, cap));
        out.polynomial = sigma(kind, g, cap);
        return out;
    });

    std::map<std::string, CollisionGroup> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RecordResult& r = per_record[i];
        if (!r.parsed) {
            result.malformed.emplace_back(records[i].line_number, r.error);
            continue;
        }
        if (!r.considered) {
            continue;
        }
        ++result.considered;
        CollisionGroup& group = groups[r.key];
        group.deck_key = r.key;
        group.members.push_back({records[i].text, r.polynomial});
    }
    for (auto& [key, group] : groups) {
        if (group.members.size() < 2) {
            continue;
        }
        group.separating = true;
        for (const CollisionMember& member : group.members) {
            if (member.polynomial != group.members.front().polynomial) {
                group.separating = false;
            }
        }
        result.groups.push_back(std::move(group));
    }
    return result;
}

}  // namespace gpoly
