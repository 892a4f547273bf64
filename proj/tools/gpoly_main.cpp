// gpoly: exact graph-polynomial computations, deck generation, identity
// verification, polynomial reconstruction from decks, and corpus scans.
//
// Exit codes: 0 success; 1 identity/consistency failure; 2 malformed input;
// 3 reconstruction underdetermined; 4 dimension cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpoly/gpoly.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnderdetermined = 3;
constexpr int kExitCap = 4;

struct Options {
    std::string format = "text";
    std::size_t cap = gpoly::kDefaultPermanentCap;
    bool strict = false;
};

bool json_output(const Options& options) { return options.format == "json"; }

std::string read_argument_or_stdin(const std::string& arg) {
    if (arg != "-") {
        return arg;
    }
    std::string line;
    if (!std::getline(std::cin, line)) {
        throw gpoly::MalformedInput("expected one line on stdin");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

gpoly::Graph load_graph(const std::string& arg) {
    return gpoly::Graph::from_graph6(read_argument_or_stdin(arg));
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw gpoly::MalformedInput("cannot open \"" + path + "\"");
    }
    return in;
}

/// Weight files: one "s t weight" triple per line, 0-based endpoints,
/// rational weights; '#' starts a comment. Must cover exactly the edges.
gpoly::WeightedGraph load_weighted(const gpoly::Graph& g, const std::string& path) {
    std::ifstream in = open_file(path);
    std::map<gpoly::Edge, gpoly::Rat> by_edge;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::size_t s, t;
        std::string weight;
        if (!(fields >> s)) {
            continue;  // blank
        }
        if (!(fields >> t >> weight)) {
            throw gpoly::MalformedInput("weights line " + std::to_string(line_number) +
                                        ": expected \"s t weight\"");
        }
        std::string extra;
        if (fields >> extra) {
            throw gpoly::MalformedInput("weights line " + std::to_string(line_number) +
                                        ": trailing fields");
        }
        const gpoly::Edge e = gpoly::make_edge(s, t);
        if (!g.has_edge(e.first, e.second)) {
            throw gpoly::MalformedInput("weights line " + std::to_string(line_number) +
                                        ": no such edge");
        }
        if (by_edge.count(e)) {
            throw gpoly::MalformedInput("weights line " + std::to_string(line_number) +
                                        ": duplicate edge");
        }
        by_edge[e] = gpoly::parse_rat(weight);
    }
    if (by_edge.size() != g.edge_count()) {
        throw gpoly::MalformedInput("weights file covers " + std::to_string(by_edge.size()) +
                                    " edges, graph has " + std::to_string(g.edge_count()));
    }
    std::vector<gpoly::Rat> weights;
    weights.reserve(g.edge_count());
    for (const gpoly::Edge& e : g.edges()) {
        weights.push_back(by_edge.at(e));
    }
    return gpoly::WeightedGraph(g, std::move(weights));
}

void print_polynomial(const Options& options, const gpoly::Json& meta, const gpoly::Poly& p) {
    if (json_output(options)) {
        gpoly::Json out = meta;
        out["polynomial"] = gpoly::poly_to_json(p);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << gpoly::poly_to_json(p).dump() << "\n";
    }
}

int run_compute(const Options& options, const std::string& kind, const std::string& graph_arg,
                const std::optional<std::string>& beta_arg,
                const std::optional<std::string>& gamma_arg,
                const std::optional<std::string>& weights_path) {
    const gpoly::Graph g = load_graph(graph_arg);
    gpoly::Json meta;
    meta["kind"] = kind;
    meta["graph6"] = g.to_graph6();
    if (kind == "tau1" || kind == "tau2") {
        if (!beta_arg || !gamma_arg) {
            throw gpoly::MalformedInput("tau kinds require --beta and --gamma");
        }
        const gpoly::Rat beta = gpoly::parse_rat(*beta_arg);
        const gpoly::Rat gamma = gpoly::parse_rat(*gamma_arg);
        meta["beta"] = gpoly::to_string(beta);
        meta["gamma"] = gpoly::to_string(gamma);
        const gpoly::MatrixFn fn = kind == "tau1" ? gpoly::MatrixFn::Det : gpoly::MatrixFn::Per;
        gpoly::Poly result;
        if (weights_path) {
            result = gpoly::tau(fn, load_weighted(g, *weights_path), beta, gamma, options.cap);
        } else {
            result = gpoly::tau(fn, g, beta, gamma, options.cap);
        }
        print_polynomial(options, meta, result);
        return kExitOk;
    }
    if (beta_arg || gamma_arg || weights_path) {
        throw gpoly::MalformedInput("--beta/--gamma/--weights only apply to tau kinds");
    }
    const gpoly::SigmaKind sigma_kind = gpoly::sigma_kind_from_string(kind);
    print_polynomial(options, meta, gpoly::sigma(sigma_kind, g, options.cap));
    return kExitOk;
}

int run_deck(const Options& options, const std::string& graph_arg, const std::string& kind) {
    const gpoly::Graph g = load_graph(graph_arg);
    const gpoly::DeckBundle bundle =
        gpoly::make_deck(g, gpoly::sigma_kind_from_string(kind), options.cap);
    std::cout << gpoly::deck_to_json(bundle).dump(2) << "\n";
    return kExitOk;
}

void report_sides(const Options& options, const std::string& label, const gpoly::Json& lhs,
                  const gpoly::Json& rhs, bool holds, gpoly::Json& json_parts) {
    if (json_output(options)) {
        gpoly::Json part;
        part["check"] = label;
        part["holds"] = holds;
        part["lhs"] = lhs;
        part["rhs"] = rhs;
        json_parts.push_back(std::move(part));
    } else if (holds) {
        std::cout << label << ": holds\n";
    } else {
        std::cout << label << ": FAILED\n  lhs = " << lhs.dump() << "\n  rhs = " << rhs.dump()
                  << "\n";
    }
}

int run_verify(const Options& options, const std::string& theorem, const std::string& input,
               const std::optional<std::string>& beta_arg,
               const std::optional<std::string>& gamma_arg,
               const std::optional<std::string>& weights_path) {
    gpoly::Json parts = gpoly::Json::array();
    bool all_hold = true;
    const auto scalar_sides = [&](const std::string& label, const gpoly::ScalarIdentity& report) {
        all_hold = all_hold && report.holds;
        report_sides(options, label, gpoly::to_string(report.lhs), gpoly::to_string(report.rhs),
                     report.holds, parts);
    };
    const auto poly_sides = [&](const std::string& label, const gpoly::PolyIdentity& report) {
        all_hold = all_hold && report.holds;
        report_sides(options, label, gpoly::poly_to_json(report.lhs),
                     gpoly::poly_to_json(report.rhs), report.holds, parts);
    };

    if (theorem == "2.1" || theorem == "2.2" || theorem == "2.3" || theorem == "2.4") {
        gpoly::RatMatrix x;
        if (input == "-") {
            x = gpoly::matrix_from_stream(std::cin);
        } else {
            std::ifstream in = open_file(input);
            x = gpoly::matrix_from_stream(in);
        }
        if (theorem == "2.1") {
            scalar_sides("det masking identity", gpoly::verify_det_identity(x));
        } else if (theorem == "2.2") {
            scalar_sides("per masking identity", gpoly::verify_perm_identity(x, options.cap));
        } else if (theorem == "2.3") {
            const auto report = gpoly::verify_det_identity_sparse(x);
            all_hold = all_hold && report.holds;
            report_sides(options, "det masking identity (nonzero support)",
                         gpoly::to_string(report.lhs), gpoly::to_string(report.rhs), report.holds,
                         parts);
        } else {
            const auto report = gpoly::verify_perm_identity_sparse(x, options.cap);
            all_hold = all_hold && report.holds;
            report_sides(options, "per masking identity (nonzero support)",
                         gpoly::to_string(report.lhs), gpoly::to_string(report.rhs), report.holds,
                         parts);
        }
    } else if (theorem == "3.1" || theorem == "3.1w") {
        if (!beta_arg || !gamma_arg) {
            throw gpoly::MalformedInput("--theorem " + theorem + " requires --beta and --gamma");
        }
        const gpoly::Rat beta = gpoly::parse_rat(*beta_arg);
        const gpoly::Rat gamma = gpoly::parse_rat(*gamma_arg);
        const gpoly::Graph g = load_graph(input);
        if (theorem == "3.1") {
            poly_sides("tau1 differential identity",
                       gpoly::verify_tau_identity(gpoly::MatrixFn::Det, g, beta, gamma,
                                                  options.cap));
            poly_sides("tau2 differential identity",
                       gpoly::verify_tau_identity(gpoly::MatrixFn::Per, g, beta, gamma,
                                                  options.cap));
        } else {
            if (!weights_path) {
                throw gpoly::MalformedInput("--theorem 3.1w requires --weights");
            }
            const gpoly::WeightedGraph wg = load_weighted(g, *weights_path);
            poly_sides("weighted tau1 differential identity",
                       gpoly::verify_tau_identity_weighted(gpoly::MatrixFn::Det, wg, beta, gamma,
                                                           options.cap));
            poly_sides("weighted tau2 differential identity",
                       gpoly::verify_tau_identity_weighted(gpoly::MatrixFn::Per, wg, beta, gamma,
                                                           options.cap));
        }
    } else if (theorem == "3.3") {
        const gpoly::Graph g = load_graph(input);
        poly_sides("sigma1 differential identity",
                   gpoly::verify_sigma_identity(gpoly::SigmaKind::Sigma1, g, options.cap));
        poly_sides("sigma4 differential identity",
                   gpoly::verify_sigma_identity(gpoly::SigmaKind::Sigma4, g, options.cap));
    } else if (theorem == "3.4") {
        const gpoly::Graph g = load_graph(input);
        poly_sides("sigma2 differential identity",
                   gpoly::verify_sigma_identity(gpoly::SigmaKind::Sigma2, g, options.cap));
        poly_sides("sigma3 differential identity",
                   gpoly::verify_sigma_identity(gpoly::SigmaKind::Sigma3, g, options.cap));
    } else {
        throw gpoly::MalformedInput("unknown theorem id \"" + theorem + "\"");
    }

    if (json_output(options)) {
        gpoly::Json out;
        out["theorem"] = theorem;
        out["holds"] = all_hold;
        out["checks"] = std::move(parts);
        std::cout << out.dump(2) << "\n";
    }
    return all_hold ? kExitOk : kExitFailure;
}

int run_reconstruct(const std::string& input) {
    gpoly::DeckBundle bundle;
    if (input == "-") {
        bundle = gpoly::deck_from_stream(std::cin);
    } else {
        std::ifstream in = open_file(input);
        bundle = gpoly::deck_from_stream(in);
    }
    const gpoly::ReconstructionReport report = gpoly::solve(bundle);
    std::cout << gpoly::report_to_json(report).dump(2) << "\n";
    switch (report.status) {
        case gpoly::ReconstructionStatus::Unique:
            return kExitOk;
        case gpoly::ReconstructionStatus::Underdetermined:
            return kExitUnderdetermined;
        case gpoly::ReconstructionStatus::Inconsistent:
            return kExitFailure;
    }
    return kExitFailure;
}

int run_scan(const Options& options, const std::string& path, const std::string& mode,
             std::vector<std::string> checks, const std::string& kind,
             const std::string& filter_name) {
    std::ifstream in = open_file(path);
    const std::vector<gpoly::CorpusRecord> records = gpoly::read_graph6_records(in);

    if (mode == "verify") {
        if (checks.empty()) {
            checks = gpoly::all_check_ids();
        }
        const gpoly::ScanSummary summary =
            gpoly::scan_verify(records, checks, options.strict, options.cap);
        if (json_output(options)) {
            gpoly::Json out;
            out["mode"] = "verify";
            out["records"] = summary.records;
            out["parsed"] = summary.parsed;
            gpoly::Json malformed = gpoly::Json::array();
            for (const auto& [line, message] : summary.malformed) {
                malformed.push_back({{"line", line}, {"error", message}});
            }
            out["malformed"] = std::move(malformed);
            gpoly::Json check_counts = gpoly::Json::object();
            for (const auto& [id, counts] : summary.checks) {
                check_counts[id] = {{"passed", counts.passed}, {"failed", counts.failed}};
            }
            out["checks"] = std::move(check_counts);
            gpoly::Json failures = gpoly::Json::array();
            for (const gpoly::ScanFailure& f : summary.failures) {
                failures.push_back({{"check", f.check}, {"graph6", f.graph6}});
            }
            out["failures"] = std::move(failures);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "records " << summary.records << ", parsed " << summary.parsed
                      << ", malformed " << summary.malformed.size() << "\n";
            for (const auto& [line, message] : summary.malformed) {
                std::cout << "  line " << line << ": " << message << "\n";
            }
            for (const auto& [id, counts] : summary.checks) {
                std::cout << "check " << id << ": passed " << counts.passed << ", failed "
                          << counts.failed << "\n";
            }
            for (const gpoly::ScanFailure& f : summary.failures) {
                std::cout << "FAILED " << f.check << " on " << f.graph6 << "\n";
            }
        }
        return summary.failures.empty() ? kExitOk : kExitFailure;
    }

    if (mode != "collide") {
        throw gpoly::MalformedInput("unknown scan mode \"" + mode + "\"");
    }
    gpoly::DeckFilter filter = gpoly::DeckFilter::All;
    if (filter_name == "m=n") {
        filter = gpoly::DeckFilter::EdgesEqualVertices;
    } else if (filter_name == "m<n") {
        filter = gpoly::DeckFilter::EdgesLessThanVertices;
    } else if (filter_name != "all") {
        throw gpoly::MalformedInput("unknown filter \"" + filter_name + "\"");
    }
    const gpoly::CollisionProbeResult probe = gpoly::collision_probe(
        records, gpoly::sigma_kind_from_string(kind), filter, options.strict, options.cap);
    std::size_t colliding = 0;
    for (const gpoly::CollisionGroup& group : probe.groups) {
        if (!group.separating) {
            ++colliding;
        }
    }
    if (json_output(options)) {
        gpoly::Json out;
        out["mode"] = "collide";
        out["kind"] = kind;
        out["filter"] = filter_name;
        out["records"] = probe.records;
        out["considered"] = probe.considered;
        gpoly::Json malformed = gpoly::Json::array();
        for (const auto& [line, message] : probe.malformed) {
            malformed.push_back({{"line", line}, {"error", message}});
        }
        out["malformed"] = std::move(malformed);
        out["groups_with_shared_deck"] = probe.groups.size();
        out["colliding_groups"] = colliding;
        gpoly::Json groups = gpoly::Json::array();
        for (const gpoly::CollisionGroup& group : probe.groups) {
            gpoly::Json members = gpoly::Json::array();
            for (const gpoly::CollisionMember& member : group.members) {
                members.push_back({{"graph6", member.graph6},
                                   {"polynomial", gpoly::poly_to_json(member.polynomial)}});
            }
            groups.push_back({{"separating", group.separating}, {"members", std::move(members)}});
        }
        out["groups"] = std::move(groups);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "records " << probe.records << ", considered " << probe.considered
                  << ", malformed " << probe.malformed.size() << "\n";
        std::cout << "groups with shared deck: " << probe.groups.size() << " (colliding: "
                  << colliding << ")\n";
        for (const gpoly::CollisionGroup& group : probe.groups) {
            std::cout << (group.separating ? "separating:" : "COLLIDING:");
            for (const gpoly::CollisionMember& member : group.members) {
                std::cout << " " << member.graph6;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graph polynomials: compute, deck, verify, reconstruct, scan"};
    app.require_subcommand(1);

    Options options;
    if (const char* env_cap = std::getenv("GPOLY_PERMANENT_CAP")) {
        try {
            const long parsed = std::stol(env_cap);
            if (parsed < 0) {
                throw std::invalid_argument("negative");
            }
            options.cap = std::size_t(parsed);
        } catch (const std::exception&) {
            std::cerr << "invalid GPOLY_PERMANENT_CAP \"" << env_cap << "\"\n";
            return kExitParse;
        }
    }
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap", options.cap,
                   "Max matrix dimension for permanent-type computations")
        ->capture_default_str();
    app.add_flag("--strict", options.strict, "Abort on malformed corpus records");

    std::string kind, graph_arg, input, theorem, mode = "verify", filter_name = "all";
    std::string deck_kind = "sigma1", collide_kind = "sigma1";
    std::optional<std::string> beta_arg, gamma_arg, weights_path;
    std::vector<std::string> checks;

    CLI::App* compute = app.add_subcommand("compute", "Compute a graph polynomial");
    compute->fallthrough();
    compute->add_option("kind", kind, "sigma1..sigma4, tau1 or tau2")->required();
    compute->add_option("graph", graph_arg, "graph6 record, or - for stdin")->required();
    compute->add_option("--beta", beta_arg, "Rational beta (tau kinds)");
    compute->add_option("--gamma", gamma_arg, "Rational gamma (tau kinds)");
    compute->add_option("--weights", weights_path, "Edge-weight file (tau kinds)");

    CLI::App* deck = app.add_subcommand("deck", "Emit the deck polynomials as JSON");
    deck->fallthrough();
    deck->add_option("graph", graph_arg, "graph6 record, or - for stdin")->required();
    deck->add_option("--kind", deck_kind, "sigma1..sigma4")->required();

    CLI::App* verify = app.add_subcommand("verify", "Check one identity on one input");
    verify->fallthrough();
    verify
        ->add_option("--theorem", theorem,
                     "2.1|2.2|2.3|2.4 (matrix file), 3.1|3.1w (graph + beta/gamma), 3.3|3.4 "
                     "(graph)")
        ->required();
    verify->add_option("input", input, "matrix JSON file or graph6 record (- for stdin)")
        ->required();
    verify->add_option("--beta", beta_arg, "Rational beta");
    verify->add_option("--gamma", gamma_arg, "Rational gamma");
    verify->add_option("--weights", weights_path, "Edge-weight file");

    CLI::App* reconstruct = app.add_subcommand("reconstruct", "Solve a deck file");
    reconstruct->fallthrough();
    reconstruct->add_option("deck", input, "deck JSON file, or - for stdin")->required();

    CLI::App* scan = app.add_subcommand("scan", "Batch-process a graph6 corpus");
    scan->fallthrough();
    scan->add_option("corpus", input, "newline-separated graph6 file")->required();
    scan->add_option("--mode", mode, "verify or collide")
        ->check(CLI::IsMember({"verify", "collide"}))
        ->capture_default_str();
    scan->add_option("--checks", checks, "Check ids for verify mode (default: all)")
        ->delimiter(',');
    scan->add_option("--kind", collide_kind, "Deck kind for collide mode")
        ->capture_default_str();
    scan->add_option("--filter", filter_name, "all, m=n or m<n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (compute->parsed()) {
            return run_compute(options, kind, graph_arg, beta_arg, gamma_arg, weights_path);
        }
        if (deck->parsed()) {
            return run_deck(options, graph_arg, deck_kind);
        }
        if (verify->parsed()) {
            return run_verify(options, theorem, input, beta_arg, gamma_arg, weights_path);
        }
        if (reconstruct->parsed()) {
            return run_reconstruct(input);
        }
        if (scan->parsed()) {
            return run_scan(options, input, mode, checks, collide_kind, filter_name);
        }
    } catch (const gpoly::DimensionTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const gpoly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
