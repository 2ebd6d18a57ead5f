// Command-line front end: materialize token graphs, sweep the
// k(lambda-k+1) edge-connectivity bound over graph corpora, emit
// certified edge-disjoint path families, and cross-check connectivity
// values along independent routes.
//
// Exit codes: 0 all checks passed, 1 an invariant or certified check
// failed, 2 usage error (bad spec, bad flags, hypothesis violation).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tokengraph/tokengraph.hpp"

namespace {

using namespace tokengraph;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

TokenConfig parse_config(const std::string& text) {
    TokenConfig config;
    std::istringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad vertex '" + part + "' in configuration");
        config.push_back(v);
    }
    if (config.empty()) throw std::invalid_argument("empty configuration");
    std::sort(config.begin(), config.end());
    return config;
}

int run_build(const std::string& spec, int k, const std::string& format, const std::string& output,
              std::uint64_t seed) {
    Graph g = parse_graph_spec(spec, seed);
    TokenGraph tg = build_token_graph(g, k);
    std::cerr << tg.graph.order() << " vertices, " << tg.graph.size() << " edges\n";
    if (format == "dot") {
        write_output(output, emit_dot(tg.graph, [&](int v) { return config_label(tg.config(v)); }));
    } else if (format == "edges") {
        write_output(output, emit_edge_list(tg.graph));
    } else {
        throw std::invalid_argument("build emits 'dot' or 'edges', not '" + format + "'");
    }
    return 0;
}

int run_verify(const std::vector<std::string>& specs, int k_min, int k_max, const std::string& format,
               const std::string& output, std::uint64_t seed) {
    std::vector<VerificationRecord> records;
    int spec_errors = 0;
    for (const auto& spec : specs) {
        // a failing graph is reported and skipped; the sweep continues
        try {
            Graph g = parse_graph_spec(spec, seed);
            const int hi = std::min(k_max, g.order() - 1);
            for (int k = k_min; k <= hi; ++k) records.push_back(verify_bound(g, k, spec));
        } catch (const std::exception& e) {
            std::cerr << "skipping " << spec << ": " << e.what() << "\n";
            ++spec_errors;
        }
    }
    if (spec_errors > 0 && records.empty()) return 2;
    if (format == "table") {
        write_output(output, render_table(records));
    } else if (format == "csv") {
        write_output(output, render_csv(records));
    } else if (format == "json") {
        write_output(output, records_json(records).dump(2) + "\n");
    } else {
        throw std::invalid_argument("verify emits 'table', 'csv' or 'json', not '" + format + "'");
    }
    for (const auto& rec : records) {
        if (rec.status == BoundStatus::violated) {
            std::cerr << "bound violated on " << rec.graph_label << " with k=" << rec.k << "\n";
            return 1;
        }
    }
    return 0;
}

int run_construct(const std::string& spec, int k, const std::string& x_text, const std::string& y_text,
                  const std::string& output, std::uint64_t seed) {
    Graph g = parse_graph_spec(spec, seed);
    TokenConfig source = parse_config(x_text);
    TokenConfig target = parse_config(y_text);
    TokenGraph tg = build_token_graph(g, k);
    FamilyCertificate cert = construct_family(tg, source, target);
    std::cerr << "achieved " << cert.achieved << " edge-disjoint paths, bound " << cert.bound << "\n";
    write_output(output, certificate_json(cert).dump(2) + "\n");
    return 0;
}

int run_oracle(const std::string& spec, int k, std::uint64_t seed) {
    Graph g = parse_graph_spec(spec, seed);
    OracleReport report = oracle_check(g, k, spec);
    std::cout << render_oracle(report);
    return report.agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"token graphs, their edge-connectivity, and certified edge-disjoint path families"};
    app.require_subcommand(1);

    std::string spec, x_text, y_text;
    std::vector<std::string> specs;
    std::string format_build = "edges", format_verify = "table";
    std::string output = "-";
    int k = 1, k_min = 1, k_max = 4;
    std::uint64_t seed = 0;

    auto* build = app.add_subcommand("build", "materialize a token graph and write it out");
    build->add_option("spec", spec, "graph spec, e.g. cycle:5 or random:8,0.5,3")->required();
    build->add_option("--k", k, "number of tokens")->required();
    build->add_option("--out", format_build, "output format: edges|dot");
    build->add_option("--output", output, "output file, '-' for stdout");
    build->add_option("--seed", seed, "seed for random:n,p specs without one");

    auto* verify = app.add_subcommand("verify", "sweep the k(lambda-k+1) bound over graphs");
    verify->add_option("specs", specs, "graph specs")->required()->expected(-1);
    verify->add_option("--k-min", k_min, "smallest k to test");
    verify->add_option("--k-max", k_max, "largest k to test (capped at n-1)");
    verify->add_option("--out", format_verify, "output format: table|csv|json");
    verify->add_option("--output", output, "output file, '-' for stdout");
    verify->add_option("--seed", seed, "seed for random:n,p specs without one");

    auto* construct = app.add_subcommand("construct", "emit a certified edge-disjoint path family");
    construct->add_option("spec", spec, "graph spec")->required();
    construct->add_option("--k", k, "number of tokens")->required();
    construct->add_option("--X", x_text, "source configuration, e.g. 1,2")->required();
    construct->add_option("--Y", y_text, "target configuration, e.g. 1,3")->required();
    construct->add_option("--output", output, "certificate file, '-' for stdout");
    construct->add_option("--seed", seed, "seed for random:n,p specs without one");

    auto* oracle = app.add_subcommand("oracle", "cross-check lambda of a token graph two ways");
    oracle->add_option("spec", spec, "graph spec")->required();
    oracle->add_option("--k", k, "number of tokens")->required();
    oracle->add_option("--seed", seed, "seed for random:n,p specs without one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(build)) return run_build(spec, k, format_build, output, seed);
        if (app.got_subcommand(verify)) return run_verify(specs, k_min, k_max, format_verify, output, seed);
        if (app.got_subcommand(construct)) return run_construct(spec, k, x_text, y_text, output, seed);
        if (app.got_subcommand(oracle)) return run_oracle(spec, k, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tokengraph::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
