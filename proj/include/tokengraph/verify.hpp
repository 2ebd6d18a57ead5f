#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "connectivity.hpp"
#include "token_graph.hpp"

namespace tokengraph {

// Outcome of checking lambda(F_k(G)) >= k(lambda(G) - k + 1) on one (G, k):
//   holds                the bound holds with room to spare
//   tight                the bound holds with equality
//   hypothesis_violated  k > lambda(G); measured values still reported
//   violated             bound broken under the hypothesis (a bug somewhere)
enum class BoundStatus { holds, tight, hypothesis_violated, violated };

inline const char* bound_status_name(BoundStatus status) {
    switch (status) {
        case BoundStatus::holds: return "holds";
        case BoundStatus::tight: return "tight";
        case BoundStatus::hypothesis_violated: return "hypothesis-violated";
        default: return "VIOLATED";
    }
}

struct VerificationRecord {
    std::string graph_label;
    int n = 0;
    int k = 0;
    int lambda_g = 0;
    int delta_g = 0;
    int kappa_g = 0;
    std::int64_t fk_vertices = 0;
    std::int64_t fk_edges = 0;
    int lambda_fk = 0;
    int delta_fk = 0;
    int bound = 0;
    BoundStatus status = BoundStatus::holds;
};

inline VerificationRecord verify_bound(const Graph& g, int k, const std::string& label) {
    VerificationRecord rec;
    rec.graph_label = label;
    rec.n = g.order();
    rec.k = k;
    rec.lambda_g = edge_connectivity(g);
    rec.delta_g = min_degree(g);
    rec.kappa_g = vertex_connectivity(g);
    TokenGraph tg = build_token_graph(g, k);
    rec.fk_vertices = tg.graph.order();
    rec.fk_edges = tg.graph.size();
    rec.lambda_fk = edge_connectivity(tg.graph);
    rec.delta_fk = min_degree(tg.graph);
    rec.bound = k * (rec.lambda_g - k + 1);
    if (k > rec.lambda_g) {
        rec.status = BoundStatus::hypothesis_violated;
    } else if (rec.lambda_fk < rec.bound) {
        rec.status = BoundStatus::violated;
    } else if (rec.lambda_fk == rec.bound) {
        rec.status = BoundStatus::tight;
    } else {
        rec.status = BoundStatus::holds;
    }
    return rec;
}

inline std::string render_table(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(22) << "graph" << std::right << std::setw(4) << "n" << std::setw(4)
        << "k" << std::setw(8) << "la(G)" << std::setw(7) << "de(G)" << std::setw(7) << "ka(G)"
        << std::setw(9) << "la(Fk)" << std::setw(8) << "de(Fk)" << std::setw(7) << "bound"
        << "  status\n";
    for (const auto& rec : records) {
        out << std::left << std::setw(22) << rec.graph_label << std::right << std::setw(4) << rec.n
            << std::setw(4) << rec.k << std::setw(8) << rec.lambda_g << std::setw(7) << rec.delta_g
            << std::setw(7) << rec.kappa_g << std::setw(9) << rec.lambda_fk << std::setw(8)
            << rec.delta_fk << std::setw(7) << rec.bound << "  " << bound_status_name(rec.status)
            << "\n";
    }
    return out.str();
}

inline std::string render_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << "graph,n,k,lambda_g,delta_g,kappa_g,fk_vertices,fk_edges,lambda_fk,delta_fk,bound,status\n";
    for (const auto& rec : records) {
        out << rec.graph_label << "," << rec.n << "," << rec.k << "," << rec.lambda_g << ","
            << rec.delta_g << "," << rec.kappa_g << "," << rec.fk_vertices << "," << rec.fk_edges
            << "," << rec.lambda_fk << "," << rec.delta_fk << "," << rec.bound << ","
            << bound_status_name(rec.status) << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json records_json(const std::vector<VerificationRecord>& records) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json row;
        row["graph"] = rec.graph_label;
        row["n"] = rec.n;
        row["k"] = rec.k;
        row["lambda_g"] = rec.lambda_g;
        row["delta_g"] = rec.delta_g;
        row["kappa_g"] = rec.kappa_g;
        row["fk_vertices"] = rec.fk_vertices;
        row["fk_edges"] = rec.fk_edges;
        row["lambda_fk"] = rec.lambda_fk;
        row["delta_fk"] = rec.delta_fk;
        row["bound"] = rec.bound;
        row["status"] = bound_status_name(rec.status);
        rows.push_back(std::move(row));
    }
    doc["records"] = std::move(rows);
    return doc;
}

// Cross-check report: lambda(F_k(G)) computed along independent routes.
// The adjacent-pairs route must always agree with the standard one; the
// exhaustive-cut route is added when the token graph has at most
// exhaustive_edge_limit edges.
struct OracleReport {
    std::string graph_label;
    int k = 0;
    std::int64_t fk_vertices = 0;
    std::int64_t fk_edges = 0;
    int lambda_standard = 0;
    int lambda_adjacent_pairs = 0;
    std::optional<int> lambda_exhaustive;
    bool agree = false;
};

inline OracleReport oracle_check(const Graph& g, int k, const std::string& label,
                                 std::int64_t max_vertices = 20000, int exhaustive_edge_limit = 25) {
    if (k < 1 || k > g.order() - 1)
        throw std::invalid_argument("token count must satisfy 1 <= k <= n-1");
    if (binomial(g.order(), k) > std::uint64_t(max_vertices))
        throw std::invalid_argument("token graph exceeds the oracle size guard of " +
                                    std::to_string(max_vertices) + " vertices");
    OracleReport report;
    report.graph_label = label;
    report.k = k;
    TokenGraph tg = build_token_graph(g, k);
    report.fk_vertices = tg.graph.order();
    report.fk_edges = tg.graph.size();
    report.lambda_standard = edge_connectivity(tg.graph);
    report.lambda_adjacent_pairs = edge_connectivity_adjacent_pairs(tg.graph);
    report.agree = report.lambda_standard == report.lambda_adjacent_pairs;
    if (tg.graph.size() <= exhaustive_edge_limit) {
        report.lambda_exhaustive = min_edge_cut_exhaustive(tg.graph);
        report.agree = report.agree && *report.lambda_exhaustive == report.lambda_standard;
    }
    return report;
}

inline std::string render_oracle(const OracleReport& report) {
    std::ostringstream out;
    out << report.graph_label << " k=" << report.k << ": |V|=" << report.fk_vertices
        << " |E|=" << report.fk_edges << "\n";
    out << "  lambda via max-flow sweep:     " << report.lambda_standard << "\n";
    out << "  lambda via adjacent pairs:     " << report.lambda_adjacent_pairs << "\n";
    if (report.lambda_exhaustive)
        out << "  lambda via exhaustive cuts:    " << *report.lambda_exhaustive << "\n";
    out << (report.agree ? "  methods agree" : "  METHODS DISAGREE") << "\n";
    return out.str();
}

}  // namespace tokengraph
