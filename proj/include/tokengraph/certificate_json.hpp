#pragma once

#include <json.hpp>

#include "family.hpp"

namespace tokengraph {

// Stable-ordered JSON rendering of a family certificate. Field order is
// fixed so emitted certificates diff cleanly; the schema field is bumped
// on breaking change only.
inline nlohmann::ordered_json certificate_json(const FamilyCertificate& cert) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["k"] = cert.k;
    doc["lambda"] = cert.lambda_g;
    doc["x"] = cert.x;
    doc["y"] = cert.y;
    doc["X"] = cert.source;
    doc["Y"] = cert.target;
    doc["bound"] = cert.bound;
    doc["achieved"] = cert.achieved;
    nlohmann::ordered_json counts;
    counts["outside_neighbors"] = cert.outside_neighbor_counts;
    counts["doubly_adjacent"] = cert.doubly_adjacent_count;
    counts["token_free"] = cert.token_free_count;
    counts["bad"] = cert.bad_count;
    counts["good"] = cert.good_count;
    doc["counts"] = std::move(counts);
    nlohmann::ordered_json families = nlohmann::ordered_json::array();
    for (const auto& member : cert.members) {
        nlohmann::ordered_json entry;
        entry["kind"] = family_kind_name(member.kind);
        entry["configs"] = member.path.configs;
        nlohmann::ordered_json moves = nlohmann::ordered_json::array();
        for (const auto& [from, to] : member.path.moves) moves.push_back({from, to});
        entry["moves"] = std::move(moves);
        families.push_back(std::move(entry));
    }
    doc["families"] = std::move(families);
    return doc;
}

}  // namespace tokengraph
