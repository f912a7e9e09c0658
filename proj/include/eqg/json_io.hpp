#pragma once

// JSON (de)serialization for the wire formats used by the command line tool:
// partitions, rational matrices with their partition basis, fusion elements,
// and empirical moment tables. Exact rationals travel as "p/q" strings.

#include <string>

#include "json.hpp"

#include "eqg/fusion.hpp"
#include "eqg/haarmc.hpp"
#include "eqg/matrix.hpp"
#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

using nlohmann::json;

inline json partition_to_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return json{{"upper", word_str(p.upper)}, {"lower", word_str(p.lower)}, {"blocks", blocks}};
}

inline Partition partition_from_json(const json& j) {
    ColorWord up = word_parse(j.at("upper").get<std::string>());
    ColorWord lo = word_parse(j.at("lower").get<std::string>());
    int n = (int)(up.size() + lo.size());
    std::vector<int> ids(n, -1);
    int bid = 0;
    for (const auto& blk : j.at("blocks")) {
        for (const auto& q : blk) {
            int idx = q.get<int>();
            if (idx < 0 || idx >= n || ids[idx] != -1)
                throw std::invalid_argument("bad partition blocks");
            ids[idx] = bid;
        }
        ++bid;
    }
    for (int v : ids)
        if (v == -1) throw std::invalid_argument("partition blocks must cover all points");
    return Partition(up, lo, std::move(ids));
}

inline json matrix_to_json(const std::vector<Partition>& basis, const QMatrix& m) {
    json jb = json::array();
    for (const auto& p : basis) jb.push_back(partition_to_json(p));
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m(r, c)));
        rows.push_back(row);
    }
    return json{{"basis", jb}, {"rows", rows}};
}

inline json fusion_to_json(const FusionElement& e) {
    json terms = json::array();
    for (const auto& [label, mult] : e.terms)
        terms.push_back(json{{"label", label}, {"multiplicity", mult.get_str()}});
    return json{{"terms", terms}};
}

inline json empirical_to_json(const EmpiricalMoments& em) {
    return json{{"k_max", em.k_max},
                {"t", em.t},
                {"n_samples", em.n_samples},
                {"estimates", em.estimates},
                {"std_errors", em.std_errors}};
}

inline json schema_partition() {
    return json{{"type", "object"},
                {"properties",
                 {{"upper", {{"type", "string"}, {"pattern", "^[ob]*$"}}},
                  {"lower", {{"type", "string"}, {"pattern", "^[ob]*$"}}},
                  {"blocks",
                   {{"type", "array"},
                    {"items", {{"type", "array"}, {"items", {{"type", "integer"}}}}}}}}},
                {"required", {"upper", "lower", "blocks"}}};
}

inline json schema_matrix() {
    return json{{"type", "object"},
                {"properties",
                 {{"basis", {{"type", "array"}, {"items", schema_partition()}}},
                  {"rows",
                   {{"type", "array"},
                    {"items",
                     {{"type", "array"},
                      {"items", {{"type", "string"}, {"description", "exact rational p/q"}}}}}}}}},
                {"required", {"basis", "rows"}}};
}

inline json schema_fusion() {
    return json{{"type", "object"},
                {"properties",
                 {{"terms",
                   {{"type", "array"},
                    {"items",
                     {{"type", "object"},
                      {"properties",
                       {{"label", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
                        {"multiplicity", {{"type", "string"}}}}}}}}}}},
                {"required", {"terms"}}};
}

inline json schema_empirical() {
    return json{{"type", "object"},
                {"properties",
                 {{"k_max", {{"type", "integer"}}},
                  {"t", {{"type", "number"}}},
                  {"n_samples", {{"type", "integer"}}},
                  {"estimates", {{"type", "array"}, {"items", {{"type", "number"}}}}},
                  {"std_errors", {{"type", "array"}, {"items", {{"type", "number"}}}}}}},
                {"required", {"k_max", "t", "n_samples", "estimates", "std_errors"}}};
}

}  // namespace eqg
