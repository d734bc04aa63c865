#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "forestconc/graph.hpp"

namespace forestconc {

/// On-disk graph: {"n": int, "edges": [[u,v],...]} with 0-based vertices and
/// optional unique "labels". Edge order in the file is irrelevant.
struct GraphFile {
    Graph graph;
    std::optional<std::vector<std::string>> labels;
};

inline GraphFile parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph file: expected object with \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph file: each edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GraphFile gf;
    gf.graph = Graph(n, std::move(edges));  // rejects self-loops, duplicates, out-of-range
    if (j.contains("labels")) {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != n)
            throw std::runtime_error("graph file: labels length must equal n");
        std::set<std::string> uniq(labels.begin(), labels.end());
        if (uniq.size() != labels.size())
            throw std::runtime_error("graph file: labels must be unique");
        gf.labels = std::move(labels);
    }
    return gf;
}

inline GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("graph file: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("graph file: " + path + ": " + e.what());
    }
    return parse_graph_json(j);
}

inline nlohmann::json graph_to_json(const GraphFile& gf) {
    nlohmann::json j;
    j["n"] = gf.graph.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : gf.graph.edges()) j["edges"].push_back({u, v});
    if (gf.labels) j["labels"] = *gf.labels;
    return j;
}

inline void save_graph_file(const GraphFile& gf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("graph file: cannot write " + path);
    out << graph_to_json(gf).dump(2) << "\n";
}

}  // namespace forestconc
