#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blocks.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "pls.hpp"

namespace transdec {

using json = nlohmann::json;

inline json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

// ---- Graph: { "n": int, "edges": [[u,v],...], "labels": optional [str,...] }

inline Graph graph_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        EdgeSet es;
        for (const auto& e : j.at("edges"))
            es.insert(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return Graph(n, std::move(es), std::move(labels));
    } catch (const json::exception& e) {
        throw input_error(std::string("graph file: ") + e.what());
    }
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

// ---- BlockSystem: { "blocks": [[v,...],...] }

inline BlockSystem blocks_from_json(const json& j) {
    try {
        std::vector<std::set<int>> bs;
        for (const auto& b : j.at("blocks")) bs.emplace_back(b.begin(), b.end());
        return BlockSystem(std::move(bs));
    } catch (const json::exception& e) {
        throw input_error(std::string("block system file: ") + e.what());
    }
}

inline json blocks_to_json(const BlockSystem& b) {
    json j;
    j["blocks"] = json::array();
    for (const auto& block : b.blocks) j["blocks"].push_back(std::vector<int>(block.begin(), block.end()));
    return j;
}

// ---- PermGroup: { "degree": n, "generators": [[images...],...] }

inline PermGroup group_from_json(const json& j) {
    try {
        int degree = j.at("degree").get<int>();
        std::vector<Permutation> gens;
        for (const auto& g : j.at("generators")) {
            Permutation p(g.get<std::vector<int>>());
            if (p.degree() != degree) throw input_error("group file: generator degree mismatch");
            gens.push_back(std::move(p));
        }
        return PermGroup(std::move(gens));
    } catch (const json::exception& e) {
        throw input_error(std::string("group file: ") + e.what());
    }
}

inline json group_to_json(const PermGroup& g) {
    json j;
    j["degree"] = g.degree;
    j["generators"] = json::array();
    for (const auto& p : g.generators) j["generators"].push_back(p.img);
    return j;
}

// ---- EdgePartition: { "parts": [{ "name": optional, "edges": [[u,v],...] },...] }
// Edges are validated against the companion graph.

inline EdgePartition partition_from_json(const json& j, const Graph& graph) {
    try {
        std::vector<EdgeSet> parts;
        std::vector<std::string> names;
        bool any_name = false;
        for (const auto& p : j.at("parts")) {
            EdgeSet part;
            for (const auto& e : p.at("edges"))
                part.insert(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
            parts.push_back(std::move(part));
            if (p.contains("name")) {
                names.push_back(p.at("name").get<std::string>());
                any_name = true;
            } else {
                names.push_back("part " + std::to_string(parts.size() - 1));
            }
        }
        if (!any_name) names.clear();
        return EdgePartition(graph, std::move(parts), std::move(names));
    } catch (const json::exception& e) {
        throw input_error(std::string("partition file: ") + e.what());
    }
}

inline json partition_to_json(const EdgePartition& p) {
    json j;
    j["parts"] = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json part;
        if (!p.names.empty()) part["name"] = p.names[i];
        part["edges"] = json::array();
        for (const auto& [u, v] : p.parts[i]) part["edges"].push_back({u, v});
        j["parts"].push_back(std::move(part));
    }
    return j;
}

// ---- PartialLinearSpace: { "points": m, "lines": [[p,...],...] }

inline PartialLinearSpace space_from_json(const json& j) {
    try {
        int points = j.at("points").get<int>();
        std::vector<std::vector<int>> lines;
        for (const auto& l : j.at("lines")) lines.push_back(l.get<std::vector<int>>());
        return PartialLinearSpace(points, std::move(lines));
    } catch (const json::exception& e) {
        throw input_error(std::string("space file: ") + e.what());
    }
}

inline json space_to_json(const PartialLinearSpace& s) {
    json j;
    j["points"] = s.points;
    j["lines"] = s.lines;
    return j;
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["is_partition"] = r.is_partition;
    j["is_invariant"] = r.is_invariant;
    j["is_transitive"] = r.is_transitive;
    j["max_subgraph_valency"] = r.max_subgraph_valency;
    if (!r.invariance_witness.empty()) j["invariance_witness"] = r.invariance_witness;
    if (!r.transitivity_witness.empty()) j["transitivity_witness"] = r.transitivity_witness;
    return j;
}

} // namespace transdec
