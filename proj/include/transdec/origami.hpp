#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace transdec {

/// A 5-colouring of the dodecahedron's 30 edges: every colour class is a
/// matching of 6 edges.
struct Coloring {
    Graph graph;
    std::map<Edge, int> color_of;
    std::array<std::string, 5> color_names{"red", "yellow", "green", "blue", "purple"};
};

namespace detail {

inline void check_coloring(const Coloring& c) {
    std::array<int, 5> class_size{};
    std::map<std::pair<int, int>, int> seen; // (vertex, color) -> count
    for (const auto& [u, v] : c.graph.edges) {
        auto it = c.color_of.find({u, v});
        if (it == c.color_of.end() || it->second < 0 || it->second > 4)
            throw internal_error("coloring: edge without a valid colour");
        ++class_size[static_cast<std::size_t>(it->second)];
        if (++seen[{u, it->second}] > 1 || ++seen[{v, it->second}] > 1)
            throw internal_error("coloring: two edges of one colour share a vertex");
    }
    for (int s : class_size)
        if (s != 6) throw internal_error("coloring: colour class is not of size 6");
    if (c.color_of.size() != c.graph.edges.size())
        throw internal_error("coloring: colour map does not match the edge set");
}

} // namespace detail

/// The full pipeline: GP(10,2), antipodal quotient, identification with the
/// Kneser-labelled Petersen graph, pullback of the Q_a partition, lift through
/// the rotation group, verification. The part pulled back from Q_a gets colour
/// index a-1.
inline std::pair<Coloring, VerificationReport> build_dodecahedron_coloring() {
    Graph gamma = generalized_petersen(10, 2);
    BlockSystem blocks = antipodal_blocks_gp10_2();
    Graph quot = quotient(gamma, blocks);
    Graph delta = kneser_petersen();

    auto phi = isomorphism(quot, delta);
    if (!phi) throw internal_error("pipeline: antipodal quotient is not a Petersen graph");

    // Pull the Q_a partition back through phi to the quotient's vertex numbering.
    EdgePartition qa = petersen_Qa_partition();
    auto delta_lookup = qa.edge_to_part();
    std::vector<EdgeSet> pulled(qa.size());
    for (const auto& [x, y] : quot.edges) {
        int p = delta_lookup.at(make_edge((*phi)[static_cast<std::size_t>(x)],
                                          (*phi)[static_cast<std::size_t>(y)]));
        pulled[static_cast<std::size_t>(p)].insert({x, y});
    }
    // Part order may change under canonicalization; names track the colours.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < qa.size(); ++i) names.push_back(qa.names[i]);
    EdgePartition quotient_partition(quot, std::move(pulled), std::move(names));

    PermGroup aut = automorphism_group(gamma);
    PermGroup rotation = derived_subgroup(aut);
    if (rotation.order() != 60) rotation = aut; // documented fallback

    EdgePartition lifted = lift(gamma, blocks, quotient_partition, rotation);
    VerificationReport report = verify(lifted, rotation);
    if (!report.ok() || report.max_subgraph_valency != 1)
        throw internal_error("pipeline: lifted decomposition failed verification");

    Coloring coloring;
    coloring.graph = gamma;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        int color = lifted.names[i].at(1) - '1'; // "Qa" -> a-1
        for (const auto& e : lifted.parts[i]) coloring.color_of[e] = color;
    }
    detail::check_coloring(coloring);
    return {std::move(coloring), std::move(report)};
}

/// { "n": 20, "edges": [{"u":..,"v":..,"color":..}, ...] } sorted by edge.
/// Serialized by hand so the byte stream is pinned.
inline std::string export_coloring_json(const Coloring& c) {
    std::ostringstream out;
    out << "{\"n\": " << c.graph.n << ", \"edges\": [";
    bool first = true;
    for (const auto& [u, v] : c.graph.edges) {
        if (!first) out << ", ";
        first = false;
        out << "{\"u\": " << u << ", \"v\": " << v << ", \"color\": " << c.color_of.at({u, v})
            << "}";
    }
    out << "]}\n";
    return out.str();
}

inline std::string export_coloring_dot(const Coloring& c) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& [u, v] : c.graph.edges)
        out << "  " << u << " -- " << v << " [color=\""
            << c.color_names[static_cast<std::size_t>(c.color_of.at({u, v}))] << "\"];\n";
    out << "}\n";
    return out.str();
}

inline std::string export_coloring(const Coloring& c, const std::string& format) {
    if (format == "json") return export_coloring_json(c);
    if (format == "dot") return export_coloring_dot(c);
    throw input_error("export_coloring: unknown format '" + format + "'");
}

} // namespace transdec
