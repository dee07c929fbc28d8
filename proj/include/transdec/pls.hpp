#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace transdec {

/// Points {0..m-1} with a set of lines (point sets). Lines are kept sorted,
/// and the line list itself is sorted lexicographically.
struct PartialLinearSpace {
    int points = 0;
    std::vector<std::vector<int>> lines;

    PartialLinearSpace() = default;

    PartialLinearSpace(int m, std::vector<std::vector<int>> ls) : points(m), lines(std::move(ls)) {
        for (auto& line : lines) {
            std::sort(line.begin(), line.end());
            line.erase(std::unique(line.begin(), line.end()), line.end());
        }
        std::sort(lines.begin(), lines.end());
    }
};

struct PlsValidity {
    bool ok = false;
    std::string witness;
};

/// Valid iff there are at least two lines, every line has >= 2 in-range
/// points, and no pair of points lies in two lines.
inline PlsValidity is_partial_linear_space(int points, const std::vector<std::vector<int>>& lines) {
    if (lines.size() < 2) return {false, "fewer than two lines"};
    std::map<std::pair<int, int>, std::size_t> pair_line;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::set<int> line(lines[i].begin(), lines[i].end());
        if (line.size() < 2) return {false, "line " + std::to_string(i) + " has fewer than 2 points"};
        for (int p : line)
            if (p < 0 || p >= points)
                return {false, "line " + std::to_string(i) + " has out-of-range point " +
                                   std::to_string(p)};
        for (auto a = line.begin(); a != line.end(); ++a)
            for (auto b = std::next(a); b != line.end(); ++b) {
                auto [it, fresh] = pair_line.insert({{*a, *b}, i});
                if (!fresh)
                    return {false, "pair {" + std::to_string(*a) + "," + std::to_string(*b) +
                                       "} lies in lines " + std::to_string(it->second) + " and " +
                                       std::to_string(i)};
            }
    }
    return {true, ""};
}

struct LineTransitivity {
    bool ok = false;
    std::string witness;
};

/// True iff each generator maps every line setwise to a line and the induced
/// action on line indices is transitive.
inline LineTransitivity is_line_transitive(const PartialLinearSpace& space,
                                           const PermGroup& group) {
    if (group.degree != space.points)
        throw input_error("is_line_transitive: group degree does not match point count");
    auto check = is_partial_linear_space(space.points, space.lines);
    if (!check.ok) throw input_error("is_line_transitive: invalid space: " + check.witness);

    std::map<std::vector<int>, int> line_index;
    for (std::size_t i = 0; i < space.lines.size(); ++i)
        line_index[space.lines[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> index_maps;
    for (const auto& g : group.generators) {
        std::vector<int> m(space.lines.size());
        for (std::size_t i = 0; i < space.lines.size(); ++i) {
            std::vector<int> image;
            for (int p : space.lines[i]) image.push_back(g(p));
            std::sort(image.begin(), image.end());
            auto it = line_index.find(image);
            if (it == line_index.end())
                return {false, "generator " + to_string(g) + " maps line " + std::to_string(i) +
                                   " to a non-line"};
            m[i] = it->second;
        }
        index_maps.push_back(std::move(m));
    }
    std::set<int> reached{0};
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int l = frontier.front();
        frontier.pop_front();
        for (const auto& m : index_maps) {
            int l2 = m[static_cast<std::size_t>(l)];
            if (reached.insert(l2).second) frontier.push_back(l2);
        }
    }
    if (reached.size() != space.lines.size()) {
        int missing = 0;
        while (reached.count(missing)) ++missing;
        return {false, "line 0 cannot be mapped to line " + std::to_string(missing)};
    }
    return {true, ""};
}

/// Graph on the point set with an edge per collinear pair, one part P_l per
/// line. Every part's subgraph is complete by construction; that property is
/// still re-checked before returning.
inline std::pair<Graph, EdgePartition> to_decomposition(const PartialLinearSpace& space) {
    auto check = is_partial_linear_space(space.points, space.lines);
    if (!check.ok) throw input_error("to_decomposition: invalid space: " + check.witness);
    EdgeSet es;
    std::vector<EdgeSet> parts;
    for (const auto& line : space.lines) {
        EdgeSet part;
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t b = a + 1; b < line.size(); ++b)
                part.insert(make_edge(line[a], line[b]));
        es.insert(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    Graph graph(space.points, std::move(es));
    EdgePartition partition(graph, std::move(parts));
    for (const auto& part : partition.parts) {
        std::set<int> vs;
        for (const auto& [u, v] : part) {
            vs.insert(u);
            vs.insert(v);
        }
        for (int u : vs)
            for (int v : vs)
                if (u < v && !part.count({u, v}))
                    throw internal_error("to_decomposition: part subgraph is not complete");
    }
    return {std::move(graph), std::move(partition)};
}

/// Recover the space of a G-transitive decomposition into complete subgraphs:
/// lines are the vertex sets of the part subgraphs.
inline PartialLinearSpace from_decomposition(const Graph& graph, const EdgePartition& partition,
                                             const PermGroup& group) {
    VerificationReport report = verify(partition, group);
    if (!report.ok()) {
        std::string w = !report.is_invariant ? report.invariance_witness
                                             : report.transitivity_witness;
        throw input_error("from_decomposition: not a G-transitive decomposition: " + w);
    }
    std::vector<std::vector<int>> lines;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        std::set<int> vs;
        for (const auto& [u, v] : partition.parts[i]) {
            vs.insert(u);
            vs.insert(v);
        }
        for (int u : vs)
            for (int v : vs)
                if (u < v && !partition.parts[i].count({u, v}))
                    throw hypothesis_error("from_decomposition: part " + partition.part_name(i) +
                                           " is not complete: missing edge {" + std::to_string(u) +
                                           "," + std::to_string(v) + "}");
        lines.emplace_back(vs.begin(), vs.end());
    }
    PartialLinearSpace space(graph.n, std::move(lines));
    auto check = is_partial_linear_space(space.points, space.lines);
    if (!check.ok)
        throw hypothesis_error("from_decomposition: result is not a partial linear space: " +
                               check.witness);
    return space;
}

} // namespace transdec
