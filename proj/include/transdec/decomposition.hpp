#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace transdec {

/// A partition of a graph's edge set into named parts. Parts are stored in
/// canonical order (sorted by their least edge) so outputs are deterministic.
struct EdgePartition {
    Graph graph;
    std::vector<EdgeSet> parts;
    std::vector<std::string> names; // empty, or one name per part

    EdgePartition() = default;

    EdgePartition(Graph g, std::vector<EdgeSet> ps, std::vector<std::string> part_names = {})
        : graph(std::move(g)), parts(std::move(ps)), names(std::move(part_names)) {
        if (!names.empty() && names.size() != parts.size())
            throw input_error("edge partition: name count does not match part count");
        std::size_t total = 0;
        for (const auto& p : parts) {
            if (p.empty()) throw input_error("edge partition: empty part");
            for (const auto& e : p) {
                if (!graph.edges.count(e))
                    throw input_error("edge partition: part contains a non-edge");
                ++total;
            }
        }
        EdgeSet seen;
        for (const auto& p : parts) seen.insert(p.begin(), p.end());
        if (total != graph.edges.size() || seen != graph.edges)
            throw input_error("edge partition: parts do not partition the edge set");
        canonicalize();
    }

    std::size_t size() const { return parts.size(); }

    std::string part_name(std::size_t i) const {
        return names.empty() ? "part " + std::to_string(i) : names[i];
    }

    /// Map from canonical edge to part index.
    std::map<Edge, int> edge_to_part() const {
        std::map<Edge, int> m;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& e : parts[i]) m[e] = static_cast<int>(i);
        return m;
    }

  private:
    void canonicalize() {
        std::vector<std::size_t> idx(parts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return *parts[a].begin() < *parts[b].begin(); });
        std::vector<EdgeSet> ps;
        std::vector<std::string> ns;
        for (std::size_t i : idx) {
            ps.push_back(std::move(parts[i]));
            if (!names.empty()) ns.push_back(std::move(names[i]));
        }
        parts = std::move(ps);
        names = std::move(ns);
    }
};

/// Outcome of mapping each part through an automorphism: either the induced
/// permutation of part indices, or a witness that some part was split.
struct PartActionResult {
    std::optional<std::vector<int>> index_map;
    std::string witness;

    bool ok() const { return index_map.has_value(); }
};

/// Image of each part under g. Succeeds iff every part's edge image is exactly
/// some part.
inline PartActionResult part_action(const EdgePartition& partition, const Permutation& g) {
    if (!is_automorphism(partition.graph, g))
        throw input_error("part_action: permutation is not a graph automorphism");
    auto lookup = partition.edge_to_part();
    std::vector<int> map(partition.size());
    for (std::size_t i = 0; i < partition.size(); ++i) {
        EdgeSet image;
        for (const auto& [u, v] : partition.parts[i]) image.insert(make_edge(g(u), g(v)));
        int j = lookup.at(*image.begin());
        if (image != partition.parts[static_cast<std::size_t>(j)]) {
            // find a second part hit by the image for the witness
            int k = j;
            for (const auto& e : image)
                if (lookup.at(e) != j) {
                    k = lookup.at(e);
                    break;
                }
            PartActionResult r;
            r.witness = "part " + partition.part_name(i) + " is split by " + to_string(g) +
                        " across parts " + partition.part_name(static_cast<std::size_t>(j)) +
                        " and " + partition.part_name(static_cast<std::size_t>(k));
            return r;
        }
        map[i] = j;
    }
    PartActionResult r;
    r.index_map = std::move(map);
    return r;
}

struct VerificationReport {
    bool is_partition = true;   // enforced by EdgePartition construction
    bool is_invariant = false;  // condition (i)
    bool is_transitive = false; // condition (ii)
    int max_subgraph_valency = 0;
    std::string invariance_witness;
    std::string transitivity_witness;

    bool ok() const { return is_partition && is_invariant && is_transitive; }
};

/// Maximum vertex degree within any part's subgraph.
inline int max_part_valency(const EdgePartition& partition) {
    int best = 0;
    for (const auto& part : partition.parts) {
        std::map<int, int> deg;
        for (const auto& [u, v] : part) {
            ++deg[u];
            ++deg[v];
        }
        for (const auto& [_, d] : deg) best = std::max(best, d);
    }
    return best;
}

/// Checks conditions (i) and (ii) of a G-transitive decomposition. Invariance
/// is checked on generators; the part-index action they induce is then used
/// for the transitivity check.
inline VerificationReport verify(const EdgePartition& partition, const PermGroup& group) {
    if (group.degree != partition.graph.n)
        throw input_error("verify: group degree does not match vertex count");
    for (std::size_t i = 0; i < group.generators.size(); ++i)
        if (!is_automorphism(partition.graph, group.generators[i]))
            throw input_error("verify: generator " + std::to_string(i) + " (" +
                              to_string(group.generators[i]) + ") is not a graph automorphism");
    VerificationReport report;
    report.max_subgraph_valency = max_part_valency(partition);

    std::vector<std::vector<int>> index_maps;
    for (const auto& g : group.generators) {
        PartActionResult r = part_action(partition, g);
        if (!r.ok()) {
            report.invariance_witness = r.witness;
            report.transitivity_witness = "not evaluated: partition is not invariant";
            return report;
        }
        index_maps.push_back(std::move(*r.index_map));
    }
    report.is_invariant = true;

    std::set<int> reached{0};
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int p = frontier.front();
        frontier.pop_front();
        for (const auto& m : index_maps) {
            int q = m[static_cast<std::size_t>(p)];
            if (reached.insert(q).second) frontier.push_back(q);
        }
    }
    if (reached.size() == partition.size()) {
        report.is_transitive = true;
    } else {
        int missing = 0;
        while (reached.count(missing)) ++missing;
        report.transitivity_witness =
            "no group element maps " + partition.part_name(0) + " to " +
            partition.part_name(static_cast<std::size_t>(missing));
    }
    return report;
}

/// True iff every part is a matching.
inline bool is_one_decomposition(const EdgePartition& partition) {
    return max_part_valency(partition) <= 1;
}

/// The five parts Q_1..Q_5 of the Kneser-labelled Petersen graph: Q_a holds
/// the three edges whose four label elements avoid a.
inline EdgePartition petersen_Qa_partition() {
    Graph delta = kneser_petersen();
    auto pairs = kneser_pair_labels();
    std::vector<EdgeSet> parts(5);
    std::vector<std::string> names;
    for (int a = 1; a <= 5; ++a) names.push_back("Q" + std::to_string(a));
    for (const auto& [u, v] : delta.edges) {
        auto [b, c] = pairs[static_cast<std::size_t>(u)];
        auto [d, e] = pairs[static_cast<std::size_t>(v)];
        for (int a = 1; a <= 5; ++a)
            if (a != b && a != c && a != d && a != e)
                parts[static_cast<std::size_t>(a - 1)].insert({u, v});
    }
    return EdgePartition(std::move(delta), std::move(parts), std::move(names));
}

/// Lift a decomposition of the imprimitive quotient back to the graph:
/// P_Q collects the graph edges crossing between blocks B_i, B_j for each
/// quotient edge {B_i,B_j} in Q. Requires independent blocks and a
/// group-invariant block system; the partition property of the output is
/// re-verified rather than assumed.
inline EdgePartition lift(const Graph& graph, const BlockSystem& blocks,
                          const EdgePartition& quotient_partition, const PermGroup& group) {
    if (blocks.num_points() != graph.n)
        throw input_error("lift: block system does not partition the vertex set");
    if (group.degree != graph.n) throw input_error("lift: group degree mismatch");
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i)
        for (int u : blocks.blocks[i])
            for (int v : blocks.blocks[i])
                if (u < v && graph.adjacent(u, v))
                    throw hypothesis_error("lift: block " + std::to_string(i) +
                                           " contains adjacent vertices {" + std::to_string(u) +
                                           "," + std::to_string(v) + "}");
    auto table = blocks.block_index_table();
    for (const auto& g : group.generators)
        induced_block_permutation(g, blocks, table); // throws invariance_error on failure

    Graph q = quotient(graph, blocks);
    if (quotient_partition.graph.edges != q.edges || quotient_partition.graph.n != q.n)
        throw input_error("lift: quotient partition does not live on the imprimitive quotient");

    auto lookup = quotient_partition.edge_to_part();
    std::vector<EdgeSet> parts(quotient_partition.size());
    for (const auto& [u, v] : graph.edges) {
        int i = table[static_cast<std::size_t>(u)];
        int j = table[static_cast<std::size_t>(v)];
        if (i == j) throw internal_error("lift: within-block edge survived the hypothesis check");
        int p = lookup.at(make_edge(i, j));
        parts[static_cast<std::size_t>(p)].insert({u, v});
    }
    for (const auto& p : parts)
        if (p.empty()) throw internal_error("lift: some lifted part is empty");
    // EdgePartition construction re-checks the partition property.
    return EdgePartition(graph, std::move(parts), quotient_partition.names);
}

} // namespace transdec
