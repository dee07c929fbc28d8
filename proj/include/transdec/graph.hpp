#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace transdec {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw input_error("edge: loops are not allowed");
    return {std::min(u, v), std::max(u, v)};
}

/// Finite simple undirected graph on {0..n-1}. Edges are stored canonically
/// with u < v. Labels are display-only.
struct Graph {
    int n = 0;
    EdgeSet edges;
    std::vector<std::string> labels;

    Graph() = default;

    Graph(int vertex_count, EdgeSet es, std::vector<std::string> lbls = {})
        : n(vertex_count), edges(std::move(es)), labels(std::move(lbls)) {
        if (n < 0) throw input_error("graph: negative vertex count");
        for (const auto& [u, v] : edges)
            if (u < 0 || v >= n || u >= v)
                throw input_error("graph: edge endpoints out of range or non-canonical");
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
            throw input_error("graph: label count does not match vertex count");
    }

    bool adjacent(int u, int v) const {
        return u != v && edges.count(make_edge(u, v)) > 0;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges)
            if (a == v || b == v) ++d;
        return d;
    }

    std::vector<std::vector<char>> adjacency_matrix() const {
        std::vector<std::vector<char>> m(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
        for (const auto& [u, v] : edges) {
            m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        }
        return m;
    }
};

inline Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph: n must be positive");
    EdgeSet es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.insert({u, v});
    return Graph(n, std::move(es));
}

/// GP(n,k): outer vertices a_i = i, inner vertices b_i = n+i, with edges
/// {a_i,a_{i+1}}, {a_i,b_i}, {b_i,b_{i+k}} (indices mod n).
inline Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw input_error("generalized_petersen: require n >= 3 and 1 <= k < n/2");
    EdgeSet es;
    for (int i = 0; i < n; ++i) {
        es.insert(make_edge(i, (i + 1) % n));
        es.insert(make_edge(i, n + i));
        es.insert(make_edge(n + i, n + (i + k) % n));
    }
    return Graph(2 * n, std::move(es));
}

/// The ten 2-subsets of {1..5} in lexicographic order as vertex labels.
inline std::vector<std::pair<int, int>> kneser_pair_labels() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.push_back({a, b});
    return pairs;
}

/// Petersen graph with vertices labelled by 2-subsets of {1..5}; edges join
/// disjoint pairs.
inline Graph kneser_petersen() {
    auto pairs = kneser_pair_labels();
    EdgeSet es;
    std::vector<std::string> labels;
    for (const auto& [a, b] : pairs)
        labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& [a, b] = pairs[i];
            const auto& [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                es.insert({static_cast<int>(i), static_cast<int>(j)});
        }
    return Graph(10, std::move(es), std::move(labels));
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.n) throw input_error("is_automorphism: degree mismatch");
    for (const auto& [u, v] : g.edges)
        if (!g.edges.count(make_edge(p(u), p(v)))) return false;
    return true;
}

namespace detail {

// Backtracking over vertex images with degree and adjacency pruning.
// Candidate images are tried in ascending order, so maps are produced in
// lexicographic order of their image arrays.
template <class Emit>
void vertex_map_search(const Graph& g1, const Graph& g2, Emit emit) {
    int n = g1.n;
    auto adj1 = g1.adjacency_matrix();
    auto adj2 = g2.adjacency_matrix();
    std::vector<int> deg1(static_cast<std::size_t>(n)), deg2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        deg1[static_cast<std::size_t>(v)] = g1.degree(v);
        deg2[static_cast<std::size_t>(v)] = g2.degree(v);
    }
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return emit(img);
        for (int c = 0; c < n; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            if (deg1[static_cast<std::size_t>(v)] != deg2[static_cast<std::size_t>(c)]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (adj1[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] !=
                    adj2[static_cast<std::size_t>(c)][static_cast<std::size_t>(img[static_cast<std::size_t>(u)])]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[static_cast<std::size_t>(v)] = c;
            used[static_cast<std::size_t>(c)] = 1;
            if (self(self, v + 1)) return true;
            img[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(c)] = 0;
        }
        return false;
    };
    if (n == 0) {
        emit(img);
        return;
    }
    rec(rec, 0);
}

// Greedy reduction of an element list to a small generating set.
inline std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements,
                                                  int degree) {
    std::vector<Permutation> gens;
    std::set<Permutation> reachable{Permutation::identity(degree)};
    for (const auto& e : elements) {
        if (reachable.count(e)) continue;
        gens.push_back(e);
        PermGroup g = generate(gens, elements.size());
        reachable = std::set<Permutation>(g.elements->begin(), g.elements->end());
    }
    if (gens.empty()) gens.push_back(Permutation::identity(degree));
    return gens;
}

} // namespace detail

/// Full automorphism group found by backtracking. Every element is re-checked
/// with is_automorphism before the group is returned.
inline PermGroup automorphism_group(const Graph& g, int search_bound = 32) {
    if (g.n > search_bound) throw resource_error("automorphism_group: graph exceeds search bound");
    std::vector<Permutation> found;
    detail::vertex_map_search(g, g, [&](const std::vector<int>& img) {
        found.emplace_back(img);
        return false; // keep searching
    });
    for (const auto& p : found)
        if (!is_automorphism(g, p))
            throw internal_error("automorphism search produced a non-automorphism");
    PermGroup group(detail::reduce_generators(found, g.n));
    group.elements = std::move(found); // search order is already lexicographic
    return group;
}

/// Lexicographically least edge-preserving bijection from g1 to g2, or absent.
inline std::optional<std::vector<int>> isomorphism(const Graph& g1, const Graph& g2,
                                                   int search_bound = 32) {
    if (g1.n > search_bound || g2.n > search_bound)
        throw resource_error("isomorphism: graph exceeds search bound");
    if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return std::nullopt;
    std::optional<std::vector<int>> result;
    detail::vertex_map_search(g1, g2, [&](const std::vector<int>& img) {
        result = img;
        return true; // first hit is lexicographically least
    });
    return result;
}

/// Imprimitive quotient: one vertex per block, an edge between blocks i != j
/// whenever some edge of g crosses between them. Within-block edges are
/// discarded.
inline Graph quotient(const Graph& g, const BlockSystem& blocks) {
    if (blocks.num_points() != g.n)
        throw input_error("quotient: block system does not partition the vertex set");
    auto table = blocks.block_index_table();
    EdgeSet es;
    for (const auto& [u, v] : g.edges) {
        int i = table[static_cast<std::size_t>(u)];
        int j = table[static_cast<std::size_t>(v)];
        if (i != j) es.insert(make_edge(i, j));
    }
    return Graph(static_cast<int>(blocks.blocks.size()), std::move(es));
}

/// The ten antipodal pairs of GP(10,2): {a_i, a_{i+5}} and {b_i, b_{i+5}}.
inline BlockSystem antipodal_blocks_gp10_2() {
    std::vector<std::set<int>> bs;
    for (int i = 0; i < 5; ++i) bs.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) bs.push_back({10 + i, 10 + i + 5});
    return BlockSystem(std::move(bs));
}

} // namespace transdec
