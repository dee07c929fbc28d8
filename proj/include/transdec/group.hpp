#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "blocks.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace transdec {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// A finite permutation group given by generators, with an optional full
/// enumeration. When present, `elements` is sorted lexicographically by
/// image array.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::optional<std::vector<Permutation>> elements;

    PermGroup() = default;

    explicit PermGroup(std::vector<Permutation> gens) : generators(std::move(gens)) {
        if (generators.empty()) throw input_error("group: generator list is empty");
        degree = generators.front().degree();
        for (const auto& g : generators)
            if (g.degree() != degree) throw input_error("group: generators have mixed degrees");
    }

    std::size_t order() const {
        if (!elements) throw internal_error("group order requested before enumeration");
        return elements->size();
    }

    bool contains(const Permutation& p) const {
        if (!elements) throw internal_error("membership test requires enumeration");
        return std::binary_search(elements->begin(), elements->end(), p);
    }
};

/// Breadth-first closure of the generators under composition. Throws
/// resource_error once the closure grows past `cap`.
inline PermGroup generate(const std::vector<Permutation>& generators,
                          std::size_t cap = kDefaultClosureCap) {
    PermGroup g(generators);
    std::set<Permutation> closed;
    std::deque<Permutation> frontier;
    auto push = [&](const Permutation& p) {
        if (closed.insert(p).second) {
            if (closed.size() > cap) throw resource_error("group closure exceeded cap");
            frontier.push_back(p);
        }
    };
    push(Permutation::identity(g.degree));
    for (const auto& gen : g.generators) push(gen);
    while (!frontier.empty()) {
        Permutation p = frontier.front();
        frontier.pop_front();
        for (const auto& gen : g.generators) push(compose(p, gen));
    }
    g.elements = std::vector<Permutation>(closed.begin(), closed.end());
    return g;
}

/// Orbit of `seed` under the generators, where `act` applies a permutation to a
/// value of type T. Visits values in their natural sorted order.
template <class T, class Act>
std::set<T> orbit(const PermGroup& group, const T& seed, Act act) {
    std::set<T> seen{seed};
    std::deque<T> frontier{seed};
    while (!frontier.empty()) {
        T x = frontier.front();
        frontier.pop_front();
        for (const auto& g : group.generators) {
            T y = act(g, x);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

inline std::set<int> point_orbit(const PermGroup& group, int point) {
    if (point < 0 || point >= group.degree) throw input_error("orbit: point out of range");
    return orbit(group, point, [](const Permutation& g, int x) { return g(x); });
}

inline std::set<std::pair<int, int>> pair_orbit(const PermGroup& group,
                                                std::pair<int, int> pair) {
    if (pair.first < 0 || pair.second < 0 || pair.first >= group.degree ||
        pair.second >= group.degree || pair.first == pair.second)
        throw input_error("orbit: invalid unordered pair");
    if (pair.first > pair.second) std::swap(pair.first, pair.second);
    return orbit(group, pair, [](const Permutation& g, std::pair<int, int> x) {
        int a = g(x.first), b = g(x.second);
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
    });
}

inline std::set<std::set<int>> set_orbit(const PermGroup& group, const std::set<int>& seed) {
    for (int v : seed)
        if (v < 0 || v >= group.degree) throw input_error("orbit: point out of range");
    return orbit(group, seed, [](const Permutation& g, const std::set<int>& x) {
        std::set<int> y;
        for (int v : x) y.insert(g(v));
        return y;
    });
}

inline bool is_transitive_on_points(const PermGroup& group) {
    if (group.degree == 0) throw input_error("transitivity: empty domain");
    return point_orbit(group, 0).size() == static_cast<std::size_t>(group.degree);
}

struct InducedBlockAction {
    PermGroup on_blocks;      // degree = number of blocks
    bool kernel_trivial = false;
};

/// Permutation of block indices induced by g, or invariance_error if some
/// block image is not a block.
inline Permutation induced_block_permutation(const Permutation& g, const BlockSystem& blocks,
                                             const std::vector<int>& block_index) {
    std::vector<int> img(blocks.blocks.size());
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
        std::set<int> image;
        for (int v : blocks.blocks[i]) image.insert(g(v));
        int j = block_index[static_cast<std::size_t>(*image.begin())];
        if (image != blocks.blocks[static_cast<std::size_t>(j)])
            throw invariance_error("generator " + to_string(g) + " maps block " +
                                   std::to_string(i) + " to a non-block");
        img[i] = j;
    }
    return Permutation(std::move(img));
}

/// Action of the group on the blocks of a G-invariant partition. Duplicate
/// induced generators are dropped. The kernel flag is computed from a full
/// enumeration of the group, asserting along the way that every element maps
/// each block exactly onto a block.
inline InducedBlockAction induced_action_on_blocks(const PermGroup& group,
                                                   const BlockSystem& blocks) {
    if (blocks.num_points() != group.degree)
        throw input_error("induced action: block system does not match group degree");
    auto table = blocks.block_index_table();
    std::vector<Permutation> induced;
    for (const auto& g : group.generators) {
        Permutation p = induced_block_permutation(g, blocks, table);
        if (std::find(induced.begin(), induced.end(), p) == induced.end())
            induced.push_back(std::move(p));
    }
    PermGroup full = group.elements ? group : generate(group.generators);
    bool kernel_trivial = true;
    for (const auto& g : *full.elements) {
        Permutation p = induced_block_permutation(g, blocks, table);
        if (p.is_identity() && !g.is_identity()) kernel_trivial = false;
    }
    return {PermGroup(std::move(induced)), kernel_trivial};
}

/// Subgroup generated by all commutators p^-1 q^-1 p q, fully enumerated.
inline PermGroup derived_subgroup(const PermGroup& group,
                                  std::size_t cap = kDefaultClosureCap) {
    if (!group.elements) throw input_error("derived subgroup requires an enumerated group");
    std::set<Permutation> comms;
    for (const auto& p : *group.elements)
        for (const auto& q : *group.elements)
            comms.insert(compose(compose(inverse(p), inverse(q)), compose(p, q)));
    comms.insert(Permutation::identity(group.degree));
    return generate(std::vector<Permutation>(comms.begin(), comms.end()), cap);
}

} // namespace transdec
