#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "errors.hpp"

namespace transdec {

/// A partition of a vertex set {0..n-1} into disjoint nonempty blocks.
struct BlockSystem {
    std::vector<std::set<int>> blocks;

    BlockSystem() = default;

    explicit BlockSystem(std::vector<std::set<int>> bs) : blocks(std::move(bs)) {
        int n = num_points();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::size_t covered = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw input_error("block system: empty block");
            for (int v : b) {
                if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                    throw input_error("block system: blocks are not disjoint or out of range");
                seen[static_cast<std::size_t>(v)] = 1;
                ++covered;
            }
        }
        if (covered != static_cast<std::size_t>(n))
            throw input_error("block system: blocks do not cover the vertex set");
    }

    int num_points() const {
        int m = -1;
        for (const auto& b : blocks)
            for (int v : b) m = std::max(m, v);
        return m + 1;
    }

    /// Index of the block containing point v.
    int block_of(int v) const {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].count(v)) return static_cast<int>(i);
        throw input_error("block system: point not covered");
    }

    /// Precomputed point -> block index table.
    std::vector<int> block_index_table() const {
        std::vector<int> t(static_cast<std::size_t>(num_points()), -1);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (int v : blocks[i]) t[static_cast<std::size_t>(v)] = static_cast<int>(i);
        return t;
    }
};

} // namespace transdec
