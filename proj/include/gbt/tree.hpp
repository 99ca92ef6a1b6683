#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gbt/degree_sequence.hpp"

namespace gbt {

using Vertex = std::int64_t;

inline constexpr std::int64_t kDefaultMaxVertices = 1'000'000;

// Explicit generalized Bethe tree. Vertices are numbered breadth-first:
// root = 0, levels contiguous, children of a vertex contiguous.
class BetheTree {
public:
    const DegreeSequence& degree_sequence() const { return ds_; }
    int levels() const { return ds_.levels(); }
    Vertex vertex_count() const { return n_; }
    const std::vector<std::int64_t>& level_sizes() const { return level_sizes_; }
    // Edges in construction (BFS) order, parent first in each pair.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // 1-based level of a vertex.
    int level_of(Vertex v) const;
    int degree_of(Vertex v) const;
    // First vertex id of a 1-based level.
    Vertex level_offset(int level) const { return level_offsets_[static_cast<std::size_t>(level) - 1]; }

private:
    friend BetheTree build_tree(const DegreeSequence&, std::int64_t);
    DegreeSequence ds_{std::vector<int>{2}};
    Vertex n_ = 0;
    std::vector<std::int64_t> level_sizes_;
    std::vector<Vertex> level_offsets_;  // size k+1, prefix sums
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Materializes the tree; rejects degree sequences whose projected vertex
// count exceeds max_vertices (the error names the projected count).
BetheTree build_tree(const DegreeSequence& ds, std::int64_t max_vertices = kDefaultMaxVertices);

// Symmetric 0/1 adjacency in compressed sparse row form.
class SparseAdjacency {
public:
    static SparseAdjacency from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    Vertex size() const { return n_; }
    std::int64_t degree(Vertex v) const {
        return row_start_[static_cast<std::size_t>(v) + 1] - row_start_[static_cast<std::size_t>(v)];
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {cols_.data() + row_start_[static_cast<std::size_t>(v)],
                cols_.data() + row_start_[static_cast<std::size_t>(v) + 1]};
    }

private:
    Vertex n_ = 0;
    std::vector<std::int64_t> row_start_;
    std::vector<Vertex> cols_;
};

SparseAdjacency adjacency(const BetheTree& tree);

}  // namespace gbt
