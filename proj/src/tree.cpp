#include "gbt/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gbt {

int BetheTree::level_of(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    auto it = std::upper_bound(level_offsets_.begin(), level_offsets_.end(), v);
    return static_cast<int>(it - level_offsets_.begin());
}

int BetheTree::degree_of(Vertex v) const {
    const int lev = level_of(v);
    return lev < levels() ? ds_.degree_at_level(lev) : 1;
}

BetheTree build_tree(const DegreeSequence& ds, std::int64_t max_vertices) {
    const std::vector<Int> sizes = level_sizes(ds);
    Int projected(0);
    for (const Int& s : sizes) projected += s;
    if (projected > max_vertices) {
        std::ostringstream msg;
        msg << "tree B(" << ds.to_string() << ") would have " << projected.get_str()
            << " vertices, above the cap of " << max_vertices;
        throw std::length_error(msg.str());
    }

    BetheTree tree;
    tree.ds_ = ds;
    tree.n_ = static_cast<Vertex>(projected.get_si());
    tree.level_sizes_.reserve(sizes.size());
    for (const Int& s : sizes) tree.level_sizes_.push_back(s.get_si());
    tree.level_offsets_.resize(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        tree.level_offsets_[i + 1] = tree.level_offsets_[i] + tree.level_sizes_[i];

    tree.edges_.reserve(static_cast<std::size_t>(tree.n_ - 1));
    const int k = ds.levels();
    Vertex next = 1;
    for (int level = 1; level < k; ++level) {
        const std::int64_t children =
            level == 1 ? ds.degree_at_level(1) : ds.degree_at_level(level) - 1;
        const Vertex first_parent = tree.level_offsets_[static_cast<std::size_t>(level) - 1];
        const Vertex last_parent = tree.level_offsets_[static_cast<std::size_t>(level)];
        for (Vertex parent = first_parent; parent < last_parent; ++parent)
            for (std::int64_t c = 0; c < children; ++c) tree.edges_.emplace_back(parent, next++);
    }
    return tree;
}

SparseAdjacency SparseAdjacency::from_edges(Vertex n,
                                            const std::vector<std::pair<Vertex, Vertex>>& edges) {
    SparseAdjacency adj;
    adj.n_ = n;
    adj.row_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loops are not allowed");
        ++adj.row_start_[static_cast<std::size_t>(u) + 1];
        ++adj.row_start_[static_cast<std::size_t>(v) + 1];
    }
    for (std::size_t i = 1; i < adj.row_start_.size(); ++i) adj.row_start_[i] += adj.row_start_[i - 1];
    adj.cols_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(adj.row_start_.begin(), adj.row_start_.end() - 1);
    for (const auto& [u, v] : edges) {
        adj.cols_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        adj.cols_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    return adj;
}

SparseAdjacency adjacency(const BetheTree& tree) {
    return SparseAdjacency::from_edges(tree.vertex_count(), tree.edges());
}

}  // namespace gbt
