#include "gbt/partition.hpp"

#include <stdexcept>

namespace gbt {

std::vector<std::int64_t> VertexPartition::cell_sizes() const {
    std::vector<std::int64_t> sizes;
    sizes.reserve(cells.size());
    for (const auto& cell : cells) sizes.push_back(static_cast<std::int64_t>(cell.size()));
    return sizes;
}

VertexPartition level_partition(const BetheTree& tree) {
    VertexPartition partition;
    const int k = tree.levels();
    partition.cells.resize(static_cast<std::size_t>(k));
    for (int level = 1; level <= k; ++level) {
        auto& cell = partition.cells[static_cast<std::size_t>(level) - 1];
        const Vertex first = tree.level_offset(level);
        const Vertex last = first + tree.level_sizes()[static_cast<std::size_t>(level) - 1];
        cell.reserve(static_cast<std::size_t>(last - first));
        for (Vertex v = first; v < last; ++v) cell.push_back(v);
    }
    return partition;
}

namespace {

// row -> cell map; throws if the cells overlap, leave gaps, go out of range,
// or are empty.
std::vector<std::int32_t> cell_map_of(const VertexPartition& partition, Vertex n) {
    std::vector<std::int32_t> cell_of(static_cast<std::size_t>(n), -1);
    for (std::size_t j = 0; j < partition.cells.size(); ++j) {
        if (partition.cells[j].empty()) throw std::invalid_argument("partition cell is empty");
        for (Vertex v : partition.cells[j]) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition cell vertex out of range");
            auto& slot = cell_of[static_cast<std::size_t>(v)];
            if (slot != -1) throw std::invalid_argument("partition cells overlap");
            slot = static_cast<std::int32_t>(j);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (cell_of[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("partition does not cover the vertex set");
    return cell_of;
}

}  // namespace

CharacteristicMatrix::CharacteristicMatrix(Vertex n, std::size_t k,
                                           std::vector<std::int32_t> cell_of)
    : n_(n), k_(k), cell_of_(std::move(cell_of)) {
    if (cell_of_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("characteristic matrix row map has wrong length");
}

IntMatrix CharacteristicMatrix::dense() const {
    IntMatrix m(static_cast<std::size_t>(n_), k_);
    for (Vertex v = 0; v < n_; ++v) m(static_cast<std::size_t>(v), static_cast<std::size_t>(cell_of(v))) = 1;
    return m;
}

std::vector<Int> CharacteristicMatrix::gram_diagonal() const {
    std::vector<Int> diag(k_, Int(0));
    for (Vertex v = 0; v < n_; ++v) ++diag[static_cast<std::size_t>(cell_of(v))];
    return diag;
}

CharacteristicMatrix characteristic_matrix(const VertexPartition& partition, Vertex n) {
    return CharacteristicMatrix(n, partition.cell_count(), cell_map_of(partition, n));
}

std::optional<IntMatrix> is_equitable(const SparseAdjacency& adj,
                                      const VertexPartition& partition) {
    const Vertex n = adj.size();
    const std::size_t k = partition.cell_count();
    const std::vector<std::int32_t> cell_of = cell_map_of(partition, n);

    IntMatrix table(k, k);
    std::vector<std::int64_t> counts(k);
    for (std::size_t i = 0; i < k; ++i) {
        bool first = true;
        for (Vertex v : partition.cells[i]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex w : adj.neighbors(v)) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
            if (first) {
                for (std::size_t j = 0; j < k; ++j) table(i, j) = counts[j];
                first = false;
            } else {
                for (std::size_t j = 0; j < k; ++j)
                    if (table(i, j) != counts[j]) return std::nullopt;
            }
        }
    }
    return table;
}

IntMatrix divisor_matrix(const DegreeSequence& ds) {
    const std::size_t k = static_cast<std::size_t>(ds.levels());
    IntMatrix b(k, k);
    b(0, 1) = ds.degree_at_level(1);
    for (std::size_t i = 1; i + 1 < k; ++i) b(i, i + 1) = ds.degree_at_level(static_cast<int>(i) + 1) - 1;
    for (std::size_t i = 0; i + 1 < k; ++i) b(i + 1, i) = 1;
    return b;
}

bool check_compatibility(const SparseAdjacency& adj, const CharacteristicMatrix& c,
                         const IntMatrix& b) {
    if (!b.square() || b.rows() != c.cols() || c.rows() != adj.size())
        throw std::invalid_argument("check_compatibility: dimension mismatch");
    const std::size_t k = b.rows();
    std::vector<std::int64_t> counts(k);
    for (Vertex v = 0; v < adj.size(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Vertex w : adj.neighbors(v)) ++counts[static_cast<std::size_t>(c.cell_of(w))];
        const std::size_t row = static_cast<std::size_t>(c.cell_of(v));
        // (AC)_{v,j} = #neighbors of v in cell j must equal (CB)_{v,j} = b_{cell(v),j}
        for (std::size_t j = 0; j < k; ++j)
            if (b(row, j) != counts[j]) return false;
    }
    return true;
}

bool check_similarity(const IntMatrix& b, const std::vector<Int>& cell_sizes) {
    if (!b.square() || b.rows() != cell_sizes.size())
        throw std::invalid_argument("check_similarity: dimension mismatch");
    for (const Int& s : cell_sizes)
        if (s <= 0) throw std::invalid_argument("check_similarity: cell sizes must be positive");
    const std::size_t k = b.rows();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (b(i, j) * cell_sizes[i] != b(j, i) * cell_sizes[j]) return false;
    return true;
}

}  // namespace gbt
