#pragma once

#include <optional>
#include <vector>

#include "gbt/matrix.hpp"
#include "gbt/tree.hpp"

namespace gbt {

// Vertex partition into cells; for generalized Bethe trees cell i collects
// the level-(i+1) vertices.
struct VertexPartition {
    std::vector<std::vector<Vertex>> cells;

    std::size_t cell_count() const { return cells.size(); }
    std::vector<std::int64_t> cell_sizes() const;
};

VertexPartition level_partition(const BetheTree& tree);

// n x k 0/1 matrix whose column j is the indicator of cell j. Stored as the
// row -> cell map (exactly one 1 per row by construction).
class CharacteristicMatrix {
public:
    CharacteristicMatrix(Vertex n, std::size_t k, std::vector<std::int32_t> cell_of);

    Vertex rows() const { return n_; }
    std::size_t cols() const { return k_; }
    std::int32_t cell_of(Vertex v) const { return cell_of_[static_cast<std::size_t>(v)]; }
    const std::vector<std::int32_t>& cell_map() const { return cell_of_; }

    IntMatrix dense() const;
    // C^T C = diag(cell sizes).
    std::vector<Int> gram_diagonal() const;

private:
    Vertex n_;
    std::size_t k_;
    std::vector<std::int32_t> cell_of_;
};

CharacteristicMatrix characteristic_matrix(const VertexPartition& partition, Vertex n);

// If the partition is equitable, the k x k table b_ij = number of neighbors
// every C_i vertex has in C_j; nullopt otherwise. Rejects partitions that do
// not cover the vertex set exactly once.
std::optional<IntMatrix> is_equitable(const SparseAdjacency& adj, const VertexPartition& partition);

// Closed-form divisor matrix of the level partition: superdiagonal
// (d_1, d_2 - 1, ..., d_{k-1} - 1), subdiagonal all ones, zero elsewhere.
IntMatrix divisor_matrix(const DegreeSequence& ds);

// AC = CB, entrywise over the integers.
bool check_compatibility(const SparseAdjacency& adj, const CharacteristicMatrix& c,
                         const IntMatrix& b);

// b_ij * |C_i| = b_ji * |C_j| for all i, j: the division-free form of
// D B D^{-1} = B^T.
bool check_similarity(const IntMatrix& b, const std::vector<Int>& cell_sizes);

}  // namespace gbt
