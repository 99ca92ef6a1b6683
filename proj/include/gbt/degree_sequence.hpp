#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbt/numbers.hpp"

namespace gbt {

// Degrees (d_1, ..., d_{k-1}) of a generalized Bethe tree with k levels:
// every level-i vertex has degree d_i for i < k, level-k vertices are leaves.
// Each d_i >= 2 and k >= 2.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    // Parses comma-separated integers, e.g. "5,3,5,3,2".
    static DegreeSequence parse(std::string_view text);

    int levels() const { return static_cast<int>(degrees_.size()) + 1; }
    const std::vector<int>& degrees() const { return degrees_; }
    // 1-based level in [1, k-1].
    int degree_at_level(int level) const { return degrees_.at(static_cast<std::size_t>(level) - 1); }

    std::string to_string() const;

    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
        return a.degrees_ == b.degrees_;
    }

private:
    std::vector<int> degrees_;
};

// Shape classification of the degree sequence.
struct TreeClass {
    enum class Tag { Star, Bethe, QuasiRegular, General };
    Tag tag = Tag::General;
    int d = 0;  // parameter for Bethe/QuasiRegular, 0 otherwise

    std::string to_string() const;
};

TreeClass classify(const DegreeSequence& ds);

// Vertex counts per level: n_1 = 1, n_2 = d_1, n_{i+1} = n_i * (d_i - 1).
// Exact; never builds the tree.
std::vector<Int> level_sizes(const DegreeSequence& ds);

// (d, d+1, ..., d+1) with k levels: the ordinary Bethe tree.
DegreeSequence bethe_degrees(int d, int k);
// (d, ..., d) with k levels: the quasi-regular complete tree.
DegreeSequence quasi_regular_degrees(int d, int k);

// (5, k-3, 5, 3, 2, ..., 2) with k levels, the family with fewer main
// eigenvalues than levels; requires k even, k >= 6.
DegreeSequence counterexample_degrees(int k);

}  // namespace gbt
