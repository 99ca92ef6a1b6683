#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbt/degree_sequence.hpp"

namespace gbt {

struct SearchConfig {
    int k = 2;
    int max_degree = 2;
    int worker_count = 1;
    std::optional<std::string> output_path;
    // invoked from worker threads as instances complete; must be thread-safe
    std::function<void(long done, long total)> progress;
};

// A degree sequence whose divisor has fewer main eigenvalues than levels.
struct SearchHit {
    std::vector<int> degrees;
    int main_count = 0;
    int deficiency = 0;  // k - main_count, >= 1
    bool reverified = false;
    Int tree_vertices{0};
    std::optional<int> numeric_main_count;  // full-tree cross-check when the tree is small enough
};

// All (max_degree - 1)^(k-1) sequences with 2 <= d_i <= max_degree, in
// lexicographic order, addressable by index so the scan can be partitioned.
class SequenceEnumeration {
public:
    SequenceEnumeration(int k, int max_degree);

    const Int& size() const { return size_; }
    DegreeSequence at(const Int& index) const;

private:
    int k_;
    int max_degree_;
    Int size_;
};

std::vector<DegreeSequence> enumerate_sequences(int k, int max_degree);

struct ScanResult {
    int k = 0;
    int max_degree = 0;
    Int total{0};
    std::map<int, std::int64_t> histogram;  // main count -> number of sequences
    std::vector<SearchHit> hits;
    std::vector<std::string> failures;
};

// Exhaustive exact scan over the divisor matrices; never builds trees except
// to cross-check hits. Deterministic output regardless of worker count.
ScanResult scan(const SearchConfig& config);

struct K4Report {
    ScanResult result;
    std::string outcome;  // "consistent with conjecture" or "counterexample found"
};

K4Report scan_k4(int max_degree, int worker_count = 1);

}  // namespace gbt
