#include "gbt/search.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "gbt/exact.hpp"
#include "gbt/partition.hpp"
#include "gbt/spectra.hpp"

namespace gbt {

namespace {

// Scans above this size are a resource mistake, not a math question.
constexpr long kMaxScanInstances = 100'000'000;

}  // namespace

SequenceEnumeration::SequenceEnumeration(int k, int max_degree) : k_(k), max_degree_(max_degree) {
    if (k < 2) throw std::invalid_argument("enumeration needs k >= 2");
    if (max_degree < 2) throw std::invalid_argument("enumeration needs max_degree >= 2");
    mpz_ui_pow_ui(size_.get_mpz_t(), static_cast<unsigned long>(max_degree - 1),
                  static_cast<unsigned long>(k - 1));
}

DegreeSequence SequenceEnumeration::at(const Int& index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("enumeration index out of range");
    // mixed-radix digits, most significant first, digit range [0, max_degree-2]
    const int radix = max_degree_ - 1;
    std::vector<int> degrees(static_cast<std::size_t>(k_) - 1, 2);
    Int rest = index;
    for (std::size_t i = degrees.size(); i-- > 0;) {
        Int digit = rest % radix;
        rest /= radix;
        degrees[i] = 2 + static_cast<int>(digit.get_si());
    }
    return DegreeSequence(std::move(degrees));
}

std::vector<DegreeSequence> enumerate_sequences(int k, int max_degree) {
    const SequenceEnumeration enumeration(k, max_degree);
    if (enumeration.size() > kMaxScanInstances)
        throw std::length_error("enumeration of " + enumeration.size().get_str() +
                                " sequences is too large to materialize");
    std::vector<DegreeSequence> out;
    out.reserve(static_cast<std::size_t>(enumeration.size().get_si()));
    for (Int i(0); i < enumeration.size(); ++i) out.push_back(enumeration.at(i));
    return out;
}

namespace {

struct WorkerBlock {
    std::map<int, std::int64_t> histogram;
    std::vector<SearchHit> hits;
    std::vector<std::string> failures;
};

struct Progress {
    std::atomic<long> done{0};
    long total = 0;
    long step = 1;
    std::function<void(long, long)> callback;

    void tick() {
        if (!callback) return;
        const long now = ++done;
        if (now % step == 0 || now == total) callback(now, total);
    }
};

void scan_block(const SequenceEnumeration& enumeration, long begin, long end, WorkerBlock& block,
                Progress& progress) {
    for (long i = begin; i < end; ++i) {
        DegreeSequence ds = enumeration.at(Int(i));
        try {
            const int count = main_count_divisor(divisor_matrix(ds));
            ++block.histogram[count];
            const int k = ds.levels();
            if (count < k) {
                SearchHit hit;
                hit.degrees = ds.degrees();
                hit.main_count = count;
                hit.deficiency = k - count;
                Int n(0);
                for (const Int& s : level_sizes(ds)) n += s;
                hit.tree_vertices = n;
                block.hits.push_back(std::move(hit));
            }
        } catch (const std::exception& e) {
            block.failures.push_back("(" + ds.to_string() + "): " + e.what());
        }
        progress.tick();
    }
}

void cross_check_hits(std::vector<SearchHit>& hits) {
    for (SearchHit& hit : hits) {
        // fresh elimination on a freshly built divisor
        const DegreeSequence ds{std::vector<int>(hit.degrees)};
        hit.reverified = main_count_divisor(divisor_matrix(ds)) == hit.main_count;
        if (hit.tree_vertices <= kDefaultEigenCap) {
            const BetheTree tree = build_tree(ds, kDefaultEigenCap);
            hit.numeric_main_count = main_spectrum_numeric(dense_adjacency(tree)).main_count;
        }
    }
}

}  // namespace

ScanResult scan(const SearchConfig& config) {
    if (config.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    const SequenceEnumeration enumeration(config.k, config.max_degree);
    if (enumeration.size() > kMaxScanInstances)
        throw std::length_error("scan of " + enumeration.size().get_str() +
                                " sequences is too large; lower k or max_degree");
    const long total = static_cast<long>(enumeration.size().get_si());

    ScanResult result;
    result.k = config.k;
    result.max_degree = config.max_degree;
    result.total = enumeration.size();

    const int workers = static_cast<int>(std::min<long>(config.worker_count, std::max<long>(total, 1)));
    std::vector<WorkerBlock> blocks(static_cast<std::size_t>(workers));
    Progress progress;
    progress.total = total;
    progress.step = std::max<long>(total / 20, 1);
    progress.callback = config.progress;
    // static block partition of the index range; results merged in index order
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const long begin = total * w / workers;
        const long end = total * (w + 1) / workers;
        threads.emplace_back(scan_block, std::cref(enumeration), begin, end,
                             std::ref(blocks[static_cast<std::size_t>(w)]), std::ref(progress));
    }
    for (auto& thread : threads) thread.join();

    for (const WorkerBlock& block : blocks) {
        for (const auto& [count, freq] : block.histogram) result.histogram[count] += freq;
        result.hits.insert(result.hits.end(), block.hits.begin(), block.hits.end());
        result.failures.insert(result.failures.end(), block.failures.begin(), block.failures.end());
    }
    cross_check_hits(result.hits);
    return result;
}

K4Report scan_k4(int max_degree, int worker_count) {
    SearchConfig config;
    config.k = 4;
    config.max_degree = max_degree;
    config.worker_count = worker_count;
    K4Report report;
    report.result = scan(config);
    report.outcome = report.result.hits.empty() ? "consistent with conjecture" : "counterexample found";
    return report;
}

}  // namespace gbt
