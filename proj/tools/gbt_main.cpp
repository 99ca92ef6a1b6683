#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbt/exact.hpp"
#include "gbt/partition.hpp"
#include "gbt/search.hpp"
#include "gbt/serialize.hpp"
#include "gbt/spectra.hpp"
#include "gbt/verify.hpp"

namespace {

using gbt::DegreeSequence;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::int64_t vertex_cap_from_env() {
    const char* raw = std::getenv("GBT_MAX_VERTICES");
    if (raw == nullptr) return gbt::kDefaultMaxVertices;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0)
        throw std::invalid_argument("GBT_MAX_VERTICES must be a positive integer");
    return value;
}

void write_output(const std::string& text, const std::optional<std::string>& out_path) {
    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) throw std::runtime_error("cannot open output file " + *out_path);
        file << text;
    } else {
        std::cout << text;
    }
}

void emit(const json& doc, const std::string& format, const std::string& text_rendering,
          const std::optional<std::string>& out_path) {
    write_output(format == "json" ? doc.dump(2) + "\n" : text_rendering, out_path);
}

// Shared "which tree" selection: explicit degrees or the counterexample
// family member with k levels.
struct InstanceFlags {
    std::string degrees;
    int k = 0;

    void attach(CLI::App* cmd) {
        auto* degrees_opt =
            cmd->add_option("--degrees", degrees, "comma-separated degree sequence, e.g. 5,3,5,3,2");
        auto* k_opt = cmd->add_option(
            "--k", k, "levels k of the counterexample family (5,k-3,5,3,2,...,2); even k >= 6");
        degrees_opt->excludes(k_opt);
        k_opt->excludes(degrees_opt);
    }

    DegreeSequence resolve() const {
        if (!degrees.empty()) return DegreeSequence::parse(degrees);
        if (k != 0) return gbt::counterexample_degrees(k);
        throw CLI::ValidationError("either --degrees or --k is required");
    }
};

int run_verify_claim(const std::string& claim, int k, int d, int alpha, const std::string& degrees,
                     const std::string& format, const std::optional<std::string>& out_path) {
    std::vector<gbt::VerificationOutcome> outcomes;
    if (claim == "thm1") {
        if (k == 0) throw CLI::ValidationError("verify thm1 requires --k (and --d, default 2)");
        outcomes.push_back(gbt::verify_theorem1(d, k));
    } else if (claim == "hou") {
        outcomes.push_back(gbt::verify_hou(alpha));
    } else if (claim == "counterexample") {
        if (k == 0) throw CLI::ValidationError("verify counterexample requires --k");
        outcomes.push_back(gbt::verify_counterexample(k));
    } else if (claim == "main-spectrum") {
        if (degrees.empty()) throw CLI::ValidationError("verify main-spectrum requires --degrees");
        outcomes.push_back(gbt::verify_main_spectrum_equality(DegreeSequence::parse(degrees)));
    } else if (claim == "all") {
        for (int dd = 2; dd <= 4; ++dd)
            for (int kk = 3; kk <= 8; ++kk) outcomes.push_back(gbt::verify_theorem1(dd, kk));
        for (int a = 2; a <= 6; ++a) outcomes.push_back(gbt::verify_hou(a));
        for (int kk = 6; kk <= 40; kk += 2) outcomes.push_back(gbt::verify_counterexample(kk));
        for (const char* ds : {"4", "3,2", "3,3,2", "5,3,5,3,2"})
            outcomes.push_back(gbt::verify_main_spectrum_equality(DegreeSequence::parse(ds)));
    } else {
        throw CLI::ValidationError("unknown claim '" + claim +
                                   "' (expected thm1, hou, counterexample, main-spectrum or all)");
    }

    int passed = 0;
    json report = json::array();
    std::ostringstream text;
    for (const auto& outcome : outcomes) {
        report.push_back(gbt::to_json(outcome));
        passed += outcome.pass ? 1 : 0;
        text << (outcome.pass ? "PASS" : "FAIL") << " " << outcome.claim_id << " "
             << outcome.instance << "\n";
    }
    const std::string summary =
        "verify: " + std::to_string(passed) + "/" + std::to_string(outcomes.size()) + " passed";
    text << summary << "\n";
    emit(report, format, text.str(), out_path);
    std::cerr << summary << "\n";
    return passed == static_cast<int>(outcomes.size()) ? kExitOk : kExitVerificationFailure;
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Bethe tree spectra: exact divisor arithmetic, numeric cross-checks, "
                 "verification suites and counterexample search"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    std::optional<std::string> out_path;
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    // let the shared --format/--out appear after the subcommand too
    auto add_subcommand = [&app](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        return sub;
    };

    // build
    auto* build_cmd = add_subcommand("build", "construct a tree and export its structure");
    InstanceFlags build_flags;
    build_flags.attach(build_cmd);
    std::int64_t max_vertices = vertex_cap_from_env();
    build_cmd->add_option("--max-vertices", max_vertices, "vertex-count cap")
        ->capture_default_str();

    // divisor
    auto* divisor_cmd = add_subcommand("divisor", "divisor matrix of the level partition");
    InstanceFlags divisor_flags;
    divisor_flags.attach(divisor_cmd);

    // charpoly
    auto* charpoly_cmd =
        add_subcommand("charpoly", "exact characteristic polynomial (divisor or full tree)");
    InstanceFlags charpoly_flags;
    charpoly_flags.attach(charpoly_cmd);
    bool charpoly_of_tree = false;
    charpoly_cmd->add_flag("--tree", charpoly_of_tree,
                           "characteristic polynomial of the full tree instead of the divisor");

    // main-count
    auto* count_cmd = add_subcommand("main-count", "number of main eigenvalues");
    InstanceFlags count_flags;
    count_flags.attach(count_cmd);
    bool use_exact = false, use_numeric = false, use_both = false;
    auto* exact_flag = count_cmd->add_flag("--exact", use_exact, "exact divisor Krylov rank (default)");
    auto* numeric_flag =
        count_cmd->add_flag("--numeric", use_numeric, "numeric full-tree eigendecomposition");
    auto* both_flag = count_cmd->add_flag("--both", use_both, "run both paths and compare");
    exact_flag->excludes(numeric_flag)->excludes(both_flag);
    numeric_flag->excludes(both_flag);
    double tol_cluster = gbt::kTolCluster, tol_main = gbt::kTolMain, tol_resid = gbt::kTolResid;
    count_cmd->add_option("--tol-cluster", tol_cluster, "eigenvalue clustering tolerance")
        ->capture_default_str();
    count_cmd->add_option("--tol-main", tol_main, "main-projection tolerance")->capture_default_str();
    count_cmd->add_option("--tol-resid", tol_resid, "eigensolver residual tolerance")
        ->capture_default_str();

    // verify
    auto* verify_cmd = add_subcommand("verify", "run a named verification suite");
    std::string claim;
    verify_cmd->add_option("claim", claim, "thm1 | hou | counterexample | main-spectrum | all")
        ->required();
    int verify_k = 0, verify_d = 2, verify_alpha = 2;
    std::string verify_degrees;
    verify_cmd->add_option("--k", verify_k, "levels (thm1, counterexample)");
    verify_cmd->add_option("--d", verify_d, "degree parameter (thm1)");
    verify_cmd->add_option("--alpha", verify_alpha, "family parameter (hou)");
    verify_cmd->add_option("--degrees", verify_degrees, "degree sequence (main-spectrum)");

    // search
    auto* search_cmd =
        add_subcommand("search", "exhaustive exact scan for trees with fewer main eigenvalues than levels");
    gbt::SearchConfig config;
    config.max_degree = 8;
    search_cmd->add_option("--k", config.k, "number of levels")->required();
    search_cmd->add_option("--max-degree", config.max_degree, "largest degree to enumerate")
        ->capture_default_str();
    search_cmd->add_option("--jobs", config.worker_count, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (build_cmd->parsed()) {
        const gbt::BetheTree tree = gbt::build_tree(build_flags.resolve(), max_vertices);
        emit(gbt::tree_to_json(tree), format, gbt::tree_to_edge_list(tree), out_path);
        return kExitOk;
    }

    if (divisor_cmd->parsed()) {
        const DegreeSequence ds = divisor_flags.resolve();
        const gbt::IntMatrix b = gbt::divisor_matrix(ds);
        emit(gbt::divisor_to_json(ds, b), format, gbt::matrix_to_text(b), out_path);
        return kExitOk;
    }

    if (charpoly_cmd->parsed()) {
        const DegreeSequence ds = charpoly_flags.resolve();
        const gbt::Poly p = charpoly_of_tree
                                ? gbt::charpoly_tree(ds, vertex_cap_from_env())
                                : gbt::charpoly_tridiagonal(gbt::divisor_matrix(ds));
        json doc = gbt::poly_to_json(p);
        doc["degrees"] = ds.degrees();
        doc["k"] = ds.levels();
        doc["of"] = charpoly_of_tree ? "tree" : "divisor";
        emit(doc, format, p.to_string() + "\n", out_path);
        return kExitOk;
    }

    if (count_cmd->parsed()) {
        const DegreeSequence ds = count_flags.resolve();
        const bool numeric = use_numeric || use_both;
        const bool exact = !use_numeric;

        json doc;
        std::ostringstream text;
        int exact_count = 0, numeric_count = 0;
        if (exact) {
            exact_count = gbt::main_count_divisor(gbt::divisor_matrix(ds));
            doc = {{"method", "exact"}, {"degrees", ds.degrees()}, {"k", ds.levels()},
                   {"main_count", exact_count}};
            text << "main_count = " << exact_count << " (k = " << ds.levels() << ", exact)\n";
        }
        if (numeric) {
            const gbt::BetheTree tree = gbt::build_tree(ds, gbt::kDefaultEigenCap);
            const gbt::MainSpectrumReport report = gbt::main_spectrum_numeric(
                gbt::dense_adjacency(tree), tol_cluster, tol_main, tol_resid);
            json numeric_doc = gbt::to_json(report);
            numeric_doc["degrees"] = ds.degrees();
            numeric_doc["k"] = ds.levels();
            numeric_count = report.main_count;
            if (use_both) {
                doc = {{"exact", doc}, {"numeric", numeric_doc},
                       {"agree", exact_count == numeric_count}};
                text << "main_count = " << numeric_count << " (n = " << report.n << ", numeric)\n"
                     << (exact_count == numeric_count ? "paths agree" : "PATHS DISAGREE") << "\n";
            } else {
                doc = std::move(numeric_doc);
                text.str("");
                text << "main_count = " << numeric_count << " (n = " << report.n << ", numeric)\n";
            }
        }
        emit(doc, format, text.str(), out_path);
        return kExitOk;
    }

    if (verify_cmd->parsed())
        return run_verify_claim(claim, verify_k, verify_d, verify_alpha, verify_degrees, format,
                                out_path);

    if (search_cmd->parsed()) {
        std::mutex progress_mutex;
        config.progress = [&progress_mutex](long done, long total) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            std::cerr << "scan: " << done << "/" << total << "\n";
        };
        config.output_path = out_path;
        const gbt::ScanResult result = gbt::scan(config);
        json doc;
        if (config.k == 4) {
            gbt::K4Report report;
            report.result = result;
            report.outcome =
                result.hits.empty() ? "consistent with conjecture" : "counterexample found";
            doc = gbt::to_json(report);
        } else {
            doc = gbt::to_json(result);
        }
        emit(doc, format, gbt::scan_to_text(result), out_path);
        bool all_reverified = true;
        for (const auto& hit : result.hits) all_reverified = all_reverified && hit.reverified;
        return result.failures.empty() && all_reverified ? kExitOk : kExitVerificationFailure;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
