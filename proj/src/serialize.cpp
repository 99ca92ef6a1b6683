#include "gbt/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace gbt {

using nlohmann::json;

double round_significant(double value, int digits) {
    if (!std::isfinite(value) || value == 0.0) return value + 0.0;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*e", digits - 1, value);
    return std::strtod(buffer, nullptr);
}

json tree_to_json(const BetheTree& tree) {
    json edges = json::array();
    for (const auto& [u, v] : tree.edges()) edges.push_back({u, v});
    return json{{"degrees", tree.degree_sequence().degrees()},
                {"k", tree.levels()},
                {"level_sizes", tree.level_sizes()},
                {"n", tree.vertex_count()},
                {"class", classify(tree.degree_sequence()).to_string()},
                {"edges", edges}};
}

std::string tree_to_edge_list(const BetheTree& tree) {
    std::ostringstream out;
    for (const auto& [u, v] : tree.edges()) out << u << " " << v << "\n";
    return out.str();
}

json divisor_to_json(const DegreeSequence& ds, const IntMatrix& b) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return json{{"degrees", ds.degrees()}, {"k", ds.levels()}, {"matrix", rows}};
}

std::string matrix_to_text(const IntMatrix& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, to_string(m(i, j)).size());
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string cell = to_string(m(i, j));
            if (j) out << " ";
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coefficients()) coeffs.push_back(to_string(c));
    return json{{"degree", p.degree()}, {"coefficients", coeffs}, {"variable", "x"}};
}

json to_json(const MainSpectrumReport& report) {
    json clusters = json::array();
    for (const SpectralCluster& c : report.clusters) {
        json entry{{"value", round_significant(c.value)},
                   {"mult", c.multiplicity},
                   {"proj", round_significant(c.projection_norm)},
                   {"main", c.is_main}};
        if (c.borderline) entry["borderline"] = true;
        clusters.push_back(std::move(entry));
    }
    return json{{"method", report.method},
                {"n", report.n},
                {"clusters", clusters},
                {"main_count", report.main_count}};
}

json to_json(const SearchHit& hit) {
    json out{{"degrees", hit.degrees},
             {"main_count", hit.main_count},
             {"deficiency", hit.deficiency},
             {"reverified", hit.reverified},
             {"tree_vertices", hit.tree_vertices.get_str()}};
    if (hit.numeric_main_count) out["numeric_main_count"] = *hit.numeric_main_count;
    return out;
}

json to_json(const ScanResult& result) {
    json histogram = json::object();
    for (const auto& [count, freq] : result.histogram) histogram[std::to_string(count)] = freq;
    json hits = json::array();
    for (const SearchHit& hit : result.hits) hits.push_back(to_json(hit));
    return json{{"k", result.k},
                {"max_degree", result.max_degree},
                {"total", result.total.get_str()},
                {"histogram", histogram},
                {"hits", hits},
                {"failures", result.failures}};
}

json to_json(const K4Report& report) {
    json out = to_json(report.result);
    out["outcome"] = report.outcome;
    return out;
}

std::string scan_to_text(const ScanResult& result) {
    std::ostringstream out;
    out << "scan k=" << result.k << " max_degree=" << result.max_degree << ": "
        << result.total.get_str() << " sequences\n";
    out << "main-count histogram:\n";
    for (const auto& [count, freq] : result.histogram)
        out << "  " << count << ": " << freq << "\n";
    if (result.hits.empty()) {
        out << "no sequences with fewer main eigenvalues than levels\n";
    } else {
        out << "hits (main_count < k):\n";
        for (const SearchHit& hit : result.hits) {
            out << "  (";
            for (std::size_t i = 0; i < hit.degrees.size(); ++i)
                out << (i ? "," : "") << hit.degrees[i];
            out << ") main_count=" << hit.main_count << " deficiency=" << hit.deficiency
                << (hit.reverified ? " reverified" : " REVERIFICATION-FAILED");
            if (hit.numeric_main_count) out << " numeric=" << *hit.numeric_main_count;
            out << "\n";
        }
    }
    for (const std::string& failure : result.failures) out << "failure: " << failure << "\n";
    return out.str();
}

}  // namespace gbt
