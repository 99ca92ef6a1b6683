#pragma once

#include <string>

#include "json.hpp"

#include "gbt/partition.hpp"
#include "gbt/poly.hpp"
#include "gbt/search.hpp"
#include "gbt/spectra.hpp"
#include "gbt/tree.hpp"

namespace gbt {

// Round to a fixed number of significant decimal digits so identical runs
// serialize byte-identically.
double round_significant(double value, int digits = 12);

nlohmann::json tree_to_json(const BetheTree& tree);
// One "u v" pair per line, 0-based, construction order.
std::string tree_to_edge_list(const BetheTree& tree);

nlohmann::json divisor_to_json(const DegreeSequence& ds, const IntMatrix& b);
// Aligned grid for human inspection.
std::string matrix_to_text(const IntMatrix& m);

// Coefficient array, lowest degree first, entries as decimal strings.
nlohmann::json poly_to_json(const Poly& p);

nlohmann::json to_json(const MainSpectrumReport& report);

nlohmann::json to_json(const SearchHit& hit);
nlohmann::json to_json(const ScanResult& result);
nlohmann::json to_json(const K4Report& report);
std::string scan_to_text(const ScanResult& result);

}  // namespace gbt
