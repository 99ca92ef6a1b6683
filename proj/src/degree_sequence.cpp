#include "gbt/degree_sequence.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gbt {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty())
        throw std::invalid_argument("degree sequence must have at least one entry (k >= 2)");
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 2) {
            std::ostringstream msg;
            msg << "degree d_" << (i + 1) << " = " << degrees_[i] << " is below 2";
            throw std::invalid_argument(msg.str());
        }
    }
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::vector<int> degrees;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        // trim surrounding spaces
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("unparsable degree token '" + std::string(token) + "'");
        degrees.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DegreeSequence(std::move(degrees));
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out << ",";
        out << degrees_[i];
    }
    return out.str();
}

std::string TreeClass::to_string() const {
    switch (tag) {
        case Tag::Star: return "Star";
        case Tag::Bethe: return "Bethe(" + std::to_string(d) + ")";
        case Tag::QuasiRegular: return "QuasiRegular(" + std::to_string(d) + ")";
        case Tag::General: return "General";
    }
    return "General";
}

TreeClass classify(const DegreeSequence& ds) {
    const auto& d = ds.degrees();
    if (ds.levels() == 2) return {TreeClass::Tag::Star, 0};
    bool bethe = true, quasi = true;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i] != d[0] + 1) bethe = false;
        if (d[i] != d[0]) quasi = false;
    }
    if (bethe) return {TreeClass::Tag::Bethe, d[0]};
    if (quasi) return {TreeClass::Tag::QuasiRegular, d[0]};
    return {TreeClass::Tag::General, 0};
}

std::vector<Int> level_sizes(const DegreeSequence& ds) {
    const int k = ds.levels();
    std::vector<Int> sizes;
    sizes.reserve(static_cast<std::size_t>(k));
    sizes.emplace_back(1);
    sizes.emplace_back(ds.degrees()[0]);
    for (int i = 2; i < k; ++i) sizes.push_back(sizes.back() * (ds.degree_at_level(i) - 1));
    return sizes;
}

DegreeSequence bethe_degrees(int d, int k) {
    if (k < 2) throw std::invalid_argument("Bethe tree needs k >= 2");
    std::vector<int> degrees(static_cast<std::size_t>(k) - 1, d + 1);
    degrees[0] = d;
    return DegreeSequence(std::move(degrees));
}

DegreeSequence quasi_regular_degrees(int d, int k) {
    if (k < 2) throw std::invalid_argument("quasi-regular complete tree needs k >= 2");
    return DegreeSequence(std::vector<int>(static_cast<std::size_t>(k) - 1, d));
}

DegreeSequence counterexample_degrees(int k) {
    if (k < 6 || k % 2 != 0)
        throw std::invalid_argument("counterexample family needs even k >= 6, got k = " +
                                    std::to_string(k));
    std::vector<int> degrees = {5, k - 3, 5, 3};
    degrees.insert(degrees.end(), static_cast<std::size_t>(k) - 5, 2);
    return DegreeSequence(std::move(degrees));
}

}  // namespace gbt
