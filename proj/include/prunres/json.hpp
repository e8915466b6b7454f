#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prunres/betti.hpp"

namespace prunres {

/// {"graded": [[i, j, count]...], "multigraded": [[i, "monomial", count]...]} with j
/// the internal degree.
inline nlohmann::json betti_json(const BettiTable& t, const std::vector<std::string>& names) {
    nlohmann::json graded = nlohmann::json::array();
    for (const auto& [key, count] : t.graded()) graded.push_back({key.first, key.second, count});
    nlohmann::json multi = nlohmann::json::array();
    for (const auto& [key, count] : t.multigraded())
        multi.push_back({key.first, to_string(key.second, names), count});
    return {{"graded", graded}, {"multigraded", multi}};
}

}  // namespace prunres
