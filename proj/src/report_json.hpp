#pragma once

#include <json.hpp>

#include "solver.hpp"
#include "verification.hpp"

namespace hackenbush {

/// Reports serialize without wall time unless `include_timing` is set, so
/// identical runs give byte-identical documents.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = false);

nlohmann::ordered_json to_json(const SearchStats& s);

nlohmann::ordered_json to_json(const std::vector<ExploreRow>& rows);

std::string color_letters(const std::vector<Color>& colors);

}  // namespace hackenbush
