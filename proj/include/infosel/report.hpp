#pragma once

#include <string>

#include "json.hpp"

#include "infosel/bounds.hpp"
#include "infosel/datagen.hpp"
#include "infosel/search.hpp"
#include "infosel/structure.hpp"

// JSON views of the toolkit's results. Objects serialise with sorted keys
// and every real number is rounded to 12 significant digits, so identical
// inputs give byte-identical reports.
namespace infosel::report {

using Json = nlohmann::json;

inline constexpr int kSignificantDigits = 12;

double round_significant(double v);
Json number(double v);

Json to_json(const SelectionTrace& trace, const Dataset& ds);
Json to_json(const StructureReport& report, const Dataset& ds);
Json to_json(const ErrorBounds& bounds);
Json to_json(const GroundTruth& truth, const Dataset& ds);

/// Pretty-printed JSON followed by a newline.
std::string dump(const Json& doc);

}  // namespace infosel::report
