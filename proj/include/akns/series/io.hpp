#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "akns/poles.hpp"
#include "akns/series/laurent.hpp"

namespace akns {

using Json = nlohmann::ordered_json;

/// A series together with its variable and expansion point.
struct SeriesFile {
  LaurentData series;
  std::string var = "x";
  std::string center = "0";
};

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(std::string_view raw);

/// {"var", "center", "min_order", "coeffs": [GaussRat strings]}. The
/// truncation order is min_order + len(coeffs) - 1.
Json series_to_json(const LaurentData& s, const std::string& var = "x", const std::string& center = "0");

/// Inverse of series_to_json. raw, when given, is the source text used to
/// locate a malformed coefficient string.
SeriesFile series_from_json(const Json& j, std::string_view raw = {});

/// {"phi": [...], "psi": [...]}, index -1 first.
Json pole_data_to_json(const PoleData& d);
PoleData pole_data_from_json(const Json& j, std::string_view raw = {});

/// Parses one coefficient string, reporting its position in raw when found.
GaussRat gauss_rat_from_json(const Json& j, std::string_view raw = {});

}  // namespace akns
