#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "hydfit/athlete.hpp"
#include "hydfit/bounds.hpp"
#include "hydfit/model_config.hpp"

namespace hydfit {

/// Round-trip-exact decimal rendering of a double.
std::string format_full(double v);
/// Fixed-point rendering.
std::string format_fixed(double v, int precision);
/// Shortest "natural" rendering (printf %g), for human-facing columns.
std::string format_compact(double v);

/// Key-value file support: one `key = value` per line, '#' comments and
/// blank lines ignored. Parsers reject unknown keys, duplicates, missing
/// keys and malformed numbers.
std::map<std::string, double> load_key_values(std::istream& in, const std::string& source);

ModelConfiguration load_config(std::istream& in, const std::string& source);
ModelConfiguration load_config_file(const std::string& path);
void write_config(std::ostream& out, const ModelConfiguration& c);
void write_config_file(const std::string& path, const ModelConfiguration& c);

AthleteParams load_athlete(std::istream& in, const std::string& source);
AthleteParams load_athlete_file(const std::string& path);
void write_athlete(std::ostream& out, const AthleteParams& a);

SearchBounds load_bounds(std::istream& in, const std::string& source);
SearchBounds load_bounds_file(const std::string& path);
void write_bounds(std::ostream& out, const SearchBounds& b);

}  // namespace hydfit
