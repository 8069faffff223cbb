#pragma once

#include <iosfwd>
#include <string>

#include "liemc/analysis.hpp"
#include "liemc/maxclass.hpp"

namespace liemc::cli {

/// Exit codes: 0 success, 1 a check or validation failed (report still
/// written), 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string render_element(const EElement& e);
std::string render_line(const FieldTower& tower, const CentraliserLine& line);
std::string render_text(const ValidationReport& r);
std::string render_text(const AnalysisReport& r);
std::string render_text(const SearchResult& r, const FieldTower& tower, int depth);

}  // namespace liemc::cli
