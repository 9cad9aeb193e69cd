#pragma once

#include <string>

#include "cpm/invariants.hpp"

namespace cpm::io {

/// Parses an analysis input document. Throws ParseError naming the
/// offending field.
AnalysisInput parse_input(const std::string& text);

/// Analysis input document for `input`; parse_input(input_to_json(x)) == x.
std::string input_to_json(const AnalysisInput& input);

std::string report_to_json(const InvariantReport& report);
std::string report_to_text(const InvariantReport& report);

}  // namespace cpm::io
