// Text format for oriented hypergraphs:
//
//   # comment lines start with '#'
//   N M
//   in: 1 2 ; out: 4 5
//   in: 5 6 ; out: 2 3
//
// One line per hyperedge, 1-based vertex indices, either side may be empty
// (but not both). The writer emits sorted vertex lists and no comments.
#pragma once

#include <string>
#include <string_view>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Throws ParseError (with a 1-based line number) on malformed text and
// ValidationError when the hypergraph violates its invariants.
OrientedHypergraph parse_hypergraph(std::string_view text);

std::string write_hypergraph(const OrientedHypergraph& g);

// Shortest decimal with at most 15 significant digits, "e" exponent when
// needed, independent of the global locale.
std::string format_number(double x);

// Value as shown in reports: round-off within 1e-12 of zero, and negatives
// down to -1e-9, print as 0.
double report_value(double x);

}  // namespace hyperspec
