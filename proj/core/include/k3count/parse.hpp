#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "k3count/invariants.hpp"

namespace k3count {

// Syntax error in the singularity mini-language. Domain failures of
// well-formed tokens (gcd != 1, D3) surface as the domain exceptions
// from error.hpp instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one token:
///   A<n> | D<n> | E6 | E7 | E8 | pq(<p>,<q>) | sg(<g1>,<g2>,...)
///   | branches[<tok>;<tok>;...] | node | smooth
SingularityDescriptor parse_singularity(std::string_view token);

/// Splits a curve description on top-level commas. Commas inside (...) or
/// [...] belong to their token. Blank input is a smooth curve.
std::vector<std::string_view> split_curve(std::string_view text);

std::vector<SingularityDescriptor> parse_curve(std::string_view text);

/// Integer list "3,5,7" as used for semigroup generators on the command line.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace k3count
