#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symfrac/coeff.hpp"

namespace symfrac {

struct Factor {
  char symbol;  // lower-cased letter
  unsigned index;
  unsigned exponent;
};

struct ProductTerm {
  Coeff coeff;
  std::vector<Factor> factors;
};

/// Parses "2*e1^2*e3 - p_{1334} + 1/2" into signed products of indexed
/// symbols. Braced subscripts list single-digit indices ("p_{1334}" is
/// p1*p3*p3*p4); bare digits form one index ("p12"). Only letters in
/// `symbols` are accepted (case-insensitive). Throws ParseError with the
/// offending column.
std::vector<ProductTerm> parse_products(std::string_view text, const RingSpec& ring, std::string_view symbols);

}  // namespace symfrac
