#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "symfrac/sparse_poly.hpp"

namespace symfrac {

/// Renders "c1*m1 + c2*m2 - ..." with unit coefficients suppressed.
/// `mono_text(m)` must return "" for the constant monomial.
template <typename Term, typename MonoText>
std::string format_terms(const std::vector<Term>& terms, MonoText&& mono_text, const char* times = "*") {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    int sign = t.coeff.display_sign();
    std::string mag = t.coeff.display_magnitude();
    std::string mono = mono_text(t.mono);
    if (first) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + times;
      out += mono;
    }
    first = false;
  }
  return out;
}

template <typename Order, typename MonoText>
std::string format_poly(const SparsePoly<Order>& p, MonoText&& mono_text, const char* times = "*") {
  return format_terms(p.terms(), mono_text, times);
}

/// Terms of a partition-indexed polynomial in display order: heaviest weight
/// first, and within one weight the partitions in increasing lexicographic
/// order (e1^2 before e2, p1*p2 before p3).
inline std::vector<SparsePoly<PartitionOrder>::Term> display_order(const SparsePoly<PartitionOrder>& p) {
  auto terms = p.terms();
  auto begin = terms.begin();
  while (begin != terms.end()) {
    unsigned w = begin->mono.weight();
    auto end = std::find_if(begin, terms.end(), [w](const auto& t) { return t.mono.weight() != w; });
    std::reverse(begin, end);
    begin = end;
  }
  return terms;
}

}  // namespace symfrac
