#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symfrac/sym_basis.hpp"

namespace symfrac {

/// Is `target` in K[p_i : i in generator_indices] inside the symmetric
/// polynomials in n variables? K must be a field.
struct MembershipQuery {
  RingSpec ring;
  std::size_t n;
  EExpansion target;
  /// Unset means every index coprime to the characteristic up to degree_bound
  /// (every index in characteristic 0).
  std::optional<std::set<unsigned>> generator_indices;
  /// Largest degree examined; 0 means the target degree.
  unsigned degree_bound = 0;
};

struct MembershipAnswer {
  bool member;
  /// target = sum c_lambda p_lambda when member (p_lambda = prod p_{lambda_i}).
  std::vector<std::pair<Partition, Coeff>> certificate;
  /// Rank of the p_lambda products in each examined degree, summed.
  std::size_t spanning_dimension;
  /// Number of e-basis monomials in the examined degrees.
  std::size_t slice_dimension;
  /// Degrees of the homogeneous components that are not in the span.
  std::vector<unsigned> failing_degrees;
};

/// Solves degree by degree: each homogeneous component is matched against the
/// p_lambda with |lambda| equal to its degree and parts among the generators.
/// Throws InvalidRing unless the ring is a field, RangeError when the target
/// lives in another ring or exceeds degree_bound.
MembershipAnswer membership(const MembershipQuery& q);

/// sum c_lambda p_lambda written in the e-basis.
EExpansion expand_certificate(const std::vector<std::pair<Partition, Coeff>>& certificate, std::size_t n,
                              const RingSpec& ring);

/// Every partition in the support of p_m in the e-basis has a part coprime to
/// the characteristic. Throws InvalidRange when r | m.
bool coprime_part_check(unsigned m, const RingSpec& ring, std::size_t n);

/// k = a r + b with 0 < b < r.
struct WitnessSplit {
  unsigned a, b;
};
/// Throws InvalidRange when r | k.
WitnessSplit witness_split(unsigned k, const RingSpec& ring);
/// Coefficient of e_r^a e_b in p_k (n >= r).
Coeff witness_coefficient(unsigned k, const RingSpec& ring, std::size_t n);

/// p_k is not in K[p_1..p_{k-1}] at degree k. Requires r not dividing k.
bool chain_gap_check(unsigned k, const RingSpec& ring, std::size_t n);

}  // namespace symfrac
