#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symfrac/monomial.hpp"

namespace symfrac {

/// Weakly decreasing list of positive parts. The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; zeros are dropped and the rest sorted descending.
  explicit Partition(std::vector<unsigned> parts);

  /// Part i (value) appears exps[i-1] times.
  static Partition from_monomial(const Monomial& m);
  Monomial to_monomial() const;

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  unsigned weight() const noexcept;
  unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  unsigned multiplicity(unsigned part) const noexcept;

  /// "(3,3,1)"; "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Partitions of `weight` whose parts satisfy `allowed`, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(unsigned weight, const std::function<bool(unsigned)>& allowed);
/// Partitions of `weight` with every part <= max_part.
std::vector<Partition> partitions_of(unsigned weight, unsigned max_part);

}  // namespace symfrac
