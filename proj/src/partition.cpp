#include "symfrac/partition.hpp"

#include <algorithm>

namespace symfrac {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0u);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_monomial(const Monomial& m) {
  std::vector<unsigned> parts;
  for (std::size_t i = m.slots(); i-- > 0;)
    for (unsigned e = 0; e < m[i]; ++e) parts.push_back(static_cast<unsigned>(i + 1));
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

Monomial Partition::to_monomial() const {
  Monomial m;
  for (unsigned part : parts_) m.set(part - 1, m[part - 1] + 1);
  return m;
}

unsigned Partition::weight() const noexcept {
  unsigned w = 0;
  for (unsigned part : parts_) w += part;
  return w;
}

unsigned Partition::multiplicity(unsigned part) const noexcept {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(unsigned weight, const std::function<bool(unsigned)>& allowed) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned part = std::min(left, cap); part >= 1; --part) {
      if (!allowed(part)) continue;
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(weight, weight);
  return out;
}

std::vector<Partition> partitions_of(unsigned weight, unsigned max_part) {
  return partitions_of(weight, [max_part](unsigned part) { return part <= max_part; });
}

}  // namespace symfrac
