#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace symfrac {

/// Exponent vector over an ordered family of symbols. Trailing zero slots are
/// never stored, so equal monomials compare equal regardless of how many
/// symbols the surrounding ring declares.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}
  explicit Monomial(std::span<const unsigned> exps) {
    exps_.assign(exps.begin(), exps.end());
    trim();
  }
  explicit Monomial(const std::vector<unsigned>& exps) : Monomial(std::span<const unsigned>(exps)) {}

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    if (power == 0) return m;
    m.exps_.resize(index + 1, 0);
    m.exps_[index] = static_cast<Exponent>(power);
    return m;
  }

  /// Number of stored slots (one past the highest symbol with non-zero exponent).
  std::size_t slots() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return i < exps_.size() ? exps_[i] : 0u; }
  bool is_one() const noexcept { return exps_.empty(); }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  /// Sum of (i+1) * exponent(i): the degree when symbol i has weight i+1.
  unsigned weight() const noexcept {
    unsigned w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) w += static_cast<unsigned>(i + 1) * exps_[i];
    return w;
  }

  void set(std::size_t i, unsigned e) {
    if (i >= exps_.size()) {
      if (e == 0) return;
      exps_.resize(i + 1, 0);
    }
    exps_[i] = static_cast<Exponent>(e);
    trim();
  }

  std::vector<unsigned> exponents(std::size_t width) const {
    std::vector<unsigned> out(std::max(width, exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i];
    return out;
  }

  bool divides(const Monomial& other) const noexcept {
    if (exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    const Monomial& longer = a.exps_.size() >= b.exps_.size() ? a : b;
    const Monomial& shorter = a.exps_.size() >= b.exps_.size() ? b : a;
    Monomial out(longer);
    for (std::size_t i = 0; i < shorter.exps_.size(); ++i) out.exps_[i] += shorter.exps_[i];
    return out;
  }

  /// Quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    for (std::size_t i = 0; i < b.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
    out.trim();
    return out;
  }

  Monomial pow(unsigned k) const {
    Monomial out(*this);
    for (auto& e : out.exps_) e = static_cast<Exponent>(e * k);
    if (k == 0) out.exps_.clear();
    return out;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t len = std::min(a.exps_.size(), b.exps_.size());
    out.exps_.resize(len);
    for (std::size_t i = 0; i < len; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.trim();
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  boost::container::small_vector<Exponent, 12> exps_;

  void trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Total degree first, then lexicographic with symbol 0 most significant.
struct GradedLex {
  static int compare(const Monomial& a, const Monomial& b) noexcept {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t len = std::max(a.slots(), b.slots());
    for (std::size_t i = 0; i < len; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
};

/// Order for partition-indexed symbols (e_i or P_i carry weight i): weight
/// first, then multiplicities compared from the largest index down. On
/// partitions of equal weight this is the lexicographic order of the
/// descending part lists.
struct PartitionOrder {
  static int compare(const Monomial& a, const Monomial& b) noexcept {
    unsigned wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb ? -1 : 1;
    std::size_t len = std::max(a.slots(), b.slots());
    for (std::size_t i = len; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
};

}  // namespace symfrac
