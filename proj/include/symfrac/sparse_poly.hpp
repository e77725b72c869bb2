#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symfrac/coeff.hpp"
#include "symfrac/error.hpp"
#include "symfrac/monomial.hpp"

namespace symfrac {

/// Sparse polynomial over a RingSpec in an unbounded family of commuting
/// symbols. Terms are kept sorted in descending `Order` with no zero
/// coefficients, so structural equality is mathematical equality.
template <typename Order>
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  explicit SparsePoly(const RingSpec& ring) : ring_(ring) {}

  static SparsePoly constant(const Coeff& c) { return monomial(Monomial{}, c); }

  static SparsePoly monomial(const Monomial& m, const Coeff& c) {
    SparsePoly p(c.ring());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Combines duplicate monomials, drops zeros and sorts.
  static SparsePoly from_terms(const RingSpec& ring, std::vector<Term> terms) {
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
      auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    SparsePoly p(ring);
    p.adopt(acc);
    return p;
  }

  const RingSpec& ring() const noexcept { return ring_; }
  SparsePoly zero_like() const { return SparsePoly(ring_); }
  SparsePoly one_like() const { return constant(Coeff(ring_, 1)); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Leading term under Order; the polynomial must be non-zero.
  const Term& leading() const { return terms_.front(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return Order::compare(t.mono, key) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Coeff(ring_);
  }

  /// Number of symbols touched by some term.
  std::size_t slots() const noexcept {
    std::size_t s = 0;
    for (const auto& t : terms_) s = std::max(s, t.mono.slots());
    return s;
  }

  Monomial monomial_gcd() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.front().mono;
    for (const auto& t : terms_) g = gcd(g, t.mono);
    return g;
  }

  SparsePoly operator-() const {
    SparsePoly out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  SparsePoly& operator+=(const SparsePoly& b) { return *this = merge(*this, b, false); }
  SparsePoly& operator-=(const SparsePoly& b) { return *this = merge(*this, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_ring(a, b);
    SparsePoly out(a.ring_);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Coeff c = ta.coeff * tb.coeff;
        auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, c);
        if (!inserted) it->second += c;
      }
    }
    out.adopt(acc);
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

  SparsePoly scale(const Coeff& c) const {
    SparsePoly out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Coeff v = t.coeff * c;
      if (!v.is_zero()) out.terms_.push_back({t.mono, std::move(v)});
    }
    return out;
  }

  /// Multiplication by a single term keeps the order (monomial orders are
  /// compatible with multiplication), so no re-sort is needed.
  SparsePoly mul_term(const Monomial& m, const Coeff& c) const {
    SparsePoly out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Coeff v = t.coeff * c;
      if (!v.is_zero()) out.terms_.push_back({t.mono * m, std::move(v)});
    }
    return out;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly result = constant(Coeff(ring_, 1));
    SparsePoly base(*this);
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Exact quotient, or false when `divisor` does not divide this polynomial.
  bool try_divide(const SparsePoly& divisor, SparsePoly& quotient) const {
    check_ring(*this, divisor);
    if (divisor.is_zero()) return false;
    quotient = SparsePoly(ring_);
    if (is_zero()) return true;
    const Term& lead = divisor.leading();
    if (divisor.size() == 1) {
      SparsePoly q(ring_);
      q.terms_.reserve(terms_.size());
      for (const auto& t : terms_) {
        if (!lead.mono.divides(t.mono)) return false;
        Coeff c(ring_);
        if (!divide_coeff(t.coeff, lead.coeff, c)) return false;
        q.terms_.push_back({t.mono / lead.mono, std::move(c)});
      }
      quotient = std::move(q);
      return true;
    }
    struct Desc {
      bool operator()(const Monomial& a, const Monomial& b) const { return Order::compare(a, b) > 0; }
    };
    std::map<Monomial, Coeff, Desc> rem;
    for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> q;
    while (!rem.empty()) {
      auto top = rem.begin();
      if (!lead.mono.divides(top->first)) return false;
      Coeff c(ring_);
      if (!divide_coeff(top->second, lead.coeff, c)) return false;
      Monomial m = top->first / lead.mono;
      rem.erase(top);
      for (std::size_t i = 1; i < divisor.terms_.size(); ++i) {
        const Term& t = divisor.terms_[i];
        Coeff v = c * t.coeff;
        auto [it, inserted] = rem.try_emplace(t.mono * m, -v);
        if (!inserted) {
          it->second -= v;
          if (it->second.is_zero()) rem.erase(it);
        }
      }
      q.push_back({std::move(m), std::move(c)});
    }
    quotient.terms_ = std::move(q);
    return true;
  }

  SparsePoly exact_divide(const SparsePoly& divisor) const {
    SparsePoly q(ring_);
    if (!try_divide(divisor, q)) throw Error(ErrorKind::NotDivisible, "polynomial division is not exact");
    return q;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

 private:
  RingSpec ring_;
  std::vector<Term> terms_;

  static void check_ring(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.ring_ == b.ring_))
      throw Error(ErrorKind::MixedRings, a.ring_.to_string() + " vs " + b.ring_.to_string());
  }

  static bool divide_coeff(const Coeff& a, const Coeff& b, Coeff& out) {
    if (a.ring().kind() == RingSpec::Kind::Integers) {
      if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t())) return false;
      out = a.exact_div(b);
      return true;
    }
    out = a / b;
    return true;
  }

  void adopt(std::unordered_map<Monomial, Coeff, MonomialHash>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.push_back({m, std::move(c)});
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return Order::compare(x.mono, y.mono) > 0; });
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    check_ring(a, b);
    SparsePoly out(a.ring_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = Order::compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const Term& t = b.terms_[j++];
        out.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        Coeff c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }
};

/// Ring homomorphism out of a SparsePoly: symbol i maps to `image(i)`, a
/// constant c maps to `constant(c)`. Terms are walked as a trie over their
/// ascending symbol sequences and evaluated Horner-style, so shared prefixes
/// are multiplied once.
template <typename Order, typename Target, typename ImageFn, typename ConstFn>
Target substitute(const SparsePoly<Order>& p, ImageFn&& image, ConstFn&& constant) {
  using Seq = std::vector<std::uint32_t>;
  std::vector<std::pair<Seq, const Coeff*>> items;
  items.reserve(p.size());
  for (const auto& t : p.terms()) {
    Seq s;
    for (std::size_t i = 0; i < t.mono.slots(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) s.push_back(static_cast<std::uint32_t>(i));
    items.emplace_back(std::move(s), &t.coeff);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  auto eval = [&](auto&& self, std::size_t lo, std::size_t hi, std::size_t depth) -> Target {
    Target acc = constant(Coeff(p.ring()));
    while (lo < hi && items[lo].first.size() == depth) {
      acc += constant(*items[lo].second);
      ++lo;
    }
    while (lo < hi) {
      std::uint32_t sym = items[lo].first[depth];
      std::size_t end = lo;
      while (end < hi && items[end].first[depth] == sym) ++end;
      Target child = self(self, lo, end, depth + 1);
      acc += child * image(sym);
      lo = end;
    }
    return acc;
  };
  return eval(eval, 0, items.size(), 0);
}

}  // namespace symfrac
