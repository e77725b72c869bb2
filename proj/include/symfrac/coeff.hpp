#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "symfrac/error.hpp"

namespace symfrac {

/// Coefficient domain: the integers, the rationals, or a prime field F_r.
/// Serialized as "Z", "Q" or "F" followed by the prime ("F2", "F101").
class RingSpec {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static RingSpec integers() { return RingSpec(Kind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(Kind::Rationals, 0); }
  /// Throws InvalidRing unless `r` is a prime below 2^31.
  static RingSpec prime_field(std::uint64_t r);
  static RingSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }

  /// Smallest positive integer that is not a unit: r in F_r, 2 in Z.
  /// Every positive integer is a unit in Q, so this throws UnsupportedRing there.
  std::uint64_t r0() const;

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// True iff the image of k >= 1 in the ring is a unit.
bool is_invertible_int(std::uint64_t k, const RingSpec& ring);

/// Exact element of a RingSpec. Prime field values are canonical residues
/// 0..r-1, rationals are kept in lowest terms, integers are unbounded.
class Coeff {
 public:
  explicit Coeff(const RingSpec& ring);
  Coeff(const RingSpec& ring, long long value);
  Coeff(const RingSpec& ring, const mpz_class& value);
  /// Rational input is mapped into the ring; throws DivisionByNonUnit when the
  /// denominator has no inverse there (e.g. 1/2 in Z or in F2).
  Coeff(const RingSpec& ring, const mpq_class& value);

  /// Accepts "17", "-3", "5/6". Throws ParseError on malformed text.
  static Coeff parse(const RingSpec& ring, std::string_view text);

  const RingSpec& ring() const noexcept { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator/=(const Coeff& other);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  Coeff inverse() const;
  Coeff pow(std::uint64_t exponent) const;

  /// Exact quotient in Z when `divisor` divides this value; plain division in
  /// fields. Throws NotDivisible otherwise.
  Coeff exact_div(const Coeff& divisor) const;

  // Element interface shared with the polynomial types, so the generic
  // determinant code accepts plain coefficient matrices.
  Coeff zero_like() const { return Coeff(ring_); }
  Coeff one_like() const { return Coeff(ring_, 1); }
  Coeff exact_divide(const Coeff& divisor) const { return exact_div(divisor); }
  Coeff scale(const Coeff& c) const { return *this * c; }

  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  /// Sign used for display: balanced residues in F_r (r-1 shows as -1).
  int display_sign() const;
  /// Absolute value of the display representative, as text.
  std::string display_magnitude() const;

  /// Canonical text: residue for F_r, "a/b" for non-integral rationals.
  std::string to_string() const;

  std::uint64_t residue() const;           // PrimeField only
  const mpz_class& integer() const;        // Integers only
  mpq_class to_rational() const;           // Integers and Rationals

 private:
  RingSpec ring_;
  std::variant<std::uint64_t, mpz_class, mpq_class> value_;

  void require_same_ring(const Coeff& other) const;
};

/// gcd of two integer coefficients (non-negative result).
Coeff integer_gcd(const Coeff& a, const Coeff& b);

}  // namespace symfrac
