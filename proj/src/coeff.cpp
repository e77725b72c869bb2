#include "symfrac/coeff.hpp"

#include <cctype>
#include <limits>

namespace symfrac {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::DivisionByZeroFraction: return "DivisionByZeroFraction";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::InsufficientTraces: return "InsufficientTraces";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::prime_field(std::uint64_t r) {
  if (r >= (std::uint64_t{1} << 31) || !is_prime(r))
    throw Error(ErrorKind::InvalidRing, "modulus " + std::to_string(r) + " is not a supported prime");
  return RingSpec(Kind::PrimeField, r);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t r = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || r > (std::uint64_t{1} << 40))
        throw Error(ErrorKind::InvalidRing, "malformed ring '" + std::string(text) + "'");
      r = r * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime_field(r);
  }
  throw Error(ErrorKind::InvalidRing, "unknown ring '" + std::string(text) + "' (expected Z, Q or F<prime>)");
}

std::uint64_t RingSpec::r0() const {
  switch (kind_) {
    case Kind::Integers: return 2;
    case Kind::PrimeField: return modulus_;
    case Kind::Rationals: break;
  }
  throw Error(ErrorKind::UnsupportedRing, "every positive integer is invertible in Q");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(modulus_);
  }
  return "?";
}

bool is_invertible_int(std::uint64_t k, const RingSpec& ring) {
  switch (ring.kind()) {
    case RingSpec::Kind::Rationals: return k != 0;
    case RingSpec::Kind::Integers: return k == 1;
    case RingSpec::Kind::PrimeField: return k % ring.modulus() != 0;
  }
  return false;
}

namespace {

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t r) {
  mpz_class m;
  mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(r));
  return m.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t r) {
  // extended Euclid on signed 64-bit; r < 2^31 so nothing overflows
  std::int64_t t = 0, new_t = 1;
  std::int64_t rr = static_cast<std::int64_t>(r), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = rr / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = rr - q * new_r;
    rr = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(r);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Coeff::Coeff(const RingSpec& ring) : ring_(ring) {
  switch (ring.kind()) {
    case RingSpec::Kind::PrimeField: value_ = std::uint64_t{0}; break;
    case RingSpec::Kind::Integers: value_ = mpz_class(0); break;
    case RingSpec::Kind::Rationals: value_ = mpq_class(0); break;
  }
}

Coeff::Coeff(const RingSpec& ring, long long value) : Coeff(ring, mpz_class(static_cast<long>(value))) {}

Coeff::Coeff(const RingSpec& ring, const mpz_class& value) : ring_(ring) {
  switch (ring.kind()) {
    case RingSpec::Kind::PrimeField: value_ = reduce_mod(value, ring.modulus()); break;
    case RingSpec::Kind::Integers: value_ = value; break;
    case RingSpec::Kind::Rationals: value_ = mpq_class(value); break;
  }
}

Coeff::Coeff(const RingSpec& ring, const mpq_class& value) : ring_(ring) {
  mpq_class q = value;
  q.canonicalize();
  switch (ring.kind()) {
    case RingSpec::Kind::Rationals: value_ = q; break;
    case RingSpec::Kind::Integers:
      if (q.get_den() != 1)
        throw Error(ErrorKind::DivisionByNonUnit, q.get_str() + " is not an integer");
      value_ = mpz_class(q.get_num());
      break;
    case RingSpec::Kind::PrimeField: {
      std::uint64_t den = reduce_mod(q.get_den(), ring.modulus());
      if (den == 0)
        throw Error(ErrorKind::DivisionByNonUnit, "denominator of " + q.get_str() + " vanishes in " + ring.to_string());
      std::uint64_t num = reduce_mod(q.get_num(), ring.modulus());
      value_ = num * inverse_mod(den, ring.modulus()) % ring.modulus();
      break;
    }
  }
}

Coeff Coeff::parse(const RingSpec& ring, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s));
  };
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(t)) throw Error(ErrorKind::ParseError, "malformed coefficient '" + std::string(text) + "'");
    return Coeff(ring, to_mpz(t));
  }
  std::string_view num = trim(t.substr(0, slash)), den = trim(t.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw Error(ErrorKind::ParseError, "malformed coefficient '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorKind::DivisionByNonUnit, "zero denominator in '" + std::string(text) + "'");
  return Coeff(ring, mpq_class(to_mpz(num), d));
}

void Coeff::require_same_ring(const Coeff& other) const {
  if (!(ring_ == other.ring_))
    throw Error(ErrorKind::MixedRings, ring_.to_string() + " vs " + other.ring_.to_string());
}

bool Coeff::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_) == 0;
    default: return std::get<2>(value_) == 0;
  }
}

bool Coeff::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: return std::get<2>(value_) == 1;
  }
}

bool Coeff::is_unit() const {
  if (value_.index() == 1) {
    const mpz_class& v = std::get<1>(value_);
    return v == 1 || v == -1;
  }
  return !is_zero();
}

Coeff Coeff::operator-() const {
  Coeff out(*this);
  switch (value_.index()) {
    case 0: {
      std::uint64_t v = std::get<0>(value_);
      out.value_ = v == 0 ? 0 : ring_.modulus() - v;
      break;
    }
    case 1: out.value_ = mpz_class(-std::get<1>(value_)); break;
    default: out.value_ = mpq_class(-std::get<2>(value_)); break;
  }
  return out;
}

Coeff& Coeff::operator+=(const Coeff& other) {
  require_same_ring(other);
  switch (value_.index()) {
    case 0: {
      std::uint64_t s = std::get<0>(value_) + std::get<0>(other.value_);
      if (s >= ring_.modulus()) s -= ring_.modulus();
      value_ = s;
      break;
    }
    case 1: std::get<1>(value_) += std::get<1>(other.value_); break;
    default: std::get<2>(value_) += std::get<2>(other.value_); break;
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) {
  require_same_ring(other);
  switch (value_.index()) {
    case 0: {
      std::uint64_t a = std::get<0>(value_), b = std::get<0>(other.value_);
      value_ = a >= b ? a - b : a + ring_.modulus() - b;
      break;
    }
    case 1: std::get<1>(value_) -= std::get<1>(other.value_); break;
    default: std::get<2>(value_) -= std::get<2>(other.value_); break;
  }
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& other) {
  require_same_ring(other);
  switch (value_.index()) {
    case 0: value_ = std::get<0>(value_) * std::get<0>(other.value_) % ring_.modulus(); break;
    case 1: std::get<1>(value_) *= std::get<1>(other.value_); break;
    default: std::get<2>(value_) *= std::get<2>(other.value_); break;
  }
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& other) {
  require_same_ring(other);
  return *this *= other.inverse();
}

Coeff Coeff::inverse() const {
  if (!is_unit())
    throw Error(ErrorKind::DivisionByNonUnit, to_string() + " has no inverse in " + ring_.to_string());
  Coeff out(*this);
  switch (value_.index()) {
    case 0: out.value_ = inverse_mod(std::get<0>(value_), ring_.modulus()); break;
    case 1: break;  // +-1 is its own inverse
    default: out.value_ = mpq_class(1 / std::get<2>(value_)); break;
  }
  return out;
}

Coeff Coeff::pow(std::uint64_t exponent) const {
  Coeff result(ring_, 1);
  Coeff base(*this);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Coeff Coeff::exact_div(const Coeff& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  if (value_.index() != 1) return *this / divisor;
  const mpz_class& a = std::get<1>(value_);
  const mpz_class& b = std::get<1>(divisor.value_);
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw Error(ErrorKind::NotDivisible, a.get_str() + " is not divisible by " + b.get_str());
  Coeff out(ring_);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  out.value_ = q;
  return out;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!(a.ring_ == b.ring_)) return false;
  switch (a.value_.index()) {
    case 0: return std::get<0>(a.value_) == std::get<0>(b.value_);
    case 1: return std::get<1>(a.value_) == std::get<1>(b.value_);
    default: return std::get<2>(a.value_) == std::get<2>(b.value_);
  }
}

int Coeff::display_sign() const {
  switch (value_.index()) {
    case 0: {
      std::uint64_t v = std::get<0>(value_);
      if (v == 0) return 0;
      return 2 * v > ring_.modulus() ? -1 : 1;
    }
    case 1: return sgn(std::get<1>(value_));
    default: return sgn(std::get<2>(value_));
  }
}

std::string Coeff::display_magnitude() const {
  switch (value_.index()) {
    case 0: {
      std::uint64_t v = std::get<0>(value_);
      if (2 * v > ring_.modulus()) v = ring_.modulus() - v;
      return std::to_string(v);
    }
    case 1: return mpz_class(abs(std::get<1>(value_))).get_str();
    default: return mpq_class(abs(std::get<2>(value_))).get_str();
  }
}

std::string Coeff::to_string() const {
  switch (value_.index()) {
    case 0: return std::to_string(std::get<0>(value_));
    case 1: return std::get<1>(value_).get_str();
    default: return std::get<2>(value_).get_str();
  }
}

std::uint64_t Coeff::residue() const {
  if (value_.index() != 0) throw Error(ErrorKind::UnsupportedRing, "residue() needs a prime field");
  return std::get<0>(value_);
}

const mpz_class& Coeff::integer() const {
  if (value_.index() != 1) throw Error(ErrorKind::UnsupportedRing, "integer() needs Z");
  return std::get<1>(value_);
}

mpq_class Coeff::to_rational() const {
  switch (value_.index()) {
    case 1: return mpq_class(std::get<1>(value_));
    case 2: return std::get<2>(value_);
    default: throw Error(ErrorKind::UnsupportedRing, "to_rational() needs Z or Q");
  }
}

Coeff integer_gcd(const Coeff& a, const Coeff& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coeff(a.ring(), g);
}

}  // namespace symfrac
