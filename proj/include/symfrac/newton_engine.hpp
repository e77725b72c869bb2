#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symfrac/p_rational.hpp"

namespace symfrac {

/// d x d Hankel matrix of power-sum symbols, entry (i, j) = P_{start+i+j-2}
/// (1-based). With start = 1 this is P_{d,n} written formally.
struct HankelSpec {
  unsigned d = 1;
  std::size_t n = 1;
  unsigned start = 1;

  /// "P_{d,n}", or "P_{d,n}[start]" when start != 1.
  std::string to_string() const;
  friend bool operator==(const HankelSpec&, const HankelSpec&) = default;
};

Matrix<PPoly> hankel_matrix(const HankelSpec& h, const RingSpec& ring);

/// The (n-k+1) x (n+1) system of Newton identities N = n+1 .. 2n-k+1 in the
/// unknowns (e_n, ..., e_1, 1): entry (t, j) = (-1)^{t+j} P_{t+j-1}.
/// Throws InvalidRange unless 1 <= k <= n and k is not invertible.
Matrix<PPoly> build_system(std::size_t n, unsigned k, const RingSpec& ring);

/// Last equation of the fraction-free reduced system:
///   pivot * e_k + sum_{i<k} lower[i] * e_i = 0   (e_0 = 1),
/// where pivot = +-det P_{n-k+1,n}.
struct HankelRelation {
  unsigned k;
  std::size_t n;
  PPoly pivot;
  std::vector<PPoly> lower;
};
HankelRelation hankel_relation(std::size_t n, unsigned k, const RingSpec& ring);

enum class Route { Newton, Hankel };
const char* to_string(Route route);

struct ExpressOptions {
  /// Send every k >= 2 through the Hankel system, even when k is invertible.
  bool hankel_for_all = false;
  friend bool operator==(const ExpressOptions&, const ExpressOptions&) = default;
};

/// e_k as a fraction in P1..P_{2n+1-r0}.
struct EFormula {
  unsigned k;
  std::size_t n;
  RingSpec ring;
  PRat value;
  Route route;
  /// The Hankel block whose determinant this step divides by; empty when the
  /// step only divides by the unit k.
  std::optional<HankelSpec> denominator;
  /// Same step with E1 = P1 and the lower e_i (i >= 2) kept as symbols
  /// E_i, stored in slots mixed_offset + i - 1.
  PRat mixed;
  std::size_t mixed_offset;

  std::string denominator_id() const { return denominator ? denominator->to_string() : "unit"; }
  std::string render(const PRenderOptions& opts = {}) const { return value.render(opts); }
  std::string render_mixed(PRenderOptions opts = {}) const;
};

/// Builds e_1..e_k inductively: e_1 = P1, invertible k by Newton's identity,
/// the others from the reduced Hankel system with lower formulas substituted.
/// Results are cached per (n, ring, options). Throws RangeError unless 1 <= k <= n.
EFormula express_e(unsigned k, std::size_t n, const RingSpec& ring, const ExpressOptions& opts = {});
/// e_1..e_n.
std::vector<EFormula> express_all(std::size_t n, const RingSpec& ring, const ExpressOptions& opts = {});

/// det P_{n-k+1,n} evaluated at the point is non-zero.
bool denominator_test(unsigned k, std::size_t n, const std::vector<Coeff>& values);

enum class VerifyBasis {
  /// P_i -> p_i in the e-basis; num = e_k * den compared there.
  EBasis,
  /// P_i -> p_i(x1..xn); exact division num / den compared with e_k(x).
  XBasis,
};

struct Verification {
  bool ok;
  std::string diagnostic;
};
/// Certificate for a formula: after substitution the denominator is non-zero
/// and num / den is exactly e_k.
Verification check_formula(const EFormula& f, VerifyBasis basis = VerifyBasis::EBasis);
/// Same check for an arbitrary fraction claimed to equal e_k(x1..xn).
Verification check_fraction(const PRat& value, unsigned k, std::size_t n, VerifyBasis basis = VerifyBasis::EBasis);
inline bool verify_formula(const EFormula& f, VerifyBasis basis = VerifyBasis::EBasis) {
  return check_formula(f, basis).ok;
}

/// det(newton_matrix(P1..Pk)) / k! as a fraction. Throws NonInvertible unless k! is a unit.
PRat newton_determinant_formula(unsigned k, const RingSpec& ring);

/// Largest power-sum index used by a fraction (0 for constants).
unsigned max_symbol(const PRat& a);

struct SweepRow {
  unsigned k;
  std::size_t n;
  RingSpec ring;
  bool verified;
  std::string denominator_id;
  Route route;
  double seconds;
  std::string diagnostic;
};
/// express_e + verify_formula for every ring, n <= max_n with n >= r0 (any n
/// for Q), and 1 <= k <= n. Grid points run on `threads` workers.
std::vector<SweepRow> verify_sweep(const std::vector<RingSpec>& rings, std::size_t max_n, unsigned threads = 0);

}  // namespace symfrac
