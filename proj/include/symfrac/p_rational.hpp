#pragma once

#include <functional>
#include <string>
#include <utility>

#include "symfrac/matrix.hpp"
#include "symfrac/mpoly.hpp"
#include "symfrac/partition.hpp"
#include "symfrac/sparse_poly.hpp"
#include "symfrac/sym_basis.hpp"

namespace symfrac {

/// Polynomial in formal power-sum symbols P1, P2, ...; slot i holds P_{i+1}.
/// The symbols are independent: no Frobenius relation is applied.
using PPoly = SparsePoly<PartitionOrder>;

/// P_i as a polynomial.
PPoly p_symbol(unsigned i, const RingSpec& ring);
/// c * P_lambda.
PPoly p_monomial(const Partition& lambda, const Coeff& c);

struct PRenderOptions {
  bool latex = false;
  /// Products written as one subscript, "p_{1334}" (only when all parts < 10).
  bool shorthand = false;
  /// Symbol letter; the engine's mixed display uses extra symbols above `mixed_offset`.
  char letter = 'p';
  /// Slots >= mixed_offset render as E_{slot - mixed_offset + 1}. 0 disables.
  std::size_t mixed_offset = 0;
};

std::string render(const PPoly& p, const PRenderOptions& opts = {});

/// Accepts "p1*p3^2 - 2*p_{1334} + 1" (also capital P).
PPoly parse_ppoly(const std::string& text, const RingSpec& ring);

/// P_i -> image(i) for every symbol (index i >= 1).
PPoly substitute_symbols(const PPoly& p, const std::function<PPoly(unsigned)>& image);
/// Replaces P_{kr} by P_k^r repeatedly, r the characteristic. Identity in characteristic 0.
PPoly frobenius_reduce(const PPoly& p);

/// Normalized fraction num/den of PPolys.
///  - den is never zero; a zero num has den 1.
///  - common monomial factors are removed and an exactly dividing den is divided out.
///  - over a field den is monic; over Z the joint content is removed and
///    den has a positive leading coefficient.
/// Equality is cross-multiplication.
class PRat {
 public:
  explicit PRat(PPoly num);
  /// Throws DivisionByZeroFraction when den is zero.
  PRat(PPoly num, PPoly den);
  static PRat constant(const Coeff& c) { return PRat(PPoly::constant(c)); }

  const PPoly& num() const noexcept { return num_; }
  const PPoly& den() const noexcept { return den_; }
  const RingSpec& ring() const noexcept { return num_.ring(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  PRat zero_like() const { return PRat(num_.zero_like()); }
  PRat one_like() const { return PRat(num_.one_like()); }

  PRat operator-() const;
  friend PRat operator+(const PRat& a, const PRat& b);
  friend PRat operator-(const PRat& a, const PRat& b) { return a + (-b); }
  friend PRat operator*(const PRat& a, const PRat& b);
  /// Throws DivisionByZeroFraction.
  friend PRat operator/(const PRat& a, const PRat& b);
  PRat& operator+=(const PRat& b) { return *this = *this + b; }
  PRat& operator-=(const PRat& b) { return *this = *this - b; }
  PRat& operator*=(const PRat& b) { return *this = *this * b; }
  PRat scale(const Coeff& c) const { return PRat(num_.scale(c), den_); }

  friend bool operator==(const PRat& a, const PRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const PRat& a, const PRat& b) { return !(a == b); }

  /// "(p1*p2 - p3)/p1", or "\frac{...}{...}" in LaTeX.
  std::string render(const PRenderOptions& opts = {}) const;
  std::string to_string() const { return render(); }

 private:
  PPoly num_, den_;

  struct Raw {};
  PRat(PPoly num, PPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
};

/// Removes the common monomial factor and, when numerator and denominator
/// involve one and the same symbol only, their univariate gcd.
PRat cancel_common(const PRat& a);

/// P_i -> p_i(x1..xn).
MPoly subst_x(const PPoly& p, std::size_t nvars);
/// (num, den) after P_i -> p_i(x1..xn). Throws DenominatorVanishes.
std::pair<MPoly, MPoly> subst_x(const PRat& a, std::size_t nvars);
/// P_i -> p_i written in the e-basis.
EExpansion subst_e(const PPoly& p, std::size_t nvars);
std::pair<EExpansion, EExpansion> subst_e(const PRat& a, std::size_t nvars);

/// Fraction-free Gauss-Jordan on a polynomial matrix with at least as many
/// columns as rows. On success the leading block equals `pivot` times the
/// identity and `pivot` = +-det(leading block) (sign from row swaps).
struct FractionFreeForm {
  Matrix<PPoly> reduced;
  PPoly pivot;
};
/// Throws SingularBlock if the leading block is formally singular.
FractionFreeForm fraction_free_reduce(Matrix<PPoly> m);

/// Row reduces a d x (d+c) matrix of fractions to (I | C). Rows are cleared
/// of denominators first, eliminated fraction-free, and divided once at the end.
Matrix<PRat> solve_reduce(const Matrix<PRat>& m);

}  // namespace symfrac
