#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symfrac/coeff.hpp"
#include "symfrac/matrix.hpp"
#include "symfrac/sparse_poly.hpp"

namespace symfrac {

/// Polynomial in x1..xn over a RingSpec, graded-lex ordered.
class MPoly {
 public:
  using Poly = SparsePoly<GradedLex>;
  using Term = Poly::Term;

  MPoly(std::size_t nvars, const RingSpec& ring) : n_(nvars), poly_(ring) {}
  /// Throws MixedContext if some monomial uses a variable beyond x_n.
  MPoly(std::size_t nvars, Poly poly);

  static MPoly constant(std::size_t nvars, const Coeff& c) { return MPoly(nvars, Poly::constant(c)); }
  /// x_i for 1 <= i <= n.
  static MPoly variable(std::size_t nvars, std::size_t i, const RingSpec& ring);
  static MPoly monomial(std::size_t nvars, const std::vector<unsigned>& exps, const Coeff& c);

  std::size_t nvars() const noexcept { return n_; }
  const RingSpec& ring() const noexcept { return poly_.ring(); }
  const Poly& poly() const noexcept { return poly_; }
  const std::vector<Term>& terms() const noexcept { return poly_.terms(); }
  std::size_t size() const noexcept { return poly_.size(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  unsigned degree() const;

  MPoly zero_like() const { return MPoly(n_, ring()); }
  MPoly one_like() const { return constant(n_, Coeff(ring(), 1)); }

  /// Coefficient of x^exps (exps has n entries).
  Coeff coefficient(const std::vector<unsigned>& exps) const { return poly_.coefficient(Monomial(exps)); }

  MPoly operator-() const { return MPoly(n_, -poly_); }
  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly& operator*=(const MPoly& b);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  MPoly scale(const Coeff& c) const { return MPoly(n_, poly_.scale(c)); }
  MPoly pow(unsigned k) const { return MPoly(n_, poly_.pow(k)); }

  /// Throws NotDivisible when `divisor` does not divide exactly.
  MPoly exact_divide(const MPoly& divisor) const;

  /// Swaps x_i and x_j (1-based).
  MPoly swap_variables(std::size_t i, std::size_t j) const;
  /// Invariance under every adjacent transposition.
  bool is_symmetric() const;
  /// Same polynomial viewed in a ring with more variables.
  MPoly embed(std::size_t nvars) const;
  Coeff evaluate(const std::vector<Coeff>& point) const;

  /// "x1^2*x2 + 3*x3 - 1"
  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.poly_ == b.poly_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  std::size_t n_;
  Poly poly_;

  void check_context(const MPoly& b) const;
};

/// e_k(x1..xn): sum over k-subsets; e_0 = 1 and e_k = 0 for k > n.
MPoly elementary(unsigned k, std::size_t nvars, const RingSpec& ring);
/// p_k = sum x_i^k; p_0 is the image of n in the ring.
MPoly power_sum(unsigned k, std::size_t nvars, const RingSpec& ring);
/// h_k: sum over weakly increasing index k-tuples; h_0 = 1.
MPoly complete_homogeneous(unsigned k, std::size_t nvars, const RingSpec& ring);

/// p_k(x1..xm) embedded in the n-variable ring (m <= n).
MPoly power_sum_prefix(unsigned k, std::size_t m, std::size_t nvars, const RingSpec& ring);

/// f with x_k := 0 (1-based). For power sums and monomial sums with positive
/// exponents this is the polynomial evaluated at every variable but x_k.
MPoly drop_variable(const MPoly& f, std::size_t k);

/// d x d Hankel matrix with entry (i, j) = p_{start+i+j} (0-based i, j).
Matrix<MPoly> power_sum_hankel(std::size_t d, std::size_t nvars, const RingSpec& ring, unsigned start = 1);

/// prod_{i<j} (x_i - x_j)^2.
MPoly vandermonde_squared(std::size_t nvars, const RingSpec& ring);

/// f(x1..xm) with x_i sent to x_{targets[i-1]} in an nvars-variable ring.
MPoly rename_variables(const MPoly& f, const std::vector<std::size_t>& targets, std::size_t nvars);

/// Sum over d-subsets S of {1..n} of det P_{d,d}(x_S); zero when d > n.
MPoly hankel_subset_sum(std::size_t d, std::size_t nvars, const RingSpec& ring);

/// Exact determinant of a square polynomial matrix.
MPoly determinant(const Matrix<MPoly>& m);

}  // namespace symfrac
