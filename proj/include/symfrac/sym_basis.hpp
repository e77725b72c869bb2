#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symfrac/coeff.hpp"
#include "symfrac/matrix.hpp"
#include "symfrac/mpoly.hpp"
#include "symfrac/partition.hpp"
#include "symfrac/sparse_poly.hpp"

namespace symfrac {

/// Symmetric polynomial in n variables written in the e-basis: a linear
/// combination of products e_lambda. Symbol slot i stands for e_{i+1}; parts
/// larger than n vanish and are dropped on construction.
class EExpansion {
 public:
  using Poly = SparsePoly<PartitionOrder>;

  EExpansion(std::size_t nvars, const RingSpec& ring) : n_(nvars), poly_(ring) {}
  EExpansion(std::size_t nvars, Poly poly);

  /// e_i; e_0 = 1 and e_i = 0 for i > n.
  static EExpansion generator(unsigned i, std::size_t nvars, const RingSpec& ring);
  static EExpansion constant(std::size_t nvars, const Coeff& c) { return EExpansion(nvars, Poly::constant(c)); }
  static EExpansion from_terms(std::size_t nvars, const RingSpec& ring,
                               const std::vector<std::pair<Partition, Coeff>>& terms);

  std::size_t nvars() const noexcept { return n_; }
  const RingSpec& ring() const noexcept { return poly_.ring(); }
  const Poly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  std::size_t size() const noexcept { return poly_.size(); }

  EExpansion zero_like() const { return EExpansion(n_, ring()); }
  EExpansion one_like() const { return constant(n_, Coeff(ring(), 1)); }

  /// Terms as (partition, coefficient), in descending partition order.
  std::vector<std::pair<Partition, Coeff>> entries() const;
  Coeff coefficient(const Partition& lambda) const { return poly_.coefficient(lambda.to_monomial()); }
  bool is_homogeneous() const;
  /// Weight of the leading partition (0 for the zero expansion).
  unsigned degree() const;
  /// Splits into homogeneous components, lowest degree first.
  std::vector<EExpansion> homogeneous_components() const;

  EExpansion operator-() const { return EExpansion(n_, -poly_); }
  EExpansion& operator+=(const EExpansion& b);
  EExpansion& operator-=(const EExpansion& b);
  EExpansion& operator*=(const EExpansion& b);
  friend EExpansion operator+(EExpansion a, const EExpansion& b) { return a += b; }
  friend EExpansion operator-(EExpansion a, const EExpansion& b) { return a -= b; }
  friend EExpansion operator*(EExpansion a, const EExpansion& b) { return a *= b; }
  EExpansion scale(const Coeff& c) const { return EExpansion(n_, poly_.scale(c)); }
  EExpansion pow(unsigned k) const;
  EExpansion exact_divide(const EExpansion& divisor) const;

  /// "e1^2 - 2*e2", indices descending within each product.
  std::string to_string() const;
  /// "e_{1}^{2} - 2 e_{2}"
  std::string to_latex() const;

  friend bool operator==(const EExpansion& a, const EExpansion& b) { return a.n_ == b.n_ && a.poly_ == b.poly_; }
  friend bool operator!=(const EExpansion& a, const EExpansion& b) { return !(a == b); }

 private:
  std::size_t n_;
  Poly poly_;

  void check_context(const EExpansion& b) const;
  void truncate();
};

/// Writes a symmetric polynomial in the e-basis by repeatedly cancelling the
/// graded-lex leading monomial. Throws NotSymmetric.
EExpansion decompose(const MPoly& f);

/// Multiplies out every e_lambda.
MPoly expand(const EExpansion& g);

/// p_m from Newton's identity p_m = (-1)^{m-1} m e_m + sum_{i<m} (-1)^{m-1-i} e_{m-i} p_i.
EExpansion p_to_e_recursive(unsigned m, std::size_t nvars, const RingSpec& ring);
/// p_1..p_m from the same recursion (index 0 holds p_1).
std::vector<EExpansion> p_to_e_table(unsigned m, std::size_t nvars, const RingSpec& ring);

/// p_m from the closed form with coefficients m (t_1+...+t_m-1)! / (t_1! ... t_m!)
/// computed over the integers first.
EExpansion p_to_e_closed(unsigned m, std::size_t nvars, const RingSpec& ring);

/// h_k from h_k = sum_{i=1}^k (-1)^{i-1} e_i h_{k-i}.
EExpansion h_to_e(unsigned k, std::size_t nvars, const RingSpec& ring);

/// e_k = k^{-1} sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i with p_i written in the
/// e-basis. `lower_e[i]` supplies e_i for i < k; an empty list uses the
/// generators. Throws NonInvertible when k is not a unit.
EExpansion newton_e_from_p_invertible(unsigned k, std::size_t nvars, const RingSpec& ring,
                                      const std::vector<EExpansion>& lower_e = {});

/// Same identity on values: `lower_e[i]` = e_i for 0 <= i < k, `p[i-1]` = p_i.
Coeff newton_e_value(unsigned k, const std::vector<Coeff>& lower_e, const std::vector<Coeff>& p);

/// The k x k matrix whose determinant is k! e_k: p_{i-j+1} on and below the
/// diagonal, i on the superdiagonal of row i, zero elsewhere. `p[i-1]` = p_i.
template <typename P>
Matrix<P> newton_matrix(unsigned k, const std::vector<P>& p) {
  Matrix<P> m(k, k, p.at(0).zero_like());
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j <= i; ++j) m(i, j) = p.at(i - j);
    if (i + 1 < k) m(i, i + 1) = p.at(0).one_like().scale(Coeff(p.at(0).ring(), static_cast<long long>(i + 1)));
  }
  return m;
}

/// e_k as det(newton_matrix) / k!. Throws NonInvertible unless k! is a unit.
EExpansion newton_determinant_form(unsigned k, std::size_t nvars, const RingSpec& ring);

/// Parses sums of products of e_i, p_i and h_i with optional coefficients,
/// e.g. "e1*e2 - 2*p3^2 + h2", into the e-basis.
EExpansion parse_symmetric(const std::string& text, std::size_t nvars, const RingSpec& ring);

}  // namespace symfrac
