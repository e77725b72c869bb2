#include <doctest.h>

#include <random>

#include "symfrac/mpoly.hpp"

using namespace symfrac;

namespace {
const RingSpec Z = RingSpec::integers();
const RingSpec F2 = RingSpec::prime_field(2);

MPoly x(std::size_t n, std::size_t i, const RingSpec& ring = Z) { return MPoly::variable(n, i, ring); }

// Leibniz sum over permutations, for comparison with the library determinant.
MPoly permutation_determinant(const Matrix<MPoly>& m) {
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  MPoly acc = m(0, 0).zero_like();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    MPoly prod = m(0, 0).one_like();
    for (std::size_t i = 0; i < perm.size(); ++i) prod *= m(i, perm[i]);
    acc += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}
}  // namespace

TEST_CASE("generators") {
  CHECK(elementary(2, 2, Z) == x(2, 1) * x(2, 2));
  CHECK(elementary(0, 3, Z) == MPoly::constant(3, Coeff(Z, 1)));
  CHECK(elementary(4, 3, Z).is_zero());
  CHECK(power_sum(0, 4, F2).is_zero());
  CHECK(power_sum(0, 3, Z) == MPoly::constant(3, Coeff(Z, 3)));
  CHECK(power_sum(1, 3, Z) == x(3, 1) + x(3, 2) + x(3, 3));
  CHECK(power_sum(4, 2, F2) == power_sum(2, 2, F2).pow(2));
  CHECK(complete_homogeneous(2, 2, Z) == x(2, 1).pow(2) + x(2, 1) * x(2, 2) + x(2, 2).pow(2));
  CHECK(complete_homogeneous(1, 4, Z) == elementary(1, 4, Z));
  CHECK(complete_homogeneous(3, 1, Z) == x(1, 1).pow(3));
  CHECK(elementary(3, 5, Z).size() == 10);
  CHECK(complete_homogeneous(3, 3, Z).size() == 10);
}

TEST_CASE("arithmetic and exact division") {
  CHECK((x(2, 1, F2) + x(2, 2, F2)).pow(2) == x(2, 1, F2).pow(2) + x(2, 2, F2).pow(2));
  MPoly num = x(2, 1).pow(2) * x(2, 2) + x(2, 1) * x(2, 2).pow(2);
  CHECK(num.exact_divide(x(2, 1) + x(2, 2)) == x(2, 1) * x(2, 2));
  CHECK_THROWS_AS((x(2, 1) + x(2, 2)).exact_divide(x(2, 1) * x(2, 2)), Error);
  CHECK_THROWS_AS(x(2, 1) + x(3, 1), Error);
  CHECK_THROWS_AS(x(2, 1) + x(2, 1, F2), Error);
  MPoly a = x(3, 1) - x(3, 2).pow(2) + MPoly::constant(3, Coeff(Z, 5));
  MPoly b = x(3, 3).pow(3) - x(3, 1) * x(3, 2);
  CHECK((a * b).exact_divide(b) == a);
  CHECK((a * b).exact_divide(a) == b);
}

TEST_CASE("drop_variable") {
  CHECK(drop_variable(power_sum(2, 3, Z), 1) == x(3, 2).pow(2) + x(3, 3).pow(2));
  CHECK(drop_variable(power_sum(1, 2, Z), 2) == x(2, 1));
  CHECK(power_sum(2, 2, Z) == x(2, 1).pow(2) + drop_variable(power_sum(2, 2, Z), 1));
}

TEST_CASE("determinants of power-sum Hankel matrices") {
  CHECK(determinant(power_sum_hankel(1, 1, Z)) == x(1, 1));
  MPoly d22 = determinant(power_sum_hankel(2, 2, Z));
  CHECK(d22 == x(2, 1) * x(2, 2) * (x(2, 1) - x(2, 2)).pow(2));
  CHECK(d22 == elementary(2, 2, Z) * vandermonde_squared(2, Z));
  CHECK(determinant(power_sum_hankel(2, 1, Z)).is_zero());
  CHECK(d22.to_string() == "x1^3*x2 - 2*x1^2*x2^2 + x1*x2^3");
}

TEST_CASE("cofactor, Bareiss and Leibniz agree") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), var(1, 3), pw(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 2 + trial % 4;
    Matrix<MPoly> m(d, d, MPoly(3, Z));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m(i, j) = x(3, var(rng)).pow(pw(rng)).scale(Coeff(Z, coef(rng))) + MPoly::constant(3, Coeff(Z, coef(rng)));
    MPoly leibniz = permutation_determinant(m);
    CHECK(determinant_cofactor(m) == leibniz);
    CHECK(determinant_bareiss(m) == leibniz);
  }
}

TEST_CASE("splitting a row of a power-sum matrix on one variable") {
  // Row i of M has entries p_{r_j}; splitting x_k off row i gives
  // det M = det(M with row i -> x_k^{r_j}) + det(M with row i -> p_{r_j}(x without x_k)).
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> deg(1, 4);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 2; d <= 3; ++d) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::vector<unsigned>> r(d, std::vector<unsigned>(d));
        Matrix<MPoly> m(d, d, MPoly(n, Z));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            r[i][j] = deg(rng);
            m(i, j) = power_sum(r[i][j], n, Z);
          }
        for (std::size_t row = 0; row < d; ++row) {
          for (std::size_t k = 1; k <= n; ++k) {
            Matrix<MPoly> a = m, b = m;
            for (std::size_t j = 0; j < d; ++j) {
              a(row, j) = x(n, k).pow(r[row][j]);
              b(row, j) = drop_variable(m(row, j), k);
            }
            CHECK(determinant(m) == determinant(a) + determinant(b));
          }
        }
      }
    }
  }
}

TEST_CASE("Hankel determinant identities for small n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(determinant(power_sum_hankel(n, n, Z)) == elementary(n, n, Z) * vandermonde_squared(n, Z));
    CHECK(determinant(power_sum_hankel(n + 1, n, Z)).is_zero());
  }
}

TEST_CASE("Hankel determinant as a sum over subsets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t d = 1; d <= n + 1; ++d)
      CHECK(determinant(power_sum_hankel(d, n, Z)) == hankel_subset_sum(d, n, Z));
  CHECK(rename_variables(x(2, 1) * x(2, 2).pow(2), {3, 1}, 3) == x(3, 3) * x(3, 1).pow(2));
  // witness monomial x1 x2^3 ... x_d^{2d-1}
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      std::vector<unsigned> exps;
      for (std::size_t i = 1; i <= d; ++i) exps.push_back(static_cast<unsigned>(2 * i - 1));
      CHECK(determinant(power_sum_hankel(d, n, Z)).coefficient(exps) == Coeff(Z, 1));
    }
}

TEST_CASE("Frobenius on power sums") {
  for (unsigned r : {2u, 3u, 5u, 7u, 11u}) {
    auto f = RingSpec::prime_field(r);
    for (unsigned k = 1; k * r <= 12; ++k)
      for (std::size_t n = 1; n <= 4; ++n) CHECK(power_sum(k * r, n, f) == power_sum(k, n, f).pow(r));
  }
}

TEST_CASE("symmetry and evaluation") {
  CHECK(power_sum(3, 3, Z).is_symmetric());
  CHECK_FALSE((x(3, 1) * x(3, 2).pow(2)).is_symmetric());
  std::vector<Coeff> pt{Coeff(F2, 1), Coeff(F2, 1)};
  CHECK(power_sum(1, 2, F2).evaluate(pt).is_zero());
  CHECK(elementary(2, 2, F2).evaluate(pt).is_one());
}
