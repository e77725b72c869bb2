#include <doctest.h>

#include <map>
#include <random>

#include "symfrac/trace_charpoly.hpp"

using namespace symfrac;

namespace {
const RingSpec Q = RingSpec::rationals();
const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec F3 = RingSpec::prime_field(3);
const RingSpec F5 = RingSpec::prime_field(5);

std::vector<Coeff> values(const RingSpec& ring, std::initializer_list<long long> xs) {
  std::vector<Coeff> out;
  for (auto x : xs) out.emplace_back(ring, x);
  return out;
}

TraceSequence seq(const RingSpec& ring, std::size_t n, std::initializer_list<long long> xs) {
  return TraceSequence(ring, n, values(ring, xs));
}

Matrix<Coeff> matrix_from(const RingSpec& ring, std::size_t n, std::uint64_t code) {
  Matrix<Coeff> m(n, n, Coeff(ring));
  const std::uint64_t r = ring.modulus();
  for (std::size_t i = 0; i < n * n; ++i, code /= r) m(i / n, i % n) = Coeff(ring, static_cast<long long>(code % r));
  return m;
}

CharPoly monic(const RingSpec& ring, std::initializer_list<long long> low_to_high) {
  auto c = values(ring, low_to_high);
  return CharPoly{ring, c, {}, {}};
}

std::string key(const TraceSequence& t) {
  std::string s;
  for (const auto& c : t.traces) s += c.to_string() + ",";
  return s;
}

std::optional<CharPoly> attempt(const TraceSequence& t, PolePolicy policy = PolePolicy::Certified) {
  try {
    return charpoly_from_traces(t, {.pole_policy = policy});
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::Indeterminate);
    return std::nullopt;
  }
}

// Every monic polynomial of degree n over F_r, as the charpoly of its companion matrix.
std::vector<CharPoly> all_monic(const RingSpec& ring, std::size_t n) {
  std::vector<CharPoly> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= ring.modulus();
  for (std::uint64_t code = 0; code < total; ++code) {
    CharPoly ch{ring, {}, {}, {}};
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= ring.modulus()) ch.coeffs.emplace_back(ring, static_cast<long long>(c % ring.modulus()));
    ch.coeffs.emplace_back(ring, 1);
    out.push_back(ch);
  }
  return out;
}

// Charpolys sharing each trace sequence, over all monic polynomials of degree n.
std::map<std::string, std::vector<CharPoly>> fibres(const RingSpec& ring, std::size_t n) {
  std::map<std::string, std::vector<CharPoly>> out;
  for (const auto& ch : all_monic(ring, n)) out[key(simulate_traces(companion_matrix(ch)))].push_back(ch);
  return out;
}
}  // namespace

TEST_CASE("trace sequences") {
  CHECK(trace_horizon(F3, 3) == 4);
  CHECK(trace_horizon(F2, 2) == 3);
  CHECK(trace_horizon(F5, 3) == 3);
  CHECK(trace_horizon(Q, 4) == 4);
  CHECK_THROWS_AS(TraceSequence(RingSpec::integers(), 2, {}), Error);
  CHECK(frobenius_violations(seq(F3, 3, {0, -1, 0, -1})).empty());
  CHECK(frobenius_violations(seq(F2, 2, {1, 0, 1})) == std::vector<std::size_t>{1});
  CHECK(frobenius_violations(seq(F2, 3, {1, 1, 1, 0})) == std::vector<std::size_t>{2});
  // exactly when traces[kr-1] != traces[k-1]^r
  for (std::uint64_t code = 0; code < 81; ++code) {
    auto t = seq(F3, 3, {});
    std::uint64_t c = code;
    for (int i = 0; i < 4; ++i, c /= 3) t.traces.emplace_back(F3, static_cast<long long>(c % 3));
    bool bad = t.trace(3) != t.trace(1).pow(3);
    CHECK(frobenius_violations(t).empty() == !bad);
  }
}

TEST_CASE("simulated traces") {
  auto ch = monic(F3, {0, -1, 0, 1});
  CHECK(ch.to_string() == "X^3 - X");
  auto t = simulate_traces(companion_matrix(ch));
  CHECK(t.traces == values(F3, {0, 2, 0, 2}));
  CHECK(direct_charpoly(companion_matrix(ch)) == ch);
  CHECK(simulate_traces(Matrix<Coeff>(2, 2, Coeff(F2))).traces == values(F2, {0, 0, 0}));
  Matrix<Coeff> id(2, 2, Coeff(F5));
  id(0, 0) = id(1, 1) = Coeff(F5, 1);
  CHECK(simulate_traces(id).traces == values(F5, {2, 2}));
  CHECK(simulate_traces(id, 5).size() == 5);
}

TEST_CASE("determinant condition") {
  CHECK(determinant_condition(seq(F3, 3, {0, -1, 0, -1}), 3).is_zero());
  CHECK(determinant_condition(seq(F2, 2, {1, 1, 1}), 2) == Coeff(F2, 1));
  // 2x2 block for k = 2, n = 3 over F2: det [[t1, t2], [t2, t3]]
  CHECK(determinant_condition(seq(F2, 3, {1, 1, 0, 1, 0}), 2) == Coeff(F2, 1));
  CHECK_THROWS_AS(determinant_condition(seq(F3, 3, {0, 0, 0, 0}), 2), Error);
}

TEST_CASE("Newton route and Hankel route") {
  auto ch = charpoly_from_traces(seq(F5, 2, {2, 2}));
  CHECK(ch.to_string() == "X^2 - 2*X + 1");
  CHECK(ch.provenance == std::vector{Provenance::Newton, Provenance::Newton});
  auto q = charpoly_from_traces(seq(Q, 2, {3, 5}));
  CHECK(q.to_string() == "X^2 - 3*X + 2");
  // eigenvalues {0, 1} over F2
  auto f2 = charpoly_from_traces(seq(F2, 2, {1, 1, 1}));
  CHECK(f2.to_string() == "X^2 + X");
  CHECK(f2.provenance[1] == Provenance::Hankel);
  CHECK_THROWS_AS(charpoly_from_traces(seq(F3, 3, {0, -1, 0})), Error);
  CHECK(charpoly_from_traces(seq(F5, 3, {1, 1, 1})).degree() == 3);
}

TEST_CASE("zero Hankel determinant") {
  auto example = seq(F3, 3, {0, -1, 0, -1});
  auto pinned = charpoly_from_traces(example, {.pole_policy = PolePolicy::CancellationOnly});
  CHECK(pinned.to_string() == "X^3 - X");
  CHECK(pinned.provenance[2] == Provenance::RemovablePole);
  // X^3 - X - 1 has the same four traces, so the certified policy declines.
  auto other = monic(F3, {-1, -1, 0, 1});
  CHECK(simulate_traces(companion_matrix(other)).traces == example.traces);
  CHECK_FALSE(forced_e(example, 3).has_value());
  CHECK(forced_e(example, 2) == Coeff(F3, -1));
  try {
    charpoly_from_traces(example);
    FAIL("expected Indeterminate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Indeterminate);
  }
  auto steps = trace_steps(example);
  REQUIRE(steps.size() == 3);
  CHECK(steps[2].provenance == Provenance::Indeterminate);

  // zero 2x2 operator and the nilpotent shift against the identity over F2
  auto zeros = seq(F2, 2, {0, 0, 0});
  for (auto policy : {PolePolicy::Certified, PolePolicy::CancellationOnly})
    CHECK_THROWS_AS(charpoly_from_traces(zeros, {.pole_policy = policy}), Error);
  Matrix<Coeff> id(2, 2, Coeff(F2));
  id(0, 0) = id(1, 1) = Coeff(F2, 1);
  CHECK(simulate_traces(id).traces == zeros.traces);
  CHECK(direct_charpoly(id) != direct_charpoly(Matrix<Coeff>(2, 2, Coeff(F2))));
}

TEST_CASE("exhaustive 2x2 round trip") {
  for (auto ring : {F2, F3, F5}) {
    auto fib = fibres(ring, 2);
    std::uint64_t total = ring.modulus() * ring.modulus() * ring.modulus() * ring.modulus();
    for (std::uint64_t code = 0; code < total; ++code) {
      auto m = matrix_from(ring, 2, code);
      auto t = simulate_traces(m);
      auto direct = direct_charpoly(m);
      bool ambiguous = fib[key(t)].size() > 1;
      auto got = attempt(t);
      if (got) CHECK(*got == direct);
      CHECK(got.has_value() == !ambiguous);
    }
  }
}

TEST_CASE("3x3 round trip and Indeterminate soundness") {
  std::mt19937_64 rng(20261016);
  for (auto ring : {F2, F3, F5}) {
    auto fib = fibres(ring, 3);
    for (int trial = 0; trial < 200; ++trial) {
      auto m = matrix_from(ring, 3, rng());
      auto t = simulate_traces(m);
      auto direct = direct_charpoly(m);
      bool ambiguous = fib[key(t)].size() > 1;
      INFO(ring.to_string() << " traces " << key(t) << " charpoly " << direct.to_string());
      auto got = attempt(t);
      if (got) CHECK(*got == direct);
      CHECK(got.has_value() == !ambiguous);
    }
  }
}

TEST_CASE("cancellation rule alone can return a wrong polynomial") {
  int wrong = 0, total = 0;
  for (const auto& ch : all_monic(F3, 3)) {
    auto t = simulate_traces(companion_matrix(ch));
    if (auto got = attempt(t, PolePolicy::CancellationOnly)) {
      ++total;
      if (!(*got == ch)) ++wrong;
    }
  }
  CHECK(total > 0);
  CHECK(wrong > 0);
}

TEST_CASE("rendering") {
  auto ch = monic(F5, {1, 0, -2, 1});
  CHECK(ch.to_string() == "X^3 - 2*X^2 + 1");
  CHECK(ch.to_latex() == "X^{3} - 2 X^{2} + 1");
  CHECK(ch.e(1) == Coeff(F5, 2));
  CHECK(ch.e(3) == Coeff(F5, -1));
  CHECK(std::string(to_string(Provenance::RemovablePole)) == "removable-pole");
}
