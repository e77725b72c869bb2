#include <doctest.h>

#include "symfrac/subalgebra_lab.hpp"

using namespace symfrac;

namespace {
const RingSpec Q = RingSpec::rationals();
const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec F3 = RingSpec::prime_field(3);
const RingSpec F5 = RingSpec::prime_field(5);

MembershipAnswer ask(const RingSpec& ring, std::size_t n, const std::string& target, std::optional<std::set<unsigned>> gens = {}) {
  return membership({ring, n, parse_symmetric(target, n, ring), std::move(gens), 0});
}

// Brute-force oracle for membership at degree d: every F_r-combination of the
// p_lambda (|lambda| = d, parts in gens), compared with the target.
bool brute_member(const RingSpec& ring, std::size_t n, const EExpansion& target, unsigned d,
                  const std::set<unsigned>& gens) {
  std::vector<EExpansion> prods;
  for (const auto& lambda : partitions_of(d, [&](unsigned part) { return gens.count(part) > 0; })) {
    EExpansion e = EExpansion::constant(n, Coeff(ring, 1));
    for (unsigned part : lambda.parts()) e *= p_to_e_recursive(part, n, ring);
    prods.push_back(e);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < prods.size(); ++i) total *= ring.modulus();
  for (std::uint64_t code = 0; code < total; ++code) {
    EExpansion acc(n, ring);
    std::uint64_t c = code;
    for (const auto& p : prods) {
      acc += p.scale(Coeff(ring, static_cast<long long>(c % ring.modulus())));
      c /= ring.modulus();
    }
    if (acc == target) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("membership examples") {
  auto a = ask(F2, 2, "e2");
  CHECK_FALSE(a.member);
  CHECK(a.certificate.empty());
  CHECK(a.failing_degrees == std::vector<unsigned>{2});
  CHECK(a.spanning_dimension < a.slice_dimension);
  CHECK_FALSE(ask(F2, 3, "e3").member);

  auto b = ask(F3, 3, "e2");
  REQUIRE(b.member);
  CHECK(expand_certificate(b.certificate, 3, F3) == parse_symmetric("e2", 3, F3));
  CHECK(b.certificate.size() == 2);
  CHECK(expand_certificate(b.certificate, 3, F3) == parse_symmetric("2*p1^2 - 2*p2", 3, F3));

  auto c = ask(F2, 2, "e1*e2");
  REQUIRE(c.member);
  CHECK(expand_certificate(c.certificate, 2, F2) == parse_symmetric("e1*e2", 2, F2));
  for (const auto& [lambda, coeff] : c.certificate)
    for (unsigned part : lambda.parts()) CHECK(part % 2 == 1);

  CHECK(ask(Q, 3, "e3").member);
  CHECK_THROWS_AS(ask(RingSpec::integers(), 2, "e2"), Error);
}

TEST_CASE("inhomogeneous targets split by degree") {
  auto a = ask(F2, 2, "e1*e2 + e1^2 + 1");
  REQUIRE(a.member);
  CHECK(expand_certificate(a.certificate, 2, F2) == parse_symmetric("e1*e2 + e1^2 + 1", 2, F2));
  auto b = ask(F2, 2, "e1*e2 + e2");
  CHECK_FALSE(b.member);
  CHECK(b.failing_degrees == std::vector<unsigned>{2});
  CHECK_THROWS_AS(membership({F2, 2, parse_symmetric("e1*e2", 2, F2), {}, 2}), Error);
}

TEST_CASE("membership agrees with brute force") {
  for (auto ring : {F2, F3})
    for (std::size_t n = 2; n <= 3; ++n)
      for (unsigned d = 1; d <= 4; ++d)
        for (const auto& lambda : partitions_of(d, static_cast<unsigned>(n))) {
          EExpansion target = EExpansion::from_terms(n, ring, {{lambda, Coeff(ring, 1)}});
          std::set<unsigned> gens;
          for (unsigned i = 1; i <= d; ++i)
            if (i % ring.modulus() != 0) gens.insert(i);
          auto ans = membership({ring, n, target, gens, 0});
          INFO(ring.to_string() << " n=" << n << " e" << lambda.to_string());
          CHECK(ans.member == brute_member(ring, n, target, d, gens));
          if (ans.member) CHECK(expand_certificate(ans.certificate, n, ring) == target);
        }
}

TEST_CASE("coprime parts") {
  CHECK(coprime_part_check(3, F2, 3));
  CHECK(coprime_part_check(4, F3, 4));
  CHECK(coprime_part_check(1, F2, 1));
  for (auto ring : {F2, F3})
    for (std::size_t n = 1; n <= 4; ++n)
      for (unsigned m = 1; m <= 8; ++m)
        if (m % ring.modulus() != 0) CHECK(coprime_part_check(m, ring, n));
  CHECK_THROWS_AS(coprime_part_check(4, F2, 4), Error);
}

TEST_CASE("witness coefficients") {
  CHECK(witness_coefficient(3, F2, 3) == Coeff(F2, 1));
  CHECK(witness_coefficient(4, F3, 4) == Coeff(F3, 1));
  CHECK(witness_coefficient(5, F2, 5) == Coeff(F2, 1));
  for (auto ring : {F2, F3, F5}) {
    const unsigned r = static_cast<unsigned>(ring.modulus());
    for (unsigned k = 1; k <= 9; ++k) {
      if (k % r == 0) continue;
      auto [a, b] = witness_split(k, ring);
      CHECK(a * r + b == k);
      Coeff w = witness_coefficient(k, ring, std::max<std::size_t>(k, r));
      // coefficient of e_r^a e_b in p_k over Z is (-1)^{k+a+1} k, which is (-1)^{b+1} b mod r
      long long sign = (k + a + 1) % 2 == 0 ? 1 : -1;
      CHECK(w == Coeff(ring, sign * static_cast<long long>(k)));
      CHECK(w == Coeff(ring, (b % 2 == 1 ? 1 : -1) * static_cast<long long>(b)));
      CHECK(w.is_unit());
    }
  }
  CHECK_THROWS_AS(witness_coefficient(4, F2, 4), Error);
}

TEST_CASE("chain gaps") {
  CHECK(chain_gap_check(3, F2, 2));
  CHECK(chain_gap_check(5, F2, 2));
  CHECK(chain_gap_check(4, F3, 3));
  for (unsigned N : {3u, 5u, 7u}) {
    std::vector<unsigned> parts((N - 1) / 2, 2);
    parts.push_back(1);
    CHECK_FALSE(p_to_e_closed(N, 2, F2).coefficient(Partition(parts)).is_zero());
    CHECK(chain_gap_check(N, F2, 2));
  }
  for (auto ring : {F2, F3})
    for (unsigned k = 1; k <= 9; ++k)
      if (k % ring.modulus() != 0) CHECK(chain_gap_check(k, ring, std::max<std::size_t>(k, ring.modulus())));
}
