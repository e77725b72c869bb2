#include "symfrac/subalgebra_lab.hpp"

#include <map>
#include <numeric>

#include "symfrac/matrix.hpp"

namespace symfrac {

namespace {

void require_field(const RingSpec& ring) {
  if (!ring.is_field()) throw Error(ErrorKind::InvalidRing, "membership needs a field, got " + ring.to_string());
}

bool coprime_to_char(unsigned i, const RingSpec& ring) {
  const std::uint64_t r = ring.characteristic();
  return r == 0 || std::gcd<std::uint64_t, std::uint64_t>(i, r) == 1;
}

EExpansion p_product(const Partition& lambda, const std::vector<EExpansion>& table, std::size_t n,
                     const RingSpec& ring) {
  EExpansion out = EExpansion::constant(n, Coeff(ring, 1));
  for (unsigned part : lambda.parts()) out *= table[part - 1];
  return out;
}

struct SliceResult {
  bool member;
  std::vector<std::pair<Partition, Coeff>> certificate;
  std::size_t rank, dimension;
};

SliceResult solve_slice(const EExpansion& target, unsigned degree, const std::set<unsigned>& gens,
                        const std::vector<EExpansion>& table, std::size_t n, const RingSpec& ring) {
  std::vector<Partition> rows = partitions_of(degree, static_cast<unsigned>(std::min<std::size_t>(n, degree)));
  std::map<Partition, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  std::vector<Partition> cols = partitions_of(degree, [&](unsigned part) { return gens.count(part) > 0; });
  Matrix<Coeff> a(rows.size(), cols.size(), Coeff(ring));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [lambda, c] : p_product(cols[j], table, n, ring).entries()) a(row_of.at(lambda), j) = c;
  std::vector<Coeff> b(rows.size(), Coeff(ring));
  for (const auto& [lambda, c] : target.entries()) b[row_of.at(lambda)] = c;
  std::size_t rank = 0;
  auto sol = solve_linear(a, b, &rank);
  SliceResult out{sol.has_value(), {}, rank, rows.size()};
  if (sol)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!(*sol)[j].is_zero()) out.certificate.emplace_back(cols[j], (*sol)[j]);
  return out;
}

}  // namespace

MembershipAnswer membership(const MembershipQuery& q) {
  require_field(q.ring);
  if (!(q.target.ring() == q.ring) || q.target.nvars() != q.n)
    throw Error(ErrorKind::RangeError, "target lives in another ring or variable count");
  const unsigned top = q.target.degree();
  const unsigned bound = q.degree_bound == 0 ? top : q.degree_bound;
  if (top > bound)
    throw Error(ErrorKind::RangeError, "target degree " + std::to_string(top) + " exceeds degree bound " +
                                           std::to_string(bound));
  std::set<unsigned> gens;
  if (q.generator_indices)
    gens = *q.generator_indices;
  else
    for (unsigned i = 1; i <= bound; ++i)
      if (coprime_to_char(i, q.ring)) gens.insert(i);
  auto table = p_to_e_table(bound, q.n, q.ring);

  MembershipAnswer ans{true, {}, 0, 0, {}};
  for (const auto& part : q.target.homogeneous_components()) {
    const unsigned d = part.degree();
    if (d == 0) {
      ans.certificate.emplace_back(Partition{}, part.coefficient(Partition{}));
      ans.spanning_dimension += 1;
      ans.slice_dimension += 1;
      continue;
    }
    SliceResult s = solve_slice(part, d, gens, table, q.n, q.ring);
    ans.spanning_dimension += s.rank;
    ans.slice_dimension += s.dimension;
    if (!s.member) {
      ans.member = false;
      ans.failing_degrees.push_back(d);
      continue;
    }
    ans.certificate.insert(ans.certificate.end(), s.certificate.begin(), s.certificate.end());
  }
  if (!ans.member) ans.certificate.clear();
  return ans;
}

EExpansion expand_certificate(const std::vector<std::pair<Partition, Coeff>>& certificate, std::size_t n,
                              const RingSpec& ring) {
  unsigned top = 0;
  for (const auto& [lambda, c] : certificate) top = std::max(top, lambda.largest());
  auto table = p_to_e_table(top, n, ring);
  EExpansion out(n, ring);
  for (const auto& [lambda, c] : certificate) out += p_product(lambda, table, n, ring).scale(c);
  return out;
}

bool coprime_part_check(unsigned m, const RingSpec& ring, std::size_t n) {
  if (m == 0 || !coprime_to_char(m, ring))
    throw Error(ErrorKind::InvalidRange, std::to_string(m) + " is divisible by the characteristic");
  for (const auto& [lambda, c] : p_to_e_closed(m, n, ring).entries()) {
    bool ok = false;
    for (unsigned part : lambda.parts()) ok = ok || coprime_to_char(part, ring);
    if (!ok) return false;
  }
  return true;
}

WitnessSplit witness_split(unsigned k, const RingSpec& ring) {
  const std::uint64_t r = ring.characteristic();
  if (r == 0 || k == 0 || k % r == 0)
    throw Error(ErrorKind::InvalidRange, "witness needs a prime characteristic not dividing k = " + std::to_string(k));
  return {static_cast<unsigned>(k / r), static_cast<unsigned>(k % r)};
}

Coeff witness_coefficient(unsigned k, const RingSpec& ring, std::size_t n) {
  const auto [a, b] = witness_split(k, ring);
  const unsigned r = static_cast<unsigned>(ring.characteristic());
  if (n < r) throw Error(ErrorKind::RangeError, "witness needs n >= " + std::to_string(r));
  std::vector<unsigned> parts(a, r);
  parts.push_back(b);
  return p_to_e_closed(k, n, ring).coefficient(Partition(parts));
}

bool chain_gap_check(unsigned k, const RingSpec& ring, std::size_t n) {
  witness_split(k, ring);
  std::set<unsigned> gens;
  for (unsigned i = 1; i < k; ++i) gens.insert(i);
  MembershipQuery q{ring, n, p_to_e_closed(k, n, ring), gens, k};
  if (q.target.is_zero()) return false;
  return !membership(q).member;
}

}  // namespace symfrac
