#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symfrac/matrix.hpp"
#include "symfrac/newton_engine.hpp"

namespace symfrac {

/// Tr(T), ..., Tr(T^m) of an operator on an n-dimensional space over a field.
/// traces[d-1] = Tr(T^d).
struct TraceSequence {
  RingSpec ring;
  std::size_t n;
  std::vector<Coeff> traces;

  /// Throws InvalidRing unless the ring is a field, RangeError on entries from
  /// another ring or n = 0.
  TraceSequence(RingSpec ring, std::size_t n, std::vector<Coeff> traces);

  std::size_t size() const noexcept { return traces.size(); }
  const Coeff& trace(std::size_t d) const { return traces.at(d - 1); }
};

/// Number of traces needed: 2n+1-r when some k <= n is divisible by the
/// characteristic r, else n.
std::size_t trace_horizon(const RingSpec& ring, std::size_t n);

/// Indices k with kr within range and traces[kr-1] != traces[k-1]^r.
std::vector<std::size_t> frobenius_violations(const TraceSequence& t);

enum class Provenance { Newton, Hankel, RemovablePole, Indeterminate };
const char* to_string(Provenance p);

/// X^n - e1 X^{n-1} + ... + (-1)^n e_n. coeffs[i] is the coefficient of X^i.
struct CharPoly {
  RingSpec ring;
  std::vector<Coeff> coeffs;
  /// provenance[k-1] describes how e_k was obtained.
  std::vector<Provenance> provenance;
  std::vector<std::string> warnings;

  std::size_t degree() const { return coeffs.size() - 1; }
  /// e_k read back from the coefficients (e_0 = 1).
  Coeff e(std::size_t k) const;
  /// "X^3 - X".
  std::string to_string(const std::string& var = "X") const;
  std::string to_latex(const std::string& var = "X") const;
  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
};

/// Monic polynomial from e_0..e_n.
CharPoly charpoly_from_e(const RingSpec& ring, const std::vector<Coeff>& e);

/// det of the (n-k+1)-square Hankel matrix with entries Tr(T^{i+j-1}).
/// Requires r | k and 1 < k <= n.
Coeff determinant_condition(const TraceSequence& t, unsigned k);

enum class PolePolicy {
  /// A zero Hankel determinant is resolved by the cancellation rule, and the
  /// result is kept only when the Newton identities on the given traces force
  /// that value of e_k.
  Certified,
  /// Cancellation rule alone: substitute the non-zero traces and lower e_i,
  /// keep zero-valued symbols formal, cancel, then substitute the zeros.
  CancellationOnly,
};

struct CharpolyOptions {
  PolePolicy pole_policy = PolePolicy::Certified;
};

/// Per-k outcome; value is empty for Indeterminate.
struct EStep {
  unsigned k;
  std::optional<Coeff> value;
  Provenance provenance;
  std::string note;
};
/// Computes e_1..e_n step by step and stops after the first Indeterminate.
/// Throws InsufficientTraces.
std::vector<EStep> trace_steps(const TraceSequence& t, const CharpolyOptions& opts = {});

/// Throws Indeterminate (first undetermined k) or InsufficientTraces.
CharPoly charpoly_from_traces(const TraceSequence& t, const CharpolyOptions& opts = {});

/// Values of e_k over all monic degree-n polynomials whose power sums
/// p_1..p_m match the traces: the set of solutions of the Newton identities
/// N = 1..m, which are linear in e_1..e_n. Returns e_k when every solution
/// agrees, nullopt otherwise. Throws Indeterminate if no solution exists.
std::optional<Coeff> forced_e(const TraceSequence& t, unsigned k);

/// Tr(T^d) for d = 1..trace_horizon (at least `count` when given).
TraceSequence simulate_traces(const Matrix<Coeff>& m, std::size_t count = 0);

/// det(X I - T) by cofactor expansion over polynomials in X.
CharPoly direct_charpoly(const Matrix<Coeff>& m);

/// Companion matrix of a monic polynomial given by coeffs (coeffs[i] of X^i).
Matrix<Coeff> companion_matrix(const CharPoly& ch);

}  // namespace symfrac
