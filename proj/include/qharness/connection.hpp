#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "qharness/polynomials.hpp"
#include "qharness/qcalc.hpp"
#include "qharness/rational.hpp"

namespace qh {

/// Index triple of a connection coefficient gamma_{n,k,j}.
struct GammaIndex {
  long n;
  long k;
  long j;
};

/// Structural zero/one conventions shared by gamma and its tilde variant:
/// zero when j < 0, k < 0, j > k or k > n; for k == n the value is 1 at j == 0
/// and 0 otherwise.
inline bool gamma_structurally_zero(long n, long k, long j) {
  return j < 0 || k < 0 || j > k || k > n || (k == n && j > 0);
}

/// Connection coefficient
///   gamma_{n,k,j} = s^j eta^j q^{(2k-1-j)j/2}
///                   [n]_q! [n-k+j-1]_q! / ([n-k]_q! [n-k-1]_q! [j]_q! [k-j]_q!)
/// under the stated conventions. The exponent (2k-1-j)j is always even.
template <class S>
S gamma_coeff(const GammaIndex& idx, const S& s, const BasicHarnessParams<S>& p) {
  const long n = idx.n, k = idx.k, j = idx.j;
  if (gamma_structurally_zero(n, k, j)) return S(0);
  if (k == n) return S(1);  // j == 0 here
  if (j == 0) return q_binomial(n, k, p.q);
  const long twice_exp = (2 * k - 1 - j) * j;
  assert(twice_exp % 2 == 0);
  S val = pow_int(s * p.eta, j) * pow_int(p.q, twice_exp / 2);
  val *= q_factorial(n, p.q) * q_factorial(n - k + j - 1, p.q);
  val /= q_factorial(n - k, p.q) * q_factorial(n - k - 1, p.q) * q_factorial(j, p.q) *
         q_factorial(k - j, p.q);
  return val;
}

/// Two-time generalization
///   gamma~_{n,k,j}(t) = (-eta)^j [factorial ratio] prod_{r=k-j}^{k-1} (t - s q^r),
/// which reduces to gamma_{n,k,j} at t = 0.
template <class S>
S gamma_tilde(const GammaIndex& idx, const S& t, const S& s, const BasicHarnessParams<S>& p) {
  const long n = idx.n, k = idx.k, j = idx.j;
  if (gamma_structurally_zero(n, k, j)) return S(0);
  if (k == n) return S(1);
  if (j == 0) return q_binomial(n, k, p.q);
  S prod(1);
  for (long r = k - j; r <= k - 1; ++r) prod *= t - s * pow_int(p.q, r);
  S val = pow_int(S(0) - p.eta, j) * prod;
  val *= q_factorial(n, p.q) * q_factorial(n - k + j - 1, p.q);
  val /= q_factorial(n - k, p.q) * q_factorial(n - k - 1, p.q) * q_factorial(j, p.q) *
         q_factorial(k - j, p.q);
  return val;
}

/// Auxiliary polynomial b_k^(n)(y; x, s) = sum_j gamma_{n,k,j} Q_{k-j}(y; x, 0, s);
/// zero outside 0 <= k <= n.
template <class S>
S b_poly(long n, long k, const S& y, const S& x, const S& s, const BasicHarnessParams<S>& p) {
  if (n < 0 || k < 0 || k > n) return S(0);
  S acc(0);
  for (long j = 0; j <= k; ++j) {
    const S g = gamma_coeff<S>({n, k, j}, s, p);
    if (!(g == S(0))) acc += g * eval_Q(k - j, y, x, S(0), s, p);
  }
  return acc;
}

/// b~_k^(n)(y; x, t, s) with the two-time coefficients; reduces to b_poly at t = 0.
template <class S>
S b_tilde(long n, long k, const S& y, const S& x, const S& t, const S& s,
          const BasicHarnessParams<S>& p) {
  if (n < 0 || k < 0 || k > n) return S(0);
  S acc(0);
  for (long j = 0; j <= k; ++j) {
    const S g = gamma_tilde<S>({n, k, j}, t, s, p);
    if (!(g == S(0))) acc += g * eval_Q(k - j, y, x, t, s, p);
  }
  return acc;
}

/// Exact evaluation point for the identity checks.
struct ExactTuple {
  Rational z{0}, y{0}, x{0}, u{0}, t{0}, s{0};
  ExactHarnessParams params;
};

/// Outcome of one exact identity check: pass iff the residual is exactly zero.
struct IdentityReport {
  std::string identity;
  long n = 0;
  long k = -1;
  long j = -1;
  ExactTuple tuple;
  Rational residual{0};
  bool pass = false;
  std::string detail;  // first nonzero sub-quantity, when applicable
};

IdentityReport verify_expansion(long n, const ExactTuple& tup);
IdentityReport verify_representation(long n, const ExactTuple& tup);
IdentityReport verify_recursion13(long n, long k, const ExactTuple& tup);
IdentityReport verify_tilde_general(long n, const ExactTuple& tup);

/// Checks, at one (n, k, j), the eight scalar quantities a, b, c, d and
/// A, B, C, D, the aggregate coefficients C_{n,k,j} and D_{n,k,j}, the two
/// displayed halves of the split recurrence, and the affine-in-u consistency
/// of the full recurrence with that split. Requires q != 0 (the scalar
/// quantities carry negative powers of q).
IdentityReport verify_appendix(long n, long k, long j, const ExactTuple& tup);

/// Seeded generator of admissible exact tuples with numerators and
/// denominators bounded by 20 and q strictly inside (-1, 1).
class TupleSampler {
 public:
  explicit TupleSampler(std::uint64_t seed);
  /// Ordered times 0 < s < t < u, q != 0 unless force_q0.
  ExactTuple next(bool force_q0 = false);

 private:
  std::uint64_t state_;
  long uniform(long lo, long hi);
  Rational nonzero();
  Rational positive();
  Rational q_interior();
};

struct SweepOptions {
  long n_max = 6;
  int tuples = 20;
  std::uint64_t seed = 1;
  int q0_tuples = 3;  // extra tuples pinned at q = 0 (skipped where q != 0 is required)
};

std::vector<IdentityReport> sweep_expansion(const SweepOptions& opt);
std::vector<IdentityReport> sweep_representation(const SweepOptions& opt);
std::vector<IdentityReport> sweep_recursion13(const SweepOptions& opt);
std::vector<IdentityReport> sweep_tilde(const SweepOptions& opt);
std::vector<IdentityReport> sweep_appendix(const SweepOptions& opt);

}  // namespace qh
