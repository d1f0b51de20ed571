#pragma once

#include <utility>
#include <vector>

#include "qharness/errors.hpp"
#include "qharness/params.hpp"
#include "qharness/polynomials.hpp"

namespace qh {

/// Absolute clamp for recurrence coefficients B_n: values in [-tol, tol] are
/// treated as exact zeros (the measure truncates there); anything below -tol
/// raises NegativeBeta.
inline constexpr double kBetaClampTol = 1e-12;

/// Symmetric tridiagonal realization of a monic recurrence:
/// diag[n] = A_n, offdiag[n] = sqrt(max(B_{n+1}, 0)).
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
  int order() const { return static_cast<int>(diag.size()); }
};

JacobiMatrix jacobi_matrix(const OrthoRecurrence& rec, int N);

/// Finite discrete measure produced by Gaussian quadrature: ascending nodes,
/// nonnegative weights summing to one. When the recurrence truncates (some
/// B_n within the clamp of zero) fewer than N points are returned; the
/// measure determined by the recurrence is then exactly that finite law.
struct QuadratureMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  double moment(int m) const;

  template <class Fn>
  double integrate(Fn&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

QuadratureMeasure quadrature(const OrthoRecurrence& rec, int N);

/// Endpoints of the absolutely continuous support of the time-t marginal.
/// Requires |q| < 1 and eta*theta + 1 - q > 0 (DegenerateAC when it vanishes).
std::pair<double, double> support_interval(double t, const HarnessParams& params);

enum class AtomSource { ThetaSide, EtaSide };

struct Atom {
  double x;
  AtomSource source;
};

/// Locations of the discrete atoms of the time-t marginal, in the order
/// theta-side then eta-side, each by ascending index k.
std::vector<Atom> discrete_atoms(double t, const HarnessParams& params);

/// Membership in the admissible set U_t: all partial products of
/// B_1..B_n(x, u, t) stay nonnegative (up to relative rounding slack) for
/// n <= n_max. The set does not depend on u; u = t + 1 is used.
bool in_support_U(double x, double t, const HarnessParams& params, int n_max);

}  // namespace qh
