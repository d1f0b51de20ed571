#include "qharness/spectral.hpp"

#include <cmath>
#include <cstddef>

#include "qharness/tridiag.hpp"

namespace qh {

double QuadratureMeasure::moment(int m) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * std::pow(nodes[i], m);
  return acc;
}

namespace {

// Scans B_1..B_{N-1}, clamping near-zeros and rejecting genuine negatives.
// Returns the effective order: the measure truncates at the first zero B.
int effective_order(const OrthoRecurrence& rec, int N, std::vector<double>& beta) {
  beta.assign(static_cast<std::size_t>(N), 0.0);
  for (int n = 1; n < N; ++n) {
    double b = rec.offdiag(n);
    if (b < -kBetaClampTol) throw NegativeBeta(n, b);
    if (b <= kBetaClampTol) return n;
    beta[static_cast<std::size_t>(n)] = b;
  }
  return N;
}

}  // namespace

JacobiMatrix jacobi_matrix(const OrthoRecurrence& rec, int N) {
  if (N < 1) throw BadInput("jacobi_matrix: N must be positive");
  JacobiMatrix jac;
  jac.diag.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) jac.diag.push_back(rec.diag(n));
  jac.offdiag.reserve(static_cast<std::size_t>(N - 1));
  for (int n = 1; n < N; ++n) {
    const double b = rec.offdiag(n);
    if (b < -kBetaClampTol) throw NegativeBeta(n, b);
    jac.offdiag.push_back(std::sqrt(std::max(b, 0.0)));
  }
  return jac;
}

QuadratureMeasure quadrature(const OrthoRecurrence& rec, int N) {
  if (N < 1) throw BadInput("quadrature: N must be positive");
  std::vector<double> beta;
  const int m = effective_order(rec, N, beta);

  std::vector<double> diag, off;
  diag.reserve(static_cast<std::size_t>(m));
  off.reserve(static_cast<std::size_t>(m > 0 ? m - 1 : 0));
  for (int n = 0; n < m; ++n) diag.push_back(rec.diag(n));
  for (int n = 1; n < m; ++n) off.push_back(std::sqrt(beta[static_cast<std::size_t>(n)]));

  const TridiagSpectrum spec = tridiag_eigen_first_row(std::move(diag), std::move(off));

  QuadratureMeasure out;
  out.nodes = spec.values;
  out.weights.reserve(spec.first_components.size());
  double total = 0.0;
  for (const double c : spec.first_components) {
    const double w = c * c;
    out.weights.push_back(w);
    total += w;
  }
  if (total <= 0.0) throw EigenFailure("quadrature weights did not normalize");
  for (double& w : out.weights) w /= total;
  return out;
}

std::pair<double, double> support_interval(double t, const HarnessParams& params) {
  require_admissible(params);
  if (std::abs(params.q) >= 1.0) throw BadInput("support_interval: requires |q| < 1");
  if (t < 0.0) throw BadInput("support_interval: t must be nonnegative");
  const double c = params.eta * params.theta + 1.0 - params.q;
  if (c == 0.0) throw DegenerateAC("eta*theta + 1 - q = 0: no absolutely continuous part");
  const double center = params.theta + t * params.eta;
  const double half = 2.0 * std::sqrt(t * c);
  return {(center - half) / (1.0 - params.q), (center + half) / (1.0 - params.q)};
}

std::vector<Atom> discrete_atoms(double t, const HarnessParams& params) {
  require_admissible(params);
  if (std::abs(params.q) >= 1.0) throw BadInput("discrete_atoms: requires |q| < 1");
  if (t <= 0.0) throw BadInput("discrete_atoms: t must be positive");
  const double q = params.q, eta = params.eta, theta = params.theta;
  const double c = eta * theta + 1.0 - q;
  if (c == 0.0)
    throw DegenerateAC("eta*theta + 1 - q = 0: purely atomic marginal with unbounded atom set");

  std::vector<Atom> atoms;
  if (theta != 0.0) {
    for (int k = 0;; ++k) {
      const double qk = pow_int(q, k);
      if (!(t * c < qk * qk * theta * theta)) break;
      const double x =
          -(theta * qk + t * c / (theta * qk) - (t * eta + theta)) / (1.0 - q);
      atoms.push_back({x, AtomSource::ThetaSide});
    }
  }
  if (eta != 0.0) {
    for (int k = 0;; ++k) {
      const double qk = pow_int(q, k);
      if (!(t * eta * eta * qk * qk > c)) break;
      const double x = -(t * eta * qk + c / (eta * qk) - (t * eta + theta)) / (1.0 - q);
      atoms.push_back({x, AtomSource::EtaSide});
    }
  }
  return atoms;
}

bool in_support_U(double x, double t, const HarnessParams& params, int n_max) {
  if (n_max < 1) throw BadInput("in_support_U: n_max must be positive");
  const double u = t + 1.0;
  double prod = 1.0;
  double prod_abs = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    const double b = coeff_B<double>(n, x, u, t, params);
    prod *= b;
    prod_abs *= std::abs(b);
    if (prod < -1e-9 * prod_abs - 1e-300) return false;
    if (prod_abs > 1e100) {  // rescale; only the sign ratio matters
      prod /= prod_abs;
      prod_abs = 1.0;
    }
    if (prod_abs == 0.0) return true;  // a zero B truncates every later product
  }
  return true;
}

}  // namespace qh
