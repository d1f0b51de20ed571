#include "qharness/qm1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace qh {

namespace {

void require_qm1(const HarnessParams& params) {
  if (params.q != -1.0) throw BadInput("q = -1 module requires q == -1");
  if (1.0 + params.eta * params.theta < 0.0) throw BadInput("1+eta*theta < max(q,0)");
}

double root_term(double t, const HarnessParams& params) {
  const double m = t * params.eta + params.theta;
  return std::sqrt(4.0 * t + m * m);
}

}  // namespace

TwoPointLaw atoms(double t, const HarnessParams& params) {
  require_qm1(params);
  if (!(t > 0.0)) throw BadInput("atoms: t must be positive");
  const double m = t * params.eta + params.theta;
  const double r = root_term(t, params);
  TwoPointLaw law;
  law.a_plus = 0.5 * (m + r);
  law.a_minus = 0.5 * (m - r);
  law.p_plus = 0.5 - m / (2.0 * r);
  law.p_minus = 0.5 + m / (2.0 * r);
  return law;
}

TransitionMatrix2 transition_matrix(double s, double t, const HarnessParams& params) {
  require_qm1(params);
  if (!(0.0 < s && s < t)) throw BadInput("transition_matrix: requires 0 < s < t");
  const double eta = params.eta;
  const double rs = root_term(s, params);
  const double rt = root_term(t, params);
  const double d = s * eta - t * eta;
  TransitionMatrix2 P;
  P.pp = (d + rs + rt) / (2.0 * rt);
  P.mp = (d - rs + rt) / (2.0 * rt);
  P.pm = (-d - rs + rt) / (2.0 * rt);
  P.mm = (-d + rs + rt) / (2.0 * rt);
  return P;
}

double check_ck_exact(double s, double t, double u, const HarnessParams& params) {
  if (!(0.0 < s && s < t && t < u)) throw BadInput("check_ck_exact: requires 0 < s < t < u");
  const TransitionMatrix2 a = transition_matrix(s, t, params);
  const TransitionMatrix2 b = transition_matrix(t, u, params);
  const TransitionMatrix2 c = transition_matrix(s, u, params);
  const double mm = a.mm * b.mm + a.mp * b.pm;
  const double mp = a.mm * b.mp + a.mp * b.pp;
  const double pm = a.pm * b.mm + a.pp * b.pm;
  const double pp = a.pm * b.mp + a.pp * b.pp;
  return std::max({std::abs(mm - c.mm), std::abs(mp - c.mp), std::abs(pm - c.pm),
                   std::abs(pp - c.pp)});
}

double check_harness_exact(double s, double t, double u, const HarnessParams& params) {
  if (!(0.0 < s && s < t && t < u))
    throw BadInput("check_harness_exact: requires 0 < s < t < u");
  const double q = -1.0, eta = params.eta, theta = params.theta;
  const TwoPointLaw ls = atoms(s, params);
  const TwoPointLaw lt = atoms(t, params);
  const TwoPointLaw lu = atoms(u, params);
  const TransitionMatrix2 Pst = transition_matrix(s, t, params);
  const TransitionMatrix2 Ptu = transition_matrix(t, u, params);
  const TransitionMatrix2 Psu = transition_matrix(s, u, params);

  const std::array<double, 2> as = {ls.a_minus, ls.a_plus};
  const std::array<double, 2> at = {lt.a_minus, lt.a_plus};
  const std::array<double, 2> au = {lu.a_minus, lu.a_plus};
  const auto entry = [](const TransitionMatrix2& P, int row, int col) {
    return row == 0 ? (col == 0 ? P.mm : P.mp) : (col == 0 ? P.pm : P.pp);
  };

  double worst = 0.0;
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int gamma = 0; gamma < 2; ++gamma) {
      const double denom = entry(Psu, alpha, gamma);
      if (denom == 0.0) throw DegenerateConditioning("p_{alpha gamma}(s, u) = 0");
      double m1 = 0.0, m2 = 0.0;
      for (int beta = 0; beta < 2; ++beta) {
        const double w = entry(Pst, alpha, beta) * entry(Ptu, beta, gamma) / denom;
        m1 += w * at[beta];
        m2 += w * at[beta] * at[beta];
      }
      const double xs = as[alpha];
      const double xu = au[gamma];
      const double w = u - s;
      const double L = ((u - t) * xs + (t - s) * xu) / w;
      const double m = u * xs - s * xu;
      const double diff = xu - xs;
      const double V = (u - t) * (t - s) / (u - q * s) *
                       (1.0 + eta * m / w + theta * diff / w - (1.0 - q) * m * diff / (w * w));
      worst = std::max({worst, std::abs(m1 - L), std::abs(m2 - m1 * m1 - V)});
    }
  }
  return worst;
}

namespace {

Trajectory sample_qm1_one(const std::vector<double>& grid, std::uint64_t seed,
                          const HarnessParams& params) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Trajectory traj;
  traj.grid = grid;
  traj.seed = seed;
  traj.values.reserve(grid.size());
  traj.values.push_back(0.0);
  int state = 0;  // 0 = minus, 1 = plus
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t = grid[i];
    const TwoPointLaw law = atoms(t, params);
    double p_plus;
    if (grid[i - 1] == 0.0) {
      p_plus = law.p_plus;  // delta_0 initial law feeds the marginal directly
    } else {
      const TransitionMatrix2 P = transition_matrix(grid[i - 1], t, params);
      p_plus = state == 1 ? P.pp : P.mp;
    }
    state = unif(rng) <= p_plus ? 1 : 0;
    traj.values.push_back(state == 1 ? law.a_plus : law.a_minus);
  }
  return traj;
}

void validate_qm1_grid(const std::vector<double>& grid) {
  if (grid.empty() || grid.front() != 0.0) throw BadInput("time grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw BadInput("time grid must be strictly increasing");
}

}  // namespace

Trajectory sample_qm1_path(const std::vector<double>& grid, std::uint64_t seed,
                           const HarnessParams& params) {
  require_qm1(params);
  validate_qm1_grid(grid);
  return sample_qm1_one(grid, seed, params);
}

std::vector<Trajectory> sample_qm1_paths(const std::vector<double>& grid,
                                         std::uint64_t master_seed, int n_paths,
                                         const HarnessParams& params) {
  require_qm1(params);
  validate_qm1_grid(grid);
  std::vector<Trajectory> out;
  out.reserve(static_cast<std::size_t>(n_paths));
  for (int i = 0; i < n_paths; ++i) {
    out.push_back(
        sample_qm1_one(grid, derive_seed(master_seed, static_cast<std::uint64_t>(i)), params));
  }
  return out;
}

}  // namespace qh
