#include "qharness/q1.hpp"

#include <algorithm>
#include <cmath>

namespace qh {

namespace {

void require_q1(const HarnessParams& params) {
  if (params.q != 1.0) throw BadInput("q = 1 module requires q == 1");
  if (!(params.eta > 0.0 && params.theta > 0.0))
    throw BadInput("q = 1 module requires eta > 0 and theta > 0");
}

constexpr double kClassifyTol = 1e-9;

long poisson_draw(double lambda, std::mt19937_64& rng) {
  if (lambda <= 0.0) return 0;
  std::poisson_distribution<long> dist(lambda);
  return dist(rng);
}

double gamma_draw(double shape, double scale, std::mt19937_64& rng) {
  if (shape <= 0.0 || scale <= 0.0) return 0.0;
  std::gamma_distribution<double> dist(shape, scale);
  return dist(rng);
}

// Negative binomial with real shape r, via the gamma-Poisson mixture.
long nb_draw(double r, double p, std::mt19937_64& rng) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) throw NumericError("negative binomial with p <= 0");
  return poisson_draw(gamma_draw(r, (1.0 - p) / p, rng), rng);
}

long binomial_draw(long n, double p, std::mt19937_64& rng) {
  if (n <= 0) return 0;
  std::binomial_distribution<long> dist(n, std::clamp(p, 0.0, 1.0));
  return dist(rng);
}

long require_integer_state(double z) {
  const double r = std::round(z);
  if (std::abs(z - r) > 1e-9 * std::max(1.0, std::abs(z)))
    throw NumericError("latent chain state must be integer in the binomial regime");
  return static_cast<long>(r);
}

}  // namespace

MeixnerParams transition_params(double s, double t, double x, const HarnessParams& params) {
  require_q1(params);
  if (!(s >= 0.0 && s < t)) throw BadInput("transition_params: requires 0 <= s < t");
  const double eta = params.eta, theta = params.theta;
  MeixnerParams mp;
  mp.theta_tilde = t * eta + theta - 2.0 * s * eta;
  mp.tau_tilde = eta * (theta - s * eta) * (t - s);
  mp.t_tilde = (1.0 + eta * x) * (t - s);
  return mp;
}

std::string family_name(MeixnerFamily f) {
  switch (f) {
    case MeixnerFamily::PointMass: return "point-mass";
    case MeixnerFamily::Poisson: return "poisson";
    case MeixnerFamily::Gamma: return "gamma";
    case MeixnerFamily::NegativeBinomial: return "negative-binomial";
    case MeixnerFamily::Binomial: return "binomial";
  }
  return "?";
}

DistributionSpec identify_meixner(const MeixnerParams& mp) {
  const double th = mp.theta_tilde, ta = mp.tau_tilde, tt = mp.t_tilde;
  const double scale_ref = std::max({std::abs(th) * std::abs(th), std::abs(ta), std::abs(tt), 1e-300});
  DistributionSpec spec;

  if (std::abs(tt) <= kClassifyTol * scale_ref) {
    spec.family = MeixnerFamily::PointMass;
    return spec;
  }
  if (std::abs(ta) <= kClassifyTol * scale_ref && th != 0.0) {
    spec.family = MeixnerFamily::Poisson;
    spec.p1 = tt / (th * th);
    spec.scale = th;
    spec.shift = -tt / th;
    return spec;
  }
  if (ta < 0.0) {
    const double n = -tt / ta;
    if (std::abs(n - std::round(n)) > 1e-9)
      throw UnidentifiableRegime("tau~ < 0 but -t~/tau~ is not an integer");
    const double disc = std::sqrt(mp.discriminant());
    spec.family = MeixnerFamily::Binomial;
    spec.p1 = std::round(n);
    spec.p2 = 0.5 * (1.0 - th / disc);
    spec.scale = disc;
    spec.shift = tt / (2.0 * ta) * (disc - th);
    return spec;
  }
  // tau~ > 0 from here on.
  const double disc = mp.discriminant();
  if (std::abs(disc) <= kClassifyTol * scale_ref) {
    spec.family = MeixnerFamily::Gamma;
    spec.p1 = tt / ta;                 // shape
    spec.p2 = 0.5 * std::abs(th);      // scale
    spec.scale = th > 0.0 ? 1.0 : -1.0;
    spec.shift = -2.0 * tt / th;
    return spec;
  }
  if (disc > 0.0) {
    const double root = std::sqrt(disc);
    const double sgn = th > 0.0 ? 1.0 : -1.0;
    spec.family = MeixnerFamily::NegativeBinomial;
    spec.p1 = tt / ta;
    spec.p2 = 2.0 * root / (std::abs(th) + root);
    spec.scale = sgn * root;
    spec.shift = -sgn * (std::abs(th) - root) / (2.0 * ta) * tt;
    return spec;
  }
  throw UnidentifiableRegime("theta~^2 < 4 tau~ with tau~ > 0: no closed-form case applies");
}

double sample_table1(const DistributionSpec& spec, std::mt19937_64& rng) {
  double z = 0.0;
  switch (spec.family) {
    case MeixnerFamily::PointMass: z = 0.0; break;
    case MeixnerFamily::Poisson: z = static_cast<double>(poisson_draw(spec.p1, rng)); break;
    case MeixnerFamily::Gamma: z = gamma_draw(spec.p1, spec.p2, rng); break;
    case MeixnerFamily::NegativeBinomial:
      z = static_cast<double>(nb_draw(spec.p1, spec.p2, rng));
      break;
    case MeixnerFamily::Binomial:
      z = static_cast<double>(binomial_draw(static_cast<long>(spec.p1), spec.p2, rng));
      break;
  }
  return spec.scale * z + spec.shift;
}

namespace {

// Latent chain of the q = 1 construction. The state is integer below the
// boundary t* = theta/eta and after crossing it; it is real-valued exactly at
// the boundary time.
struct LatentChain {
  double eta, theta, tstar;

  double y_from_z(double t, double z) const {
    if (t < tstar) return (theta - eta * t) * z - t / theta;
    if (t == tstar) return z - 1.0 / eta;
    return (eta * t - theta) * z - 1.0 / eta;
  }

  double step(double s, double t, double z, std::mt19937_64& rng) const {
    if (t < tstar) {  // s < t < t*
      const double p = (theta - eta * t) / (theta - eta * s);
      return z + static_cast<double>(nb_draw(1.0 / (theta * eta) + z, p, rng));
    }
    if (t == tstar) return gamma_draw(1.0 / (theta * eta) + z, theta - eta * s, rng);
    if (s == tstar) return static_cast<double>(poisson_draw(z / (eta * t - theta), rng));
    if (s > tstar) {
      const long n = require_integer_state(z);
      return static_cast<double>(binomial_draw(n, (eta * s - theta) / (eta * t - theta), rng));
    }
    // s < t* < t, single closed-form step
    const double p = (eta * t - theta) / (eta * (t - s));
    return static_cast<double>(nb_draw(1.0 / (theta * eta) + z, p, rng));
  }
};

Trajectory sample_q1_one(const std::vector<double>& grid, std::uint64_t seed,
                         const HarnessParams& params, StraddlePolicy policy) {
  const LatentChain chain{params.eta, params.theta, params.theta / params.eta};
  std::mt19937_64 rng(seed);
  Trajectory traj;
  traj.grid = grid;
  traj.seed = seed;
  traj.values.reserve(grid.size());
  double z = 0.0;
  traj.values.push_back(0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double s = grid[i - 1];
    const double t = grid[i];
    if (policy == StraddlePolicy::SplitAtBoundary && s < chain.tstar && t > chain.tstar) {
      z = chain.step(s, chain.tstar, z, rng);
      z = chain.step(chain.tstar, t, z, rng);
    } else {
      z = chain.step(s, t, z, rng);
    }
    traj.values.push_back(chain.y_from_z(t, z));
  }
  return traj;
}

void validate_q1_grid(const std::vector<double>& grid) {
  if (grid.empty() || grid.front() != 0.0) throw BadInput("time grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw BadInput("time grid must be strictly increasing");
}

}  // namespace

Trajectory sample_q1_path(const std::vector<double>& grid, std::uint64_t seed,
                          const HarnessParams& params, StraddlePolicy policy) {
  require_q1(params);
  validate_q1_grid(grid);
  return sample_q1_one(grid, seed, params, policy);
}

std::vector<Trajectory> sample_q1_paths(const std::vector<double>& grid,
                                        std::uint64_t master_seed, int n_paths,
                                        const HarnessParams& params, StraddlePolicy policy) {
  require_q1(params);
  validate_q1_grid(grid);
  std::vector<Trajectory> out;
  out.reserve(static_cast<std::size_t>(n_paths));
  for (int i = 0; i < n_paths; ++i) {
    out.push_back(sample_q1_one(grid, derive_seed(master_seed, static_cast<std::uint64_t>(i)),
                                params, policy));
  }
  return out;
}

std::vector<double> q1_exact_moments(double t, const HarnessParams& params) {
  const MeixnerParams mp = transition_params(0.0, t, 0.0, params);
  const double th = mp.theta_tilde, ta = mp.tau_tilde, tt = mp.t_tilde;
  return {0.0, tt, th * tt, 3.0 * tt * tt + (th * th + 2.0 * ta) * tt};
}

double sample_q1_marginal_direct(double t, const HarnessParams& params, std::mt19937_64& rng) {
  require_q1(params);
  if (!(t > 0.0)) throw BadInput("t must be positive");
  const double eta = params.eta, theta = params.theta;
  if (t == theta / eta) return gamma_draw(1.0 / (theta * eta), theta, rng) - 1.0 / eta;
  const double spread = std::abs(theta - eta * t);
  const double p = spread / std::max(theta, eta * t);
  const double z = static_cast<double>(nb_draw(1.0 / (eta * theta), p, rng));
  return spread * z - std::min(theta, eta * t) / (theta * eta);
}

}  // namespace qh
