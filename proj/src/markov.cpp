#include "qharness/markov.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qh {

namespace {

void require_q_interior(const HarnessParams& params) {
  if (std::abs(params.q) >= 1.0)
    throw BadInput("quadrature-based kernels require |q| < 1; q = +-1 has its own exact module");
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty() || grid.front() != 0.0) throw BadInput("time grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw BadInput("time grid must be strictly increasing");
}

// Order sufficient to integrate polynomials of degree deg exactly.
int gauss_order_for_degree(int deg, int cap) {
  return std::min(cap, std::max(4, deg / 2 + 1));
}

}  // namespace

QuadratureMeasure marginal(double t, int N, const HarnessParams& params) {
  require_admissible(params);
  require_q_interior(params);
  if (t < 0.0) throw BadInput("marginal: t must be nonnegative");
  if (t == 0.0) return QuadratureMeasure{{0.0}, {1.0}};
  return quadrature(recurrence_p(t, params), N);
}

QuadratureMeasure kernel(double s, double t, double x, int N, const HarnessParams& params) {
  require_admissible(params);
  require_q_interior(params);
  if (!(s >= 0.0 && s < t)) throw BadInput("kernel: requires 0 <= s < t");
  if (!in_support_U(x, s, params, kSupportCheckDepth)) throw OutsideSupport(x);
  return quadrature(recurrence_Q(x, t, s, params), N);
}

double check_martingale(double s, double u, double x, int n_max, int N,
                        const HarnessParams& params) {
  const QuadratureMeasure law = kernel(s, u, x, N, params);
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double lhs = law.integrate([&](double z) { return eval_p<double>(n, z, u, params); });
    const double rhs = eval_p<double>(n, x, s, params);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double check_ck(double s, double t, double u, double x, int n_max, int N,
                const HarnessParams& params) {
  if (!(s >= 0.0 && s < t && t < u)) throw BadInput("check_ck: requires 0 <= s < t < u");
  const QuadratureMeasure hop = kernel(s, t, x, N, params);
  const QuadratureMeasure direct = kernel(s, u, x, N, params);
  // The inner kernels only meet polynomials of degree <= n_max, so a reduced
  // Gaussian order already integrates them exactly.
  const int inner_order = gauss_order_for_degree(n_max, N);

  std::vector<double> composed(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int i = 0; i < hop.size(); ++i) {
    const double y = hop.nodes[static_cast<std::size_t>(i)];
    if (!in_support_U(y, t, params, kSupportCheckDepth)) throw OutsideSupport(y);
    const QuadratureMeasure inner = kernel(t, u, y, inner_order, params);
    for (int n = 1; n <= n_max; ++n) {
      composed[static_cast<std::size_t>(n)] +=
          hop.weights[static_cast<std::size_t>(i)] *
          inner.integrate([&](double z) { return eval_p<double>(n, z, u, params); });
    }
  }
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double d = direct.integrate([&](double z) { return eval_p<double>(n, z, u, params); });
    worst = std::max(worst, std::abs(composed[static_cast<std::size_t>(n)] - d));
  }
  return worst;
}

HarnessMomentReport check_harness_moments(double s, double t, double u, int a_max, int b_max,
                                          int N, const HarnessParams& params) {
  if (!(s >= 0.0 && s < t && t < u))
    throw BadInput("check_harness_moments: requires 0 <= s < t < u");
  if (a_max < 0 || b_max < 0 || a_max > 3 || b_max > 3)
    throw BadInput("check_harness_moments: a_max, b_max must lie in [0, 3]");

  const double q = params.q, eta = params.eta, theta = params.theta;
  const QuadratureMeasure ms = marginal(s, N, params);
  // Innermost expectations involve z-degree at most b_max + 2.
  const int inner_order = gauss_order_for_degree(b_max + 2, N);

  const std::size_t na = static_cast<std::size_t>(a_max) + 1;
  const std::size_t nb = static_cast<std::size_t>(b_max) + 1;
  std::vector<double> mean_lhs(na * nb, 0.0), mean_rhs(na * nb, 0.0);
  std::vector<double> sec_lhs(na * nb, 0.0), sec_rhs(na * nb, 0.0);

  std::vector<double> zmom(static_cast<std::size_t>(b_max) + 3, 0.0);
  for (int i = 0; i < ms.size(); ++i) {
    const double xs = ms.nodes[static_cast<std::size_t>(i)];
    const double ws = ms.weights[static_cast<std::size_t>(i)];
    const QuadratureMeasure mid = kernel(s, t, xs, N, params);
    for (int jj = 0; jj < mid.size(); ++jj) {
      const double xt = mid.nodes[static_cast<std::size_t>(jj)];
      const double wt = ws * mid.weights[static_cast<std::size_t>(jj)];
      const QuadratureMeasure inner = kernel(t, u, xt, inner_order, params);
      for (int b = 0; b <= b_max + 2; ++b) zmom[static_cast<std::size_t>(b)] = inner.moment(b);
      double xa = 1.0;
      for (int a = 0; a <= a_max; ++a) {
        for (int b = 0; b <= b_max; ++b) {
          // E[Xs^a Xu^b f(Xt, Xu)] accumulated through the inner z-moments:
          // L and V are affine/quadratic in Xu so only zmom[b..b+2] appear.
          const std::size_t at = static_cast<std::size_t>(a) * nb + static_cast<std::size_t>(b);
          const double zb = zmom[static_cast<std::size_t>(b)];
          const double zb1 = zmom[static_cast<std::size_t>(b) + 1];
          const double zb2 = zmom[static_cast<std::size_t>(b) + 2];
          const double w = u - s;
          // L(xs, Xu) = l0 + l1 Xu, V(xs, Xu) = v0 + v1 Xu + v2 Xu^2
          const double l0 = (u - t) * xs / w;
          const double l1 = (t - s) / w;
          const double pref = (u - t) * (t - s) / (u - q * s);
          const double v0 = pref * (1.0 + eta * u * xs / w - theta * xs / w +
                                    (1.0 - q) * u * xs * xs / (w * w));
          const double v1 =
              pref * (-eta * s / w + theta / w - (1.0 - q) * xs * (u + s) / (w * w));
          const double v2 = pref * (1.0 - q) * s / (w * w);
          mean_lhs[at] += wt * xa * xt * zb;
          mean_rhs[at] += wt * xa * (l0 * zb + l1 * zb1);
          sec_lhs[at] += wt * xa * xt * xt * zb;
          sec_rhs[at] += wt * xa *
                         ((v0 + l0 * l0) * zb + (v1 + 2.0 * l0 * l1) * zb1 + (v2 + l1 * l1) * zb2);
        }
        xa *= xs;
      }
    }
  }

  HarnessMomentReport report;
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      const std::size_t at = static_cast<std::size_t>(a) * nb + static_cast<std::size_t>(b);
      HarnessMomentReport::Entry e;
      e.a = a;
      e.b = b;
      e.mean_residual = mean_lhs[at] - mean_rhs[at];
      e.second_residual = sec_lhs[at] - sec_rhs[at];
      report.entries.push_back(e);
      report.max_residual =
          std::max({report.max_residual, std::abs(e.mean_residual), std::abs(e.second_residual)});
    }
  }
  return report;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master ^ (0x9E3779B97f4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

class KernelCache {
 public:
  KernelCache(int N, const HarnessParams& params) : N_(N), params_(params) {}

  const QuadratureMeasure& get(double s, double t, double x) {
    const auto key = std::make_tuple(s, t, x);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, kernel(s, t, x, N_, params_)).first;
    return it->second;
  }

 private:
  int N_;
  HarnessParams params_;
  std::map<std::tuple<double, double, double>, QuadratureMeasure> cache_;
};

double draw_from(const QuadratureMeasure& law, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = unif(rng);
  double acc = 0.0;
  for (int i = 0; i < law.size(); ++i) {
    acc += law.weights[static_cast<std::size_t>(i)];
    if (r <= acc) return law.nodes[static_cast<std::size_t>(i)];
  }
  return law.nodes.back();
}

Trajectory sample_one(const std::vector<double>& grid, std::uint64_t seed, KernelCache& cache) {
  std::mt19937_64 rng(seed);
  Trajectory traj;
  traj.grid = grid;
  traj.seed = seed;
  traj.values.reserve(grid.size());
  double state = 0.0;
  traj.values.push_back(state);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    state = draw_from(cache.get(grid[i - 1], grid[i], state), rng);
    traj.values.push_back(state);
  }
  return traj;
}

}  // namespace

Trajectory sample_path(const std::vector<double>& grid, std::uint64_t seed, int N,
                       const HarnessParams& params) {
  validate_grid(grid);
  require_admissible(params);
  require_q_interior(params);
  KernelCache cache(N, params);
  return sample_one(grid, seed, cache);
}

std::vector<Trajectory> sample_paths(const std::vector<double>& grid, std::uint64_t master_seed,
                                     int n_paths, int N, const HarnessParams& params) {
  validate_grid(grid);
  require_admissible(params);
  require_q_interior(params);
  KernelCache cache(N, params);
  std::vector<Trajectory> out;
  out.reserve(static_cast<std::size_t>(n_paths));
  for (int i = 0; i < n_paths; ++i) {
    out.push_back(sample_one(grid, derive_seed(master_seed, static_cast<std::uint64_t>(i)), cache));
  }
  return out;
}

}  // namespace qh
