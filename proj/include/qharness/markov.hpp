#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "qharness/spectral.hpp"

namespace qh {

/// Sampled path: time grid (starting at 0) and process values (X_0 = 0).
struct Trajectory {
  std::vector<double> grid;
  std::vector<double> values;
  std::uint64_t seed = 0;
};

/// Number of recurrence coefficients inspected when testing x in U_s.
inline constexpr int kSupportCheckDepth = 50;

/// Time-t marginal law as an N-point quadrature; delta_0 at t = 0.
QuadratureMeasure marginal(double t, int N, const HarnessParams& params);

/// Transition law P_{s,t}(x, .) as the orthogonality measure of the
/// conditional polynomial family. Requires 0 <= s < t, |q| < 1 and x in U_s.
QuadratureMeasure kernel(double s, double t, double x, int N, const HarnessParams& params);

/// max_{1<=n<=n_max} | int p_n(z; u) P_{s,u}(x, dz) - p_n(x; s) |.
double check_martingale(double s, double u, double x, int n_max, int N,
                        const HarnessParams& params);

/// Chapman-Kolmogorov residual: the composed kernel through time t and the
/// direct kernel are compared on the test functions p_n(.; u), n <= n_max.
double check_ck(double s, double t, double u, double x, int n_max, int N,
                const HarnessParams& params);

/// Residual table of the conditional mean/variance laws in weak form.
struct HarnessMomentReport {
  struct Entry {
    int a;
    int b;
    double mean_residual;      // E[Xs^a Xu^b Xt] - E[Xs^a Xu^b L(Xs,Xu)]
    double second_residual;    // E[Xs^a Xu^b Xt^2] - E[Xs^a Xu^b (V + L^2)]
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
};

/// Verifies the conditional-moment laws against polynomial test functions of
/// (X_s, X_u) on the discrete joint measure marginal x kernel x kernel.
HarnessMomentReport check_harness_moments(double s, double t, double u, int a_max, int b_max,
                                          int N, const HarnessParams& params);

/// One path over the grid, inverse-CDF sampling on each transition kernel.
Trajectory sample_path(const std::vector<double>& grid, std::uint64_t seed, int N,
                       const HarnessParams& params);

/// Batch sampling with per-path seeds derived from (master_seed, path index);
/// kernels are memoized across paths (reachable states form a finite set).
std::vector<Trajectory> sample_paths(const std::vector<double>& grid, std::uint64_t master_seed,
                                     int n_paths, int N, const HarnessParams& params);

/// Deterministic per-path seed derivation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace qh
