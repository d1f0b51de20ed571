#pragma once

#include <cstdint>
#include <vector>

#include "qharness/markov.hpp"
#include "qharness/params.hpp"

namespace qh {

/// Two-point marginal law at q = -1: atoms a_+-(t) with probabilities p_+-(t).
struct TwoPointLaw {
  double a_plus;
  double a_minus;
  double p_plus;
  double p_minus;
};

/// 2x2 transition matrix; rows are the state at time s, columns at time t,
/// ordered (-, +).
struct TransitionMatrix2 {
  double mm, mp, pm, pp;

  double row_minus_sum() const { return mm + mp; }
  double row_plus_sum() const { return pm + pp; }
};

/// Atoms and probabilities of the time-t marginal. Requires t > 0 and
/// 1 + eta*theta >= 0.
TwoPointLaw atoms(double t, const HarnessParams& params);

/// Closed-form transition matrix for 0 < s < t.
TransitionMatrix2 transition_matrix(double s, double t, const HarnessParams& params);

/// Entrywise max | P_{s,t} P_{t,u} - P_{s,u} | for 0 < s < t < u.
double check_ck_exact(double s, double t, double u, const HarnessParams& params);

/// Max residual, over the four (alpha, gamma) conditioning pairs, of the
/// conditional mean and variance of X_t against the harness laws evaluated at
/// (a_alpha(s), a_gamma(u)). Throws DegenerateConditioning if some
/// p_{alpha gamma}(s, u) vanishes.
double check_harness_exact(double s, double t, double u, const HarnessParams& params);

/// Two-state chain simulation; X_t in {a_-(t), a_+(t)}, X_0 = 0.
Trajectory sample_qm1_path(const std::vector<double>& grid, std::uint64_t seed,
                           const HarnessParams& params);

std::vector<Trajectory> sample_qm1_paths(const std::vector<double>& grid,
                                         std::uint64_t master_seed, int n_paths,
                                         const HarnessParams& params);

}  // namespace qh
