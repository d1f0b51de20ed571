#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qharness/markov.hpp"
#include "qharness/params.hpp"

namespace qh {

/// Parameters (theta~, tau~, t~) of the one-step conditional recurrence at
/// q = 1, obtained by centering the conditional polynomials at the current
/// state.
struct MeixnerParams {
  double theta_tilde = 0.0;
  double tau_tilde = 0.0;
  double t_tilde = 0.0;

  double discriminant() const { return theta_tilde * theta_tilde - 4.0 * tau_tilde; }
};

/// (theta~, tau~, t~) for the transition from state x at time s to time t.
/// Requires q = 1, eta, theta > 0, 0 <= s < t and x >= -1/eta.
MeixnerParams transition_params(double s, double t, double x, const HarnessParams& params);

enum class MeixnerFamily { PointMass, Poisson, Gamma, NegativeBinomial, Binomial };

std::string family_name(MeixnerFamily f);

/// One of the closed-form laws, plus the affine map Y = scale * Z + shift.
struct DistributionSpec {
  MeixnerFamily family = MeixnerFamily::PointMass;
  double p1 = 0.0;  // lambda | shape r | r | n
  double p2 = 0.0;  // -      | scale   | p | p
  double scale = 1.0;
  double shift = 0.0;
};

/// Classifies the recurrence parameters into the closed-form cases.
/// Throws UnidentifiableRegime when no case applies (in particular when
/// tau~ < 0 and -t~/tau~ misses an integer by more than 1e-9).
DistributionSpec identify_meixner(const MeixnerParams& mp);

/// One draw of scale * Z + shift with Z from the base family.
double sample_table1(const DistributionSpec& spec, std::mt19937_64& rng);

/// How a step straddling the regime boundary theta/eta is simulated: split
/// into two steps through the boundary, or drawn as a single closed-form step.
enum class StraddlePolicy { SplitAtBoundary, SingleStep };

/// Exact simulation of the q = 1 process via its latent integer/positive
/// chain. Requires eta, theta > 0 and an ascending grid from 0.
Trajectory sample_q1_path(const std::vector<double>& grid, std::uint64_t seed,
                          const HarnessParams& params,
                          StraddlePolicy policy = StraddlePolicy::SplitAtBoundary);

std::vector<Trajectory> sample_q1_paths(const std::vector<double>& grid,
                                        std::uint64_t master_seed, int n_paths,
                                        const HarnessParams& params,
                                        StraddlePolicy policy = StraddlePolicy::SplitAtBoundary);

/// Marginal moments E Y_t^m, m = 1..4, of the q = 1 process started at 0.
std::vector<double> q1_exact_moments(double t, const HarnessParams& params);

/// One draw of Y_t from Y_0 = 0 via the direct marginal identification
/// (negative binomial off the boundary, gamma at it).
double sample_q1_marginal_direct(double t, const HarnessParams& params, std::mt19937_64& rng);

}  // namespace qh
