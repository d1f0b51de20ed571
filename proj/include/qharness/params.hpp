#pragma once

#include <cmath>

#include "qharness/errors.hpp"
#include "qharness/rational.hpp"

namespace qh {

/// Process parameters (eta, theta, q). Admissible when q lies in [-1, 1] and
/// 1 + eta*theta >= max(q, 0).
template <class S>
struct BasicHarnessParams {
  S eta{0};
  S theta{0};
  S q{0};

  bool admissible() const {
    const S zero(0);
    const S one(1);
    if (q < S(-1) || q > one) return false;
    const S bound = q > zero ? q : zero;
    return one + eta * theta >= bound;
  }
};

using HarnessParams = BasicHarnessParams<double>;
using ExactHarnessParams = BasicHarnessParams<Rational>;

inline void require_admissible(const HarnessParams& p) {
  if (p.q < -1.0 || p.q > 1.0) throw BadInput("q outside [-1, 1]");
  if (1.0 + p.eta * p.theta < std::max(p.q, 0.0)) throw BadInput("1+eta*theta < max(q,0)");
}

}  // namespace qh
