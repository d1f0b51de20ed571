#pragma once

#include <functional>
#include <string>
#include <utility>

#include "qharness/params.hpp"
#include "qharness/qcalc.hpp"

namespace qh {

/// Coefficient A_n(x, t, s) of the conditional three-term recurrence
///   y Q_n = Q_{n+1} + A_n Q_n + B_n Q_{n-1};
/// A_0(x, t, s) = x.
template <class S>
S coeff_A(long n, const S& x, const S& t, const S& s, const BasicHarnessParams<S>& p) {
  if (n == 0) return x;
  return pow_int(p.q, n) * x +
         q_int(n, p.q) * (t * p.eta + p.theta - (S(1) + p.q) * pow_int(p.q, n - 1) * s * p.eta);
}

/// Coefficient B_n(x, t, s); B_0(x, t, s) = 0.
template <class S>
S coeff_B(long n, const S& x, const S& t, const S& s, const BasicHarnessParams<S>& p) {
  if (n == 0) return S(0);
  const S qn1 = pow_int(p.q, n - 1);
  return q_int(n, p.q) * (t - s * qn1) *
         (S(1) + p.eta * x * qn1 + q_int(n - 1, p.q) * p.eta * (p.theta - s * p.eta * qn1));
}

/// Q_n(y; x, t, s) by forward recurrence from Q_{-1} = 0, Q_0 = 1.
template <class S>
S eval_Q(long n, const S& y, const S& x, const S& t, const S& s, const BasicHarnessParams<S>& p) {
  S prev(0);
  S cur(1);
  for (long m = 0; m < n; ++m) {
    S next = (y - coeff_A(m, x, t, s, p)) * cur - coeff_B(m, x, t, s, p) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Martingale polynomial p_n(x; t), evaluated through its own recurrence
///   x p_n = p_{n+1} + (theta + t eta)[n]_q p_n + t(1 + eta theta [n-1]_q)[n]_q p_{n-1}.
/// Kept independent of eval_Q so the specialization p_n(x;t) = Q_n(x;0,t,0)
/// can be tested as a genuine identity between two code paths.
template <class S>
S eval_p(long n, const S& x, const S& t, const BasicHarnessParams<S>& p) {
  S prev(0);
  S cur(1);
  for (long m = 0; m < n; ++m) {
    const S qi = q_int(m, p.q);
    const S a = (p.theta + t * p.eta) * qi;
    const S b = t * (S(1) + p.eta * p.theta * q_int(m - 1, p.q)) * qi;
    S next = (x - a) * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Monic three-term recurrence packaged for the quadrature layer.
struct OrthoRecurrence {
  std::function<double(int)> diag;     // n -> A_n
  std::function<double(int)> offdiag;  // n -> B_n, offdiag(0) == 0
  std::string family;                  // "p", "Q" or "custom"
};

/// Recurrence of the martingale polynomials p_n(.; t).
inline OrthoRecurrence recurrence_p(double t, const HarnessParams& params) {
  OrthoRecurrence rec;
  rec.family = "p";
  rec.diag = [t, params](int n) { return coeff_A<double>(n, 0.0, t, 0.0, params); };
  rec.offdiag = [t, params](int n) { return coeff_B<double>(n, 0.0, t, 0.0, params); };
  return rec;
}

/// Recurrence of the conditional polynomials Q_n(.; x, t, s).
inline OrthoRecurrence recurrence_Q(double x, double t, double s, const HarnessParams& params) {
  OrthoRecurrence rec;
  rec.family = "Q";
  rec.diag = [x, t, s, params](int n) { return coeff_A<double>(n, x, t, s, params); };
  rec.offdiag = [x, t, s, params](int n) { return coeff_B<double>(n, x, t, s, params); };
  return rec;
}

}  // namespace qh
