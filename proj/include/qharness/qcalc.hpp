#pragma once

#include <algorithm>
#include <vector>

#include "qharness/rational.hpp"

namespace qh {

/// q-integer [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
template <class S>
S q_int(long n, const S& q) {
  S acc(0);
  S p(1);
  for (long i = 0; i < n; ++i) {
    acc += p;
    p *= q;
  }
  return acc;
}

/// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
template <class S>
S q_factorial(long n, const S& q) {
  S acc(1);
  for (long m = 1; m <= n; ++m) acc *= q_int(m, q);
  return acc;
}

/// Gaussian binomial coefficient. Zero outside 0 <= k <= n. Evaluated by the
/// q-Pascal recursion, which stays finite at every q (including q = +-1 where
/// the factorial ratio degenerates to 0/0).
template <class S>
S q_binomial(long n, long k, const S& q) {
  if (k < 0 || k > n) return S(0);
  k = std::min(k, n - k);
  if (k == 0) return S(1);
  std::vector<S> row(static_cast<std::size_t>(k) + 1, S(0));
  row[0] = S(1);
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(k, m); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + pow_int(q, j) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace qh
