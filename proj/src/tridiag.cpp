#include "qharness/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

#include "qharness/errors.hpp"

namespace qh {

// Classic implicitly shifted QL for a symmetric tridiagonal matrix. Only the
// quadrature row (initially e_0^T) is carried through the rotations, which
// keeps one sweep at O(N) instead of the O(N^2) of a full eigenvector
// accumulation.
TridiagSpectrum tridiag_eigen_first_row(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  TridiagSpectrum out;
  if (n == 0) return out;

  // Shift the couplings so that e[i] couples (i-1, i), with e[0] unused.
  e.insert(e.begin(), 0.0);
  e.resize(n, 0.0);

  std::vector<double> w(n, 0.0);
  w[0] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m + 1]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw EigenFailure("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l + 1]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l + 1] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i + 1];
          const double b = c * e[i + 1];
          r = std::hypot(f, g);
          e[i + 2] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m + 1] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = w[i + 1];
          w[i + 1] = s * w[i] + c * f;
          w[i] = c * w[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l + 1] = g;
        e[m + 1] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (d[a] != d[b]) return d[a] < d[b];
    return a < b;
  });
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (const std::size_t idx : order) {
    out.values.push_back(d[idx]);
    out.first_components.push_back(w[idx]);
  }
  return out;
}

}  // namespace qh
