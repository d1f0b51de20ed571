#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <functional>

#include "qharness/polynomials.hpp"

using qh::coeff_A;
using qh::coeff_B;
using qh::eval_p;
using qh::eval_Q;
using qh::ExactHarnessParams;
using qh::HarnessParams;
using qh::pow_int;
using qh::Rational;
using qh::rational;

namespace {

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational rnd(std::uint64_t& s) {
  long num = 0;
  while (num == 0) num = static_cast<long>(mix(s) % 41) - 20;
  return rational(num, 1 + static_cast<long>(mix(s) % 20));
}

ExactHarnessParams rnd_params(std::uint64_t& s) {
  for (;;) {
    ExactHarnessParams p;
    p.eta = rnd(s);
    p.theta = rnd(s);
    const long den = 2 + static_cast<long>(mix(s) % 19);
    long num = 0;
    while (num == 0) num = static_cast<long>(mix(s) % (2 * den - 1)) - (den - 1);
    p.q = rational(num, den);
    if (p.admissible()) return p;
  }
}

// Leading coefficient via exact n-th finite difference with unit step:
// for a degree-n polynomial f, sum_i (-1)^{n-i} C(n,i) f(x0 + i) = n! * lead.
Rational nth_difference(long n, const std::function<Rational(const Rational&)>& f,
                        const Rational& x0) {
  Rational acc(0);
  Rational binom(1);
  for (long i = 0; i <= n; ++i) {
    const Rational sign((n - i) % 2 == 0 ? 1 : -1);
    acc += sign * binom * f(x0 + Rational(i));
    binom = binom * Rational(n - i) / Rational(i + 1);
  }
  return acc;
}

Rational factorial(long n) {
  Rational acc(1);
  for (long i = 2; i <= n; ++i) acc *= Rational(i);
  return acc;
}

}  // namespace

TEST_CASE("recurrence coefficients at the base index") {
  std::uint64_t s = 5;
  for (int rep = 0; rep < 10; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational x = rnd(s), t = rnd(s), sv = rnd(s);
    CHECK(coeff_A(0, x, t, sv, p) == x);
    CHECK(coeff_B(0, x, t, sv, p) == 0);
    // A_1 = qx + t eta + theta - (1+q) s eta
    CHECK(coeff_A(1, x, t, sv, p) ==
          p.q * x + t * p.eta + p.theta - (Rational(1) + p.q) * sv * p.eta);
    // B_1 = (t - s)(1 + eta x)
    CHECK(coeff_B(1, x, t, sv, p) == (t - sv) * (Rational(1) + p.eta * x));
  }
}

TEST_CASE("marginal coefficients are the x = s = 0 specialization") {
  std::uint64_t s = 17;
  for (int rep = 0; rep < 20; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational t = rnd(s);
    for (long n = 0; n <= 8; ++n) {
      const Rational a = coeff_A(n, Rational(0), t, Rational(0), p);
      const Rational b = coeff_B(n, Rational(0), t, Rational(0), p);
      CHECK(a == (p.theta + t * p.eta) * qh::q_int(n, p.q));
      CHECK(b == t * (Rational(1) + p.eta * p.theta * qh::q_int(n - 1, p.q)) * qh::q_int(n, p.q));
    }
  }
}

TEST_CASE("q = 0 coefficients use the 0^0 = 1 convention") {
  ExactHarnessParams p;
  p.eta = rational(2, 5);
  p.theta = rational(3, 7);
  p.q = Rational(0);
  const Rational t = rational(5, 4);
  // p-family at n = 2: A_2 = theta + t eta, B_2 = t (1 + eta theta)
  CHECK(coeff_A(2, Rational(0), t, Rational(0), p) == p.theta + t * p.eta);
  CHECK(coeff_B(2, Rational(0), t, Rational(0), p) == t * (Rational(1) + p.eta * p.theta));
}

TEST_CASE("low-degree closed forms") {
  std::uint64_t s = 23;
  for (int rep = 0; rep < 10; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational x = rnd(s), y = rnd(s), t = rnd(s), sv = rnd(s), u = rnd(s);
    CHECK(eval_p(0, x, t, p) == 1);
    CHECK(eval_p(1, x, t, p) == x);
    CHECK(eval_p(2, x, t, p) == x * x - (p.theta + t * p.eta) * x - t);
    CHECK(eval_Q(1, y, x, u, sv, p) == y - x);
  }
}

TEST_CASE("Q specializes to p at x = s = 0, exact") {
  std::uint64_t s = 31;
  for (int rep = 0; rep < 200; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational y = rnd(s), t = rnd(s);
    for (long n = 0; n <= 8; ++n) {
      CHECK(eval_Q(n, y, Rational(0), t, Rational(0), p) == eval_p(n, y, t, p));
    }
  }
}

TEST_CASE("Q_n(x; x, s, s) = 0 for n >= 1, exact") {
  std::uint64_t s = 41;
  for (int rep = 0; rep < 50; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational x = rnd(s), sv = rnd(s);
    for (long n = 1; n <= 8; ++n) {
      CHECK(eval_Q(n, x, x, sv, sv, p) == 0);
    }
  }
}

TEST_CASE("both families are monic of the stated degree") {
  std::uint64_t s = 53;
  for (int rep = 0; rep < 5; ++rep) {
    const ExactHarnessParams p = rnd_params(s);
    const Rational x = rnd(s), t = rnd(s), sv = rnd(s), u = rnd(s);
    for (long n = 0; n <= 6; ++n) {
      const Rational lead_p = nth_difference(
          n, [&](const Rational& z) { return eval_p(n, z, t, p); }, rnd(s));
      CHECK(lead_p == factorial(n));
      const Rational lead_q = nth_difference(
          n, [&](const Rational& z) { return eval_Q(n, z, x, u, sv, p); }, rnd(s));
      CHECK(lead_q == factorial(n));
    }
  }
}

TEST_CASE("double evaluation stays bounded for n = 100, |q| < 1") {
  HarnessParams p{0.4, 0.3, -0.9};
  for (double x : {-3.0, 0.0, 2.5}) {
    const double v = eval_Q<double>(100, x, 0.5, 1.0, 0.5, p);
    CHECK(std::isfinite(v));
  }
  HarnessParams p2{0.0, 0.7, 0.9};
  CHECK(std::isfinite(eval_p<double>(100, 1.5, 1.0, p2)));
}

TEST_CASE("recurrence factories expose the same coefficients") {
  HarnessParams p{0.4, 0.3, 0.5};
  const auto rp = qh::recurrence_p(1.25, p);
  CHECK(rp.diag(0) == 0.0);
  CHECK(rp.offdiag(0) == 0.0);
  const auto rq = qh::recurrence_Q(0.7, 1.25, 0.5, p);
  CHECK(rq.diag(0) == 0.7);
  CHECK(rq.offdiag(0) == 0.0);
  CHECK(rq.diag(1) == doctest::Approx(coeff_A<double>(1, 0.7, 1.25, 0.5, p)));
  CHECK(rq.offdiag(1) == doctest::Approx(coeff_B<double>(1, 0.7, 1.25, 0.5, p)));
}
