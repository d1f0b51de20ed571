#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qharness/connection.hpp"

using qh::b_poly;
using qh::b_tilde;
using qh::ExactHarnessParams;
using qh::ExactTuple;
using qh::gamma_coeff;
using qh::gamma_tilde;
using qh::q_binomial;
using qh::Rational;
using qh::rational;
using qh::TupleSampler;

namespace {

ExactTuple sample_tuple(std::uint64_t seed, bool q0 = false) {
  TupleSampler sampler(seed);
  return sampler.next(q0);
}

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

}  // namespace

TEST_CASE("gamma conventions") {
  const ExactTuple tup = sample_tuple(3);
  const auto& p = tup.params;
  for (long n = 0; n <= 6; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(gamma_coeff<Rational>({n, k, 0}, tup.s, p) == q_binomial(n, k, p.q));
    }
    for (long j = 1; j <= n; ++j) {
      CHECK(gamma_coeff<Rational>({n, n, j}, tup.s, p) == 0);
    }
  }
  CHECK(gamma_coeff<Rational>({4, 2, -1}, tup.s, p) == 0);
  CHECK(gamma_coeff<Rational>({4, 2, 3}, tup.s, p) == 0);
  CHECK(gamma_coeff<Rational>({4, 5, 0}, tup.s, p) == 0);
  CHECK(gamma_coeff<Rational>({4, -1, 0}, tup.s, p) == 0);
  // gamma_{2,1,1} = s eta (1 + q)
  CHECK(gamma_coeff<Rational>({2, 1, 1}, tup.s, p) ==
        tup.s * p.eta * (Rational(1) + p.q));
}

TEST_CASE("gamma exponent is an even product") {
  // (2k-1-j) j must be even for all index pairs in range.
  for (long k = 0; k <= 30; ++k) {
    for (long j = 0; j <= k; ++j) {
      CHECK(((2 * k - 1 - j) * j) % 2 == 0);
    }
  }
}

TEST_CASE("gamma_tilde specializes to gamma at t = 0") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const ExactTuple tup = sample_tuple(seed);
    const auto& p = tup.params;
    for (long n = 0; n <= 6; ++n) {
      for (long k = 0; k <= n; ++k) {
        for (long j = 0; j <= k; ++j) {
          CHECK(gamma_tilde<Rational>({n, k, j}, Rational(0), tup.s, p) ==
                gamma_coeff<Rational>({n, k, j}, tup.s, p));
        }
      }
    }
  }
}

TEST_CASE("b polynomial boundary cases") {
  const ExactTuple tup = sample_tuple(21);
  const auto& p = tup.params;
  for (long n = 0; n <= 6; ++n) {
    CHECK(b_poly(n, 0L, tup.y, tup.x, tup.s, p) == 1);
    CHECK(b_poly(n, n, tup.y, tup.x, tup.s, p) ==
          qh::eval_Q(n, tup.y, tup.x, Rational(0), tup.s, p));
    CHECK(b_poly(n, -1L, tup.y, tup.x, tup.s, p) == 0);
    CHECK(b_poly(n, n + 1, tup.y, tup.x, tup.s, p) == 0);
  }
  // b_1^{(2)} = (1+q)(y - x + s eta)
  CHECK(b_poly(2, 1, tup.y, tup.x, tup.s, p) ==
        (Rational(1) + p.q) * (tup.y - tup.x + tup.s * p.eta));
}

TEST_CASE("b_tilde matches b_poly at t = 0 and collapses at k = n") {
  for (std::uint64_t seed : {31u, 32u}) {
    const ExactTuple tup = sample_tuple(seed);
    const auto& p = tup.params;
    for (long n = 0; n <= 5; ++n) {
      for (long k = 0; k <= n; ++k) {
        CHECK(b_tilde(n, k, tup.y, tup.x, Rational(0), tup.s, p) ==
              b_poly(n, k, tup.y, tup.x, tup.s, p));
      }
      CHECK(b_tilde(n, 0L, tup.y, tup.x, tup.t, tup.s, p) == 1);
      CHECK(b_tilde(n, n, tup.y, tup.x, tup.t, tup.s, p) ==
            qh::eval_Q(n, tup.y, tup.x, tup.t, tup.s, p));
    }
  }
}

TEST_CASE("b_k has degree k in y with leading coefficient [n k]_q") {
  TupleSampler sampler(77);
  for (int rep = 0; rep < 5; ++rep) {
    const ExactTuple tup = sampler.next();
    const auto& p = tup.params;
    for (long n = 1; n <= 5; ++n) {
      for (long k = 0; k <= n; ++k) {
        const Rational lead = nth_difference(
            k, [&](const Rational& yy) { return b_poly(n, k, yy, tup.x, tup.s, p); }, tup.y);
        Rational kfact(1);
        for (long i = 2; i <= k; ++i) kfact *= Rational(i);
        CHECK(lead == kfact * q_binomial(n, k, p.q));
      }
    }
  }
}

TEST_CASE("expansion identity, small sweep") {
  qh::SweepOptions opt;
  opt.n_max = 4;
  opt.tuples = 5;
  opt.seed = 2024;
  for (const auto& rep : qh::sweep_expansion(opt)) {
    CHECK(rep.pass);
    CHECK(qh::is_zero(rep.residual));
  }
}

TEST_CASE("representation identity, small sweep") {
  qh::SweepOptions opt;
  opt.n_max = 4;
  opt.tuples = 5;
  opt.seed = 2025;
  for (const auto& rep : qh::sweep_representation(opt)) CHECK(rep.pass);
}

TEST_CASE("representation at n = 1 reduces to the p-difference") {
  const ExactTuple tup = sample_tuple(91);
  const auto& p = tup.params;
  const Rational lhs = qh::eval_Q(1, tup.z, tup.x, tup.u, tup.s, p);
  const Rational rhs =
      qh::eval_p(1, tup.z, tup.u, p) - qh::eval_p(1, tup.x, tup.s, p);
  CHECK(lhs == rhs);
}

TEST_CASE("recursion identity, small sweep including boundary k") {
  qh::SweepOptions opt;
  opt.n_max = 4;
  opt.tuples = 4;
  opt.seed = 2026;
  for (const auto& rep : qh::sweep_recursion13(opt)) CHECK(rep.pass);
}

TEST_CASE("tilde expansion, small sweep") {
  qh::SweepOptions opt;
  opt.n_max = 3;
  opt.tuples = 4;
  opt.seed = 2027;
  for (const auto& rep : qh::sweep_tilde(opt)) CHECK(rep.pass);
}

TEST_CASE("appendix quantities, small sweep") {
  qh::SweepOptions opt;
  opt.n_max = 3;
  opt.tuples = 2;
  opt.seed = 2028;
  for (const auto& rep : qh::sweep_appendix(opt)) {
    if (!rep.pass) {
      MESSAGE("first failing quantity: ", rep.detail, " at n=", rep.n, " k=", rep.k,
              " j=", rep.j);
    }
    CHECK(rep.pass);
  }
}

TEST_CASE("verify_appendix rejects q = 0") {
  ExactTuple tup = sample_tuple(55, /*q0=*/true);
  CHECK_THROWS_AS(qh::verify_appendix(2, 1, 0, tup), qh::BadInput);
}

TEST_CASE("expansion holds on dedicated q = 0 tuples") {
  TupleSampler sampler(404);
  for (int i = 0; i < 5; ++i) {
    const ExactTuple tup = sampler.next(/*force_q0=*/true);
    CHECK(tup.params.q == 0);
    for (long n = 1; n <= 5; ++n) {
      CHECK(qh::verify_expansion(n, tup).pass);
      CHECK(qh::verify_recursion13(n, n, tup).pass);
    }
  }
}
