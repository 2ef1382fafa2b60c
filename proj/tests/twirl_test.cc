#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"
#include "unicomp/twirl.h"

namespace unicomp {
namespace {

DensityMatrix basis_state(int d, int a, int b) {
  std::vector<Complex> psi(static_cast<std::size_t>(d * d));
  psi[static_cast<std::size_t>(a * d + b)] = 1.0;
  return DensityMatrix::pure(psi);
}

MonteCarloTwirl mc(std::uint64_t n, std::uint64_t seed, Group g = Group::kUnitary) {
  MonteCarloTwirl m;
  m.samples = n;
  m.stream = HaarStream(seed, 0);
  m.group = g;
  return m;
}

TEST(DensityMatrix, Validation) {
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(4));
  EXPECT_NO_THROW(DensityMatrix::maximally_entangled(3));
  ComplexMatrix m = ComplexMatrix::identity(2);
  EXPECT_THROW(DensityMatrix{m}, Error);  // trace 2
  m(1, 1) = 1.5;
  m(2, 2) = -0.5;
  EXPECT_THROW(DensityMatrix{m}, Error);  // negative eigenvalue
  ComplexMatrix h(2);
  h(1, 1) = h(2, 2) = 0.5;
  h(1, 2) = 0.1;
  EXPECT_THROW(DensityMatrix{h}, Error);  // not Hermitian
}

TEST(Swap, ActsAsExchange) {
  const int d = 3;
  const ComplexMatrix s = swap_operator(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) EXPECT_EQ(s(b * d + a + 1, a * d + b + 1), Complex(1.0));
  EXPECT_LT(frobenius_distance(s * s, ComplexMatrix::identity(d * d)), 1e-15);
  EXPECT_EQ(s.trace(), Complex(d));
}

TEST(SecondMoment, ReproducesClosedForms) {
  for (int big_d = 2; big_d <= 5; ++big_d) {
    EXPECT_EQ(second_moment(big_d, 1, 1, 1, 1, 1, 1, 1, 1), Rational(2, big_d * (big_d + 1)));
    EXPECT_EQ(second_moment(big_d, 1, 1, 2, 1, 1, 1, 2, 1), Rational(1, big_d * (big_d + 1)));
    EXPECT_EQ(second_moment(big_d, 1, 1, 2, 2, 1, 2, 2, 1),
              Rational(-1, big_d * (big_d * big_d - 1)));
    EXPECT_EQ(second_moment(big_d, 1, 1, 2, 2, 1, 1, 2, 2), Rational(1, big_d * big_d - 1));
    EXPECT_EQ(second_moment(big_d, 1, 1, 1, 1, 1, 2, 1, 1), Rational(0));
  }
}

TEST(SecondMoment, MatchesMonteCarlo) {
  const int big_d = 3;
  const auto est = mc_integrate(
      [](const ComplexMatrix& u) { return u(1, 1) * u(2, 2) * std::conj(u(1, 2) * u(2, 1)); },
      big_d, Group::kUnitary, 200000, HaarStream(3, 0));
  EXPECT_NEAR(est.real(), to_double(second_moment(big_d, 1, 1, 2, 2, 1, 2, 2, 1)),
              4 * est.std_error);
}

TEST(Twirl, Examples) {
  for (int d : {2, 3}) {
    const auto mixed = DensityMatrix::maximally_mixed(d * d);
    const TwirlResult r = twirl(mixed, d, ExactSmall{});
    EXPECT_NEAR(r.beta, 0.0, 1e-12);
    EXPECT_LT(frobenius_distance(r.state, mixed.entries()), 1e-12);

    const TwirlResult w = twirl(DensityMatrix::maximally_entangled(d), d, ExactSmall{});
    EXPECT_NEAR(w.beta, 1.0, 1e-9);
    EXPECT_LT(w.fit_residual, 1e-12);
  }
  const TwirlResult e = twirl(basis_state(2, 0, 1), 2, ExactSmall{});
  EXPECT_NEAR(e.beta, -0.5, 1e-12);  // t = 0 gives (d t - 1) / (d - t)
  const TwirlResult m = twirl(basis_state(2, 0, 1), 2, mc(20000, 4));
  EXPECT_NEAR(m.beta, e.beta, 1e-9);
  EXPECT_LT(frobenius_distance(m.state, e.state), 4 * 4 * m.provenance->std_error);
}

TEST(Twirl, MonteCarloMatchesExact) {
  HaarStream s(55, 0);
  for (int d : {2, 3}) {
    // random pure state from a Haar column
    const ComplexMatrix u = build_unitary(sample(d * d, Group::kUnitary, s));
    std::vector<Complex> psi;
    for (int i = 1; i <= d * d; ++i) psi.push_back(u(i, 1));
    const auto rho = DensityMatrix::pure(psi);
    const TwirlResult exact = twirl(rho, d, ExactSmall{});
    const TwirlResult approx = twirl(rho, d, mc(100000, 9));
    ASSERT_TRUE(approx.provenance.has_value());
    const double se = approx.provenance->std_error;
    for (int r = 1; r <= d * d; ++r)
      for (int c = 1; c <= d * d; ++c)
        EXPECT_LT(std::abs(exact.state(r, c) - approx.state(r, c)), 4 * se + 1e-12);
    EXPECT_NEAR(exact.beta, approx.beta, 1e-9);
  }
}

TEST(Twirl, OutputCommutesWithLocalUnitaries) {
  HaarStream s(56, 0);
  const auto rho = basis_state(2, 0, 1);
  const TwirlResult r = twirl(rho, 2, mc(20000, 10));
  const double tol = 8 * 16 * r.provenance->std_error;
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix v = build_unitary(sample(2, Group::kUnitary, s));
    const ComplexMatrix vv = kron(v, v);
    EXPECT_LT(frobenius_distance(vv * r.state, r.state * vv), tol);
  }
}

TEST(Twirl, SpecialUnitarySamplingAgrees) {
  const auto rho = DensityMatrix::maximally_entangled(2);
  const TwirlResult u = twirl(rho, 2, mc(50000, 1, Group::kUnitary));
  const TwirlResult su = twirl(rho, 2, mc(50000, 2, Group::kSpecialUnitary));
  EXPECT_LT(frobenius_distance(u.state, su.state),
            16 * 4 * std::hypot(u.provenance->std_error, su.provenance->std_error));
  EXPECT_NEAR(su.beta, 1.0, 1e-9);
}

TEST(Twirl, DeterministicAcrossThreads) {
  auto a = mc(9000, 3);
  auto b = a;
  b.threads = 4;
  const auto rho = basis_state(3, 1, 2);
  EXPECT_EQ(twirl(rho, 3, a).state, twirl(rho, 3, b).state);
}

TEST(Twirl, Errors) {
  EXPECT_THROW(twirl(DensityMatrix::maximally_mixed(5), 2, ExactSmall{}), Error);
  EXPECT_THROW(twirl(DensityMatrix::maximally_mixed(16), 4, ExactSmall{}), Error);
  EXPECT_NO_THROW(twirl(DensityMatrix::maximally_mixed(16), 4, mc(100, 1)));
}

TEST(Concurrence, TermCountsMatchBruteForce) {
  for (int d = 2; d <= 5; ++d) {
    const auto brute = oracle::concurrence_terms_bruteforce(d);
    const auto counts = concurrence_term_counts(d);
    EXPECT_EQ(counts.i4, brute.fourth) << d;
    EXPECT_EQ(counts.i22, brute.mixed) << d;
  }
}

TEST(Concurrence, ExactValues) {
  for (int d = 2; d <= 12; ++d)
    EXPECT_EQ(avg_concurrence_exact(d).exact, Rational(d * (d - 1), d * d + 1)) << d;
  EXPECT_EQ(avg_concurrence_exact(2).exact, Rational(2, 5));
  EXPECT_EQ(avg_concurrence_exact(3).exact, Rational(3, 5));
}

TEST(Concurrence, PureStateFormula) {
  std::vector<Complex> product(4);
  product[0] = 1.0;
  EXPECT_NEAR(concurrence_squared(product, 2), 0.0, 1e-15);
  std::vector<Complex> bell(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(concurrence_squared(bell, 2), 1.0, 1e-15);
}

TEST(Concurrence, MonteCarloAgrees) {
  const auto est = avg_concurrence_mc(2, 50000, HaarStream(8, 0));
  EXPECT_NEAR(est.real(), 0.4, 3 * est.std_error);
  const auto est3 = avg_concurrence_mc(3, 20000, HaarStream(8, 1));
  EXPECT_NEAR(est3.real(), 0.6, 4 * est3.std_error);
}

}  // namespace
}  // namespace unicomp
