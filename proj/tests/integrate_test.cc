#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "oracles.h"
#include "unicomp/error.h"
#include "unicomp/exact.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"
#include "unicomp/integrate.h"

namespace unicomp {
namespace {

Complex abs4_11(const ComplexMatrix& u) { return std::pow(std::norm(u(1, 1)), 2); }

TEST(TrigMonomial, Examples) {
  EXPECT_EQ(trig_monomial(1, 1), (PiMultiple{Rational(1, 2), 0}));
  EXPECT_EQ(trig_monomial(0, 0), (PiMultiple{Rational(1, 2), 1}));
  for (int k = 1; k <= 5; ++k) {
    const PiMultiple v = trig_monomial(1, 2 * k - 1);
    EXPECT_EQ(v, (PiMultiple{Rational(1, 2 * k), 0}));
    EXPECT_NEAR(v.value(), oracle::quad_sin_cos(1, 2 * k - 1), 1e-14);
  }
}

TEST(TrigMonomial, MatchesQuadrature) {
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b)
      EXPECT_NEAR(trig_monomial(a, b).value(), oracle::quad_sin_cos(a, b), 1e-13)
          << a << "," << b;
}

TEST(MomentAbsEntry, Examples) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_EQ(moment_abs_entry(d, 4).exact, Rational(2, d * (d + 1)));
    EXPECT_EQ(moment_abs_entry(d, 0, 2, 1).exact, Rational(1));
    EXPECT_EQ(moment_abs_entry(d, 2).exact, Rational(1, d));
  }
  EXPECT_EQ(moment_abs_entry(2, 2, 1, 1).exact, Rational(1, 2));
  const auto r = moment_abs_entry(3, 4);
  EXPECT_LT(std::abs(r.approx - to_double(r.exact)), 1e-15 * r.approx);
  EXPECT_THROW(moment_abs_entry(3, 3), Error);
  EXPECT_THROW(moment_abs_entry(3, 2, 4, 1), Error);
}

TEST(MomentAbsEntry, IndependentOfEntryPosition) {
  const int d = 2;
  for (int p : {2, 4}) {
    const Rational exact = moment_abs_entry(d, p).exact;
    for (int k = 1; k <= d; ++k)
      for (int l = 1; l <= d; ++l) {
        EXPECT_EQ(moment_abs_entry(d, p, k, l).exact, exact);
        const auto est = mc_integrate(
            [=](const ComplexMatrix& u) { return Complex(std::pow(std::abs(u(k, l)), p)); }, d,
            Group::kUnitary, 100000, HaarStream(70 + p, static_cast<std::uint64_t>(k * 10 + l)));
        EXPECT_NEAR(est.real(), to_double(exact), 4 * est.std_error) << k << l << p;
      }
  }
}

TEST(MomentI22, Examples) {
  EXPECT_EQ(moment_i22(4).exact, Rational(1, 20));
  EXPECT_EQ(moment_i22(9).exact, Rational(1, 90));
  for (int big_d = 2; big_d <= 9; ++big_d)
    EXPECT_EQ(moment_i22(big_d).exact, Rational(1, big_d * (big_d + 1)));
  EXPECT_EQ(moment_i22(3, 1, 1, 3, 1).exact, Rational(1, 12));
  EXPECT_EQ(moment_i22(3, 1, 1, 1, 2).exact, Rational(1, 12));
  EXPECT_THROW(moment_i22(3, 1, 1, 1, 1), Error);
  EXPECT_THROW(moment_i22(3, 1, 1, 2, 2), Error);

  const auto est = mc_integrate(
      [](const ComplexMatrix& u) { return Complex(std::norm(u(1, 1)) * std::norm(u(3, 1))); }, 3,
      Group::kUnitary, 200000, HaarStream(12, 0));
  EXPECT_NEAR(est.real(), 1.0 / 12, 3 * est.std_error);
}

TEST(McIntegrate, Examples) {
  const auto one = mc_integrate([](const ComplexMatrix&) { return Complex(1.0); }, 3,
                                Group::kUnitary, 1000, HaarStream(0, 0));
  EXPECT_EQ(one.mean, Complex(1.0));
  EXPECT_EQ(one.std_error, 0.0);
  EXPECT_EQ(one.n_samples, 1000u);

  const auto m4 = mc_integrate(abs4_11, 3, Group::kUnitary, 200000, HaarStream(1, 0));
  EXPECT_NEAR(m4.real(), 1.0 / 6, 3 * m4.std_error);

  const auto first = mc_integrate([](const ComplexMatrix& u) { return u(1, 1); }, 2,
                                  Group::kUnitary, 100000, HaarStream(2, 0));
  EXPECT_LT(std::abs(first.mean), 3 * first.std_error);
}

TEST(McIntegrate, DeterministicAcrossThreadCounts) {
  const HaarStream s(99, 4);
  const auto a = mc_integrate(abs4_11, 3, Group::kUnitary, 20000, s, {1});
  const auto b = mc_integrate(abs4_11, 3, Group::kUnitary, 20000, s, {3});
  const auto c = mc_integrate(abs4_11, 3, Group::kUnitary, 20000, s, {8});
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_EQ(a.seed, 99u);
  EXPECT_EQ(a.stream_index, 4u);
}

TEST(McIntegrate, Errors) {
  EXPECT_THROW(mc_integrate(abs4_11, 3, Group::kUnitary, 1, HaarStream(0, 0)), Error);
  int calls = 0;
  try {
    mc_integrate(
        [&](const ComplexMatrix&) {
          return ++calls == 7 ? Complex(std::numeric_limits<double>::quiet_NaN()) : Complex(1.0);
        },
        2, Group::kUnitary, 100, HaarStream(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteIntegrand);
    EXPECT_NE(std::string(e.what()).find("6"), std::string::npos) << e.what();
  }
}

// |<1|U|1>|^p depends only on lambda_{1,n}; no matrix needs building.
TEST(McIntegrate, ParameterSpaceReduction) {
  for (int d : {2, 3, 4}) {
    const auto est = mc_integrate_params(
        [d](const ParamMatrix& p) {
          double v = 1.0;
          for (int n = 2; n <= d; ++n) v *= std::pow(std::cos(p(1, n)), 4);
          return Complex(v);
        },
        d, Group::kUnitary, 100000, HaarStream(5, static_cast<std::uint64_t>(d)));
    EXPECT_NEAR(est.real(), 2.0 / (d * (d + 1)), 4 * est.std_error);
  }
}

TEST(DesignRequirement, Examples) {
  EXPECT_EQ(design_requirement(3, 2), Rational(1, 6));
  EXPECT_EQ(design_requirement(2, 1), Rational(1, 2));
  for (int d = 2; d <= 6; ++d)
    for (int t = 1; t <= 4; ++t)
      EXPECT_EQ(design_requirement(d, t), moment_abs_entry(d, 2 * t).exact);
}

std::vector<WeightedUnitary> paulis() {
  const Complex i(0, 1);
  ComplexMatrix id = ComplexMatrix::identity(2), x(2), iy(2), z(2);
  x(1, 2) = x(2, 1) = 1.0;
  iy(1, 2) = 1.0;  // i * [[0, -i], [i, 0]]
  iy(2, 1) = -1.0;
  z(1, 1) = 1.0;
  z(2, 2) = -1.0;
  (void)i;
  return {{id, 0.25}, {x, 0.25}, {iy, 0.25}, {z, 0.25}};
}

TEST(DesignCheck, Examples) {
  const DesignReport pauli = design_check(paulis(), 1, 1e-12);
  EXPECT_TRUE(pauli.pass);
  EXPECT_TRUE(pauli.necessary_only);
  EXPECT_EQ(pauli.required, Rational(1, 2));
  for (const auto& row : pauli.per_entry)
    for (double v : row) EXPECT_NEAR(v, 0.5, 1e-15);

  const DesignReport single = design_check({{ComplexMatrix::identity(2), 1.0}}, 1, 1e-12);
  EXPECT_FALSE(single.pass);
  EXPECT_DOUBLE_EQ(single.per_entry[0][0], 1.0);
  EXPECT_DOUBLE_EQ(single.max_abs_dev, 0.5);
}

TEST(DesignCheck, Errors) {
  auto set = paulis();
  set[0].weight = 0.5;
  EXPECT_THROW(design_check(set, 1, 1e-3), Error);
  set = paulis();
  set[1].weight = -0.25;
  set[0].weight = 0.75;
  EXPECT_THROW(design_check(set, 1, 1e-3), Error);
  set = paulis();
  set[3].u = ComplexMatrix::identity(3);
  EXPECT_THROW(design_check(set, 1, 1e-3), Error);
  set = paulis();
  set[2].u(1, 1) = 1.0;
  EXPECT_THROW(design_check(set, 1, 1e-3), Error);
}

TEST(DesignCheck, HaarSetDeviationShrinks) {
  const int d = 2;
  std::vector<double> mean_dev;
  for (int n : {50, 200, 800}) {
    double acc = 0.0;
    const int reps = 40;
    for (int rep = 0; rep < reps; ++rep) {
      HaarStream s(600 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep));
      std::vector<WeightedUnitary> set;
      for (int i = 0; i < n; ++i)
        set.push_back({build_unitary(sample(d, Group::kUnitary, s)), 1.0 / n});
      acc += design_check(set, 1, 0.05).max_abs_dev;
    }
    mean_dev.push_back(acc / reps);
  }
  const double slope = std::log(mean_dev[2] / mean_dev[0]) / std::log(800.0 / 50.0);
  EXPECT_NEAR(slope, -0.5, 0.15);
}

}  // namespace
}  // namespace unicomp
