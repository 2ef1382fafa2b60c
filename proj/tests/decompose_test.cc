#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.h"
#include "unicomp/decompose.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"
#include "unicomp/haar_stream.h"

namespace unicomp {
namespace {

// Lower entry after Lambda^dagger acts on the pivot pair.
Complex annihilated(Complex upper, Complex lower, Group g) {
  const GivensSolution s = givens_params(upper, lower, g);
  ComplexMatrix v(2);
  v(1, 1) = upper;
  v(2, 1) = lower;
  if (g == Group::kUnitary) {
    apply_factor_in_place(v, FactorKind::kExpP, 2, 0, -s.phase, Side::kLeft);
  } else {
    apply_factor_in_place(v, FactorKind::kExpZ, 1, 2, -s.phase, Side::kLeft);
  }
  apply_factor_in_place(v, FactorKind::kExpY, 1, 2, -s.rot, Side::kLeft);
  return v(2, 1);
}

TEST(Givens, Examples) {
  auto s = givens_params(1.0, 0.0, Group::kSpecialUnitary);
  EXPECT_EQ(s.rot, 0.0);
  EXPECT_EQ(s.phase, 0.0);
  EXPECT_FALSE(s.degenerate);

  s = givens_params(0.0, 1.0, Group::kSpecialUnitary);
  EXPECT_DOUBLE_EQ(s.rot, kHalfPi);

  s = givens_params(1.0, 1.0, Group::kSpecialUnitary);
  EXPECT_NEAR(s.rot, kPi / 4, 1e-15);
  EXPECT_NEAR(s.phase, kHalfPi, 1e-15);
  EXPECT_LT(std::abs(annihilated(1.0, 1.0, Group::kSpecialUnitary)), 1e-12);

  s = givens_params(0.0, 0.0, Group::kUnitary);
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.rot, 0.0);
  EXPECT_EQ(s.phase, 0.0);
}

TEST(Givens, AnnihilatesLowerPivot) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (Group g : {Group::kUnitary, Group::kSpecialUnitary}) {
    for (int rep = 0; rep < 500; ++rep) {
      const Complex a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
      const GivensSolution s = givens_params(a, b, g);
      EXPECT_GE(s.rot, 0.0);
      EXPECT_LE(s.rot, kHalfPi);
      EXPECT_GE(s.phase, 0.0);
      EXPECT_LT(s.phase, g == Group::kUnitary ? kTwoPi : kPi);
      EXPECT_LT(std::abs(annihilated(a, b, g)), 1e-10);
    }
  }
}

TEST(Decompose, Examples) {
  for (Group g : {Group::kUnitary, Group::kSpecialUnitary})
    for (int d = 2; d <= 5; ++d)
      EXPECT_EQ(decompose(ComplexMatrix::identity(d), g), ParamMatrix(d, g));

  ComplexMatrix r(2);
  r(1, 2) = 1.0;
  r(2, 1) = -1.0;
  const ParamMatrix p = decompose(r, Group::kUnitary);
  EXPECT_NEAR(p(1, 2), kHalfPi, 1e-12);
  EXPECT_NEAR(p(1, 1), 0.0, 1e-12);
  EXPECT_NEAR(p(2, 1), 0.0, 1e-12);
  EXPECT_NEAR(p(2, 2), 0.0, 1e-12);

  ComplexMatrix z(2);
  z(1, 1) = Complex(0, 1);
  z(2, 2) = Complex(0, -1);
  const ParamMatrix q = decompose(z, Group::kSpecialUnitary);
  EXPECT_NEAR(q(1, 1), kHalfPi, 1e-12);
  EXPECT_NEAR(q(1, 2), 0.0, 1e-12);
}

TEST(Decompose, Errors) {
  ComplexMatrix h(2);
  h(1, 1) = h(1, 2) = h(2, 1) = h(2, 2) = 1.0;
  try {
    decompose(h, Group::kUnitary);
    FAIL() << "expected InputNotUnitary";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInputNotUnitary);
    EXPECT_GT(e.norm(), 1.0);
  }
  ComplexMatrix ph = ComplexMatrix::identity(2);
  ph(1, 1) = Complex(0, 1);
  EXPECT_NO_THROW(decompose(ph, Group::kUnitary));
  try {
    decompose(ph, Group::kSpecialUnitary);
    FAIL() << "expected InputNotSpecial";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInputNotSpecial);
  }
}

TEST(Decompose, RoundtripOnHaarDraws) {
  HaarStream s(1234, 0);
  for (int d = 2; d <= 6; ++d)
    for (Group g : {Group::kUnitary, Group::kSpecialUnitary})
      for (int rep = 0; rep < 300; ++rep) {
        const ComplexMatrix u = build_unitary(sample(d, g, s));
        const ParamMatrix p = decompose(u, g);
        EXPECT_TRUE(p.in_range());
        EXPECT_LT(frobenius_distance(build_unitary(p), u), 1e-9);
      }
}

TEST(Decompose, RoundtripOnIndependentHaarOracle) {
  std::mt19937_64 rng(77);
  for (int d = 2; d <= 6; ++d)
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix u = oracle::qr_haar(d, rng);
      EXPECT_LT(frobenius_distance(build_unitary(decompose(u, Group::kUnitary)), u), 1e-9);
      const ComplexMatrix su = oracle::qr_haar_su(d, rng);
      const ParamMatrix p = decompose(su, Group::kSpecialUnitary);
      EXPECT_TRUE(p.in_range());
      EXPECT_LT(frobenius_distance(build_unitary(p), su), 1e-9);
    }
}

TEST(Decompose, RoundtripOnStructuredInputs) {
  for (int d = 2; d <= 5; ++d) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ComplexMatrix p(d);
      for (int c = 0; c < d; ++c) p(perm[static_cast<std::size_t>(c)] + 1, c + 1) = 1.0;
      EXPECT_LT(frobenius_distance(build_unitary(decompose(p, Group::kUnitary)), p), 1e-9);
      // Fix the sign so the permutation lies in SU(d).
      if (std::abs(p.determinant() - 1.0) > 0.5) p(perm[0] + 1, 1) = -1.0;
      EXPECT_LT(frobenius_distance(build_unitary(decompose(p, Group::kSpecialUnitary)), p),
                1e-9);
    } while (std::next_permutation(perm.begin(), perm.end()));

    ComplexMatrix diag(d);
    double total = 0.0;
    for (int k = 1; k < d; ++k) {
      diag(k, k) = std::polar(1.0, 0.7 * k);
      total += 0.7 * k;
    }
    diag(d, d) = std::polar(1.0, -total);
    EXPECT_LT(frobenius_distance(build_unitary(decompose(diag, Group::kUnitary)), diag), 1e-9);
    EXPECT_LT(frobenius_distance(build_unitary(decompose(diag, Group::kSpecialUnitary)), diag),
              1e-9);
  }
  // Real orthogonal matrices: real part of QR oracle draws.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int d = 2; d <= 5; ++d)
    for (int rep = 0; rep < 20; ++rep) {
      // Gram-Schmidt on a real Gaussian matrix.
      ComplexMatrix q(d);
      for (int c = 1; c <= d; ++c) {
        std::vector<double> v(static_cast<std::size_t>(d));
        for (auto& x : v) x = nd(rng);
        for (int p = 1; p < c; ++p) {
          double dot = 0.0;
          for (int r = 1; r <= d; ++r) dot += q(r, p).real() * v[static_cast<std::size_t>(r - 1)];
          for (int r = 1; r <= d; ++r) v[static_cast<std::size_t>(r - 1)] -= dot * q(r, p).real();
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (int r = 1; r <= d; ++r) q(r, c) = v[static_cast<std::size_t>(r - 1)] / norm;
      }
      EXPECT_LT(frobenius_distance(build_unitary(decompose(q, Group::kUnitary)), q), 1e-9);
    }
}

TEST(Decompose, IdempotentOnInteriorPoints) {
  HaarStream s(99, 0);
  for (int d = 2; d <= 5; ++d)
    for (Group g : {Group::kUnitary, Group::kSpecialUnitary})
      for (int rep = 0; rep < 50; ++rep) {
        ParamMatrix p(d, g);
        for (int m = 1; m <= d; ++m)
          for (int n = 1; n <= d; ++n) {
            if (!p.has(m, n)) continue;
            const ParamRange r = param_range(m, n, d, g);
            p.set(m, n, r.lo + (0.05 + 0.9 * s.next_uniform()) * r.width());
          }
        const ParamMatrix q = decompose(build_unitary(p), g);
        for (int m = 1; m <= d; ++m)
          for (int n = 1; n <= d; ++n) EXPECT_NEAR(q(m, n), p(m, n), 1e-9);
      }
}

TEST(Decompose, AcceptsSmallDefectsWithinTolerance) {
  HaarStream s(3, 3);
  ComplexMatrix u = build_unitary(sample(4, Group::kUnitary, s));
  u(2, 3) += 1e-9;
  const ParamMatrix p = decompose(u, Group::kUnitary);
  EXPECT_LT(frobenius_distance(build_unitary(p), u), 1e-8);
}

}  // namespace
}  // namespace unicomp
