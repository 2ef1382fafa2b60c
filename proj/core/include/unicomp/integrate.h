#ifndef UNICOMP_INTEGRATE_H_
#define UNICOMP_INTEGRATE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unicomp/complex_matrix.h"
#include "unicomp/exact.h"
#include "unicomp/group.h"
#include "unicomp/haar_stream.h"

namespace unicomp {

// Monte Carlo result. For complex integrands std_error is
// sqrt((s_re^2 + s_im^2) / n) with unbiased sample variances.
struct McEstimate {
  Complex mean;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
  double elapsed = 0.0;  // seconds

  double real() const { return mean.real(); }
};

using MatrixIntegrand = std::function<Complex(const ComplexMatrix&)>;
using ParamIntegrand = std::function<Complex(const ParamMatrix&)>;

struct McOptions {
  int threads = 1;
};

// Draws are split into chunks of kMcChunkSize; chunk c uses
// stream.substream(c) and chunk results are merged in chunk order, so the
// estimate depends only on (seed, stream_index, n), never on the thread
// count.
inline constexpr std::uint64_t kMcChunkSize = 4096;

// Mean of f(U) over n Haar draws U = build_unitary(sample(...)).
// Requires n >= 2. Throws kNonFiniteIntegrand naming the draw index.
McEstimate mc_integrate(const MatrixIntegrand& f, int d, Group group,
                        std::uint64_t n, const HaarStream& stream,
                        McOptions options = {});

// Same, but f receives the raw parameters and no matrix is built.
McEstimate mc_integrate_params(const ParamIntegrand& f, int d, Group group,
                               std::uint64_t n, const HaarStream& stream,
                               McOptions options = {});

// Exact closed-form result; approx is always derived from exact.
struct MomentResult {
  Rational exact;
  double approx = 0.0;

  static MomentResult of(Rational q);
};

// Integral of |<k|U|l>|^p over U(d) for even p >= 0, evaluated through the
// parameterization: prod_{n=2}^d 2(n-1) * int sin cos^{2(n-1)-1+p}.
// Odd p throws kUnsupportedMoment.
MomentResult moment_abs_entry(int d, int p, int k = 1, int l = 1);

// Integral of |U_{k,l}|^2 |U_{m,n}|^2 over U(D) for two distinct entries
// in a common column, evaluated as |<1|U|1>|^2 |<D|U|1>|^2 through the
// parameterization. Equals 1 / (D (D + 1)).
MomentResult moment_i22(int big_d);

// Index-checked variant: the entries must be distinct and share a row or a
// column. Coinciding entries throw kUnsupportedMoment (use
// moment_abs_entry with p = 4).
MomentResult moment_i22(int big_d, int k, int l, int m, int n);

// prod_{n=2}^d (n - 1) / (n - 1 + t).
Rational design_requirement(int d, int t);

struct WeightedUnitary {
  ComplexMatrix u;
  double weight = 0.0;
};

struct DesignReport {
  int d = 0;
  int t = 0;
  Rational required;
  double required_approx = 0.0;
  // per_entry[k-1][l-1] = sum_i w_i |<k|U_i|l>|^{2t}
  std::vector<std::vector<double>> per_entry;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // A pass is necessary, not sufficient, for a t-design.
  bool necessary_only = true;
};

// Throws kInvalidWeights (negative or not summing to 1 within 1e-10),
// kDimensionMismatch (mixed d) or kInputNotUnitary.
DesignReport design_check(const std::vector<WeightedUnitary>& set, int t,
                          double tolerance);

}  // namespace unicomp

#endif  // UNICOMP_INTEGRATE_H_
