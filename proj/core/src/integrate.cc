#include "unicomp/integrate.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "chunk_runner.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"

namespace unicomp {
namespace {

// Welford accumulator over the real and imaginary parts.
struct Moments {
  std::uint64_t n = 0;
  Complex mean;
  double m2_re = 0.0;
  double m2_im = 0.0;

  void add(Complex x) {
    ++n;
    const Complex delta = x - mean;
    mean += delta / static_cast<double>(n);
    const Complex delta2 = x - mean;
    m2_re += delta.real() * delta2.real();
    m2_im += delta.imag() * delta2.imag();
  }

  // Chan et al. parallel merge; applied in chunk order only.
  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double total = na + nb;
    const Complex delta = o.mean - mean;
    mean += delta * (nb / total);
    m2_re += o.m2_re + delta.real() * delta.real() * na * nb / total;
    m2_im += o.m2_im + delta.imag() * delta.imag() * na * nb / total;
    n += o.n;
  }
};

template <typename DrawFn>
McEstimate run_chunks(DrawFn&& eval_draw, std::uint64_t n,
                      const HaarStream& stream, McOptions options) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Monte Carlo needs at least 2 samples, got " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Moments> chunks(internal::chunk_count(n));
  internal::run_in_chunks(
      n, stream, options.threads,
      [&](std::uint64_t c, HaarStream& sub, std::uint64_t begin,
          std::uint64_t end) {
        Moments acc;
        for (std::uint64_t i = begin; i < end; ++i) {
          const Complex v = eval_draw(sub);
          if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::kNonFiniteIntegrand,
                        "integrand returned a non-finite value at draw " +
                            std::to_string(i));
          }
          acc.add(v);
        }
        chunks[c] = acc;
      });

  Moments total;
  for (const Moments& m : chunks) total.merge(m);
  const double nd = static_cast<double>(total.n);
  McEstimate est;
  est.mean = total.mean;
  est.std_error = std::sqrt((total.m2_re + total.m2_im) / (nd - 1.0) / nd);
  est.n_samples = total.n;
  est.seed = stream.seed();
  est.stream_index = stream.stream_index();
  est.elapsed = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return est;
}

void require_index(int i, int d, const char* what) {
  if (i < 1 || i > d) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " index " + std::to_string(i) +
                    " outside 1.." + std::to_string(d));
  }
}

}  // namespace

McEstimate mc_integrate(const MatrixIntegrand& f, int d, Group group,
                        std::uint64_t n, const HaarStream& stream,
                        McOptions options) {
  return run_chunks(
      [&](HaarStream& s) { return f(build_unitary(sample(d, group, s))); }, n,
      stream, options);
}

McEstimate mc_integrate_params(const ParamIntegrand& f, int d, Group group,
                               std::uint64_t n, const HaarStream& stream,
                               McOptions options) {
  return run_chunks([&](HaarStream& s) { return f(sample(d, group, s)); }, n,
                    stream, options);
}

MomentResult MomentResult::of(Rational q) {
  MomentResult r;
  r.approx = to_double(q);
  r.exact = std::move(q);
  return r;
}

MomentResult moment_abs_entry(int d, int p, int k, int l) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  require_index(k, d, "row");
  require_index(l, d, "column");
  if (p < 0) throw Error(ErrorCode::kInvalidArgument, "power must be >= 0");
  if (p % 2 != 0) {
    throw Error(ErrorCode::kUnsupportedMoment,
                "odd absolute powers are outside the closed-form family (p=" +
                    std::to_string(p) + ")");
  }
  // |<1|U_C|1>|^p = prod_{n=2}^d cos^p(l_1n); each l_1n carries the marginal
  // 2(n-1) sin cos^{2(n-1)-1}.
  Rational value = 1;
  for (int n = 2; n <= d; ++n) {
    const PiMultiple t = trig_monomial(1, 2 * (n - 1) - 1 + p);
    value *= 2 * (n - 1) * t.coefficient;
  }
  return MomentResult::of(value);
}

MomentResult moment_i22(int big_d) {
  if (big_d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "group dimension must be >= 2");
  }
  // |<1|U_C|1>|^2 |<D|U_C|1>|^2 = prod_{n=2}^D cos^2(l_1n) * sin^2(l_1D).
  Rational value = 1;
  for (int n = 2; n <= big_d; ++n) {
    const int sin_power = n == big_d ? 3 : 1;
    const PiMultiple t = trig_monomial(sin_power, 2 * (n - 1) - 1 + 2);
    value *= 2 * (n - 1) * t.coefficient;
  }
  return MomentResult::of(value);
}

MomentResult moment_i22(int big_d, int k, int l, int m, int n) {
  require_index(k, big_d, "row");
  require_index(l, big_d, "column");
  require_index(m, big_d, "row");
  require_index(n, big_d, "column");
  if (k == m && l == n) {
    throw Error(ErrorCode::kUnsupportedMoment,
                "coinciding entries: this is |U_kl|^4, use moment_abs_entry "
                "with p = 4");
  }
  if (k != m && l != n) {
    throw Error(ErrorCode::kUnsupportedMoment,
                "entries share neither a row nor a column");
  }
  return moment_i22(big_d);
}

Rational design_requirement(int d, int t) {
  if (d < 1 || t < 0) {
    throw Error(ErrorCode::kInvalidArgument, "design_requirement needs d >= 1, t >= 0");
  }
  Rational q = 1;
  for (int n = 2; n <= d; ++n) q *= Rational(n - 1, n - 1 + t);
  return q;
}

DesignReport design_check(const std::vector<WeightedUnitary>& set, int t,
                          double tolerance) {
  if (set.empty()) throw Error(ErrorCode::kInvalidArgument, "empty unitary set");
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "design degree t must be >= 1");
  const int d = set.front().u.dim();
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& item = set[i];
    if (item.u.dim() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "element " + std::to_string(i) + " has dimension " +
                      std::to_string(item.u.dim()) + ", expected " +
                      std::to_string(d));
    }
    if (!(item.weight >= 0.0) || !std::isfinite(item.weight)) {
      throw Error(ErrorCode::kInvalidWeights,
                  "element " + std::to_string(i) + " has a negative weight");
    }
    validate_unitary(item.u);
    weight_sum += item.weight;
  }
  if (!(std::abs(weight_sum - 1.0) < 1e-10)) {
    throw Error(ErrorCode::kInvalidWeights,
                "weights sum to " + std::to_string(weight_sum) + ", not 1",
                std::abs(weight_sum - 1.0));
  }

  DesignReport report;
  report.d = d;
  report.t = t;
  report.required = design_requirement(d, t);
  report.required_approx = to_double(report.required);
  report.tolerance = tolerance;
  report.per_entry.assign(static_cast<std::size_t>(d),
                          std::vector<double>(static_cast<std::size_t>(d), 0.0));
  for (const auto& item : set) {
    for (int k = 1; k <= d; ++k) {
      for (int l = 1; l <= d; ++l) {
        report.per_entry[k - 1][l - 1] +=
            item.weight * std::pow(std::norm(item.u(k, l)), t);
      }
    }
  }
  for (const auto& row : report.per_entry) {
    for (double v : row) {
      report.max_abs_dev =
          std::max(report.max_abs_dev, std::abs(v - report.required_approx));
    }
  }
  report.pass = report.max_abs_dev <= tolerance;
  return report;
}

}  // namespace unicomp
