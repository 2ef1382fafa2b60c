#include "unicomp/twirl.h"

#include <chrono>
#include <cmath>
#include <string>

#include "chunk_runner.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"

namespace unicomp {
namespace {


// Returns (U (x) U) * m for a d^2 x d^2 matrix m, in O(d^5).
ComplexMatrix apply_local_left(const ComplexMatrix& u, const ComplexMatrix& m) {
  const int d = u.dim();
  const int big = d * d;
  const Complex* pu = u.data().data();
  const Complex* pm = m.data().data();
  // y[(a,f),col] = sum_e U_ae m[(e,f),col]
  std::vector<Complex> y(static_cast<std::size_t>(big) * big);
  for (int a = 0; a < d; ++a)
    for (int e = 0; e < d; ++e) {
      const Complex uae = pu[a * d + e];
      for (int f = 0; f < d; ++f) {
        const Complex* src = pm + (e * d + f) * big;
        Complex* dst = y.data() + (a * d + f) * big;
        for (int col = 0; col < big; ++col) dst[col] += uae * src[col];
      }
    }
  // x[(a,b),col] = sum_f U_bf y[(a,f),col]
  ComplexMatrix x(big);
  Complex* px = x.data().data();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int f = 0; f < d; ++f) {
        const Complex ubf = pu[b * d + f];
        const Complex* src = y.data() + (a * d + f) * big;
        Complex* dst = px + (a * d + b) * big;
        for (int col = 0; col < big; ++col) dst[col] += ubf * src[col];
      }
  return x;
}

// (U (x) U) rho (U (x) U)^dagger for Hermitian rho.
ComplexMatrix conjugate_local(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return apply_local_left(u, apply_local_left(u, rho).adjoint());
}

double werner_beta(double a, double b) {
  // a * 1 + b * SWAP is proportional to 1 + beta * SWAP.
  return b / a;
}

void check_beta(double beta) {
  constexpr double kBetaSlack = 1e-9;
  if (!(beta >= -1.0 - kBetaSlack && beta <= 1.0 + kBetaSlack)) {
    throw Error(ErrorCode::kInvalidState,
                "twirled state has Werner parameter " + std::to_string(beta) +
                    " outside [-1, 1]");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  const int dim = entries_.dim();
  if (dim < 1) throw Error(ErrorCode::kInvalidState, "empty density matrix");
  const double herm = entries_.hermiticity_defect();
  if (!(herm < kStateTolerance)) {
    throw Error(ErrorCode::kInvalidState,
                "density matrix is not Hermitian: ||rho - rho^dagger||_F = " +
                    std::to_string(herm),
                herm);
  }
  const double trace_err = std::abs(entries_.trace() - 1.0);
  if (!(trace_err < kStateTolerance)) {
    throw Error(ErrorCode::kInvalidState,
                "density matrix trace deviates from 1 by " +
                    std::to_string(trace_err),
                trace_err);
  }
  const auto ev = hermitian_eigenvalues(entries_);
  if (!ev.empty() && ev.front() < -kStateTolerance) {
    throw Error(ErrorCode::kInvalidState,
                "density matrix has negative eigenvalue " +
                    std::to_string(ev.front()),
                ev.front());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / dim;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& psi) {
  const int dim = static_cast<int>(psi.size());
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m(i + 1, j + 1) = psi[static_cast<std::size_t>(i)] *
                        std::conj(psi[static_cast<std::size_t>(j)]);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_entangled(int local_dim) {
  std::vector<Complex> psi(static_cast<std::size_t>(local_dim * local_dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
  for (int i = 0; i < local_dim; ++i) {
    psi[static_cast<std::size_t>(i * local_dim + i)] = amp;
  }
  return pure(psi);
}

ComplexMatrix swap_operator(int local_dim) {
  const int d = local_dim;
  ComplexMatrix s(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(i * d + j + 1, j * d + i + 1) = 1.0;
  return s;
}

std::pair<double, double> werner_projection(const ComplexMatrix& m,
                                            int local_dim) {
  const double d = local_dim;
  const double big = d * d;
  if (m.dim() != local_dim * local_dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator is not on C^d (x) C^d for d=" + std::to_string(local_dim));
  }
  const double tr = m.trace().real();
  const double tr_swap = (swap_operator(local_dim) * m).trace().real();
  // Gram matrix of {1, SWAP}: [[d^2, d], [d, d^2]].
  const double det = big * big - d * d;
  const double a = (big * tr - d * tr_swap) / det;
  const double b = (big * tr_swap - d * tr) / det;
  return {a, b};
}

Rational second_moment(int big_d, int i1, int j1, int i2, int j2, int k1,
                       int l1, int k2, int l2) {
  if (big_d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "group dimension must be >= 2");
  }
  // I_22 = w_id + w_swap (two entries in one column);
  // 1/D = E|U_11|^2 = I_22 + (D - 1) w_id (normalization of row 2).
  const Rational i22 = moment_i22(big_d).exact;
  const Rational first = moment_abs_entry(big_d, 2).exact;
  const Rational w_id = (first - i22) / (big_d - 1);
  const Rational w_swap = i22 - w_id;

  Rational total = 0;
  for (int sigma = 0; sigma < 2; ++sigma) {
    const int r1 = sigma == 0 ? k1 : k2;
    const int r2 = sigma == 0 ? k2 : k1;
    if (i1 != r1 || i2 != r2) continue;
    for (int tau = 0; tau < 2; ++tau) {
      const int c1 = tau == 0 ? l1 : l2;
      const int c2 = tau == 0 ? l2 : l1;
      if (j1 != c1 || j2 != c2) continue;
      total += sigma == tau ? w_id : w_swap;
    }
  }
  return total;
}

TwirlResult twirl(const DensityMatrix& rho, int local_dim,
                  const TwirlMode& mode) {
  const int d = local_dim;
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "local dimension must be >= 2");
  if (rho.dim() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state has dimension " + std::to_string(rho.dim()) +
                    ", expected d^2 = " + std::to_string(d * d));
  }
  const ComplexMatrix& r = rho.entries();
  TwirlResult result;

  if (std::holds_alternative<ExactSmall>(mode)) {
    if (d > kExactTwirlMaxDim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exact twirl is limited to d <= " +
                      std::to_string(kExactTwirlMaxDim));
    }
    const Rational i22 = moment_i22(d).exact;
    const Rational w_id_q = (moment_abs_entry(d, 2).exact - i22) / (d - 1);
    const double w_id = to_double(w_id_q);
    const double w_swap = to_double(i22 - w_id_q);
    // E[U_ae U_bf conj(U_cg) conj(U_dh)], 0-based.
    auto moment = [&](int a, int e, int b, int f, int c, int g, int dd, int h) {
      double v = 0.0;
      if (a == c && b == dd) {
        if (e == g && f == h) v += w_id;
        if (e == h && f == g) v += w_swap;
      }
      if (a == dd && b == c) {
        if (e == h && f == g) v += w_id;
        if (e == g && f == h) v += w_swap;
      }
      return v;
    };
    ComplexMatrix out(d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int dd = 0; dd < d; ++dd) {
            Complex acc{};
            for (int e = 0; e < d; ++e)
              for (int f = 0; f < d; ++f)
                for (int g = 0; g < d; ++g)
                  for (int h = 0; h < d; ++h) {
                    const double w = moment(a, e, b, f, c, g, dd, h);
                    if (w != 0.0) acc += w * r(e * d + f + 1, g * d + h + 1);
                  }
            out(a * d + b + 1, c * d + dd + 1) = acc;
          }
    result.state = std::move(out);
  } else {
    const auto& mc = std::get<MonteCarloTwirl>(mode);
    if (mc.samples < 2) {
      throw Error(ErrorCode::kInvalidArgument, "Monte Carlo twirl needs >= 2 samples");
    }
    const auto start = std::chrono::steady_clock::now();
    const ComplexMatrix swap = swap_operator(d);
    struct ChunkSum {
      ComplexMatrix sum;
      std::vector<double> abs_sq;  // entrywise sum of |t_ij|^2
    };
    std::vector<ChunkSum> chunks(internal::chunk_count(mc.samples));
    internal::run_in_chunks(
        mc.samples, mc.stream, mc.threads,
        [&](std::uint64_t c, HaarStream& sub, std::uint64_t begin,
            std::uint64_t end) {
          ChunkSum acc{ComplexMatrix(d * d),
                       std::vector<double>(static_cast<std::size_t>(d * d * d * d))};
          for (std::uint64_t i = begin; i < end; ++i) {
            const ComplexMatrix u = build_unitary(sample(d, mc.group, sub));
            const ComplexMatrix t = conjugate_local(u, r);
            acc.sum += t;
            const auto entries = t.data();
            for (std::size_t k = 0; k < entries.size(); ++k) acc.abs_sq[k] += std::norm(entries[k]);
          }
          chunks[c] = std::move(acc);
        });
    ComplexMatrix total(d * d);
    std::vector<double> abs_sq(static_cast<std::size_t>(d * d * d * d));
    for (const auto& ch : chunks) {
      total += ch.sum;
      for (std::size_t k = 0; k < abs_sq.size(); ++k) abs_sq[k] += ch.abs_sq[k];
    }
    const double n = static_cast<double>(mc.samples);
    total *= 1.0 / n;
    McEstimate est;
    est.mean = (swap * total).trace();
    const auto mean_entries = total.data();
    for (std::size_t k = 0; k < abs_sq.size(); ++k) {
      const double var =
          std::max(0.0, (abs_sq[k] - n * std::norm(mean_entries[k])) / (n - 1.0));
      est.std_error = std::max(est.std_error, std::sqrt(var / n));
    }
    est.n_samples = mc.samples;
    est.seed = mc.stream.seed();
    est.stream_index = mc.stream.stream_index();
    est.elapsed = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    result.state = std::move(total);
    result.provenance = est;
  }

  const auto [a, b] = werner_projection(result.state, d);
  result.beta = werner_beta(a, b);
  ComplexMatrix fit = ComplexMatrix::identity(d * d) * Complex(a);
  fit += swap_operator(d) * Complex(b);
  result.fit_residual = frobenius_distance(result.state, fit);
  check_beta(result.beta);
  return result;
}

double concurrence_squared(const std::vector<Complex>& psi, int local_dim) {
  const int d = local_dim;
  if (static_cast<int>(psi.size()) != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, "state vector is not on C^d (x) C^d");
  }
  // rho_B(i, j) = sum_a psi[a d + i] conj(psi[a d + j])
  double purity = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex rij{};
      for (int a = 0; a < d; ++a) {
        rij += psi[static_cast<std::size_t>(a * d + i)] *
               std::conj(psi[static_cast<std::size_t>(a * d + j)]);
      }
      purity += std::norm(rij);
    }
  }
  return d / (d - 1.0) * (1.0 - purity);
}

ConcurrenceCounts concurrence_term_counts(int local_dim) {
  const std::uint64_t d = static_cast<std::uint64_t>(local_dim);
  return {d * d, 2 * (d - 1) * d * d};
}

MomentResult avg_concurrence_exact(int local_dim) {
  const int d = local_dim;
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "local dimension must be >= 2");
  const int big_d = d * d;
  const Rational i4 = moment_abs_entry(big_d, 4).exact;
  const Rational i22 = moment_i22(big_d).exact;
  const ConcurrenceCounts counts = concurrence_term_counts(d);
  const Rational purity = Rational(counts.i4) * i4 + Rational(counts.i22) * i22;
  return MomentResult::of(Rational(d, d - 1) * (1 - purity));
}

McEstimate avg_concurrence_mc(int local_dim, std::uint64_t samples,
                              const HaarStream& stream, McOptions options) {
  const int d = local_dim;
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "local dimension must be >= 2");
  const int big_d = d * d;
  return mc_integrate(
      [d, big_d](const ComplexMatrix& u) {
        std::vector<Complex> psi(static_cast<std::size_t>(big_d));
        for (int i = 0; i < big_d; ++i) psi[static_cast<std::size_t>(i)] = u(i + 1, 1);
        return Complex(concurrence_squared(psi, d));
      },
      big_d, Group::kUnitary, samples, stream, options);
}

}  // namespace unicomp
