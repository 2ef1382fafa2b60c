#ifndef UNICOMP_TWIRL_H_
#define UNICOMP_TWIRL_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "unicomp/complex_matrix.h"
#include "unicomp/exact.h"
#include "unicomp/group.h"
#include "unicomp/haar_stream.h"
#include "unicomp/integrate.h"

namespace unicomp {

inline constexpr double kStateTolerance = 1e-10;

// Validated density operator: Hermitian, unit trace and PSD to 1e-10.
class DensityMatrix {
 public:
  // Throws Error(kInvalidState).
  explicit DensityMatrix(ComplexMatrix entries);

  static DensityMatrix maximally_mixed(int dim);
  // |psi><psi| for a unit vector psi (0-based flat index a * d + b).
  static DensityMatrix pure(const std::vector<Complex>& psi);
  // (1/sqrt(d)) sum_i |ii>.
  static DensityMatrix maximally_entangled(int local_dim);

  int dim() const { return entries_.dim(); }
  const ComplexMatrix& entries() const { return entries_; }

 private:
  ComplexMatrix entries_;
};

// SWAP on C^d (x) C^d: |ij> -> |ji>.
ComplexMatrix swap_operator(int local_dim);

struct ExactSmall {};
struct MonteCarloTwirl {
  std::uint64_t samples = 100000;
  HaarStream stream{0, 0};
  Group group = Group::kUnitary;
  int threads = 1;
};
using TwirlMode = std::variant<ExactSmall, MonteCarloTwirl>;

inline constexpr int kExactTwirlMaxDim = 3;

struct TwirlResult {
  ComplexMatrix state;
  // rho_W = (1 + beta SWAP) / (d (d + beta)) read off the projection of the
  // output onto span{1, SWAP}.
  double beta = 0.0;
  // Frobenius distance between the output and its {1, SWAP} projection.
  double fit_residual = 0.0;
  // Set for Monte Carlo runs: mean is Tr(SWAP state), std_error the largest
  // entrywise standard error of the averaged state.
  std::optional<McEstimate> provenance;
};

// Bilateral twirl of rho over U(d) (U (x) U rho U^dagger (x) U^dagger).
// ExactSmall assembles the second-moment integrals from the closed forms
// and needs d <= 3. Throws kDimensionMismatch when rho is not d^2 x d^2.
TwirlResult twirl(const DensityMatrix& rho, int local_dim,
                  const TwirlMode& mode);

// Projection coefficients of a d^2 x d^2 operator onto {1, SWAP}:
// m ~= a * 1 + b * SWAP. Returns {a, b}.
std::pair<double, double> werner_projection(const ComplexMatrix& m,
                                            int local_dim);

// Exact integral of |<k|U|l>|^2-type degree (2,2) monomial
// U_{i1 j1} U_{i2 j2} conj(U_{k1 l1}) conj(U_{k2 l2}) over U(D), 1-based.
// The two Weingarten-type coefficients are fixed from moment_i22 and the
// row-normalization identity.
Rational second_moment(int big_d, int i1, int j1, int i2, int j2, int k1,
                       int l1, int k2, int l2);

// C^2 = d/(d-1) (1 - Tr rho_B^2) of a pure state on C^d (x) C^d.
double concurrence_squared(const std::vector<Complex>& psi, int local_dim);

struct ConcurrenceCounts {
  std::uint64_t i4 = 0;   // d^2
  std::uint64_t i22 = 0;  // 2 (d - 1) d^2
};
ConcurrenceCounts concurrence_term_counts(int local_dim);

// <C^2> over U(d^2), exact: d/(d-1) (1 - d^2 I_4 - 2(d-1) d^2 I_22).
MomentResult avg_concurrence_exact(int local_dim);

// Monte Carlo over U(d^2) applied to the product state |11>.
McEstimate avg_concurrence_mc(int local_dim, std::uint64_t samples,
                              const HaarStream& stream, McOptions options = {});

}  // namespace unicomp

#endif  // UNICOMP_TWIRL_H_
