#include "unicomp/decompose.h"

#include <cmath>
#include <string>

#include "unicomp/error.h"
#include "unicomp/generators.h"

namespace unicomp {

GivensSolution givens_params(Complex a_upper, Complex a_lower, Group group) {
  const double upper = std::abs(a_upper);
  const double lower = std::abs(a_lower);
  const bool upper_zero = !(upper > kPivotEpsilon);
  const bool lower_zero = !(lower > kPivotEpsilon);
  if (lower_zero) return {0.0, 0.0, upper_zero};
  if (upper_zero) return {kHalfPi, 0.0, false};

  GivensSolution sol;
  sol.rot = std::atan2(lower, upper);
  // U:  a'_lower = sin a_upper + cos e^{-i phase} a_lower
  //     -> arg(e^{-i phase} a_lower) = arg(-a_upper)
  // SU: a'_lower = e^{-i phase} sin a_upper + e^{i phase} cos a_lower
  //     -> arg(e^{2 i phase} a_lower) = arg(-a_upper)
  const double delta = std::arg(-a_upper) - std::arg(a_lower);
  if (group == Group::kUnitary) {
    sol.phase = wrap_angle(-delta, kTwoPi);
  } else {
    sol.phase = wrap_angle(0.5 * delta, kPi);
  }
  return sol;
}

ParamMatrix decompose(const ComplexMatrix& u, Group group) {
  const int d = u.dim();
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "empty matrix");
  if (group == Group::kUnitary) {
    validate_unitary(u);
  } else {
    validate_special_unitary(u);
  }

  const bool unitary = group == Group::kUnitary;
  ParamMatrix params(d, group);
  ComplexMatrix w = u;

  // Lambda^dagger_{1,2}, Lambda^dagger_{1,3}, ..., Lambda^dagger_{d-1,d}.
  for (int m = 1; m < d; ++m) {
    for (int n = m + 1; n <= d; ++n) {
      const GivensSolution g = givens_params(w(m, m), w(n, m), group);
      params.set(m, n, g.rot);
      params.set(n, m, g.phase);
      if (unitary) {
        apply_factor_in_place(w, FactorKind::kExpP, n, 0, -g.phase, Side::kLeft);
      } else {
        apply_factor_in_place(w, FactorKind::kExpZ, m, n, -g.phase,
                              Side::kLeft);
      }
      apply_factor_in_place(w, FactorKind::kExpY, m, n, -g.rot, Side::kLeft);
    }
  }

  // w is now diagonal with unimodular entries e^{i alpha_r}.
  const int n_phases = unitary ? d : d - 1;
  double phase_sum = 0.0;
  for (int r = 1; r <= n_phases; ++r) {
    const double alpha = wrap_angle(std::arg(w(r, r)), kTwoPi);
    params.set(r, r, alpha);
    phase_sum += alpha;
  }

  const double defect = u.unitarity_defect();
  const double limit = 1e-9 + 10.0 * defect;
  if (!unitary) {
    // After removing the first d-1 phases the last diagonal entry is 1.
    const Complex last = w(d, d) * std::polar(1.0, phase_sum);
    const double err = std::abs(last - 1.0);
    if (!(err < limit)) {
      throw Error(ErrorCode::kResidualTooLarge,
                  "last diagonal entry deviates from 1 by " +
                      std::to_string(err),
                  err);
    }
  }

  const double residual = frobenius_distance(build_unitary(params), u);
  if (!(residual < limit)) {
    throw Error(ErrorCode::kResidualTooLarge,
                "reconstruction residual " + std::to_string(residual), residual);
  }
  return params;
}

}  // namespace unicomp
