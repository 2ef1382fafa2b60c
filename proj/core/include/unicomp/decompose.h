#ifndef UNICOMP_DECOMPOSE_H_
#define UNICOMP_DECOMPOSE_H_

#include "unicomp/complex_matrix.h"
#include "unicomp/group.h"

namespace unicomp {

// Rotation/phase pair that annihilates the lower pivot of a column when
// Lambda^dagger_{m,n} is applied from the left.
struct GivensSolution {
  double rot = 0.0;    // [0, pi/2]
  double phase = 0.0;  // [0, 2pi) for U, [0, pi) for SU
  bool degenerate = false;
};

// Total function. If both pivots vanish: rot = phase = 0, degenerate.
// If only the upper one vanishes: rot = pi/2, phase = 0. If only the lower
// one vanishes: rot = phase = 0.
GivensSolution givens_params(Complex a_upper, Complex a_lower, Group group);

// Magnitude below which a pivot counts as zero.
inline constexpr double kPivotEpsilon = 1e-14;

// Recovers in-range parameters with build_unitary(result) == u.
// Throws kInputNotUnitary / kInputNotSpecial on validation failure and
// kResidualTooLarge if the reconstruction does not close.
ParamMatrix decompose(const ComplexMatrix& u, Group group);

}  // namespace unicomp

#endif  // UNICOMP_DECOMPOSE_H_
