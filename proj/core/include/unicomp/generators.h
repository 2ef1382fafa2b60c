#ifndef UNICOMP_GENERATORS_H_
#define UNICOMP_GENERATORS_H_

#include <string>
#include <vector>

#include "unicomp/complex_matrix.h"
#include "unicomp/group.h"

namespace unicomp {

// P_m = |m><m|, Y_{m,n} = -i|m><n| + i|n><m|, Z_{m,n} = |m><m| - |n><n|.
enum class GeneratorKind { kP, kY, kZ };

// Dense generator matrix. Requires 1 <= m <= d for P (n ignored) and
// 1 <= m < n <= d for Y and Z.
ComplexMatrix generator(GeneratorKind kind, int m, int n, int d);

// exp(i G angle) for G = P_m, Y_{m,n} or Z_{m,n}.
enum class FactorKind { kExpP, kExpY, kExpZ };
enum class Side { kLeft, kRight };

// u <- exp(i G angle) * u (kLeft) or u * exp(i G angle) (kRight).
// Touches two rows/columns for ExpY/ExpZ and one for ExpP; O(d) work.
//   exp(i Y_{m,n} t) = cos t on (m,m),(n,n), +sin t on (m,n), -sin t on (n,m)
void apply_factor_in_place(ComplexMatrix& u, FactorKind kind, int m, int n,
                           double angle, Side side);

ComplexMatrix apply_factor(ComplexMatrix u, FactorKind kind, int m, int n,
                           double angle, Side side);

// One elementary factor of U_C together with the parameter slot it reads.
// For ExpP only `m` is meaningful (n == 0).
struct Factor {
  FactorKind kind;
  int m;
  int n;
  int param_row;
  int param_col;

  // e.g. "exp(i P2 l21)", "exp(i Y12 l12)", "exp(i Z13 l11)".
  std::string label() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered factor list of U_C; the product is taken left to right.
//   U(d):  [prod_m prod_{n>m} e^{iP_n l_nm} e^{iY_mn l_mn}] prod_l e^{iP_l l_ll}
//   SU(d): [prod_m prod_{n>m} e^{iZ_mn l_nm} e^{iY_mn l_mn}] prod_{l<d} e^{iZ_ld l_ll}
std::vector<Factor> factor_sequence(int d, Group group);

// U_C for the given parameters. Out-of-range values are allowed (the map is
// total); their descriptions are appended to `warnings` when non-null.
ComplexMatrix build_unitary(const ParamMatrix& params,
                            std::vector<std::string>* warnings = nullptr);

}  // namespace unicomp

#endif  // UNICOMP_GENERATORS_H_
