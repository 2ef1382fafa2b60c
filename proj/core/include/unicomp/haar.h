#ifndef UNICOMP_HAAR_H_
#define UNICOMP_HAAR_H_

#include <string>
#include <utility>
#include <vector>

#include "unicomp/exact.h"
#include "unicomp/frame_mask.h"
#include "unicomp/group.h"
#include "unicomp/haar_stream.h"

namespace unicomp {

// prod_{m<n} sin(l_mn) cos^{2(n-m)-1}(l_mn). No range checks.
double jacobian_weight(const ParamMatrix& params);

// N_d as an exact multiple of a power of pi:
//   U(d):  (2 pi)^{d(d+1)/2}           / prod_{m<n} 2(n-m)
//   SU(d): 2^{d-1} pi^{d(d+1)/2 - 1}   / prod_{m<n} 2(n-m)
// Throws kInvalidArgument for d < 2.
PiMultiple normalization(int d, Group group);

// Volume of the full parameter box (product of range widths).
PiMultiple parameter_box_volume(int d, Group group);

// Normalized Haar density in composite coordinates.
class HaarDensity {
 public:
  HaarDensity(int d, Group group);

  int dim() const { return d_; }
  Group group() const { return group_; }
  const PiMultiple& normalization() const { return normalization_; }
  double log_normalization() const { return log_normalization_; }

  // Throws kOutOfRange / kDimensionMismatch.
  double operator()(const ParamMatrix& params) const;

 private:
  int d_;
  Group group_;
  PiMultiple normalization_;
  double log_normalization_;
};

// jacobian_weight / N_d, with range validation.
double density(const ParamMatrix& params);

// One Haar-distributed parameter draw. Slots are filled row-major over
// (m, n), (d, d) skipped for SU, one uniform per slot:
//   rotation (m < n, k = n - m): l = arccos(u^{1/(2k)}), u in (0, 1]
//   phase: l = width * u, u in [0, 1)
ParamMatrix sample(int d, Group group, HaarStream& stream);

// Reduced (marginal) Haar measure over a subset of slots: every masked slot
// contributes its differential factor (1/(2pi) or 1/pi for phases,
// 2k sin cos^{2k-1} for rotations) and every other slot contributes 1.
class ReducedDensity {
 public:
  ReducedDensity(int d, Group group, FrameMask mask);

  const FrameMask& mask() const { return mask_; }
  int dim() const { return d_; }
  Group group() const { return group_; }

  // Only the masked slots of `params` are read.
  double operator()(const ParamMatrix& params) const;
  // Factor contributed by a single slot at angle `value`.
  double slot_factor(int m, int n, double value) const;

 private:
  int d_;
  Group group_;
  FrameMask mask_;
};

// Throws kInvalidArgument when the mask does not belong to dimension d or
// names a slot the group does not have.
ReducedDensity marginal_weight(int d, Group group, const FrameMask& mask);

inline constexpr double kDefaultJacobianStep = 1e-5;

struct JacobianReport {
  double abs_det = 0.0;
  double weight = 0.0;  // jacobian_weight(params)
  double ratio = 0.0;   // abs_det / weight
};

// Finite-difference Jacobian of the operator-basis coordinates of U_C.
//   U(d):  complex d^2 x d^2 matrix of d(U_C)_{rs}/d(lambda) in the
//          canonical basis |r><s| (gives ratio 2 at d = 2).
//   SU(d): real (d^2-1) x (d^2-1) matrix of the coefficients of
//          -i U_C^dagger dU_C/d(lambda) in the traceless Hermitian basis
//          {X_mn, Y_mn, L_k}.
// Central differences. Requires every slot strictly inside its range with
// room for the stencil and step > 0.
JacobianReport jacobian_check(const ParamMatrix& params,
                              double step = kDefaultJacobianStep);

struct JacobianSurvey {
  std::vector<JacobianReport> points;
  double mean_ratio = 0.0;
  double relative_std_dev = 0.0;
  bool constant = false;
  std::string diagnostic;  // non-empty when the ratio is not constant
};

// Draws `points` interior parameter sets (rotations at least
// max(0.15, 1.5 step) from 0 and pi/2, phases at least max(0.05, 1.5 step)
// from their range ends) and runs jacobian_check on each.
JacobianSurvey jacobian_survey(int d, Group group, int points,
                               HaarStream& stream,
                               double step = kDefaultJacobianStep,
                               double threshold = 1e-4);

// Integral of the normalized density over the parameter box with a tensor
// Gauss-Legendre rule, 20 nodes per axis. d = 2 integrates every axis;
// d = 3 puts the nodes on rotation axes and a single midpoint on each phase
// axis. Other d throw kInvalidArgument.
double density_integral_tensor(int d, Group group);

// Plain Monte Carlo estimate of the same integral: box volume times the
// mean density at uniform points. Returns {estimate, standard error}.
std::pair<double, double> density_integral_mc(int d, Group group,
                                              std::uint64_t n,
                                              HaarStream& stream);

}  // namespace unicomp

#endif  // UNICOMP_HAAR_H_
