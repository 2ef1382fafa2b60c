#include "unicomp/haar.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "unicomp/complex_matrix.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"

namespace unicomp {
namespace {

using boost::multiprecision::cpp_int;

void require_dim(int d) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "dim must be >= 2, got " + std::to_string(d));
  }
}

cpp_int rotation_denominator(int d) {
  cpp_int den = 1;
  for (int m = 1; m < d; ++m)
    for (int n = m + 1; n <= d; ++n) den *= 2 * (n - m);
  return den;
}

cpp_int pow2(int e) { return cpp_int(1) << e; }

// Present slots in row-major order.
std::vector<std::pair<int, int>> slots(int d, Group group) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      if (param_role(m, n, d, group) != ParamRole::kAbsent) out.push_back({m, n});
  return out;
}

double log_of(const PiMultiple& v) {
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_bin_float_50 num(boost::multiprecision::numerator(v.coefficient));
  const cpp_bin_float_50 den(boost::multiprecision::denominator(v.coefficient));
  return static_cast<double>(boost::multiprecision::log(num / den)) +
         v.pi_power * std::log(kPi);
}

void check_interior(const ParamMatrix& params, double margin) {
  const int d = params.dim();
  for (auto [m, n] : slots(d, params.group())) {
    const ParamRange r = param_range(m, n, d, params.group());
    const double v = params(m, n);
    if (!(v - margin > r.lo && v + margin < r.hi)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "lambda(" << m << "," << n << ") = " << v
          << " is not interior to its range with margin " << margin;
      throw Error(ErrorCode::kOutOfRange, msg.str());
    }
  }
}

ComplexMatrix hermitian_basis_element(int d, int index) {
  // index walks X_12, Y_12, X_13, Y_13, ..., X_{d-1,d}, Y_{d-1,d}, L_1..L_{d-1}
  int k = 0;
  for (int m = 1; m < d; ++m) {
    for (int n = m + 1; n <= d; ++n) {
      if (k == index) {
        ComplexMatrix x(d);
        x(m, n) = 1.0;
        x(n, m) = 1.0;
        return x;
      }
      if (k + 1 == index) return generator(GeneratorKind::kY, m, n, d);
      k += 2;
    }
  }
  const int l = index - k + 1;
  ComplexMatrix lk(d);
  const double scale = std::sqrt(2.0 / ((d - l) * (d - l + 1.0)));
  lk(l, l) = -(d - l) * scale;
  for (int n = l + 1; n <= d; ++n) lk(n, n) = scale;
  return lk;
}

}  // namespace

double jacobian_weight(const ParamMatrix& params) {
  const int d = params.dim();
  double w = 1.0;
  for (int m = 1; m < d; ++m) {
    for (int n = m + 1; n <= d; ++n) {
      const double x = params(m, n);
      // cos(pi/2) rounds to 6e-17; the closed endpoint must give exactly 0
      const double c = x == kHalfPi ? 0.0 : std::cos(x);
      w *= std::sin(x) * std::pow(c, 2 * (n - m) - 1);
    }
  }
  return w;
}

PiMultiple normalization(int d, Group group) {
  require_dim(d);
  const int tri = d * (d + 1) / 2;
  const cpp_int den = rotation_denominator(d);
  if (group == Group::kUnitary) return {Rational(pow2(tri), den), tri};
  return {Rational(pow2(d - 1), den), tri - 1};
}

PiMultiple parameter_box_volume(int d, Group group) {
  require_dim(d);
  const int pairs = d * (d - 1) / 2;
  // Rotations contribute (pi/2)^pairs.
  if (group == Group::kUnitary) {
    const int phases = d * (d + 1) / 2;
    return {Rational(pow2(phases), pow2(pairs)), pairs + phases};
  }
  return {Rational(pow2(d - 1), pow2(pairs)), pairs + pairs + (d - 1)};
}

HaarDensity::HaarDensity(int d, Group group)
    : d_(d),
      group_(group),
      normalization_(unicomp::normalization(d, group)),
      log_normalization_(log_of(normalization_)) {}

double HaarDensity::operator()(const ParamMatrix& params) const {
  if (params.dim() != d_ || params.group() != group_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "parameters do not belong to this density");
  }
  params.validate();
  return std::exp(std::log(jacobian_weight(params)) - log_normalization_);
}

double density(const ParamMatrix& params) {
  return HaarDensity(params.dim(), params.group())(params);
}

ParamMatrix sample(int d, Group group, HaarStream& stream) {
  require_dim(d);
  ParamMatrix p(d, group);
  for (int m = 1; m <= d; ++m) {
    for (int n = 1; n <= d; ++n) {
      const ParamRole role = param_role(m, n, d, group);
      if (role == ParamRole::kAbsent) continue;
      if (role == ParamRole::kRotation) {
        const double u = stream.next_uniform_open_closed();
        const double c = std::clamp(std::pow(u, 1.0 / (2.0 * (n - m))), -1.0, 1.0);
        p.set(m, n, std::acos(c));
      } else {
        const double width = param_range(m, n, d, group).width();
        double v = width * stream.next_uniform();
        if (v >= width) v = 0.0;
        p.set(m, n, v);
      }
    }
  }
  return p;
}

ReducedDensity::ReducedDensity(int d, Group group, FrameMask mask)
    : d_(d), group_(group), mask_(std::move(mask)) {
  if (mask_.d != d) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask dimension " + std::to_string(mask_.d) +
                    " does not match d=" + std::to_string(d));
  }
  for (auto [m, n] : mask_.relevant) {
    if (m < 1 || m > d || n < 1 || n > d ||
        param_role(m, n, d, group) == ParamRole::kAbsent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mask slot (" + std::to_string(m) + "," + std::to_string(n) +
                      ") is not a parameter of this group");
    }
  }
}

double ReducedDensity::slot_factor(int m, int n, double value) const {
  switch (param_role(m, n, d_, group_)) {
    case ParamRole::kRotation: {
      const int k = n - m;
      return 2.0 * k * std::sin(value) * std::pow(std::cos(value), 2 * k - 1);
    }
    case ParamRole::kRelativePhase:
      return group_ == Group::kUnitary ? 1.0 / kTwoPi : 1.0 / kPi;
    case ParamRole::kGlobalPhase:
      return 1.0 / kTwoPi;
    case ParamRole::kAbsent:
      break;
  }
  return 1.0;
}

double ReducedDensity::operator()(const ParamMatrix& params) const {
  if (params.dim() != d_) {
    throw Error(ErrorCode::kDimensionMismatch, "parameter dimension mismatch");
  }
  double w = 1.0;
  for (auto [m, n] : mask_.relevant) w *= slot_factor(m, n, params(m, n));
  return w;
}

ReducedDensity marginal_weight(int d, Group group, const FrameMask& mask) {
  require_dim(d);
  return ReducedDensity(d, group, mask);
}

JacobianReport jacobian_check(const ParamMatrix& params, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be > 0");
  }
  const int d = params.dim();
  require_dim(d);
  check_interior(params, step);
  const Group group = params.group();
  const auto vars = slots(d, group);
  const int n_vars = static_cast<int>(vars.size());

  auto derivative = [&](int m, int n) {
    ParamMatrix plus = params;
    ParamMatrix minus = params;
    plus.set(m, n, params(m, n) + step);
    minus.set(m, n, params(m, n) - step);
    ComplexMatrix du = build_unitary(plus) - build_unitary(minus);
    du *= 1.0 / (2.0 * step);
    return du;
  };

  JacobianReport report;
  if (group == Group::kUnitary) {
    Eigen::MatrixXcd jac(d * d, n_vars);
    for (int l = 0; l < n_vars; ++l) {
      const ComplexMatrix du = derivative(vars[l].first, vars[l].second);
      for (int k = 0; k < d * d; ++k) jac(k, l) = du.data()[k];
    }
    report.abs_det = std::abs(jac.partialPivLu().determinant());
  } else {
    const ComplexMatrix u_dag = build_unitary(params).adjoint();
    std::vector<ComplexMatrix> basis;
    for (int k = 0; k < n_vars; ++k) basis.push_back(hermitian_basis_element(d, k));
    Eigen::MatrixXd jac(n_vars, n_vars);
    for (int l = 0; l < n_vars; ++l) {
      ComplexMatrix h = u_dag * derivative(vars[l].first, vars[l].second);
      h *= Complex(0.0, -1.0);
      for (int k = 0; k < n_vars; ++k) {
        const ComplexMatrix& b = basis[static_cast<std::size_t>(k)];
        const double num = (b.adjoint() * h).trace().real();
        const double den = (b.adjoint() * b).trace().real();
        jac(k, l) = num / den;
      }
    }
    report.abs_det = std::abs(jac.partialPivLu().determinant());
  }
  report.weight = jacobian_weight(params);
  report.ratio = report.abs_det / report.weight;
  return report;
}

JacobianSurvey jacobian_survey(int d, Group group, int points,
                               HaarStream& stream, double step,
                               double threshold) {
  require_dim(d);
  if (points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "survey needs at least 2 points");
  }
  const double rot_margin = std::max(0.15, 1.5 * step);
  const double phase_margin = std::max(0.05, 1.5 * step);
  if (!(2.0 * rot_margin < kHalfPi)) {
    throw Error(ErrorCode::kInvalidArgument,
                "finite-difference step too large for the rotation range");
  }
  JacobianSurvey survey;
  for (int i = 0; i < points; ++i) {
    ParamMatrix p(d, group);
    for (auto [m, n] : slots(d, group)) {
      const double u = stream.next_uniform();
      const bool rotation = param_role(m, n, d, group) == ParamRole::kRotation;
      const double width = param_range(m, n, d, group).width();
      const double margin = rotation ? rot_margin : phase_margin;
      p.set(m, n, margin + u * (width - 2.0 * margin));
    }
    survey.points.push_back(jacobian_check(p, step));
  }
  double sum = 0.0;
  for (const auto& r : survey.points) sum += r.ratio;
  survey.mean_ratio = sum / points;
  double ss = 0.0;
  for (const auto& r : survey.points) {
    ss += (r.ratio - survey.mean_ratio) * (r.ratio - survey.mean_ratio);
  }
  survey.relative_std_dev = std::sqrt(ss / (points - 1)) / std::abs(survey.mean_ratio);
  survey.constant = survey.relative_std_dev < threshold;
  if (!survey.constant) {
    std::ostringstream msg;
    msg << "Jacobian ratio not constant: relative std dev "
        << survey.relative_std_dev << " >= " << threshold
        << " (step " << step << " may be too large)";
    survey.diagnostic = msg.str();
  }
  return survey;
}

double density_integral_tensor(int d, Group group) {
  if (d != 2 && d != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "tensor quadrature supports d = 2 and d = 3, got " + std::to_string(d));
  }
  const HaarDensity rho(d, group);
  const auto vars = slots(d, group);
  ParamMatrix p(d, group);
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const bool full_tensor = d == 2;

  std::function<double(std::size_t)> integrate_from = [&](std::size_t axis) {
    if (axis == vars.size()) return rho(p);
    const auto [m, n] = vars[axis];
    const ParamRange r = param_range(m, n, d, group);
    if (!full_tensor && param_role(m, n, d, group) != ParamRole::kRotation) {
      // midpoint rule; the density is constant along phase axes
      p.set(m, n, r.lo + 0.5 * r.width());
      return r.width() * integrate_from(axis + 1);
    }
    return Rule::integrate(
        [&, m = m, n = n](double x) {
          p.set(m, n, x);
          return integrate_from(axis + 1);
        },
        r.lo, r.hi);
  };
  return integrate_from(0);
}

std::pair<double, double> density_integral_mc(int d, Group group,
                                              std::uint64_t n,
                                              HaarStream& stream) {
  require_dim(d);
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 points");
  const HaarDensity rho(d, group);
  const auto vars = slots(d, group);
  const double volume = parameter_box_volume(d, group).value();
  ParamMatrix p(d, group);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (auto [m, k] : vars) {
      const ParamRange r = param_range(m, k, d, group);
      double v = r.lo + r.width() * stream.next_uniform();
      if (!r.contains(v)) v = r.lo;
      p.set(m, k, v);
    }
    const double x = std::exp(std::log(jacobian_weight(p)) - rho.log_normalization());
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(n - 1);
  return {volume * mean, volume * std::sqrt(var / static_cast<double>(n))};
}

}  // namespace unicomp
