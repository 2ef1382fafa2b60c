#include "unicomp/group.h"

#include <cmath>
#include <sstream>

#include "unicomp/error.h"

namespace unicomp {

std::string_view group_tag(Group group) {
  return group == Group::kUnitary ? "U" : "SU";
}

Group parse_group(std::string_view tag) {
  if (tag == "U") return Group::kUnitary;
  if (tag == "SU") return Group::kSpecialUnitary;
  throw Error(ErrorCode::kParse,
              "unknown group '" + std::string(tag) + "' (expected U or SU)");
}

int parameter_count(int d, Group group) {
  return group == Group::kUnitary ? d * d : d * d - 1;
}

ParamRole param_role(int m, int n, int d, Group group) {
  if (m < n) return ParamRole::kRotation;
  if (m > n) return ParamRole::kRelativePhase;
  if (group == Group::kSpecialUnitary && m == d) return ParamRole::kAbsent;
  return ParamRole::kGlobalPhase;
}

ParamRange param_range(int m, int n, int d, Group group) {
  switch (param_role(m, n, d, group)) {
    case ParamRole::kRotation:
      return {0.0, kHalfPi, true};
    case ParamRole::kRelativePhase:
      return {0.0, group == Group::kUnitary ? kTwoPi : kPi, false};
    case ParamRole::kGlobalPhase:
      return {0.0, kTwoPi, false};
    case ParamRole::kAbsent:
      break;
  }
  return {0.0, 0.0, true};
}

double wrap_angle(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

ParamMatrix::ParamMatrix(int d, Group group) : d_(d), group_(group) {
  if (d < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension must be >= 1, got " + std::to_string(d));
  }
  lambda_.assign(static_cast<std::size_t>(d * d), 0.0);
}

void ParamMatrix::check_index(int m, int n) const {
  if (m < 1 || m > d_ || n < 1 || n > d_) {
    throw Error(ErrorCode::kInvalidArgument,
                "parameter index (" + std::to_string(m) + "," +
                    std::to_string(n) + ") outside 1.." + std::to_string(d_));
  }
}

bool ParamMatrix::has(int m, int n) const {
  check_index(m, n);
  return param_role(m, n, d_, group_) != ParamRole::kAbsent;
}

double ParamMatrix::operator()(int m, int n) const {
  check_index(m, n);
  return lambda_[static_cast<std::size_t>((m - 1) * d_ + (n - 1))];
}

void ParamMatrix::set(int m, int n, double value) {
  if (!has(m, n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "SU(" + std::to_string(d_) + ") has no parameter (d,d)");
  }
  lambda_[static_cast<std::size_t>((m - 1) * d_ + (n - 1))] = value;
}

std::vector<std::string> ParamMatrix::range_violations() const {
  std::vector<std::string> out;
  for (int m = 1; m <= d_; ++m) {
    for (int n = 1; n <= d_; ++n) {
      if (!has(m, n)) continue;
      const double v = (*this)(m, n);
      const ParamRange r = param_range(m, n, d_, group_);
      if (!std::isfinite(v) || !r.contains(v)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "lambda(" << m << "," << n << ") = " << v << " outside ["
            << r.lo << ", " << r.hi << (r.closed_hi ? "]" : ")");
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

void ParamMatrix::validate() const {
  auto violations = range_violations();
  if (!violations.empty()) {
    throw Error(ErrorCode::kOutOfRange, violations.front());
  }
}

}  // namespace unicomp
