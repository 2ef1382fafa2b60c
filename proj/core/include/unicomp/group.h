#ifndef UNICOMP_GROUP_H_
#define UNICOMP_GROUP_H_

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace unicomp {

enum class Group { kUnitary, kSpecialUnitary };

// "U" / "SU".
std::string_view group_tag(Group group);
// Inverse of group_tag; throws Error(kParse) on anything else.
Group parse_group(std::string_view tag);

// d^2 for U(d), d^2 - 1 for SU(d).
int parameter_count(int d, Group group);

// What a slot (m, n) of the parameter array means.
//   m < n : rotation angle of the (m, n) plane
//   m > n : relative phase attached to the (n, m) rotation
//   m = n : global phase (absent for (d, d) in SU(d))
enum class ParamRole { kRotation, kRelativePhase, kGlobalPhase, kAbsent };

ParamRole param_role(int m, int n, int d, Group group);

// Admissible interval for one slot. Phases are half-open [lo, hi),
// rotations closed [0, pi/2].
struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_hi = false;

  bool contains(double x) const {
    return x >= lo && (closed_hi ? x <= hi : x < hi);
  }
  double width() const { return hi - lo; }
};

ParamRange param_range(int m, int n, int d, Group group);

// The d x d real array of composite-parameterization angles (radians).
//
// Indices are 1-based. For SU(d) the slot (d, d) does not exist: it reads
// as 0 and writing it throws.
class ParamMatrix {
 public:
  ParamMatrix() = default;
  ParamMatrix(int d, Group group);

  int dim() const { return d_; }
  Group group() const { return group_; }

  bool has(int m, int n) const;
  double operator()(int m, int n) const;
  void set(int m, int n, double value);

  // Human-readable list of out-of-range or non-finite slots. Empty when the
  // matrix satisfies every range invariant.
  std::vector<std::string> range_violations() const;
  bool in_range() const { return range_violations().empty(); }
  // Throws Error(kOutOfRange) listing the first violation.
  void validate() const;

  friend bool operator==(const ParamMatrix&, const ParamMatrix&) = default;

 private:
  void check_index(int m, int n) const;

  int d_ = 0;
  Group group_ = Group::kUnitary;
  std::vector<double> lambda_;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Reduces x into [0, period). Values landing on the upper endpoint after
// rounding are mapped to 0.
double wrap_angle(double x, double period);

}  // namespace unicomp

#endif  // UNICOMP_GROUP_H_
