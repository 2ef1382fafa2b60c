#include "unicomp/generators.h"

#include <cmath>
#include <string>

#include "unicomp/error.h"

namespace unicomp {
namespace {

void check_indices(bool two_level, int m, int n, int d) {
  if (m < 1 || m > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "index m=" + std::to_string(m) + " outside 1.." +
                    std::to_string(d));
  }
  if (!two_level) return;
  if (n < 1 || n > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "index n=" + std::to_string(n) + " outside 1.." +
                    std::to_string(d));
  }
  if (m >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "two-level generator needs m < n, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
}

// Scale row/column `i` (0-based) by z.
void scale_line(Complex* u, int d, int i, Complex z, Side side) {
  if (side == Side::kLeft) {
    Complex* row = u + static_cast<std::ptrdiff_t>(i) * d;
    for (int c = 0; c < d; ++c) row[c] *= z;
  } else {
    for (int r = 0; r < d; ++r) u[r * d + i] *= z;
  }
}

}  // namespace

ComplexMatrix generator(GeneratorKind kind, int m, int n, int d) {
  check_indices(kind != GeneratorKind::kP, m, n, d);
  ComplexMatrix g(d);
  switch (kind) {
    case GeneratorKind::kP:
      g(m, m) = 1.0;
      break;
    case GeneratorKind::kY:
      g(m, n) = Complex(0.0, -1.0);
      g(n, m) = Complex(0.0, 1.0);
      break;
    case GeneratorKind::kZ:
      g(m, m) = 1.0;
      g(n, n) = -1.0;
      break;
  }
  return g;
}

void apply_factor_in_place(ComplexMatrix& u, FactorKind kind, int m, int n,
                           double angle, Side side) {
  const int d = u.dim();
  check_indices(kind != FactorKind::kExpP, m, n, d);
  Complex* p = u.data().data();
  const int i = m - 1;
  const int j = n - 1;
  switch (kind) {
    case FactorKind::kExpP:
      scale_line(p, d, i, std::polar(1.0, angle), side);
      return;
    case FactorKind::kExpZ:
      scale_line(p, d, i, std::polar(1.0, angle), side);
      scale_line(p, d, j, std::polar(1.0, -angle), side);
      return;
    case FactorKind::kExpY:
      break;
  }
  // R = [[c, s], [-s, c]] on the (m, n) plane.
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (side == Side::kLeft) {
    Complex* rm = p + static_cast<std::ptrdiff_t>(i) * d;
    Complex* rn = p + static_cast<std::ptrdiff_t>(j) * d;
    for (int k = 0; k < d; ++k) {
      const Complex a = rm[k];
      const Complex b = rn[k];
      rm[k] = c * a + s * b;
      rn[k] = -s * a + c * b;
    }
  } else {
    for (int k = 0; k < d; ++k) {
      Complex& a = p[k * d + i];
      Complex& b = p[k * d + j];
      const Complex ak = a;
      const Complex bk = b;
      a = c * ak - s * bk;
      b = s * ak + c * bk;
    }
  }
}

ComplexMatrix apply_factor(ComplexMatrix u, FactorKind kind, int m, int n,
                           double angle, Side side) {
  apply_factor_in_place(u, kind, m, n, angle, side);
  return u;
}

std::string Factor::label() const {
  std::string out = "exp(i ";
  switch (kind) {
    case FactorKind::kExpP:
      out += "P" + std::to_string(m);
      break;
    case FactorKind::kExpY:
      out += "Y" + std::to_string(m) + std::to_string(n);
      break;
    case FactorKind::kExpZ:
      out += "Z" + std::to_string(m) + std::to_string(n);
      break;
  }
  out += " l" + std::to_string(param_row) + std::to_string(param_col) + ")";
  return out;
}

std::vector<Factor> factor_sequence(int d, Group group) {
  if (d < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension must be >= 1, got " + std::to_string(d));
  }
  const bool unitary = group == Group::kUnitary;
  std::vector<Factor> seq;
  seq.reserve(static_cast<std::size_t>(parameter_count(d, group)));
  for (int m = 1; m < d; ++m) {
    for (int n = m + 1; n <= d; ++n) {
      if (unitary) {
        seq.push_back({FactorKind::kExpP, n, 0, n, m});
      } else {
        seq.push_back({FactorKind::kExpZ, m, n, n, m});
      }
      seq.push_back({FactorKind::kExpY, m, n, m, n});
    }
  }
  if (unitary) {
    for (int l = 1; l <= d; ++l) seq.push_back({FactorKind::kExpP, l, 0, l, l});
  } else {
    for (int l = 1; l < d; ++l) seq.push_back({FactorKind::kExpZ, l, d, l, l});
  }
  return seq;
}

ComplexMatrix build_unitary(const ParamMatrix& params,
                            std::vector<std::string>* warnings) {
  if (warnings != nullptr) {
    auto v = params.range_violations();
    warnings->insert(warnings->end(), v.begin(), v.end());
  }
  const int d = params.dim();
  ComplexMatrix u = ComplexMatrix::identity(d);
  for (const Factor& f : factor_sequence(d, params.group())) {
    apply_factor_in_place(u, f.kind, f.m, f.n, params(f.param_row, f.param_col),
                          Side::kRight);
  }
  return u;
}

}  // namespace unicomp
