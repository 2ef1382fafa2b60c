#include "unicomp/complex_matrix.h"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "unicomp/error.h"

namespace unicomp {
namespace {

using EigenMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix& m) {
  return {m.data().data(), m.dim(), m.dim()};
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix dimensions differ: " + std::to_string(a.dim()) +
                    " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInputNotUnitary: return "InputNotUnitary";
    case ErrorCode::kInputNotSpecial: return "InputNotSpecial";
    case ErrorCode::kResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::kUnsupportedMoment: return "UnsupportedMoment";
    case ErrorCode::kNonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(int d) : d_(d) {
  if (d < 0) throw Error(ErrorCode::kInvalidArgument, "negative dimension");
  data_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d),
               Complex{});
}

ComplexMatrix ComplexMatrix::identity(int d) {
  ComplexMatrix m(d);
  for (int i = 1; i <= d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(d_);
  for (int r = 1; r <= d_; ++r)
    for (int c = 1; c <= d_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(d_);
  for (int r = 1; r <= d_; ++r)
    for (int c = 1; c <= d_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (int i = 1; i <= d_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::unitarity_defect() const {
  ComplexMatrix g = adjoint() * (*this);
  for (int i = 1; i <= d_; ++i) g(i, i) -= 1.0;
  return g.frobenius_norm();
}

Complex ComplexMatrix::determinant() const {
  if (d_ == 0) return 1.0;
  return as_eigen(*this).partialPivLu().determinant();
}

double ComplexMatrix::hermiticity_defect() const {
  return frobenius_distance(*this, adjoint());
}

bool ComplexMatrix::is_unitary(double tol) const {
  return unitarity_defect() < tol;
}

bool ComplexMatrix::is_special_unitary(double tol) const {
  return is_unitary(tol) && std::abs(determinant() - 1.0) < tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const int d = a.dim();
  ComplexMatrix out(d);
  const Complex* pa = a.data_.data();
  const Complex* pb = b.data_.data();
  Complex* po = out.data_.data();
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Complex aik = pa[i * d + k];
      if (aik == Complex{}) continue;
      for (int j = 0; j < d; ++j) po[i * d + j] += aik * pb[k * d + j];
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db);
  for (int i = 1; i <= da; ++i)
    for (int j = 1; j <= da; ++j)
      for (int k = 1; k <= db; ++k)
        for (int l = 1; l <= db; ++l)
          out((i - 1) * db + k, (j - 1) * db + l) = a(i, j) * b(k, l);
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += std::norm(da[i] - db[i]);
  return std::sqrt(s);
}

void validate_unitary(const ComplexMatrix& u, double tol) {
  const double defect = u.unitarity_defect();
  if (!(defect < tol)) {
    throw Error(ErrorCode::kInputNotUnitary,
                "matrix is not unitary: ||U^dagger U - 1||_F = " +
                    std::to_string(defect),
                defect);
  }
}

void validate_special_unitary(const ComplexMatrix& u, double tol) {
  validate_unitary(u, tol);
  const double det_err = std::abs(u.determinant() - 1.0);
  if (!(det_err < tol)) {
    throw Error(ErrorCode::kInputNotSpecial,
                "matrix is not special unitary: |det U - 1| = " +
                    std::to_string(det_err),
                det_err);
  }
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(
      EigenMatrix(as_eigen(h)), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<EigenMatrix> solver(EigenMatrix(as_eigen(m)),
                                                /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace unicomp
