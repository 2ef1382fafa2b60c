#ifndef UNICOMP_COMPLEX_MATRIX_H_
#define UNICOMP_COMPLEX_MATRIX_H_

#include <complex>
#include <span>
#include <vector>

namespace unicomp {

using Complex = std::complex<double>;

// Accept threshold for ||U^dagger U - 1||_F and |det U - 1|.
inline constexpr double kValidationTolerance = 1e-8;

// Dense square complex matrix, row-major.
//
// Element access through operator() is 1-based: m(1, 1) is the top-left
// entry. The flat storage behind data() is 0-based row-major and is meant
// for kernels only.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int d);

  static ComplexMatrix identity(int d);

  int dim() const { return d_; }

  Complex& operator()(int row, int col) {
    return data_[static_cast<std::size_t>((row - 1) * d_ + (col - 1))];
  }
  const Complex& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>((row - 1) * d_ + (col - 1))];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  // ||U^dagger U - 1||_F.
  double unitarity_defect() const;
  // LU determinant.
  Complex determinant() const;
  // ||M - M^dagger||_F.
  double hermiticity_defect() const;

  bool is_unitary(double tol = kValidationTolerance) const;
  bool is_special_unitary(double tol = kValidationTolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int d_ = 0;
  std::vector<Complex> data_;
};

// Kronecker product a (x) b, index (i, j) -> (i - 1) * b.dim() + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// ||a - b||_F; dimensions must agree.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws Error(kInputNotUnitary) with the defect as norm().
void validate_unitary(const ComplexMatrix& u, double tol = kValidationTolerance);
// Unitarity plus |det - 1| < tol, throws Error(kInputNotSpecial).
void validate_special_unitary(const ComplexMatrix& u,
                              double tol = kValidationTolerance);

// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
// Eigenvalues of a general matrix (unordered).
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

}  // namespace unicomp

#endif  // UNICOMP_COMPLEX_MATRIX_H_
