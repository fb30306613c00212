#pragma once

// Dense complex linear algebra sized for few-qubit Hilbert spaces.
//
// Subsystem convention used throughout the toolkit: subsystem 0 is the
// leftmost Kronecker factor, so for dims = {dA, dB, dC} the basis index of
// |a b c> is (a * dB + b) * dC + c.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eur {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Default cap on the dimension produced by kron.
inline constexpr std::size_t kDefaultDimCap = 4096;

/// Square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  CMatrix(std::size_t dim, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  CMatrix adjoint() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, CMatrix a);
CVector operator*(const CMatrix& a, const CVector& v);

/// Largest entrywise modulus.
double max_abs(const CMatrix& a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// ||a - a^dagger||_max.
double hermiticity_defect(const CMatrix& a);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const CVector& u, const CVector& v);
double norm(const CVector& v);
/// |u><v|
CMatrix outer(const CVector& u, const CVector& v);

/// Kronecker product. Throws DimensionError if the result exceeds `cap`.
CMatrix kron(const CMatrix& a, const CMatrix& b,
             std::size_t cap = kDefaultDimCap);

std::size_t product(std::span<const std::size_t> dims);

/// Places `op` on subsystem `target` and identities on all other factors.
CMatrix embed(const CMatrix& op, std::span<const std::size_t> dims,
              std::size_t target);

/// Reduced operator on the subsystems listed in `keep`, in their original
/// order. `keep` need not be sorted; it is normalized before use.
CMatrix partial_trace(const CMatrix& rho, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep);

/// Eigen-decomposition of a Hermitian matrix.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<CVector> eigenvectors;
};

inline constexpr double kHermitianTol = 1e-9;

/// Cyclic complex Jacobi. Throws ContractError if `a` is not Hermitian within
/// kHermitianTol, NumericalError if 100 sweeps do not reach the off-diagonal
/// threshold.
Spectrum hermitian_eig(const CMatrix& a);

/// Eigenvalues only; same algorithm and ordering as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace eur
