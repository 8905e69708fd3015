#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qgr {

using cxd = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cxd(0.0, 0.0)) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> data);
  /// From nested initializer rows (real entries), test and fixture aid.
  static CMatrix from_rows(
      const std::vector<std::vector<double>>& rows);
  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<cxd>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  cxd* data() { return data_.data(); }
  const cxd* data() const { return data_.data(); }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cxd trace() const;
  bool finite() const;

  CMatrix operator*(const CMatrix& rhs) const;
  std::vector<cxd> operator*(const std::vector<cxd>& v) const;
  CMatrix operator*(cxd s) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;

  /// Largest entry magnitude of A - B.
  double max_abs_diff(const CMatrix& rhs) const;
  double max_abs() const;

  /// A^k by repeated multiplication, k >= 0.
  CMatrix pow(std::size_t k) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cxd> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// True iff ||M'M - I||_max <= tol. Throws NonSquare.
bool is_unitary(const CMatrix& m, double tol);

/// Equality up to a global phase: with s = tr(U'V)/d, requires
/// |s| >= 1 - tol and ||U'V - sI||_max <= tol * d.
/// Throws DimMismatch / NotUnitary.
bool projective_equal(const CMatrix& u, const CMatrix& v, double tol);

/// The phase-alignment scalar s = tr(U'V)/d.
cxd projective_overlap(const CMatrix& u, const CMatrix& v);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R diagonal phases absorbed. Deterministic per seed.
CMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Permutation matrix M with M e_j = e_{p(j)}.
class Permutation;
CMatrix permutation_matrix(const Permutation& p);

}  // namespace qgr
