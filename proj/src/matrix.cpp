#include "qgr/matrix.hpp"

#include <cmath>

#include "qgr/error.hpp"
#include "qgr/kernels.hpp"
#include "qgr/permutation.hpp"
#include "qgr/rng.hpp"

namespace qgr {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error("matrix data size does not match shape");
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  CMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = cxd(rows[i][j], 0.0);
  }
  return m;
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd(1.0, 0.0);
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<cxd>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cxd CMatrix::trace() const {
  if (!square()) throw NonSquare("trace of a non-square matrix");
  cxd t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimMismatch("matrix product shape mismatch");
  if (square() && rhs.square()) {
    CMatrix out(rows_, rows_);
    kernels::matmul(data(), rhs.data(), out.data(), rows_);
    return out;
  }
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cxd a = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<cxd> CMatrix::operator*(const std::vector<cxd>& v) const {
  if (cols_ != v.size()) throw DimMismatch("matrix-vector shape mismatch");
  std::vector<cxd> out(rows_);
  if (square()) {
    kernels::matvec(data(), v.data(), out.data(), rows_);
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    cxd acc(0.0, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix CMatrix::operator*(cxd s) const {
  CMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimMismatch("matrix sum shape mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimMismatch("matrix difference shape mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimMismatch("matrix comparison shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
  return m;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

CMatrix CMatrix::pow(std::size_t k) const {
  if (!square()) throw NonSquare("power of a non-square matrix");
  CMatrix acc = CMatrix::identity(rows_);
  CMatrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!m.square()) throw NonSquare("unitarity check on non-square matrix");
  const CMatrix g = m.adjoint() * m;
  return g.max_abs_diff(CMatrix::identity(m.rows())) <= tol;
}

cxd projective_overlap(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimMismatch("projective comparison shape mismatch");
  // tr(U'V) without forming the product
  cxd t(0.0, 0.0);
  const cxd* a = u.data();
  const cxd* b = v.data();
  for (std::size_t i = 0; i < u.rows() * u.cols(); ++i)
    t += std::conj(a[i]) * b[i];
  return t / static_cast<double>(u.rows());
}

bool projective_equal(const CMatrix& u, const CMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimMismatch("projective comparison shape mismatch");
  if (!is_unitary(u, 1e-8) || !is_unitary(v, 1e-8))
    throw NotUnitary("projective equality requires unitary inputs");
  const CMatrix w = u.adjoint() * v;
  const double d = static_cast<double>(u.rows());
  const cxd s = w.trace() / d;
  if (std::abs(s) < 1.0 - tol) return false;
  return (w - CMatrix::identity(w.rows()) * s).max_abs() <= tol * d;
}

CMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(i, j) = cxd(rng.normal(), rng.normal()) * M_SQRT1_2;
  // Gram-Schmidt on columns with re-orthogonalization; the R diagonal
  // phase is fixed positive, which makes the distribution Haar.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cxd d(0.0, 0.0);
        for (std::size_t i = 0; i < dim; ++i) d += std::conj(a(i, k)) * a(i, j);
        for (std::size_t i = 0; i < dim; ++i) a(i, j) -= d * a(i, k);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(a(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < dim; ++i) a(i, j) /= nrm;
  }
  return a;
}

CMatrix permutation_matrix(const Permutation& p) {
  CMatrix m(p.degree(), p.degree());
  for (std::uint32_t j = 0; j < p.degree(); ++j) m(p(j), j) = cxd(1.0, 0.0);
  return m;
}

}  // namespace qgr
