#include "qgr/unitarize.hpp"

#include <cmath>

#include "qgr/error.hpp"

namespace qgr {

CMatrix direct_sum_pad(const CMatrix& m, std::size_t k) {
  if (!m.square()) throw NonSquare("direct sum padding needs a square block");
  const std::size_t n = m.rows();
  CMatrix out(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j);
  for (std::size_t i = n; i < n + k; ++i) out(i, i) = cxd(1.0, 0.0);
  return out;
}

bool is_matrix_homomorphism(const FiniteGroup& g,
                            const std::vector<CMatrix>& rep, double tol) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if ((rep[a] * rep[b]).max_abs_diff(rep[g.mul(a, b)]) > tol) return false;
  return true;
}

namespace {

/// Cholesky of a Hermitian positive-definite matrix: S = L L', with L
/// lower triangular and positive diagonal.
CMatrix cholesky_lower(const CMatrix& s) {
  const std::size_t n = s.rows();
  CMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      cxd acc = s(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      if (i == j) {
        const double d = acc.real();
        if (d <= 1e-14 * s.max_abs())
          throw SingularFactorization(
              "averaged Gram matrix is numerically singular");
        l(i, i) = cxd(std::sqrt(d), 0.0);
      } else {
        l(i, j) = acc / l(j, j).real();
      }
    }
  }
  return l;
}

/// Inverse of an upper-triangular matrix by back substitution.
CMatrix upper_triangular_inverse(const CMatrix& t) {
  const std::size_t n = t.rows();
  CMatrix inv(n, n);
  for (std::size_t j = n; j-- > 0;) {
    inv(j, j) = cxd(1.0, 0.0) / t(j, j);
    for (std::size_t i = j; i-- > 0;) {
      cxd acc(0.0, 0.0);
      for (std::size_t k = i + 1; k <= j; ++k) acc += t(i, k) * inv(k, j);
      inv(i, j) = -acc / t(i, i);
    }
  }
  return inv;
}

}  // namespace

std::vector<CMatrix> unitarize(const FiniteGroup& g,
                               const std::vector<CMatrix>& rep,
                               double hom_tol) {
  if (rep.size() != g.order())
    throw DimMismatch("one matrix per group element required");
  const std::size_t n = rep[0].rows();
  for (const auto& m : rep)
    if (!m.square() || m.rows() != n)
      throw DimMismatch("representation matrices must share one square shape");
  if (!is_matrix_homomorphism(g, rep, hom_tol))
    throw NotHomomorphism("input map is not a homomorphism at tolerance");

  CMatrix s(n, n);
  for (const auto& m : rep) s = s + m.adjoint() * m;

  const CMatrix t = cholesky_lower(s).adjoint();  // S = T'T, T upper
  const CMatrix tinv = upper_triangular_inverse(t);

  std::vector<CMatrix> out;
  out.reserve(rep.size());
  for (const auto& m : rep) out.push_back(t * m * tinv);
  for (const auto& m : out)
    if (!is_unitary(m, 1e-8))
      throw SingularFactorization(
          "unitarization failed to produce unitary images");
  return out;
}

}  // namespace qgr
