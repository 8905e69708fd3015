#include "qgr/statevector.hpp"

#include <cmath>

#include "qgr/error.hpp"

namespace qgr {

double state_norm(const CVector& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

void normalize(CVector& v) {
  const double n = state_norm(v);
  if (n == 0.0) throw ZeroVector("cannot normalize the zero vector");
  for (auto& a : v) a /= n;
}

std::complex<double> inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimMismatch("inner product shape mismatch");
  std::complex<double> s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CVector basis_state(std::size_t dim, std::size_t index) {
  CVector v(dim, {0.0, 0.0});
  v[index] = {1.0, 0.0};
  return v;
}

CVector uniform_state(std::size_t dim) {
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return CVector(dim, {a, 0.0});
}

CVector canonical_state(const CVector& v, double zero_tol) {
  for (const auto& a : v) {
    const double m = std::abs(a);
    if (m > zero_tol) {
      const std::complex<double> phase = std::conj(a) / m;
      CVector out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[i] = phase * v[i];
      return out;
    }
  }
  throw ZeroVector("canonical_state of a (numerically) zero vector");
}

bool projective_state_equal(const CVector& a, const CVector& b, double tol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

}  // namespace qgr
