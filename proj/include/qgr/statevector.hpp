#pragma once

#include <complex>
#include <vector>

namespace qgr {

using CVector = std::vector<std::complex<double>>;

double state_norm(const CVector& v);
void normalize(CVector& v);

/// <a|b> = sum conj(a_i) b_i. Throws DimMismatch.
std::complex<double> inner(const CVector& a, const CVector& b);

CVector basis_state(std::size_t dim, std::size_t index);
CVector uniform_state(std::size_t dim);

/// Remove the global phase: rotate so the first amplitude of modulus
/// above zero_tol becomes real and non-negative. Idempotent.
/// Throws ZeroVector when every amplitude is below zero_tol.
CVector canonical_state(const CVector& v, double zero_tol = 1e-12);

/// True iff |<a|b>| >= 1 - tol (states equal up to a global phase, for
/// normalized inputs). Throws DimMismatch.
bool projective_state_equal(const CVector& a, const CVector& b, double tol);

}  // namespace qgr
