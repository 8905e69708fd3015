#pragma once

#include <vector>

#include "qgr/group.hpp"
#include "qgr/matrix.hpp"

namespace qgr {

/// Block-diagonal [M 0; 0 I_k].
CMatrix direct_sum_pad(const CMatrix& m, std::size_t k);

/// Check rep(g)*rep(h) == rep(g*h) for every pair, max-norm <= tol.
bool is_matrix_homomorphism(const FiniteGroup& g,
                            const std::vector<CMatrix>& rep, double tol);

/// Group-averaging unitarization: S = sum_g rep(g)' rep(g) is factored
/// as S = T'T (Cholesky) and each image is conjugated to T rep(g) T^-1.
/// The input must already be a homomorphism (checked at hom_tol);
/// the output is unitary and projectively equal to the input when the
/// input was unitary already.
/// Throws NotHomomorphism / SingularFactorization.
std::vector<CMatrix> unitarize(const FiniteGroup& g,
                               const std::vector<CMatrix>& rep,
                               double hom_tol = 1e-8);

}  // namespace qgr
