#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qgr/group.hpp"
#include "qgr/matrix.hpp"
#include "qgr/statevector.hpp"

namespace qgr {

enum class RepMode { exact, projective };

/// Map from group elements to unitary matrices. In exact mode the
/// homomorphism holds entrywise; in projective mode up to phase.
struct QuantumRep {
  std::shared_ptr<const FiniteGroup> group;
  std::size_t dim = 0;
  std::vector<CMatrix> matrices;  // indexed by element
  RepMode mode = RepMode::exact;
  double tol = 1e-10;

  const CMatrix& of(std::size_t element) const { return matrices[element]; }
  const CMatrix& of_name(const std::string& name) const {
    return matrices[group->index_of(name)];
  }
};

/// Regular-representation permutation matrices, padded with I_k so the
/// dimension is the next power of two. Exact and faithful.
/// Throws TooLarge above 2^12.
QuantumRep cayley_quantum_rep(std::shared_ptr<const FiniteGroup> g);

/// Extend generator images to the whole group along the closure words
/// and verify the result is a homomorphism (entrywise at hom_tol).
/// gen_matrices follows the group's declared generator order.
/// Throws NotHomomorphism.
std::vector<CMatrix> extend_generator_matrices(
    const FiniteGroup& g, const std::vector<CMatrix>& gen_matrices,
    double hom_tol = 1e-8);

struct SynthInfo {
  /// Some non-identity input image was a global phase times I; padding
  /// with k >= 1 removes the degeneracy.
  bool input_phase_degenerate = false;
};

/// Unitarize, then pad with I_k so the result has dimension target_dim.
/// The output is faithful and, for k >= 1, phase-free (only the
/// identity maps to a multiple of I).
/// Throws DimTooSmall / NotHomomorphism / NotFaithful.
QuantumRep classical_to_quantum_rep(std::shared_ptr<const FiniteGroup> g,
                                    const std::vector<CMatrix>& rep,
                                    std::size_t target_dim,
                                    SynthInfo* info = nullptr);

struct FaithfulReport {
  bool faithful = false;
  bool identity_ok = false;
  std::vector<std::pair<std::size_t, std::size_t>> colliding_pairs;
};

/// Pairwise projective-distinctness plus identity-image check.
FaithfulReport check_faithful(const QuantumRep& rep, double tol);

/// Canonicalized, deduplicated orbit {rep(g) psi}. The size divides
/// the group order.
std::vector<CVector> orbit(const QuantumRep& rep, const CVector& psi,
                           double tol);

/// Elements whose action fixes psi up to a global phase.
std::vector<std::size_t> stabilizer(const QuantumRep& rep, const CVector& psi,
                                    double tol);

/// A state whose orbit has exactly |G| members. Tries amplitudes
/// proportional to (1, 2, ..., d), then seeded random perturbations.
/// Throws SearchFailed after 100 attempts.
CVector torsor_point(const QuantumRep& rep, std::uint64_t seed,
                     double tol = 1e-8);

}  // namespace qgr
