#include "qgr/representation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "qgr/error.hpp"
#include "qgr/rng.hpp"
#include "qgr/unitarize.hpp"

namespace qgr {

namespace {

std::size_t next_power_of_two(std::size_t n) {
  return std::bit_ceil(n);
}

}  // namespace

QuantumRep cayley_quantum_rep(std::shared_ptr<const FiniteGroup> g) {
  if (g->order() > (std::size_t{1} << 12))
    throw TooLarge("regular representation limited to order 2^12");
  const std::size_t d = next_power_of_two(g->order());
  QuantumRep rep;
  rep.group = g;
  rep.dim = d;
  rep.mode = RepMode::exact;
  rep.matrices.reserve(g->order());
  for (std::size_t e = 0; e < g->order(); ++e) {
    CMatrix m = CMatrix::identity(d);
    const Permutation p = g->regular_permutation(e);
    for (std::uint32_t j = 0; j < p.degree(); ++j) {
      m(j, j) = cxd(0.0, 0.0);
      m(p(j), j) = cxd(1.0, 0.0);
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

std::vector<CMatrix> extend_generator_matrices(
    const FiniteGroup& g, const std::vector<CMatrix>& gen_matrices,
    double hom_tol) {
  const auto& labels = g.generator_labels();
  if (gen_matrices.size() != labels.size())
    throw DimMismatch("one matrix per declared generator required");
  const std::size_t d = gen_matrices.empty() ? 1 : gen_matrices[0].rows();
  for (const auto& m : gen_matrices)
    if (!m.square() || m.rows() != d)
      throw DimMismatch("generator matrices must share one square shape");

  std::map<std::string, const CMatrix*> by_label;
  for (std::size_t j = 0; j < labels.size(); ++j)
    by_label[labels[j]] = &gen_matrices[j];

  // Element names are words in the generators, so the images follow
  // from left-to-right products.
  std::vector<CMatrix> rep;
  rep.reserve(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (e == g.identity()) {
      rep.push_back(CMatrix::identity(d));
      continue;
    }
    const Word w = parse_word(g.name(e));
    CMatrix acc = CMatrix::identity(d);
    for (const auto& l : w.letters) acc = acc * (*by_label.at(l.label));
    rep.push_back(std::move(acc));
  }
  if (!is_matrix_homomorphism(g, rep, hom_tol))
    throw NotHomomorphism(
        "generator matrices do not satisfy the group's relations");
  return rep;
}

QuantumRep classical_to_quantum_rep(std::shared_ptr<const FiniteGroup> g,
                                    const std::vector<CMatrix>& rep,
                                    std::size_t target_dim, SynthInfo* info) {
  if (rep.size() != g->order())
    throw DimMismatch("one matrix per group element required");
  const std::size_t m = rep[0].rows();
  if (m > target_dim)
    throw DimTooSmall("target dimension below representation dimension");
  const std::size_t k = target_dim - m;

  std::vector<CMatrix> unitary = unitarize(*g, rep);

  if (info) {
    info->input_phase_degenerate = false;
    for (std::size_t e = 0; e < g->order(); ++e) {
      if (e == g->identity()) continue;
      if (projective_equal(unitary[e], CMatrix::identity(m), 1e-8)) {
        info->input_phase_degenerate = true;
        break;
      }
    }
  }

  QuantumRep out;
  out.group = g;
  out.dim = target_dim;
  out.mode = RepMode::exact;
  out.matrices.reserve(g->order());
  for (auto& u : unitary) out.matrices.push_back(direct_sum_pad(u, k));

  const FaithfulReport fr = check_faithful(out, 1e-8);
  if (!fr.faithful)
    throw NotFaithful("padded representation is not projectively faithful");
  return out;
}

FaithfulReport check_faithful(const QuantumRep& rep, double tol) {
  FaithfulReport out;
  const std::size_t n = rep.matrices.size();
  const CMatrix eye = CMatrix::identity(rep.dim);
  out.identity_ok =
      rep.mode == RepMode::exact
          ? rep.of(rep.group->identity()).max_abs_diff(eye) <= tol
          : projective_equal(rep.of(rep.group->identity()), eye, tol);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (projective_equal(rep.matrices[a], rep.matrices[b], tol))
        found[a].push_back({static_cast<std::size_t>(a), b});
  for (auto& f : found)
    out.colliding_pairs.insert(out.colliding_pairs.end(), f.begin(), f.end());
  out.faithful = out.identity_ok && out.colliding_pairs.empty();
  return out;
}

namespace {

/// Orbit membership with a scalar fingerprint prefilter: projectively
/// equal states have equal overlap magnitude against any fixed
/// reference, so only adjacent fingerprint buckets need a full check.
class StateSet {
 public:
  StateSet(std::size_t dim, double tol) : tol_(tol) {
    Rng rng(0x5eedULL);
    ref_.resize(dim);
    for (auto& a : ref_) a = cxd(rng.normal(), rng.normal());
    normalize(ref_);
  }

  // Returns true if the state was new and inserted.
  bool insert(const CVector& canon) {
    const double f = std::abs(inner(ref_, canon));
    const std::int64_t key = std::llround(f * 1e6);
    for (std::int64_t k = key - 1; k <= key + 1; ++k) {
      auto [lo, hi] = buckets_.equal_range(k);
      for (auto it = lo; it != hi; ++it)
        if (projective_state_equal(states_[it->second], canon, tol_))
          return false;
    }
    buckets_.emplace(key, states_.size());
    states_.push_back(canon);
    return true;
  }

  std::vector<CVector> take() && { return std::move(states_); }
  std::size_t size() const { return states_.size(); }

 private:
  double tol_;
  CVector ref_;
  std::vector<CVector> states_;
  std::multimap<std::int64_t, std::size_t> buckets_;
};

}  // namespace

std::vector<CVector> orbit(const QuantumRep& rep, const CVector& psi,
                           double tol) {
  if (psi.size() != rep.dim)
    throw DimMismatch("state dimension does not match representation");
  StateSet set(rep.dim, tol);
  for (const auto& u : rep.matrices) set.insert(canonical_state(u * psi));
  return std::move(set).take();
}

std::vector<std::size_t> stabilizer(const QuantumRep& rep, const CVector& psi,
                                    double tol) {
  if (psi.size() != rep.dim)
    throw DimMismatch("state dimension does not match representation");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < rep.matrices.size(); ++e)
    if (projective_state_equal(rep.matrices[e] * psi, psi, tol))
      out.push_back(e);
  return out;
}

CVector torsor_point(const QuantumRep& rep, std::uint64_t seed, double tol) {
  const std::size_t d = rep.dim;
  CVector psi(d);
  for (std::size_t i = 0; i < d; ++i)
    psi[i] = cxd(static_cast<double>(i + 1), 0.0);
  normalize(psi);

  for (int attempt = 0; attempt < 100; ++attempt) {
    if (orbit(rep, psi, tol).size() == rep.group->order()) return psi;
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
    for (std::size_t i = 0; i < d; ++i)
      psi[i] = cxd(rng.normal(), rng.normal());
    normalize(psi);
  }
  throw SearchFailed(
      "no free orbit found; the representation is likely not faithful");
}

}  // namespace qgr
