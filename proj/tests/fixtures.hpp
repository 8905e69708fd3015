#pragma once

// Shared reference data for the C2 x D4 worked example: a concrete
// permutation realization, the 3-dimensional classical generator
// images, their 4-dimensional padded forms, a known-good trained
// parameter set for the two-qubit ansatz, and the analytic parameter
// family it interpolates.

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qgr/group.hpp"
#include "qgr/matrix.hpp"
#include "qgr/permutation.hpp"

namespace fixtures {

using qgr::CMatrix;
using qgr::FiniteGroup;
using qgr::Permutation;
using qgr::Presentation;

// D4 acting on a square's corners plus an independent swap; the
// closure has order 16.
inline std::shared_ptr<const FiniteGroup> c2xd4() {
  const Permutation a(std::vector<std::uint32_t>{0, 1, 2, 3, 5, 4});
  const Permutation b(std::vector<std::uint32_t>{0, 3, 2, 1, 4, 5});
  const Permutation c(std::vector<std::uint32_t>{1, 2, 3, 0, 4, 5});
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::closure({a, b, c}, {"a", "b", "c"}));
}

inline Presentation c2xd4_presentation() {
  Presentation p;
  p.generator_labels = {"a", "b", "c"};
  for (const char* w : {"a a", "b b", "c c c c", "b c b c", "a b a b",
                        "a c c c a c"})
    p.relations.push_back(qgr::parse_word(w));
  for (const char* w : {"a", "b", "a b", "c c"})
    p.irrelations.push_back(qgr::parse_word(w));
  return p;
}

// 3-dimensional classical generator images (already unitary).
inline CMatrix gen3_a() {
  return CMatrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
}
inline CMatrix gen3_b() {
  return CMatrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
}
inline CMatrix gen3_c() {
  return CMatrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
}

// The same images padded with I_1 to dimension 4.
inline CMatrix rep4_a() {
  return CMatrix::from_rows(
      {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
}
inline CMatrix rep4_b() {
  return CMatrix::from_rows(
      {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
}
inline CMatrix rep4_c() {
  return CMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

// Published context matrices for the elements b c^2 and b c^3. Note
// that the second one is NOT the product rep4_b * rep4_c^3 (it differs
// by a sign at entry (0,0)); the acceptance suite documents this.
inline CMatrix context_bc2() {
  return CMatrix::from_rows(
      {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}
inline CMatrix context_bc3() {
  return CMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

// Known-good trained parameters for the 1-layer, 2-qubit ansatz
// (regression data from a converged training run).
inline std::map<std::string, std::vector<double>> trained_params() {
  return {
      {"a", {5.84551571, -8.06312288, -12.12870095, -17.06961836}},
      {"b", {16.17214308, 13.9280257, -9.88895781, 4.92153015}},
      {"c", {13.69949734, -8.06312283, 2.00846589, 33.19586423}},
  };
}

// One-parameter analytic family of ansatz parameters satisfying the
// same presentation for every phi.
inline std::map<std::string, std::vector<double>> analytic_params(double phi) {
  const double pi = M_PI;
  return {
      {"a", {3 * pi - phi, 3 * phi, phi - pi, 4 * pi - 3 * phi}},
      {"b", {phi, 3 * phi - pi, 2 * pi - phi, 3 * pi - 3 * phi}},
      {"c", {(pi - 2 * phi) / 2, 3 * phi, (pi + 2 * phi) / 2,
             4 * pi - 3 * phi}},
  };
}

// Generator unitaries produced by the analytic family at phi = 0.
inline CMatrix analytic0_a() {
  return CMatrix::from_rows(
      {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
}
inline CMatrix analytic0_b() {
  return CMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
}
inline CMatrix analytic0_c() {
  return CMatrix::from_rows(
      {{0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}});
}

}  // namespace fixtures
