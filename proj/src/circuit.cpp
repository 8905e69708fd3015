#include "qgr/circuit.hpp"

#include <algorithm>

#include "qgr/error.hpp"
#include "qgr/kernels.hpp"

namespace qgr {

Circuit::Circuit(std::uint32_t n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits) {
  for (auto& g : gates) append(std::move(g));
}

void Circuit::append(Gate g) {
  validate_gate(g, n_qubits_);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_)
    throw DimMismatch("cannot append a circuit of different width");
  for (const auto& g : other.gates_) gates_.push_back(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    inv.append(inverse_gate(*it));
  return inv;
}

std::size_t Circuit::count(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [&](const Gate& g) { return g.kind == k; }));
}

namespace {

// Qubit index (0 = most significant) to bit position from the LSB.
inline int bit_of(const Circuit& c, std::uint32_t q) {
  return static_cast<int>(c.n_qubits() - 1 - q);
}

void apply_gate(const Circuit& c, const Gate& g, CVector& s) {
  const std::size_t dim = s.size();
  using namespace kernels;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::H: {
      const CMatrix m = single_qubit_matrix(g.kind);
      const cxd mm[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
      apply1(s.data(), dim, bit_of(c, g.qubits[0]), mm);
      break;
    }
    case GateKind::RX:
    case GateKind::RY: {
      const CMatrix m = single_qubit_matrix(g.kind, g.params[0]);
      const cxd mm[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
      apply1(s.data(), dim, bit_of(c, g.qubits[0]), mm);
      break;
    }
    case GateKind::Z:
      apply_diag1(s.data(), dim, bit_of(c, g.qubits[0]), {1.0, 0.0},
                  {-1.0, 0.0});
      break;
    case GateKind::RZ:
      apply_diag1(s.data(), dim, bit_of(c, g.qubits[0]),
                  std::polar(1.0, -g.params[0] / 2.0),
                  std::polar(1.0, g.params[0] / 2.0));
      break;
    case GateKind::CNOT:
      apply_cnot(s.data(), dim, bit_of(c, g.qubits[0]),
                 bit_of(c, g.qubits[1]));
      break;
    case GateKind::CZ:
      apply_cz(s.data(), dim, bit_of(c, g.qubits[0]), bit_of(c, g.qubits[1]));
      break;
    case GateKind::SWAP:
      apply_swap(s.data(), dim, bit_of(c, g.qubits[0]),
                 bit_of(c, g.qubits[1]));
      break;
    case GateKind::MCX: {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i)
        mask |= std::uint64_t{1} << bit_of(c, g.qubits[i]);
      apply_mcx(s.data(), dim, mask, bit_of(c, g.qubits.back()));
      break;
    }
    case GateKind::GLOBAL_PHASE:
      scale(s.data(), dim, std::polar(1.0, g.params[0]));
      break;
  }
}

}  // namespace

void apply_in_place(const Circuit& c, CVector& state) {
  if (state.size() != c.dim())
    throw DimMismatch("state dimension does not match circuit width");
  for (const auto& g : c.gates()) apply_gate(c, g, state);
}

CVector apply(const Circuit& c, const CVector& state) {
  CVector out = state;
  apply_in_place(c, out);
  return out;
}

CMatrix circuit_unitary(const Circuit& c) {
  if (c.n_qubits() > 12)
    throw TooWide("circuit unitary limited to 12 qubits");
  const std::size_t d = c.dim();
  CMatrix u(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    CVector v = basis_state(d, col);
    apply_in_place(c, v);
    for (std::size_t row = 0; row < d; ++row) u(row, col) = v[row];
  }
  return u;
}

}  // namespace qgr
