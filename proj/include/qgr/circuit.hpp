#pragma once

#include <cstdint>
#include <vector>

#include "qgr/gate.hpp"
#include "qgr/statevector.hpp"

namespace qgr {

/// Ordered gate list over n qubits. Qubit 0 is the most significant:
/// basis index b = q0 * 2^(n-1) + ... + q_{n-1}.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}
  Circuit(std::uint32_t n_qubits, std::vector<Gate> gates);

  std::uint32_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void append(Gate g);
  void append(const Circuit& other);  // same width

  // Fluent helpers.
  Circuit& x(std::uint32_t q) { append(gate_x(q)); return *this; }
  Circuit& y(std::uint32_t q) { append(gate_y(q)); return *this; }
  Circuit& z(std::uint32_t q) { append(gate_z(q)); return *this; }
  Circuit& h(std::uint32_t q) { append(gate_h(q)); return *this; }
  Circuit& rx(std::uint32_t q, double t) { append(gate_rx(q, t)); return *this; }
  Circuit& ry(std::uint32_t q, double t) { append(gate_ry(q, t)); return *this; }
  Circuit& rz(std::uint32_t q, double t) { append(gate_rz(q, t)); return *this; }
  Circuit& cnot(std::uint32_t c, std::uint32_t t) { append(gate_cnot(c, t)); return *this; }
  Circuit& cz(std::uint32_t a, std::uint32_t b) { append(gate_cz(a, b)); return *this; }
  Circuit& swap(std::uint32_t a, std::uint32_t b) { append(gate_swap(a, b)); return *this; }
  Circuit& mcx(std::vector<std::uint32_t> cs, std::uint32_t t) { append(gate_mcx(std::move(cs), t)); return *this; }
  Circuit& global_phase(double t) { append(gate_global_phase(t)); return *this; }

  Circuit inverse() const;

  /// Gates of a given kind.
  std::size_t count(GateKind k) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::uint32_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Apply the circuit to a state of dimension 2^n. Throws DimMismatch.
void apply_in_place(const Circuit& c, CVector& state);
CVector apply(const Circuit& c, const CVector& state);

/// Exact unitary of the circuit (columns are images of basis states).
/// Throws TooWide above 12 qubits.
CMatrix circuit_unitary(const Circuit& c);

}  // namespace qgr
