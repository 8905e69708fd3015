#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgr/matrix.hpp"

namespace qgr {

enum class GateKind {
  X,
  Y,
  Z,
  H,
  RX,
  RY,
  RZ,
  CNOT,   // qubits = {control, target}
  CZ,     // qubits = {a, b}, symmetric
  SWAP,   // qubits = {a, b}
  MCX,    // qubits = {controls..., target}
  GLOBAL_PHASE,  // qubits empty, params = {theta}: multiply by e^{i theta}
};

struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> qubits;
  std::vector<double> params;

  bool operator==(const Gate&) const = default;
};

// Constructors for the common cases.
Gate gate_x(std::uint32_t q);
Gate gate_y(std::uint32_t q);
Gate gate_z(std::uint32_t q);
Gate gate_h(std::uint32_t q);
Gate gate_rx(std::uint32_t q, double theta);
Gate gate_ry(std::uint32_t q, double theta);
Gate gate_rz(std::uint32_t q, double theta);
Gate gate_cnot(std::uint32_t control, std::uint32_t target);
Gate gate_cz(std::uint32_t a, std::uint32_t b);
Gate gate_swap(std::uint32_t a, std::uint32_t b);
Gate gate_mcx(std::vector<std::uint32_t> controls, std::uint32_t target);
Gate gate_global_phase(double theta);

/// Lower-case serialization name ("ry", "cnot", ...).
const std::string& gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// Inverse gate (negated angles; self-inverse kinds unchanged).
Gate inverse_gate(const Gate& g);

/// The 2x2 matrix of a single-qubit kind. Throws for other kinds.
CMatrix single_qubit_matrix(GateKind k, double theta = 0.0);

/// Validate indices against a circuit width. Throws Error on repeats
/// or out-of-range indices, and LengthMismatch on bad param counts.
void validate_gate(const Gate& g, std::uint32_t n_qubits);

}  // namespace qgr
