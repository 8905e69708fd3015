#include "qgr/gate.hpp"

#include <cmath>
#include <map>
#include <set>

#include "qgr/error.hpp"

namespace qgr {

Gate gate_x(std::uint32_t q) { return {GateKind::X, {q}, {}}; }
Gate gate_y(std::uint32_t q) { return {GateKind::Y, {q}, {}}; }
Gate gate_z(std::uint32_t q) { return {GateKind::Z, {q}, {}}; }
Gate gate_h(std::uint32_t q) { return {GateKind::H, {q}, {}}; }
Gate gate_rx(std::uint32_t q, double t) { return {GateKind::RX, {q}, {t}}; }
Gate gate_ry(std::uint32_t q, double t) { return {GateKind::RY, {q}, {t}}; }
Gate gate_rz(std::uint32_t q, double t) { return {GateKind::RZ, {q}, {t}}; }
Gate gate_cnot(std::uint32_t c, std::uint32_t t) {
  return {GateKind::CNOT, {c, t}, {}};
}
Gate gate_cz(std::uint32_t a, std::uint32_t b) {
  return {GateKind::CZ, {a, b}, {}};
}
Gate gate_swap(std::uint32_t a, std::uint32_t b) {
  return {GateKind::SWAP, {a, b}, {}};
}
Gate gate_mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
  controls.push_back(target);
  return {GateKind::MCX, std::move(controls), {}};
}
Gate gate_global_phase(double theta) {
  return {GateKind::GLOBAL_PHASE, {}, {theta}};
}

namespace {
const std::map<GateKind, std::string> kNames = {
    {GateKind::X, "x"},       {GateKind::Y, "y"},
    {GateKind::Z, "z"},       {GateKind::H, "h"},
    {GateKind::RX, "rx"},     {GateKind::RY, "ry"},
    {GateKind::RZ, "rz"},     {GateKind::CNOT, "cnot"},
    {GateKind::CZ, "cz"},     {GateKind::SWAP, "swap"},
    {GateKind::MCX, "mcx"},   {GateKind::GLOBAL_PHASE, "global_phase"},
};
}  // namespace

const std::string& gate_kind_name(GateKind k) { return kNames.at(k); }

GateKind gate_kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : kNames)
    if (n == name) return kind;
  throw ParseError("unknown gate kind '" + name + "'");
}

Gate inverse_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::GLOBAL_PHASE: {
      Gate inv = g;
      inv.params[0] = -inv.params[0];
      return inv;
    }
    default:
      return g;  // X, Y, Z, H, CNOT, CZ, SWAP, MCX are involutions
  }
}

CMatrix single_qubit_matrix(GateKind k, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  CMatrix m(2, 2);
  switch (k) {
    case GateKind::X:
      m(0, 1) = m(1, 0) = 1.0;
      return m;
    case GateKind::Y:
      m(0, 1) = cxd(0.0, -1.0);
      m(1, 0) = cxd(0.0, 1.0);
      return m;
    case GateKind::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m;
    case GateKind::H:
      m(0, 0) = m(0, 1) = m(1, 0) = M_SQRT1_2;
      m(1, 1) = -M_SQRT1_2;
      return m;
    case GateKind::RX:
      m(0, 0) = m(1, 1) = c;
      m(0, 1) = m(1, 0) = cxd(0.0, -s);
      return m;
    case GateKind::RY:
      m(0, 0) = m(1, 1) = c;
      m(0, 1) = -s;
      m(1, 0) = s;
      return m;
    case GateKind::RZ:
      m(0, 0) = std::polar(1.0, -theta / 2.0);
      m(1, 1) = std::polar(1.0, theta / 2.0);
      return m;
    default:
      throw Error("not a single-qubit gate kind");
  }
}

void validate_gate(const Gate& g, std::uint32_t n_qubits) {
  std::set<std::uint32_t> seen;
  for (auto q : g.qubits) {
    if (q >= n_qubits) throw Error("gate qubit index out of range");
    if (!seen.insert(q).second) throw Error("repeated qubit index in gate");
  }
  const auto need = [&](std::size_t nq, std::size_t np) {
    if (g.qubits.size() != nq || g.params.size() != np)
      throw LengthMismatch("bad qubit/param count for gate '" +
                           gate_kind_name(g.kind) + "'");
  };
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
      need(1, 0);
      break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      need(1, 1);
      break;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      need(2, 0);
      break;
    case GateKind::MCX:
      if (g.qubits.empty() || !g.params.empty())
        throw LengthMismatch("mcx needs at least a target and no params");
      break;
    case GateKind::GLOBAL_PHASE:
      need(0, 1);
      break;
  }
}

}  // namespace qgr
