#include "qnv/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"
#include "qnv/errors.hpp"
#include "qnv/rng.hpp"

namespace qnv {

namespace {

void check_wire(const StateVector& state, int wire) {
  if (wire < 0 || wire >= state.n_qubits) {
    throw std::out_of_range(
        fmt::format("wire {} out of range for {}-qubit register", wire, state.n_qubits));
  }
}

}  // namespace

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector new_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        fmt::format("n_qubits must be in 1..={}, got {}", kMaxQubits, n_qubits));
  }
  StateVector state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  state.amplitudes[0] = Amplitude{1.0, 0.0};
  return state;
}

void apply_rotation(StateVector& state, GateKind kind, int wire, double angle) {
  check_wire(state, wire);
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }

  const double half = angle / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);

  Amplitude u00, u01, u10, u11;
  switch (kind) {
    case GateKind::RX:
      u00 = {c, 0.0}; u01 = {0.0, -s};
      u10 = {0.0, -s}; u11 = {c, 0.0};
      break;
    case GateKind::RY:
      u00 = {c, 0.0}; u01 = {-s, 0.0};
      u10 = {s, 0.0}; u11 = {c, 0.0};
      break;
    case GateKind::RZ:
      u00 = {c, -s}; u01 = {0.0, 0.0};
      u10 = {0.0, 0.0}; u11 = {c, s};
      break;
    default:
      throw std::invalid_argument("apply_rotation expects RX, RY or RZ");
  }

  // Pairs (i0, i1) differ only in the wire's bit.
  const std::size_t step = std::size_t{1} << wire;
  const std::size_t block = step << 1;
  const std::size_t n = state.amplitudes.size();
  for (std::size_t base = 0; base < n; base += block) {
    for (std::size_t off = 0; off < step; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + step;
      const Amplitude a = state.amplitudes[i0];
      const Amplitude b = state.amplitudes[i1];
      state.amplitudes[i0] = u00 * a + u01 * b;
      state.amplitudes[i1] = u10 * a + u11 * b;
    }
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  check_wire(state, control);
  check_wire(state, target);
  if (control == target) {
    throw std::out_of_range("CNOT control and target must differ");
  }

  const std::size_t control_bit = std::size_t{1} << control;
  const std::size_t target_bit = std::size_t{1} << target;
  const std::size_t n = state.amplitudes.size();
  // Exact permutation: swap amplitudes of (control=1, target=0) and
  // (control=1, target=1).
  for (std::size_t b = 0; b < n; ++b) {
    if ((b & control_bit) != 0 && (b & target_bit) == 0) {
      std::swap(state.amplitudes[b], state.amplitudes[b | target_bit]);
    }
  }
}

void run_circuit(StateVector& state, const CircuitSpec& circuit) {
  if (circuit.n_qubits != state.n_qubits) {
    throw std::invalid_argument(
        fmt::format("circuit is for {} qubits, register has {}", circuit.n_qubits,
                    state.n_qubits));
  }
  for (const Gate& gate : circuit.gates) {
    if (gate.kind == GateKind::CNOT) {
      apply_cnot(state, gate.wire0, gate.wire1);
    } else {
      apply_rotation(state, gate.kind, gate.wire0, gate.angle);
    }
  }
}

double expectation_z(const StateVector& state, int wire) {
  check_wire(state, wire);
  const std::size_t bit = std::size_t{1} << wire;
  double value = 0.0;
  for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
    const double p = std::norm(state.amplitudes[b]);
    value += (b & bit) ? -p : p;
  }
  return std::clamp(value, -1.0, 1.0);
}

CircuitSpec build_random_layers(std::uint64_t seed, int n_layers, int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("n_qubits must be positive");
  }
  if (n_layers < 0) {
    throw std::invalid_argument("n_layers must be non-negative");
  }
  if (n_layers >= 1 && n_qubits < 2) {
    throw std::invalid_argument("entangler ring needs at least 2 qubits");
  }

  CircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.seed = seed;
  spec.n_layers = n_layers;

  constexpr GateKind kRotationKinds[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
  constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

  Rng rng(seed);
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int w = 0; w < n_qubits; ++w) {
      const GateKind kind = kRotationKinds[rng.next_below(3)];
      const double angle = rng.next_double() * kTwoPi;
      spec.gates.push_back(Gate{kind, w, -1, angle});
    }
    for (int w = 0; w < n_qubits; ++w) {
      spec.gates.push_back(Gate{GateKind::CNOT, w, (w + 1) % n_qubits, 0.0});
    }
  }
  return spec;
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

std::string circuit_to_json(const CircuitSpec& circuit) {
  nlohmann::ordered_json doc;
  doc["n_qubits"] = circuit.n_qubits;
  doc["seed"] = circuit.seed;
  doc["n_layers"] = circuit.n_layers;
  auto& gates = doc["gates"] = nlohmann::ordered_json::array();
  for (const Gate& gate : circuit.gates) {
    nlohmann::ordered_json g;
    g["kind"] = gate_kind_name(gate.kind);
    if (gate.kind == GateKind::CNOT) {
      g["wires"] = {gate.wire0, gate.wire1};
    } else {
      g["wires"] = {gate.wire0};
      g["angle"] = gate.angle;
    }
    gates.push_back(std::move(g));
  }
  return doc.dump(2);
}

CircuitSpec circuit_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("circuit JSON parse failure: {}", e.what()));
  }

  try {
    CircuitSpec spec;
    spec.n_qubits = doc.at("n_qubits").get<int>();
    spec.seed = doc.at("seed").get<std::uint64_t>();
    spec.n_layers = doc.at("n_layers").get<int>();
    if (spec.n_qubits < 1) {
      throw FormatError("circuit JSON: n_qubits must be positive");
    }
    for (const auto& g : doc.at("gates")) {
      const std::string kind = g.at("kind").get<std::string>();
      const auto& wires = g.at("wires");
      Gate gate;
      if (kind == "CNOT") {
        if (wires.size() != 2) {
          throw FormatError("circuit JSON: CNOT needs two wires");
        }
        gate.kind = GateKind::CNOT;
        gate.wire0 = wires.at(0).get<int>();
        gate.wire1 = wires.at(1).get<int>();
        if (gate.wire0 == gate.wire1) {
          throw FormatError("circuit JSON: CNOT wires must differ");
        }
      } else if (kind == "RX" || kind == "RY" || kind == "RZ") {
        if (wires.size() != 1) {
          throw FormatError("circuit JSON: rotation needs one wire");
        }
        gate.kind = kind == "RX" ? GateKind::RX : kind == "RY" ? GateKind::RY : GateKind::RZ;
        gate.wire0 = wires.at(0).get<int>();
        gate.angle = g.at("angle").get<double>();
        if (!std::isfinite(gate.angle)) {
          throw FormatError("circuit JSON: angle must be finite");
        }
      } else {
        throw FormatError(fmt::format("circuit JSON: unknown gate kind \"{}\"", kind));
      }
      const int hi = std::max(gate.wire0, gate.wire1);
      const int lo = std::min(gate.wire0, gate.kind == GateKind::CNOT ? gate.wire1 : gate.wire0);
      if (lo < 0 || hi >= spec.n_qubits) {
        throw FormatError("circuit JSON: gate wire out of range");
      }
      spec.gates.push_back(gate);
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("circuit JSON missing or mistyped field: {}", e.what()));
  }
}

}  // namespace qnv
