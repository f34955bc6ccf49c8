// Dense statevector simulation of few-qubit circuits: RX/RY/RZ rotations,
// CNOT entanglers, Pauli-Z expectations, and the seeded random-layers
// ansatz used by the quanvolution stage.
//
// Conventions, fixed for reproducibility:
//   - basis index bit w holds the value of qubit w (qubit 0 = LSB);
//   - RY(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]],
//     RX(t) = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]],
//     RZ(t) = diag(exp(-i t/2), exp(+i t/2));
//   - global phase is never normalized away.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qnv {

using Amplitude = std::complex<double>;

enum class GateKind { RX, RY, RZ, CNOT };

struct Gate {
  GateKind kind = GateKind::RY;
  int wire0 = 0;       // rotation wire, or CNOT control
  int wire1 = -1;      // CNOT target; -1 for rotations
  double angle = 0.0;  // radians; unused for CNOT

  bool operator==(const Gate&) const = default;
};

// Ordered gate list plus the (seed, n_layers) pair that generated it, so a
// spec can be replayed or stamped into downstream artifacts.
struct CircuitSpec {
  int n_qubits = 0;
  std::uint64_t seed = 0;
  int n_layers = 0;
  std::vector<Gate> gates;

  bool operator==(const CircuitSpec&) const = default;
};

struct StateVector {
  int n_qubits = 0;
  std::vector<Amplitude> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
  double norm() const;
};

inline constexpr int kMaxQubits = 10;

// |0...0> register; n_qubits in 1..=kMaxQubits.
StateVector new_state(int n_qubits);

// In-place 2x2 unitary on one wire; norm preserved within 1e-12.
void apply_rotation(StateVector& state, GateKind kind, int wire, double angle);

// Flips the target bit of every basis state whose control bit is set.
void apply_cnot(StateVector& state, int control, int target);

// Applies circuit.gates in list order; circuit.n_qubits must match.
void run_circuit(StateVector& state, const CircuitSpec& circuit);

// <Z_wire> = sum_b (+1 if bit clear, -1 if set) * |amp_b|^2, clamped to [-1, 1].
double expectation_z(const StateVector& state, int wire);

// Deterministic random-layers ansatz. Per layer: one rotation per wire with
// kind drawn uniformly from {RX, RY, RZ} (indices 0..2, in that order) and
// angle uniform in [0, 2*pi) -- kind then angle, wires ascending -- followed
// by the entangler ring CNOT(w, (w+1) mod n_qubits), w ascending. All draws
// come from Rng(seed); layers are generated sequentially.
CircuitSpec build_random_layers(std::uint64_t seed, int n_layers, int n_qubits);

// JSON document: {"n_qubits":4,"seed":42,"n_layers":1,"gates":[...]} with
// gates in application order; rotations carry "angle", CNOTs have two wires.
std::string circuit_to_json(const CircuitSpec& circuit);
CircuitSpec circuit_from_json(const std::string& text);

const char* gate_kind_name(GateKind kind);

}  // namespace qnv
