// Dense feedforward classifier built from scratch: exact backpropagation
// for mean binary cross-entropy and Adam updates with bias correction.
// The same code backs the quanvolution head and the raw-pixel baseline;
// all math is in 64-bit floats.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qnv {

enum class Activation : std::uint8_t { ReLU = 0, Sigmoid = 1, Identity = 2 };

struct LayerSpec {
  int in_dim = 0;
  int out_dim = 0;
  Activation activation = Activation::Identity;

  bool operator==(const LayerSpec&) const = default;
};

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Sigmoid outputs are clamped into [kPredictionClamp, 1 - kPredictionClamp]
// before they reach the loss.
inline constexpr double kPredictionClamp = 1e-7;

struct DenseModel {
  std::vector<LayerSpec> layers;
  // Per layer: weights are out_dim x in_dim row-major; Adam moments mirror
  // the parameter shapes exactly.
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
  std::vector<std::vector<double>> adam_m_w, adam_v_w;
  std::vector<std::vector<double>> adam_m_b, adam_v_b;
  std::uint64_t step = 0;

  std::size_t parameter_count() const;
  int input_dim() const { return layers.front().in_dim; }
};

// Per-layer post-activation values kept for the backward pass;
// activations[0] is the input, activations[k+1] the output of layer k.
struct ForwardTrace {
  std::vector<std::vector<double>> activations;
  double prediction = 0.0;
};

struct Gradients {
  std::vector<std::vector<double>> d_weights;
  std::vector<std::vector<double>> d_biases;

  static Gradients zeros_like(const DenseModel& model);
  void accumulate(const Gradients& other);
  void scale(double factor);
};

// Glorot-uniform weights (limit sqrt(6/(in+out))) drawn row-major from
// Rng(seed), layer by layer; biases, Adam buffers and step start at zero.
DenseModel init_model(const std::vector<LayerSpec>& specs, std::uint64_t seed);

ForwardTrace forward(const DenseModel& model, const std::vector<double>& input);

// -[y ln p + (1 - y) ln(1 - p)]; callers average over a batch.
double bce_loss(double prediction, int label);

// Exact gradients of single-sample BCE; requires the trace produced by
// forward() on the same input. The sigmoid+BCE output delta is (p - y).
Gradients backward(const DenseModel& model, const ForwardTrace& trace, int label);

void adam_step(DenseModel& model, const Gradients& grads, const AdamConfig& config);

std::vector<double> predict_batch(const DenseModel& model,
                                  const std::vector<std::vector<double>>& inputs);

// Threshold 0.5; ties go to the positive class.
inline int classify(double prediction) { return prediction >= 0.5 ? 1 : 0; }

// Checkpoint format "QNVM" v1, little-endian: magic, u32 version, u64 step,
// u32 layer count, per-layer (u32 in, u32 out, u8 activation); then all
// parameters in layer order (weights row-major, then biases), then the Adam
// first moments in the same order, then the second moments, as f64.
void save_checkpoint(const DenseModel& model, const std::string& path);
DenseModel load_checkpoint(const std::string& path);

}  // namespace qnv
