// Quanvolution: slides a fixed 4-qubit circuit over a grayscale image in
// non-overlapping 2x2 patches. Each patch is angle-encoded (theta = pi*x,
// one RY per qubit), passed through the ansatz, and read out as four
// Pauli-Z expectations, turning an HxW image into an (H/2)x(W/2)x4 map.
//
// Patch pixels map to qubits in row-major order within the patch:
// top-left -> 0, top-right -> 1, bottom-left -> 2, bottom-right -> 3.
#pragma once

#include <array>
#include <vector>

#include "qnv/statevector.hpp"

namespace qnv {

struct ImageTensor {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> values;  // row-major, in [0, 1]

  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
  double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
};

struct Patch {
  int row = 0;  // patch-grid coordinates; pixel origin is (2*row, 2*col)
  int col = 0;
  std::array<double, 4> pixels{};
};

struct EncodedPatch {
  std::array<double, 4> thetas{};  // theta_j = pi * x_j, in [0, pi]
};

struct FeatureMap {
  int height = 0;
  int width = 0;
  int channels = 4;
  std::vector<double> values;  // row-major (row, col, channel), in [-1, 1]

  double at(int row, int col, int channel) const {
    return values[(static_cast<std::size_t>(row) * width + col) * channels + channel];
  }
  double& at(int row, int col, int channel) {
    return values[(static_cast<std::size_t>(row) * width + col) * channels + channel];
  }
};

// Non-overlapping 2x2 blocks, stride 2, row-major traversal. Height and
// width must be even (no padding) and the image single-channel.
std::vector<Patch> extract_patches(const ImageTensor& image);

// theta_j = pi * x_j; every pixel must already be normalized into [0, 1].
EncodedPatch encode_patch(const std::array<double, 4>& pixels);

// |0000> -> RY(theta_j) on qubit j -> ansatz -> (<Z_0>..<Z_3>).
// The ansatz must be a 4-qubit circuit.
std::array<double, 4> quanv_patch(const EncodedPatch& patch, const CircuitSpec& ansatz);

// Full-image quanvolution. Output is independent of patch processing order
// and of n_threads; n_threads <= 0 picks the hardware concurrency.
FeatureMap quanv_image(const ImageTensor& image, const CircuitSpec& ansatz, int n_threads = 1);

// One feature map per image; images must share a single shape. Fans the
// images out across workers; results are bit-identical for any thread count.
std::vector<FeatureMap> precompute_features(const std::vector<ImageTensor>& images,
                                            const CircuitSpec& ansatz, int n_threads = 1);

}  // namespace qnv
