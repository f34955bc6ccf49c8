#include "qnv/quanv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace qnv {

namespace {

int resolve_threads(int n_threads) {
  if (n_threads > 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void validate_even_grayscale(const ImageTensor& image) {
  if (image.channels != 1) {
    throw std::invalid_argument(
        fmt::format("quanvolution expects 1 channel, got {}", image.channels));
  }
  if (image.height <= 0 || image.width <= 0 || image.height % 2 != 0 || image.width % 2 != 0) {
    throw std::invalid_argument(
        fmt::format("quanvolution needs even positive dimensions, got {}x{}", image.height,
                    image.width));
  }
  if (image.values.size() != static_cast<std::size_t>(image.height) * image.width) {
    throw std::invalid_argument("image value count does not match its dimensions");
  }
}

}  // namespace

std::vector<Patch> extract_patches(const ImageTensor& image) {
  validate_even_grayscale(image);
  std::vector<Patch> patches;
  patches.reserve(static_cast<std::size_t>(image.height / 2) * (image.width / 2));
  for (int r = 0; r < image.height / 2; ++r) {
    for (int c = 0; c < image.width / 2; ++c) {
      Patch patch;
      patch.row = r;
      patch.col = c;
      patch.pixels = {image.at(2 * r, 2 * c), image.at(2 * r, 2 * c + 1),
                      image.at(2 * r + 1, 2 * c), image.at(2 * r + 1, 2 * c + 1)};
      patches.push_back(patch);
    }
  }
  return patches;
}

EncodedPatch encode_patch(const std::array<double, 4>& pixels) {
  EncodedPatch encoded;
  for (std::size_t j = 0; j < 4; ++j) {
    if (!(pixels[j] >= 0.0 && pixels[j] <= 1.0)) {
      throw std::invalid_argument(
          fmt::format("pixel value {} outside [0, 1]; ingestion should have normalized it",
                      pixels[j]));
    }
    encoded.thetas[j] = std::numbers::pi_v<double> * pixels[j];
  }
  return encoded;
}

std::array<double, 4> quanv_patch(const EncodedPatch& patch, const CircuitSpec& ansatz) {
  if (ansatz.n_qubits != 4) {
    throw std::invalid_argument(
        fmt::format("quanvolution ansatz must use 4 qubits, got {}", ansatz.n_qubits));
  }
  StateVector state = new_state(4);
  for (int j = 0; j < 4; ++j) {
    apply_rotation(state, GateKind::RY, j, patch.thetas[static_cast<std::size_t>(j)]);
  }
  run_circuit(state, ansatz);
  return {expectation_z(state, 0), expectation_z(state, 1), expectation_z(state, 2),
          expectation_z(state, 3)};
}

FeatureMap quanv_image(const ImageTensor& image, const CircuitSpec& ansatz, int n_threads) {
  const std::vector<Patch> patches = extract_patches(image);

  FeatureMap map;
  map.height = image.height / 2;
  map.width = image.width / 2;
  map.channels = 4;
  map.values.assign(static_cast<std::size_t>(map.height) * map.width * 4, 0.0);

  // Each patch writes only its own slot, so any partition of the patch
  // index range yields bit-identical output.
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const Patch& patch = patches[p];
      const std::array<double, 4> z = quanv_patch(encode_patch(patch.pixels), ansatz);
      for (int ch = 0; ch < 4; ++ch) {
        map.at(patch.row, patch.col, ch) = z[static_cast<std::size_t>(ch)];
      }
    }
  };

  const int threads = std::min<int>(resolve_threads(n_threads), static_cast<int>(patches.size()));
  if (threads <= 1) {
    work(0, patches.size());
    return map;
  }

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const std::size_t chunk = (patches.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    const std::size_t end = std::min(patches.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& thread : pool) thread.join();
  return map;
}

std::vector<FeatureMap> precompute_features(const std::vector<ImageTensor>& images,
                                            const CircuitSpec& ansatz, int n_threads) {
  for (const ImageTensor& image : images) {
    if (image.height != images.front().height || image.width != images.front().width ||
        image.channels != images.front().channels) {
      throw std::invalid_argument("precompute_features requires uniform image shapes");
    }
  }

  std::vector<FeatureMap> maps(images.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      maps[i] = quanv_image(images[i], ansatz, 1);
    }
  };

  const int threads = std::min<int>(resolve_threads(n_threads),
                                    std::max<int>(1, static_cast<int>(images.size())));
  if (threads <= 1 || images.size() <= 1) {
    work(0, images.size());
    return maps;
  }

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const std::size_t chunk = (images.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    const std::size_t end = std::min(images.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& thread : pool) thread.join();
  return maps;
}

}  // namespace qnv
