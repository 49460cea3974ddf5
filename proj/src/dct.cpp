#include "oicmark/dct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oic {
namespace {

// kCos[k][n] = alpha(k) * cos((2n + 1) k pi / 16); rows are orthonormal.
const std::array<std::array<double, 8>, 8>& cosine_table() {
  static const auto table = [] {
    std::array<std::array<double, 8>, 8> t{};
    for (int k = 0; k < 8; ++k) {
      const double alpha = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int n = 0; n < 8; ++n) {
        t[k][n] = alpha * std::cos((2 * n + 1) * k * std::numbers::pi / 16.0);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

CoeffBlock dct2_block(const Block8& block) {
  const auto& C = cosine_table();
  // Separable: rows first (tmp = X * C^T), then columns (Y = C * tmp).
  std::array<double, 64> tmp{};
  for (int r = 0; r < 8; ++r) {
    for (int v = 0; v < 8; ++v) {
      double acc = 0.0;
      for (int c = 0; c < 8; ++c) acc += block[r * 8 + c] * C[v][c];
      tmp[r * 8 + v] = acc;
    }
  }
  CoeffBlock out;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      double acc = 0.0;
      for (int r = 0; r < 8; ++r) acc += C[u][r] * tmp[r * 8 + v];
      out.values[u * 8 + v] = acc;
    }
  }
  return out;
}

Block8 idct2_block(const CoeffBlock& coeffs) {
  const auto& C = cosine_table();
  std::array<double, 64> tmp{};
  for (int r = 0; r < 8; ++r) {
    for (int v = 0; v < 8; ++v) {
      double acc = 0.0;
      for (int u = 0; u < 8; ++u) acc += C[u][r] * coeffs.values[u * 8 + v];
      tmp[r * 8 + v] = acc;
    }
  }
  Block8 out{};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      double acc = 0.0;
      for (int v = 0; v < 8; ++v) acc += tmp[r * 8 + v] * C[v][c];
      out[r * 8 + c] = acc;
    }
  }
  return out;
}

Block8 basis_image(CoeffPos pos) {
  if (!pos.valid()) throw std::invalid_argument("basis_image: position out of range");
  const auto& C = cosine_table();
  Block8 out{};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) out[r * 8 + c] = C[pos.u - 1][r] * C[pos.v - 1][c];
  }
  return out;
}

Block8 extract_block(const Plane& plane, std::size_t br, std::size_t bc) {
  Block8 b{};
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) b[r * 8 + c] = plane(br * 8 + r, bc * 8 + c);
  }
  return b;
}

CoeffGrid forward_blockwise(const Plane& plane) {
  if (plane.empty() || plane.rows() % kBlockSize != 0 || plane.cols() % kBlockSize != 0) {
    throw std::invalid_argument("forward_blockwise: " + std::to_string(plane.rows()) + "x" +
                                std::to_string(plane.cols()) + " is not a multiple of 8");
  }
  CoeffGrid grid;
  grid.block_rows = plane.rows() / kBlockSize;
  grid.block_cols = plane.cols() / kBlockSize;
  grid.blocks.resize(grid.block_rows * grid.block_cols);
  for (std::size_t br = 0; br < grid.block_rows; ++br) {
    for (std::size_t bc = 0; bc < grid.block_cols; ++bc) {
      grid.at(br, bc) = dct2_block(extract_block(plane, br, bc));
    }
  }
  return grid;
}

CoeffGrid forward_blockwise(const PaddedPlane& plane) { return forward_blockwise(plane.plane); }

RealPlane inverse_blockwise(const CoeffGrid& grid) {
  RealPlane out;
  out.rows = grid.block_rows * kBlockSize;
  out.cols = grid.block_cols * kBlockSize;
  out.samples.assign(out.rows * out.cols, 0.0);
  for (std::size_t br = 0; br < grid.block_rows; ++br) {
    for (std::size_t bc = 0; bc < grid.block_cols; ++bc) {
      const Block8 b = idct2_block(grid.at(br, bc));
      for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) out(br * 8 + r, bc * 8 + c) = b[r * 8 + c];
      }
    }
  }
  return out;
}

}  // namespace oic
