#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oicmark/image.hpp"

namespace oic {

/// 8x8 spatial samples (row-major, 0-based).
using Block8 = std::array<double, 64>;

/// 1-based coefficient position (u = vertical frequency / row, v = column),
/// the (1,1)..(8,8) convention used in reports.
struct CoeffPos {
  int u = 1;
  int v = 1;

  constexpr std::size_t index() const { return static_cast<std::size_t>((u - 1) * 8 + (v - 1)); }
  constexpr bool valid() const { return u >= 1 && u <= 8 && v >= 1 && v <= 8; }
  constexpr bool operator==(const CoeffPos&) const = default;
};

struct CoeffBlock {
  std::array<double, 64> values{};  // row-major, values[(u-1)*8 + (v-1)]

  double operator[](CoeffPos p) const { return values[p.index()]; }
  double& operator[](CoeffPos p) { return values[p.index()]; }
  bool operator==(const CoeffBlock&) const = default;
};

// Orthonormal 2-D DCT-II and its inverse (DCT-III). DC = 8 * mean.
CoeffBlock dct2_block(const Block8& block);
Block8 idct2_block(const CoeffBlock& coeffs);

// Spatial pattern contributed by a unit coefficient at `pos` (unit L2 norm).
Block8 basis_image(CoeffPos pos);

/// Row-major real matrix, the output of the inverse transform before rounding.
struct RealPlane {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> samples;

  double operator()(std::size_t r, std::size_t c) const { return samples[r * cols + c]; }
  double& operator()(std::size_t r, std::size_t c) { return samples[r * cols + c]; }
};

struct CoeffGrid {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::vector<CoeffBlock> blocks;  // row-major over blocks

  const CoeffBlock& at(std::size_t br, std::size_t bc) const { return blocks[br * block_cols + bc]; }
  CoeffBlock& at(std::size_t br, std::size_t bc) { return blocks[br * block_cols + bc]; }
};

Block8 extract_block(const Plane& plane, std::size_t br, std::size_t bc);

// Throws std::invalid_argument unless both dimensions are multiples of 8.
CoeffGrid forward_blockwise(const Plane& plane);
CoeffGrid forward_blockwise(const PaddedPlane& plane);
RealPlane inverse_blockwise(const CoeffGrid& grid);

}  // namespace oic
