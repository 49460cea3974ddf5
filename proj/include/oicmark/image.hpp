#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace oic {

inline constexpr std::size_t kBlockSize = 8;

enum class Channel { Red, Green, Blue };

std::string_view channel_name(Channel c);
// Accepts "red"/"green"/"blue" (also "r"/"g"/"b"); throws std::invalid_argument.
Channel parse_channel(std::string_view name);

/// One 8-bit intensity channel, row-major.
class Plane {
 public:
  Plane() = default;
  Plane(std::size_t rows, std::size_t cols, std::uint8_t fill = 0);
  Plane(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> samples);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return samples_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return samples_[r * cols_ + c]; }

  std::span<const std::uint8_t> samples() const { return samples_; }
  std::span<std::uint8_t> samples() { return samples_; }

  bool operator==(const Plane&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> samples_;
};

/// Three aligned 8-bit planes. Height is the row count, width the column count.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(Plane red, Plane green, Plane blue);
  RgbImage(std::size_t height, std::size_t width);

  // Interleaved RGB (3 bytes per pixel, row-major).
  static RgbImage from_interleaved(std::size_t height, std::size_t width,
                                   std::span<const std::uint8_t> rgb);
  std::vector<std::uint8_t> to_interleaved() const;

  std::size_t height() const { return red_.rows(); }
  std::size_t width() const { return red_.cols(); }
  bool empty() const { return red_.empty(); }

  const Plane& red() const { return red_; }
  const Plane& green() const { return green_; }
  const Plane& blue() const { return blue_; }
  const Plane& channel(Channel c) const;
  Plane& channel(Channel c);

  bool operator==(const RgbImage&) const = default;

 private:
  Plane red_;
  Plane green_;
  Plane blue_;
};

/// A plane grown to 8-multiple dimensions; the original region sits top-left.
struct PaddedPlane {
  Plane plane;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;
};

struct ChannelPlanes {
  Plane red;
  Plane green;
  Plane blue;
};

ChannelPlanes split_channels(const RgbImage& image);
RgbImage merge_channels(Plane red, Plane green, Plane blue);

// Smallest multiple of 8 that is >= n (n itself when already a multiple).
std::size_t round_up_to_block(std::size_t n);

/// Grows the plane to 8-multiples; the added rows/columns repeat the last
/// row/column. Throws std::invalid_argument for an empty plane.
PaddedPlane pad_to_block_multiple(const Plane& plane);
Plane crop_to_original(const PaddedPlane& padded);

}  // namespace oic
