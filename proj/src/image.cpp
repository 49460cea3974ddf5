#include "oicmark/image.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace oic {

std::string_view channel_name(Channel c) {
  switch (c) {
    case Channel::Red: return "red";
    case Channel::Green: return "green";
    case Channel::Blue: return "blue";
  }
  return "?";
}

Channel parse_channel(std::string_view raw) {
  std::string name(raw);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name == "red" || name == "r") return Channel::Red;
  if (name == "green" || name == "g") return Channel::Green;
  if (name == "blue" || name == "b") return Channel::Blue;
  throw std::invalid_argument("unknown channel '" + std::string(raw) + "'");
}

Plane::Plane(std::size_t rows, std::size_t cols, std::uint8_t fill)
    : rows_(rows), cols_(cols), samples_(rows * cols, fill) {}

Plane::Plane(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> samples)
    : rows_(rows), cols_(cols), samples_(std::move(samples)) {
  if (samples_.size() != rows * cols) {
    throw std::invalid_argument("Plane: sample count " + std::to_string(samples_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
}

RgbImage::RgbImage(Plane red, Plane green, Plane blue)
    : red_(std::move(red)), green_(std::move(green)), blue_(std::move(blue)) {
  if (red_.rows() != green_.rows() || red_.rows() != blue_.rows() ||
      red_.cols() != green_.cols() || red_.cols() != blue_.cols()) {
    throw std::invalid_argument("RgbImage: channel dimensions differ");
  }
}

RgbImage::RgbImage(std::size_t height, std::size_t width)
    : red_(height, width), green_(height, width), blue_(height, width) {}

RgbImage RgbImage::from_interleaved(std::size_t height, std::size_t width,
                                    std::span<const std::uint8_t> rgb) {
  if (rgb.size() != height * width * 3) {
    throw std::invalid_argument("RgbImage: interleaved buffer has wrong size");
  }
  RgbImage img(height, width);
  auto r = img.red_.samples();
  auto g = img.green_.samples();
  auto b = img.blue_.samples();
  for (std::size_t i = 0; i < height * width; ++i) {
    r[i] = rgb[3 * i];
    g[i] = rgb[3 * i + 1];
    b[i] = rgb[3 * i + 2];
  }
  return img;
}

std::vector<std::uint8_t> RgbImage::to_interleaved() const {
  std::vector<std::uint8_t> out(red_.size() * 3);
  auto r = red_.samples();
  auto g = green_.samples();
  auto b = blue_.samples();
  for (std::size_t i = 0; i < red_.size(); ++i) {
    out[3 * i] = r[i];
    out[3 * i + 1] = g[i];
    out[3 * i + 2] = b[i];
  }
  return out;
}

const Plane& RgbImage::channel(Channel c) const {
  switch (c) {
    case Channel::Red: return red_;
    case Channel::Green: return green_;
    case Channel::Blue: return blue_;
  }
  throw std::invalid_argument("bad channel");
}

Plane& RgbImage::channel(Channel c) {
  return const_cast<Plane&>(std::as_const(*this).channel(c));
}

ChannelPlanes split_channels(const RgbImage& image) {
  return {image.red(), image.green(), image.blue()};
}

RgbImage merge_channels(Plane red, Plane green, Plane blue) {
  return RgbImage(std::move(red), std::move(green), std::move(blue));
}

std::size_t round_up_to_block(std::size_t n) {
  const std::size_t rem = n % kBlockSize;
  return rem == 0 ? n : n + (kBlockSize - rem);
}

PaddedPlane pad_to_block_multiple(const Plane& plane) {
  if (plane.empty()) {
    throw std::invalid_argument("pad_to_block_multiple: empty plane");
  }
  const std::size_t rows = round_up_to_block(plane.rows());
  const std::size_t cols = round_up_to_block(plane.cols());
  if (rows == plane.rows() && cols == plane.cols()) {
    return {plane, plane.rows(), plane.cols()};
  }
  Plane out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t sr = std::min(r, plane.rows() - 1);
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = plane(sr, std::min(c, plane.cols() - 1));
    }
  }
  return {std::move(out), plane.rows(), plane.cols()};
}

Plane crop_to_original(const PaddedPlane& padded) {
  const Plane& p = padded.plane;
  if (padded.original_rows == p.rows() && padded.original_cols == p.cols()) return p;
  Plane out(padded.original_rows, padded.original_cols);
  for (std::size_t r = 0; r < padded.original_rows; ++r) {
    for (std::size_t c = 0; c < padded.original_cols; ++c) out(r, c) = p(r, c);
  }
  return out;
}

}  // namespace oic
