#include "oicmark/embed.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oic {

CoeffPos position(Strategy s) {
  switch (s) {
    case Strategy::DC: return {1, 1};
    case Strategy::FAC: return {1, 2};
    case Strategy::MAC: return {3, 6};
    case Strategy::LAC: return {8, 8};
  }
  throw std::invalid_argument("bad strategy");
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::DC: return "dc";
    case Strategy::FAC: return "fac";
    case Strategy::MAC: return "mac";
    case Strategy::LAC: return "lac";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Strategy s : kAllStrategies) {
    if (lower == strategy_name(s)) return s;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (dc|fac|mac|lac)");
}

CoeffBlock substitute_coefficient(const CoeffBlock& red_block, const CoeffBlock& cipher_block,
                                  Strategy strategy) {
  CoeffBlock out = red_block;
  const CoeffPos p = position(strategy);
  out[p] = cipher_block[p];
  return out;
}

std::uint8_t round_clamp(double value) {
  const double r = std::round(value);
  if (!(r > 0.0)) return 0;
  if (r >= 255.0) return 255;
  return static_cast<std::uint8_t>(r);
}

Plane round_clamp(const RealPlane& plane) {
  Plane out(plane.rows, plane.cols);
  auto dst = out.samples();
  for (std::size_t i = 0; i < plane.samples.size(); ++i) dst[i] = round_clamp(plane.samples[i]);
  return out;
}

WatermarkedImage embed(const RgbImage& image, const WatermarkKey& key, Strategy strategy) {
  if (image.empty()) throw std::invalid_argument("embed: empty image");
  auto [red, green, blue] = split_channels(image);

  const PaddedPlane red_padded = pad_to_block_multiple(red);
  const PaddedPlane blue_padded = pad_to_block_multiple(blue);
  const CipheredPlane ciphered = encrypt_plane(blue_padded, key);

  CoeffGrid red_grid = forward_blockwise(red_padded);
  const CoeffGrid cipher_grid = forward_blockwise(ciphered.bytes);
  if (red_grid.block_rows != cipher_grid.block_rows || red_grid.block_cols != cipher_grid.block_cols) {
    throw std::logic_error("embed: red and ciphered grids disagree");
  }
  for (std::size_t i = 0; i < red_grid.blocks.size(); ++i) {
    red_grid.blocks[i] = substitute_coefficient(red_grid.blocks[i], cipher_grid.blocks[i], strategy);
  }

  PaddedPlane marked{round_clamp(inverse_blockwise(red_grid)), red_padded.original_rows,
                     red_padded.original_cols};
  return {merge_channels(crop_to_original(marked), std::move(green), std::move(blue)), strategy,
          key.digest_hex};
}

WatermarkedImage embed(const RgbImage& image, std::string_view device_id, Strategy strategy) {
  return embed(image, derive_key(device_id), strategy);
}

}  // namespace oic
