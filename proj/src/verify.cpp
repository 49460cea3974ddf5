#include "oicmark/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oicmark/consistency.hpp"
#include "oicmark/dct.hpp"

namespace oic {

std::string_view model_name(DeviationModel m) {
  return m == DeviationModel::Direct ? "direct" : "consistency";
}

DeviationModel parse_model(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "consistency") return DeviationModel::Consistency;
  if (lower == "direct") return DeviationModel::Direct;
  throw std::invalid_argument("unknown deviation model '" + std::string(name) +
                              "' (consistency|direct)");
}

std::size_t TamperMap::flagged_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const BlockCheck& c) { return c.flagged; }));
}

double TamperMap::max_deviation() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.deviation);
  return m;
}

namespace {

// Observation for block (br, bc) of the re-padded red plane. Margin samples
// point at the in-image sample they replicate, which always lies in the same
// block because the margin is narrower than a block.
BlockObservation observe_block(const PaddedPlane& red, std::size_t br, std::size_t bc) {
  BlockObservation obs;
  for (std::size_t y = 0; y < kBlockSize; ++y) {
    for (std::size_t x = 0; x < kBlockSize; ++x) {
      const std::size_t r = br * kBlockSize + y;
      const std::size_t c = bc * kBlockSize + x;
      const std::size_t sr = std::min(r, red.original_rows - 1) - br * kBlockSize;
      const std::size_t sc = std::min(c, red.original_cols - 1) - bc * kBlockSize;
      obs.samples[y * kBlockSize + x] = red.plane(r, c);
      obs.source[y * kBlockSize + x] = static_cast<std::uint8_t>(sr * kBlockSize + sc);
    }
  }
  return obs;
}

}  // namespace

TamperMap verify(const RgbImage& image, const WatermarkKey& key, Strategy strategy, double tolerance,
                 DeviationModel model) {
  if (image.height() < kBlockSize || image.width() < kBlockSize) {
    throw std::invalid_argument("verify: image must be at least 8x8");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("verify: tolerance must be > 0");

  const auto [red, green, blue] = split_channels(image);
  const PaddedPlane red_padded = pad_to_block_multiple(red);
  const CipheredPlane ciphered = encrypt_plane(pad_to_block_multiple(blue), key);
  const CoeffGrid cipher_grid = forward_blockwise(ciphered.bytes);
  const CoeffPos pos = position(strategy);
  const Block8 basis = basis_image(pos);

  TamperMap map;
  map.block_rows = cipher_grid.block_rows;
  map.block_cols = cipher_grid.block_cols;
  map.image_rows = image.height();
  map.image_cols = image.width();
  map.strategy = strategy;
  map.model = model;
  map.tolerance = tolerance;
  map.checks.resize(map.block_rows * map.block_cols);

  for (std::size_t br = 0; br < map.block_rows; ++br) {
    for (std::size_t bc = 0; bc < map.block_cols; ++bc) {
      BlockCheck& check = map.checks[br * map.block_cols + bc];
      check.expected = cipher_grid.at(br, bc)[pos];
      check.observed = dct2_block(extract_block(red_padded.plane, br, bc))[pos];
      if (model == DeviationModel::Direct) {
        check.deviation = std::abs(check.observed - check.expected);
      } else {
        check.deviation = consistency_deviation(observe_block(red_padded, br, bc), basis, check.expected);
      }
      check.flagged = check.deviation > tolerance;
    }
  }
  return map;
}

TamperMap verify(const RgbImage& image, std::string_view device_id, Strategy strategy,
                 double tolerance, DeviationModel model) {
  return verify(image, derive_key(device_id), strategy, tolerance, model);
}

bool PixelBox::intersects(const PixelBox& o) const {
  return row_first <= o.row_last && o.row_first <= row_last && col_first <= o.col_last &&
         o.col_first <= col_last;
}

Verdict summarize(const TamperMap& map) {
  Verdict v;
  for (std::size_t br = 0; br < map.block_rows; ++br) {
    for (std::size_t bc = 0; bc < map.block_cols; ++bc) {
      if (!map.at(br, bc).flagged) continue;
      v.flagged_blocks.push_back({br, bc});
      v.boxes.push_back({br * kBlockSize + 1, std::min((br + 1) * kBlockSize, map.image_rows),
                         bc * kBlockSize + 1, std::min((bc + 1) * kBlockSize, map.image_cols)});
    }
  }
  v.flagged_count = v.flagged_blocks.size();
  v.tampered = v.flagged_count > 0;
  return v;
}

double calibrate_tolerance(std::span<const RgbImage> corpus, std::string_view device_id,
                           Strategy strategy, DeviationModel model) {
  if (corpus.empty()) throw std::invalid_argument("calibrate_tolerance: empty corpus");
  const WatermarkKey key = derive_key(device_id);
  constexpr double kUnbounded = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const RgbImage& image : corpus) {
    const WatermarkedImage marked = embed(image, key, strategy);
    worst = std::max(worst, verify(marked.image, key, strategy, kUnbounded, model).max_deviation());
  }
  return std::max(kToleranceFloor, 2.0 * worst);
}

double default_tolerance(Strategy strategy, DeviationModel model) {
  // Mirrors config/calibration.json; a test re-runs the calibration.
  if (model == DeviationModel::Consistency) return kToleranceFloor;
  switch (strategy) {
    case Strategy::DC: return 8.0;
    case Strategy::FAC: return 460.211591494523;
    case Strategy::MAC: return 394.10505204824346;
    case Strategy::LAC: return 306.23338163056417;
  }
  throw std::invalid_argument("bad strategy");
}

}  // namespace oic
