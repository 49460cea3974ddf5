#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "oicmark/embed.hpp"
#include "oicmark/image.hpp"
#include "oicmark/key.hpp"

namespace oic {

/// How a block's deviation is scored.
///
/// Direct is |observed - expected| on the received red block. Consistency is
/// the distance from `expected` to the coefficients the block could have held
/// before rounding and clamping (see consistency.hpp); it is 0 on untouched
/// blocks and never larger than Direct.
enum class DeviationModel { Consistency, Direct };

inline constexpr DeviationModel kDefaultModel = DeviationModel::Consistency;
inline constexpr double kToleranceFloor = 0.5;

std::string_view model_name(DeviationModel m);  // "consistency", "direct"
DeviationModel parse_model(std::string_view name);

struct BlockCheck {
  double observed = 0.0;   // red coefficient at the strategy position
  double expected = 0.0;   // ciphered blue coefficient at the same position
  double deviation = 0.0;  // per DeviationModel, >= 0
  bool flagged = false;    // deviation > tolerance
};

struct TamperMap {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::size_t image_rows = 0;
  std::size_t image_cols = 0;
  Strategy strategy = kDefaultStrategy;
  DeviationModel model = kDefaultModel;
  double tolerance = 0.0;
  std::vector<BlockCheck> checks;  // row-major over blocks

  const BlockCheck& at(std::size_t br, std::size_t bc) const { return checks[br * block_cols + bc]; }
  std::size_t flagged_count() const;
  double max_deviation() const;
};

/// Recomputes the expected coefficient of every block from the received blue
/// plane and compares it with the received red block.
///
/// Requires an image of at least 8x8 and tolerance > 0 (+inf is allowed and
/// flags nothing). Throws std::invalid_argument otherwise.
TamperMap verify(const RgbImage& image, const WatermarkKey& key, Strategy strategy, double tolerance,
                 DeviationModel model = kDefaultModel);
TamperMap verify(const RgbImage& image, std::string_view device_id, Strategy strategy,
                 double tolerance, DeviationModel model = kDefaultModel);

struct BlockIndex {
  std::size_t row = 0;  // 0-based block coordinates
  std::size_t col = 0;
  bool operator==(const BlockIndex&) const = default;
};

// 1-based inclusive pixel rectangle.
struct PixelBox {
  std::size_t row_first = 0;
  std::size_t row_last = 0;
  std::size_t col_first = 0;
  std::size_t col_last = 0;

  bool intersects(const PixelBox& other) const;
  bool operator==(const PixelBox&) const = default;
};

struct Verdict {
  bool tampered = false;
  std::size_t flagged_count = 0;
  std::vector<BlockIndex> flagged_blocks;
  std::vector<PixelBox> boxes;  // one per flagged block, clipped to the image
};

Verdict summarize(const TamperMap& map);

/// 2x the largest clean round-trip deviation over the corpus, never below
/// kToleranceFloor. Throws std::invalid_argument for an empty corpus.
double calibrate_tolerance(std::span<const RgbImage> corpus, std::string_view device_id,
                           Strategy strategy, DeviationModel model = kDefaultModel);

/// Frozen output of calibrate_tolerance on the bundled corpus.
double default_tolerance(Strategy strategy, DeviationModel model = kDefaultModel);

}  // namespace oic
