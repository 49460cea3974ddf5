#pragma once

#include <string>
#include <vector>

#include "oicmark/embed.hpp"
#include "oicmark/metrics.hpp"
#include "oicmark/verify.hpp"

namespace oic {

/// Sidecar written next to an embedded image (`<image>.oic.json`). Holds the
/// digest of the device ID, never the ID itself.
struct Manifest {
  std::string digest_hex;
  Strategy strategy = kDefaultStrategy;
  std::string tool_version;
  std::size_t width = 0;
  std::size_t height = 0;

  bool operator==(const Manifest&) const = default;
};

Manifest make_manifest(const WatermarkedImage& marked);
std::string manifest_to_json(const Manifest& m);
// Throws std::invalid_argument on malformed input.
Manifest manifest_from_json(const std::string& text);

// Non-finite numbers are written as the strings "inf" / "-inf".
std::string tamper_report_json(const TamperMap& map, const Verdict& verdict);
std::string quality_report_json(const QualityReport& q);

struct StrategyQuality {
  Strategy strategy;
  QualityReport quality;
};

// Embeds with every strategy and scores each result against the input.
std::vector<StrategyQuality> quality_sweep(const RgbImage& image, const WatermarkKey& key);
std::string quality_sweep_json(const std::vector<StrategyQuality>& rows);
// Metric per row, strategy per column.
std::string render_sweep_table(const std::vector<StrategyQuality>& rows);

}  // namespace oic
