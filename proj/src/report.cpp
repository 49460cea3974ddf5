#include "oicmark/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oic {
namespace {

using nlohmann::json;

constexpr const char* kManifestFormat = "oicmark-manifest/1";

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json quality_json(const QualityReport& q) {
  json j;
  j["mse"] = number(q.mse);
  j["mae"] = number(q.mae);
  j["psnr"] = number(q.psnr);
  j["uiqi"] = q.uiqi ? number(*q.uiqi) : json(nullptr);
  j["ssim"] = number(q.ssim);
  j["entropy"] = number(q.entropy);
  return j;
}

std::string format_cell(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

Manifest make_manifest(const WatermarkedImage& marked) {
  return {marked.digest_hex, marked.strategy, OICMARK_VERSION, marked.image.width(),
          marked.image.height()};
}

std::string manifest_to_json(const Manifest& m) {
  json j;
  j["format"] = kManifestFormat;
  j["digest"] = m.digest_hex;
  j["strategy"] = std::string(strategy_name(m.strategy));
  j["tool_version"] = m.tool_version;
  j["width"] = m.width;
  j["height"] = m.height;
  return j.dump(2) + "\n";
}

Manifest manifest_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kManifestFormat) {
      throw std::invalid_argument("manifest: unsupported format");
    }
    Manifest m;
    m.digest_hex = j.at("digest").get<std::string>();
    m.strategy = parse_strategy(j.at("strategy").get<std::string>());
    m.tool_version = j.at("tool_version").get<std::string>();
    m.width = j.at("width").get<std::size_t>();
    m.height = j.at("height").get<std::size_t>();
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("manifest: ") + e.what());
  }
}

std::string tamper_report_json(const TamperMap& map, const Verdict& verdict) {
  json j;
  j["tampered"] = verdict.tampered;
  j["flagged_count"] = verdict.flagged_count;
  j["block_count"] = map.checks.size();
  j["grid"] = {{"block_rows", map.block_rows}, {"block_cols", map.block_cols}};
  j["image"] = {{"height", map.image_rows}, {"width", map.image_cols}};
  j["strategy"] = std::string(strategy_name(map.strategy));
  const CoeffPos pos = position(map.strategy);
  j["coefficient"] = {pos.u, pos.v};
  j["model"] = std::string(model_name(map.model));
  j["tolerance"] = number(map.tolerance);
  j["max_deviation"] = number(map.max_deviation());
  // Green never feeds the watermark, so changes there go unnoticed.
  j["channels_covered"] = {"red", "blue"};
  json flagged = json::array();
  for (std::size_t i = 0; i < verdict.flagged_blocks.size(); ++i) {
    const BlockIndex& b = verdict.flagged_blocks[i];
    const PixelBox& box = verdict.boxes[i];
    const BlockCheck& c = map.at(b.row, b.col);
    flagged.push_back({{"block", {b.row + 1, b.col + 1}},
                       {"rows", {box.row_first, box.row_last}},
                       {"cols", {box.col_first, box.col_last}},
                       {"observed", number(c.observed)},
                       {"expected", number(c.expected)},
                       {"deviation", number(c.deviation)}});
  }
  j["flagged"] = std::move(flagged);
  return j.dump(2) + "\n";
}

std::string quality_report_json(const QualityReport& q) { return quality_json(q).dump(2) + "\n"; }

std::vector<StrategyQuality> quality_sweep(const RgbImage& image, const WatermarkKey& key) {
  std::vector<StrategyQuality> rows;
  for (Strategy s : kAllStrategies) rows.push_back({s, compare(image, embed(image, key, s).image)});
  return rows;
}

std::string quality_sweep_json(const std::vector<StrategyQuality>& rows) {
  json j = json::object();
  for (const auto& row : rows) j[std::string(strategy_name(row.strategy))] = quality_json(row.quality);
  return j.dump(2) + "\n";
}

std::string render_sweep_table(const std::vector<StrategyQuality>& rows) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s", "metric");
  out << buf;
  for (const auto& row : rows) {
    std::string label = std::string(strategy_name(row.strategy));
    for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::snprintf(buf, sizeof buf, " %12s", label.c_str());
    out << buf;
  }
  out << "\n";

  auto line = [&](const char* name, auto get) {
    std::snprintf(buf, sizeof buf, "%-8s", name);
    out << buf;
    for (const auto& row : rows) {
      const std::optional<double> v = get(row.quality);
      std::snprintf(buf, sizeof buf, " %12s", v ? format_cell(*v).c_str() : "n/a");
      out << buf;
    }
    out << "\n";
  };
  line("MSE", [](const QualityReport& q) { return std::optional(q.mse); });
  line("MAE", [](const QualityReport& q) { return std::optional(q.mae); });
  line("PSNR", [](const QualityReport& q) { return std::optional(q.psnr); });
  line("SSIM", [](const QualityReport& q) { return std::optional(q.ssim); });
  line("UIQI", [](const QualityReport& q) { return q.uiqi; });
  line("Entropy", [](const QualityReport& q) { return std::optional(q.entropy); });
  return out.str();
}

}  // namespace oic
