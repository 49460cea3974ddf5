#include "oicmark/attack.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

#include "json.hpp"

namespace oic {

void validate(const AttackSpec& spec, std::size_t height, std::size_t width) {
  if (spec.row_first < 1 || spec.col_first < 1) {
    throw std::invalid_argument("attack: coordinates are 1-based");
  }
  if (spec.row_first > spec.row_last || spec.col_first > spec.col_last) {
    throw std::invalid_argument("attack: range start exceeds range end");
  }
  if (spec.row_last > height || spec.col_last > width) {
    throw std::invalid_argument("attack: region rows " + std::to_string(spec.row_first) + ":" +
                                std::to_string(spec.row_last) + " cols " +
                                std::to_string(spec.col_first) + ":" +
                                std::to_string(spec.col_last) + " outside " +
                                std::to_string(height) + "x" + std::to_string(width) + " image");
  }
  if (const auto* copy = std::get_if<CopyChannel>(&spec.mode); copy && copy->source == spec.target) {
    throw std::invalid_argument("attack: copy source equals target channel");
  }
}

RgbImage apply_attack(const RgbImage& image, const AttackSpec& spec) {
  validate(spec, image.height(), image.width());
  RgbImage out = image;
  Plane& target = out.channel(spec.target);
  for (std::size_t r = spec.row_first - 1; r < spec.row_last; ++r) {
    for (std::size_t c = spec.col_first - 1; c < spec.col_last; ++c) {
      if (const auto* fill = std::get_if<ConstantFill>(&spec.mode)) {
        target(r, c) = fill->value;
      } else {
        target(r, c) = image.channel(std::get<CopyChannel>(spec.mode).source)(r, c);
      }
    }
  }
  return out;
}

std::optional<AttackSpec> clip_to_bounds(const AttackSpec& spec, std::size_t height,
                                         std::size_t width) {
  if (spec.row_first > height || spec.col_first > width) return std::nullopt;
  AttackSpec out = spec;
  out.row_last = std::min(spec.row_last, height);
  out.col_last = std::min(spec.col_last, width);
  return out;
}

namespace {

constexpr AttackSpec region(Channel target, std::size_t r1, std::size_t r2, std::size_t c1,
                            std::size_t c2, std::variant<ConstantFill, CopyChannel> mode) {
  return {target, r1, r2, c1, c2, mode};
}

const std::array<AttackPreset, 10> kPresets = {{
    {"fig9a", "red := blue, rows 238-241, cols 300-303",
     region(Channel::Red, 238, 241, 300, 303, CopyChannel{Channel::Blue})},
    {"fig9b", "red := blue, rows 238-241, cols 300-303",
     region(Channel::Red, 238, 241, 300, 303, CopyChannel{Channel::Blue})},
    {"fig10a", "blue := 255, rows 238-241, cols 300-303",
     region(Channel::Blue, 238, 241, 300, 303, ConstantFill{255})},
    {"fig10b", "blue := green, rows 238-241, cols 300-303",
     region(Channel::Blue, 238, 241, 300, 303, CopyChannel{Channel::Green})},
    {"fig11a", "blue := green, rows 138-141, cols 200-203",
     region(Channel::Blue, 138, 141, 200, 203, CopyChannel{Channel::Green})},
    {"fig11b", "red := blue, rows 238-241, cols 300-303",
     region(Channel::Red, 238, 241, 300, 303, CopyChannel{Channel::Blue})},
    {"fig12a", "red := 0, rows 238-241, cols 300-303",
     region(Channel::Red, 238, 241, 300, 303, ConstantFill{0})},
    {"fig12b", "red := 255, rows 238-241, cols 300-303",
     region(Channel::Red, 238, 241, 300, 303, ConstantFill{255})},
    {"fig13a", "blue := green, rows 138-141, cols 200-203",
     region(Channel::Blue, 138, 141, 200, 203, CopyChannel{Channel::Green})},
    {"fig13b", "blue := 255, rows 238-241, cols 200-203",
     region(Channel::Blue, 238, 241, 200, 203, ConstantFill{255})},
}};

std::pair<std::size_t, std::size_t> read_range(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2) {
    throw std::invalid_argument(std::string("attack spec: '") + key + "' must be [first, last]");
  }
  return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

}  // namespace

std::span<const AttackPreset> attack_presets() { return kPresets; }

const AttackPreset& find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown attack preset '" + std::string(name) + "'");
}

AttackSpec parse_attack_spec(std::string_view json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    AttackSpec spec;
    spec.target = parse_channel(j.at("channel").get<std::string>());
    std::tie(spec.row_first, spec.row_last) = read_range(j, "rows");
    std::tie(spec.col_first, spec.col_last) = read_range(j, "cols");
    const bool has_fill = j.contains("fill");
    if (has_fill == j.contains("copy_from")) {
      throw std::invalid_argument("attack spec: give exactly one of 'fill' and 'copy_from'");
    }
    if (has_fill) {
      const int v = j.at("fill").get<int>();
      if (v < 0 || v > 255) throw std::invalid_argument("attack spec: fill must be in [0, 255]");
      spec.mode = ConstantFill{static_cast<std::uint8_t>(v)};
    } else {
      spec.mode = CopyChannel{parse_channel(j.at("copy_from").get<std::string>())};
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("attack spec: ") + e.what());
  }
}

std::string attack_spec_to_json(const AttackSpec& spec) {
  nlohmann::json j;
  j["channel"] = std::string(channel_name(spec.target));
  j["rows"] = {spec.row_first, spec.row_last};
  j["cols"] = {spec.col_first, spec.col_last};
  if (const auto* fill = std::get_if<ConstantFill>(&spec.mode)) {
    j["fill"] = fill->value;
  } else {
    j["copy_from"] = std::string(channel_name(std::get<CopyChannel>(spec.mode).source));
  }
  return j.dump();
}

}  // namespace oic
