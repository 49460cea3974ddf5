#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "oicmark/image.hpp"

namespace oic {

struct ConstantFill {
  std::uint8_t value = 0;
  bool operator==(const ConstantFill&) const = default;
};

struct CopyChannel {
  Channel source = Channel::Green;
  bool operator==(const CopyChannel&) const = default;
};

/// Overwrite of a rectangular region of one channel. Rows and columns are
/// 1-based and inclusive, so rows {238, 241} covers four pixel rows.
struct AttackSpec {
  Channel target = Channel::Red;
  std::size_t row_first = 1;
  std::size_t row_last = 1;
  std::size_t col_first = 1;
  std::size_t col_last = 1;
  std::variant<ConstantFill, CopyChannel> mode;

  bool operator==(const AttackSpec&) const = default;
};

// Throws std::invalid_argument when the region is empty, reversed, outside a
// height x width image, or a copy reads from its own target channel.
void validate(const AttackSpec& spec, std::size_t height, std::size_t width);

RgbImage apply_attack(const RgbImage& image, const AttackSpec& spec);

// The spec with its region intersected with the image, or nothing when they
// don't overlap.
std::optional<AttackSpec> clip_to_bounds(const AttackSpec& spec, std::size_t height,
                                         std::size_t width);

struct AttackPreset {
  std::string_view name;
  std::string_view description;
  AttackSpec spec;
};

std::span<const AttackPreset> attack_presets();
// Throws std::invalid_argument for an unknown name.
const AttackPreset& find_preset(std::string_view name);

// {"channel": "blue", "rows": [238, 241], "cols": [300, 303], "fill": 255}
// or the same with "copy_from": "green" in place of "fill".
AttackSpec parse_attack_spec(std::string_view json_text);
std::string attack_spec_to_json(const AttackSpec& spec);

}  // namespace oic
