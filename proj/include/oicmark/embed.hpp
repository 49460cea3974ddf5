#pragma once

#include <array>
#include <string>
#include <string_view>

#include "oicmark/dct.hpp"
#include "oicmark/image.hpp"
#include "oicmark/key.hpp"

namespace oic {

/// Which single coefficient of every 8x8 block carries the watermark.
enum class Strategy {
  DC,   // (1,1)
  FAC,  // (1,2) first AC
  MAC,  // (3,6) middle AC, the default
  LAC,  // (8,8) last AC
};

inline constexpr Strategy kDefaultStrategy = Strategy::MAC;
inline constexpr std::array<Strategy, 4> kAllStrategies = {Strategy::DC, Strategy::FAC,
                                                           Strategy::MAC, Strategy::LAC};

CoeffPos position(Strategy s);
std::string_view strategy_name(Strategy s);  // "dc", "fac", "mac", "lac"
Strategy parse_strategy(std::string_view name);  // case-insensitive

CoeffBlock substitute_coefficient(const CoeffBlock& red_block, const CoeffBlock& cipher_block,
                                  Strategy strategy);

// Round half away from zero, then clamp to [0, 255].
std::uint8_t round_clamp(double value);
Plane round_clamp(const RealPlane& plane);

struct WatermarkedImage {
  RgbImage image;
  Strategy strategy = kDefaultStrategy;
  std::string digest_hex;  // device fingerprint, for the manifest
};

/// Embeds the key-derived code into the red channel. Green and blue pass
/// through untouched and the output keeps the input dimensions.
WatermarkedImage embed(const RgbImage& image, const WatermarkKey& key, Strategy strategy);
WatermarkedImage embed(const RgbImage& image, std::string_view device_id, Strategy strategy);

}  // namespace oic
