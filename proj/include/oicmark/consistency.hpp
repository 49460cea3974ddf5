#pragma once

#include <array>
#include <cstdint>

#include "oicmark/dct.hpp"

namespace oic {

/// A received 8x8 red block as the verifier sees it after re-padding.
///
/// `source[i] == i` marks a sample inside the image. Samples in the padded
/// margin were edge replicated from an in-image sample of the same block at
/// embed time; `source[i]` is that sample's index.
struct BlockObservation {
  std::array<std::uint8_t, 64> samples{};
  std::array<std::uint8_t, 64> source{};

  static BlockObservation fully_known(const std::array<std::uint8_t, 64>& samples);
};

/// Distance from `expected` to the set of values the coefficient `basis`
/// could have held before the block was rounded and clamped to 8 bits.
///
/// The embedder produced real samples X = R + s*basis with R the original red
/// block (every sample in [0, 255], margin samples equal to their source) and
/// then stored round-half-away, clamp(X). Each stored sample therefore pins
/// X to a half-unit interval, or to a half-line for 0 and 255. The result is
///
///   min over s, X consistent with the observation of |<X, basis> - expected|
///
/// which is exactly 0 for an untampered block and never exceeds
/// |<observed, basis> - expected| (s = 0, X = observed is always admissible).
/// <X, basis> is convex/concave piecewise linear in s, so the minimum is found
/// by scanning the breakpoints plus a root check on the neighbouring segments.
double consistency_deviation(const BlockObservation& obs, const Block8& basis, double expected);

}  // namespace oic
