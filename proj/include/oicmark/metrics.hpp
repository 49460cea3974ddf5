#pragma once

#include <optional>

#include "oicmark/image.hpp"

namespace oic {

// BT.601 luma, rounded half away from zero to 8 bits.
Plane luma(const RgbImage& image);

// Joint over all three channels. All throw std::invalid_argument on a
// dimension mismatch or empty input.
double mse(const RgbImage& a, const RgbImage& b);
double mae(const RgbImage& a, const RgbImage& b);
double psnr(const RgbImage& a, const RgbImage& b);  // +inf when mse == 0, peak 255

// Global statistics on luma, population moments.
// uiqi throws std::domain_error when either luma plane is constant.
double uiqi(const RgbImage& a, const RgbImage& b);
double ssim(const RgbImage& a, const RgbImage& b);

// Shannon entropy of the 256-bin luma histogram, bits per pixel.
double entropy(const RgbImage& image);

struct QualityReport {
  double mse = 0.0;
  double mae = 0.0;
  double psnr = 0.0;
  std::optional<double> uiqi;  // empty when undefined (constant luma)
  double ssim = 0.0;
  double entropy = 0.0;  // of the second image
};

QualityReport compare(const RgbImage& reference, const RgbImage& test);

}  // namespace oic
