#pragma once

#include <filesystem>

#include "oicmark/image.hpp"

namespace oic {

// Decodes PNG, BMP or JPEG into 8-bit RGB. Alpha is dropped and grayscale
// inputs are expanded to three equal channels. Throws std::runtime_error.
RgbImage load_image(const std::filesystem::path& path);

// Always writes lossless PNG regardless of the extension.
void save_png(const std::filesystem::path& path, const RgbImage& image);

}  // namespace oic
