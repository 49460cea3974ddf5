#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "oicmark/image.hpp"
#include "oicmark/image_io.hpp"

namespace testing {

inline oic::Plane random_plane(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = 0,
                               int hi = 255) {
  std::uniform_int_distribution<int> d(lo, hi);
  oic::Plane p(rows, cols);
  for (auto& v : p.samples()) v = static_cast<std::uint8_t>(d(rng));
  return p;
}

inline oic::RgbImage random_image(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = 0,
                                  int hi = 255) {
  return {random_plane(rng, rows, cols, lo, hi), random_plane(rng, rows, cols, lo, hi),
          random_plane(rng, rows, cols, lo, hi)};
}

// Smooth content with mild noise, a stand-in for natural images whose red
// channel stays clear of 0 and 255.
inline oic::RgbImage smooth_image(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  std::normal_distribution<double> noise(0.0, 3.0);
  const double pr = phase(rng), pg = phase(rng), pb = phase(rng);
  oic::RgbImage img(rows, cols);
  auto put = [&](oic::Channel ch, double base, double amp, double ph) {
    oic::Plane& p = img.channel(ch);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const double v = base + amp * std::sin(0.05 * r + 0.03 * c + ph) + noise(rng);
        p(r, c) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
  };
  put(oic::Channel::Red, 128, 60, pr);
  put(oic::Channel::Green, 110, 70, pg);
  put(oic::Channel::Blue, 120, 80, pb);
  return img;
}

inline std::filesystem::path corpus_dir() { return OICMARK_CORPUS_DIR; }

inline std::vector<std::filesystem::path> corpus_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir())) {
    if (e.path().extension() == ".png") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oic::RgbImage> load_corpus() {
  std::vector<oic::RgbImage> out;
  for (const auto& p : corpus_paths()) out.push_back(oic::load_image(p));
  return out;
}

inline const char* kCorpusId = "scanner-01";

}  // namespace testing
