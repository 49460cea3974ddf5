#include "oicmark/image_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <fstream>
#include <stdexcept>
#include <vector>

namespace oic {

RgbImage load_image(const std::filesystem::path& path) {
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) {
    throw std::runtime_error("cannot decode image '" + path.string() + "'");
  }
  if (bgr.depth() != CV_8U) {
    throw std::runtime_error("'" + path.string() + "' is not an 8-bit image");
  }
  const auto rows = static_cast<std::size_t>(bgr.rows);
  const auto cols = static_cast<std::size_t>(bgr.cols);
  RgbImage img(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto* px = bgr.ptr<cv::Vec3b>(static_cast<int>(r));
    for (std::size_t c = 0; c < cols; ++c) {
      img.channel(Channel::Blue)(r, c) = px[c][0];
      img.channel(Channel::Green)(r, c) = px[c][1];
      img.channel(Channel::Red)(r, c) = px[c][2];
    }
  }
  return img;
}

void save_png(const std::filesystem::path& path, const RgbImage& image) {
  if (image.empty()) throw std::invalid_argument("save_png: empty image");
  cv::Mat bgr(static_cast<int>(image.height()), static_cast<int>(image.width()), CV_8UC3);
  for (std::size_t r = 0; r < image.height(); ++r) {
    auto* px = bgr.ptr<cv::Vec3b>(static_cast<int>(r));
    for (std::size_t c = 0; c < image.width(); ++c) {
      px[c] = cv::Vec3b(image.blue()(r, c), image.green()(r, c), image.red()(r, c));
    }
  }
  std::vector<uchar> buf;
  if (!cv::imencode(".png", bgr, buf)) {
    throw std::runtime_error("PNG encoding failed for '" + path.string() + "'");
  }
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace oic
