#include "oicmark/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oic {
namespace {

void check_pair(const RgbImage& a, const RgbImage& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("metrics: empty image");
  if (a.height() != b.height() || a.width() != b.width()) {
    throw std::invalid_argument("metrics: image dimensions differ");
  }
}

struct Moments {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  double cov = 0.0;
};

Moments luma_moments(const RgbImage& a, const RgbImage& b) {
  check_pair(a, b);
  const Plane la = luma(a);
  const Plane lb = luma(b);
  const auto xa = la.samples();
  const auto xb = lb.samples();
  const double n = static_cast<double>(xa.size());
  Moments m;
  for (std::size_t i = 0; i < xa.size(); ++i) {
    m.mean_a += xa[i];
    m.mean_b += xb[i];
  }
  m.mean_a /= n;
  m.mean_b /= n;
  for (std::size_t i = 0; i < xa.size(); ++i) {
    const double da = xa[i] - m.mean_a;
    const double db = xb[i] - m.mean_b;
    m.var_a += da * da;
    m.var_b += db * db;
    m.cov += da * db;
  }
  m.var_a /= n;
  m.var_b /= n;
  m.cov /= n;
  return m;
}

}  // namespace

Plane luma(const RgbImage& image) {
  Plane out(image.height(), image.width());
  const auto r = image.red().samples();
  const auto g = image.green().samples();
  const auto b = image.blue().samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const double y = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
    dst[i] = static_cast<std::uint8_t>(std::min(255.0, std::round(y)));
  }
  return out;
}

double mse(const RgbImage& a, const RgbImage& b) {
  check_pair(a, b);
  double sum = 0.0;
  for (Channel c : {Channel::Red, Channel::Green, Channel::Blue}) {
    const auto x = a.channel(c).samples();
    const auto y = b.channel(c).samples();
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = static_cast<double>(x[i]) - y[i];
      sum += d * d;
    }
  }
  return sum / (3.0 * static_cast<double>(a.red().size()));
}

double mae(const RgbImage& a, const RgbImage& b) {
  check_pair(a, b);
  double sum = 0.0;
  for (Channel c : {Channel::Red, Channel::Green, Channel::Blue}) {
    const auto x = a.channel(c).samples();
    const auto y = b.channel(c).samples();
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(static_cast<double>(x[i]) - y[i]);
  }
  return sum / (3.0 * static_cast<double>(a.red().size()));
}

double psnr(const RgbImage& a, const RgbImage& b) {
  const double e = mse(a, b);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

double uiqi(const RgbImage& a, const RgbImage& b) {
  const Moments m = luma_moments(a, b);
  if (m.var_a == 0.0 || m.var_b == 0.0) {
    throw std::domain_error("uiqi: undefined for a constant image");
  }
  const double sa = std::sqrt(m.var_a);
  const double sb = std::sqrt(m.var_b);
  const double correlation = m.cov / (sa * sb);
  const double luminance = 2.0 * m.mean_a * m.mean_b / (m.mean_a * m.mean_a + m.mean_b * m.mean_b);
  const double contrast = 2.0 * sa * sb / (m.var_a + m.var_b);
  return correlation * luminance * contrast;
}

double ssim(const RgbImage& a, const RgbImage& b) {
  constexpr double c1 = (0.01 * 255) * (0.01 * 255);
  constexpr double c2 = (0.03 * 255) * (0.03 * 255);
  const Moments m = luma_moments(a, b);
  return (2.0 * m.mean_a * m.mean_b + c1) * (2.0 * m.cov + c2) /
         ((m.mean_a * m.mean_a + m.mean_b * m.mean_b + c1) * (m.var_a + m.var_b + c2));
}

double entropy(const RgbImage& image) {
  if (image.empty()) throw std::invalid_argument("entropy: empty image");
  std::array<std::size_t, 256> hist{};
  const Plane y = luma(image);
  for (auto v : y.samples()) ++hist[v];
  const double n = static_cast<double>(y.size());
  double h = 0.0;
  for (auto count : hist) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h;
}

QualityReport compare(const RgbImage& reference, const RgbImage& test) {
  QualityReport r;
  r.mse = mse(reference, test);
  r.mae = mae(reference, test);
  r.psnr = psnr(reference, test);
  try {
    r.uiqi = uiqi(reference, test);
  } catch (const std::domain_error&) {
    r.uiqi.reset();
  }
  r.ssim = ssim(reference, test);
  r.entropy = entropy(test);
  return r;
}

}  // namespace oic
