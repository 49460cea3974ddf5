#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oicmark/metrics.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace oic;

namespace {

RgbImage constant(std::size_t h, std::size_t w, std::uint8_t v) {
  return {Plane(h, w, v), Plane(h, w, v), Plane(h, w, v)};
}

RgbImage offset(const RgbImage& img, int delta) {
  RgbImage out = img;
  for (auto ch : {Channel::Red, Channel::Green, Channel::Blue}) {
    for (auto& v : out.channel(ch).samples()) v = static_cast<std::uint8_t>(v + delta);
  }
  return out;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("identical images") {
    std::mt19937_64 rng(60);
    const auto img = testing::random_image(rng, 20, 30);
    CHECK(mse(img, img) == 0.0);
    CHECK(mae(img, img) == 0.0);
    CHECK(std::isinf(psnr(img, img)));
    CHECK(psnr(img, img) > 0);
    CHECK(ssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(uiqi(img, img) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("constant differences") {
    std::mt19937_64 rng(61);
    const auto img = testing::random_image(rng, 10, 10, 0, 250);
    CHECK(mse(img, offset(img, 2)) == doctest::Approx(4.0));
    CHECK(mae(img, offset(img, 3)) == doctest::Approx(3.0));
  }

  TEST_CASE("psnr anchors") {
    CHECK(psnr(constant(4, 4, 0), constant(4, 4, 255)) == doctest::Approx(0.0));
    // 12 samples, six off by 25 and six by 26: mse = (6*625 + 6*676) / 12 = 650.5.
    RgbImage a = constant(2, 2, 100), b = constant(2, 2, 100);
    int k = 0;
    for (auto ch : {Channel::Red, Channel::Green, Channel::Blue}) {
      for (auto& v : b.channel(ch).samples()) v = static_cast<std::uint8_t>(100 + (k++ < 6 ? 25 : 26));
    }
    CHECK(mse(a, b) == doctest::Approx(650.5));
    CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(65025.0 / 650.5)));
  }

  TEST_CASE("ssim of black vs white") {
    const double c1 = 6.5025;
    CHECK(ssim(constant(8, 8, 0), constant(8, 8, 255)) == doctest::Approx(c1 / (255.0 * 255.0 + c1)));
  }

  TEST_CASE("uiqi is negative for an inverted image and undefined for a flat one") {
    std::mt19937_64 rng(62);
    const auto img = testing::random_image(rng, 16, 16);
    RgbImage inv = img;
    for (auto ch : {Channel::Red, Channel::Green, Channel::Blue}) {
      for (auto& v : inv.channel(ch).samples()) v = static_cast<std::uint8_t>(255 - v);
    }
    CHECK(uiqi(img, inv) < 0.0);
    CHECK(uiqi(img, inv) == doctest::Approx(oracle::uiqi(img, inv)).epsilon(1e-9));
    CHECK_THROWS_AS(uiqi(constant(16, 16, 3), img), std::domain_error);
    CHECK_FALSE(compare(constant(8, 8, 3), constant(8, 8, 4)).uiqi.has_value());
  }

  TEST_CASE("entropy anchors") {
    CHECK(entropy(constant(5, 5, 42)) == 0.0);
    RgbImage two = constant(2, 2, 0);
    for (auto ch : {Channel::Red, Channel::Green, Channel::Blue}) two.channel(ch)(0, 0) = two.channel(ch)(1, 1) = 200;
    CHECK(entropy(two) == doctest::Approx(1.0));
    RgbImage ramp(16, 16);
    for (std::size_t i = 0; i < 256; ++i) {
      for (auto ch : {Channel::Red, Channel::Green, Channel::Blue}) ramp.channel(ch).samples()[i] = static_cast<std::uint8_t>(i);
    }
    CHECK(entropy(ramp) == doctest::Approx(8.0));
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(mse(RgbImage(4, 4), RgbImage(4, 5)), std::invalid_argument);
    CHECK_THROWS_AS(ssim(RgbImage(4, 4), RgbImage(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS(entropy(RgbImage()), std::invalid_argument);
  }

  TEST_CASE("luma rounding") {
    RgbImage px(Plane(1, 1, 1), Plane(1, 1, 1), Plane(1, 1, 1));
    CHECK(luma(px)(0, 0) == 1);
    RgbImage white = constant(1, 1, 255);
    CHECK(luma(white)(0, 0) == 255);
  }

  TEST_CASE("all metrics match the brute-force oracle on random pairs") {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 20; ++t) {
      const auto a = testing::random_image(rng, 17 + t, 23 + 2 * t);
      auto b = testing::random_image(rng, 17 + t, 23 + 2 * t);
      if (t % 2) b = testing::smooth_image(rng, 17 + t, 23 + 2 * t);
      CHECK(oracle::rel_err(mse(a, b), oracle::mse(a, b)) < 1e-9);
      CHECK(oracle::rel_err(mae(a, b), oracle::mae(a, b)) < 1e-9);
      CHECK(oracle::rel_err(psnr(a, b), oracle::psnr(a, b)) < 1e-9);
      CHECK(oracle::rel_err(uiqi(a, b), oracle::uiqi(a, b)) < 1e-9);
      CHECK(oracle::rel_err(ssim(a, b), oracle::ssim(a, b)) < 1e-9);
      CHECK(oracle::rel_err(entropy(a), oracle::entropy(a)) < 1e-9);
    }
  }
}
