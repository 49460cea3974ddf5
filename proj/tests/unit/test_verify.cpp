#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oicmark/attack.hpp"
#include "oicmark/embed.hpp"
#include "oicmark/verify.hpp"
#include "support.hpp"

using namespace oic;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("verify") {
  TEST_CASE("clean embed verifies clean for every strategy and odd sizes") {
    std::mt19937_64 rng(50);
    for (auto [h, w] : {std::pair{8, 8}, {9, 17}, {31, 45}, {64, 40}}) {
      const auto img = testing::random_image(rng, h, w);
      for (Strategy s : kAllStrategies) {
        const auto marked = embed(img, "dev", s);
        const auto map = verify(marked.image, "dev", s, kToleranceFloor);
        CHECK(map.flagged_count() == 0);
        CHECK(map.max_deviation() < 1e-9);
      }
    }
  }

  TEST_CASE("map shape and bookkeeping") {
    std::mt19937_64 rng(51);
    const auto img = embed(testing::random_image(rng, 20, 30), "dev", Strategy::FAC).image;
    const auto map = verify(img, "dev", Strategy::FAC, 0.5);
    CHECK(map.block_rows == 3);
    CHECK(map.block_cols == 4);
    CHECK(map.image_rows == 20);
    CHECK(map.image_cols == 30);
    CHECK(map.checks.size() == 12);
    CHECK(map.strategy == Strategy::FAC);
    CHECK(map.tolerance == 0.5);
  }

  TEST_CASE("direct model reports |observed - expected|") {
    std::mt19937_64 rng(52);
    const auto img = embed(testing::random_image(rng, 16, 24), "dev", Strategy::MAC).image;
    const auto map = verify(img, "dev", Strategy::MAC, 3.0, DeviationModel::Direct);
    for (const auto& c : map.checks) {
      CHECK(c.deviation == std::abs(c.observed - c.expected));
      CHECK(c.flagged == (c.deviation > 3.0));
    }
  }

  TEST_CASE("observed and expected agree between models") {
    std::mt19937_64 rng(53);
    const auto img = testing::random_image(rng, 24, 24);
    const auto a = verify(img, "dev", Strategy::DC, 1.0, DeviationModel::Direct);
    const auto b = verify(img, "dev", Strategy::DC, 1.0, DeviationModel::Consistency);
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].observed == b.checks[i].observed);
      CHECK(a.checks[i].expected == b.checks[i].expected);
      CHECK(b.checks[i].deviation <= a.checks[i].deviation + 1e-9);
    }
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(verify(RgbImage(7, 20), "dev", Strategy::MAC, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify(RgbImage(), "dev", Strategy::MAC, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify(RgbImage(8, 8), "dev", Strategy::MAC, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(verify(RgbImage(8, 8), "dev", Strategy::MAC, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify(RgbImage(8, 8), "dev", Strategy::MAC, std::nan("")), std::invalid_argument);
    CHECK(verify(RgbImage(8, 8), "dev", Strategy::MAC, kInf).flagged_count() == 0);
  }

  TEST_CASE("wrong device id flags most blocks") {
    std::mt19937_64 rng(54);
    const auto img = embed(testing::smooth_image(rng, 96, 128), "right", Strategy::MAC).image;
    const auto map = verify(img, "wrong", Strategy::MAC, kToleranceFloor);
    CHECK(double(map.flagged_count()) / double(map.checks.size()) > 0.9);
  }

  TEST_CASE("fig9 style red overwrite is caught near the region") {
    std::mt19937_64 rng(55);
    const auto marked = embed(testing::smooth_image(rng, 320, 400), "dev", Strategy::MAC).image;
    const auto attacked = apply_attack(marked, find_preset("fig9a").spec);
    const auto v = summarize(verify(attacked, "dev", Strategy::MAC, kToleranceFloor));
    REQUIRE(v.tampered);
    const PixelBox tiles{233, 248, 297, 312};
    for (const auto& box : v.boxes) CHECK(box.intersects(tiles));
  }

  TEST_CASE("summarize") {
    TamperMap map;
    map.block_rows = 3;
    map.block_cols = 4;
    map.image_rows = 20;
    map.image_cols = 30;
    map.checks.resize(12);
    auto v = summarize(map);
    CHECK_FALSE(v.tampered);
    CHECK(v.flagged_blocks.empty());
    CHECK(v.boxes.empty());

    map.checks[1 * 4 + 2].flagged = true;  // block (2,3) in 1-based terms
    v = summarize(map);
    CHECK(v.tampered);
    CHECK(v.flagged_count == 1);
    REQUIRE(v.boxes.size() == 1);
    CHECK(v.boxes[0] == PixelBox{9, 16, 17, 24});

    map.checks[1 * 4 + 3].flagged = true;  // adjacent, and clipped at the right edge
    map.checks[2 * 4 + 3].flagged = true;  // clipped on both axes
    v = summarize(map);
    REQUIRE(v.boxes.size() == 3);
    CHECK(v.boxes[1] == PixelBox{9, 16, 25, 30});
    CHECK(v.boxes[2] == PixelBox{17, 20, 25, 30});
  }

  TEST_CASE("pixel box intersection") {
    const PixelBox a{1, 8, 1, 8};
    CHECK(a.intersects({8, 9, 8, 9}));
    CHECK_FALSE(a.intersects({9, 16, 1, 8}));
    CHECK_FALSE(a.intersects({1, 8, 9, 16}));
  }

  TEST_CASE("calibration") {
    std::mt19937_64 rng(56);
    CHECK_THROWS_AS(calibrate_tolerance({}, "dev", Strategy::MAC), std::invalid_argument);

    std::vector<RgbImage> constant = {RgbImage(Plane(16, 16, 90), Plane(16, 16, 10), Plane(16, 16, 200)),
                                      RgbImage(Plane(9, 12, 0), Plane(9, 12, 0), Plane(9, 12, 0))};
    for (Strategy s : kAllStrategies) {
      CHECK(calibrate_tolerance(constant, "dev", s) == kToleranceFloor);
      const double direct = calibrate_tolerance(constant, "dev", s, DeviationModel::Direct);
      CHECK(std::isfinite(direct));
      CHECK(direct >= kToleranceFloor);
    }

    std::vector<RgbImage> noise = {testing::random_image(rng, 24, 40), testing::random_image(rng, 17, 19)};
    const double t = calibrate_tolerance(noise, "dev", Strategy::MAC, DeviationModel::Direct);
    CHECK(std::isfinite(t));
    CHECK(t > 0.0);
    CHECK(calibrate_tolerance(noise, "dev", Strategy::MAC, DeviationModel::Direct) == t);
  }

  TEST_CASE("model names") {
    CHECK(parse_model("Direct") == DeviationModel::Direct);
    CHECK(model_name(DeviationModel::Consistency) == "consistency");
    CHECK_THROWS_AS(parse_model("fuzzy"), std::invalid_argument);
  }
}
