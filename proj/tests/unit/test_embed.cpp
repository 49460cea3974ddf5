#include <cmath>
#include <random>

#include "doctest.h"
#include "oicmark/embed.hpp"
#include "oicmark/metrics.hpp"
#include "support.hpp"

using namespace oic;

TEST_SUITE("embed") {
  TEST_CASE("substitution replaces exactly one coefficient") {
    CoeffBlock red, cipher;
    red.values.fill(5.0);
    cipher.values.fill(9.0);
    const auto out = substitute_coefficient(red, cipher, Strategy::MAC);
    for (std::size_t i = 0; i < 64; ++i) CHECK(out.values[i] == (i == CoeffPos{3, 6}.index() ? 9.0 : 5.0));
    CHECK(substitute_coefficient(red, red, Strategy::LAC) == red);

    const auto dc = substitute_coefficient(red, cipher, Strategy::DC);
    CHECK(dc.values[0] == 9.0);
    CHECK(dc.values[1] == 5.0);
  }

  TEST_CASE("strategy positions and names") {
    CHECK(position(Strategy::DC) == CoeffPos{1, 1});
    CHECK(position(Strategy::FAC) == CoeffPos{1, 2});
    CHECK(position(Strategy::MAC) == CoeffPos{3, 6});
    CHECK(position(Strategy::LAC) == CoeffPos{8, 8});
    CHECK(parse_strategy("MAC") == Strategy::MAC);
    CHECK(parse_strategy("lac") == Strategy::LAC);
    CHECK_THROWS_AS(parse_strategy("hac"), std::invalid_argument);
    CHECK(kDefaultStrategy == Strategy::MAC);
  }

  TEST_CASE("round_clamp") {
    CHECK(round_clamp(127.5) == 128);
    CHECK(round_clamp(126.5) == 127);
    CHECK(round_clamp(128.0) == 128);
    CHECK(round_clamp(-3.2) == 0);
    CHECK(round_clamp(-0.4) == 0);
    CHECK(round_clamp(260.0) == 255);
    CHECK(round_clamp(254.5) == 255);
  }

  TEST_CASE("green and blue pass through, dimensions kept") {
    std::mt19937_64 rng(30);
    for (auto [h, w] : {std::pair{8, 8}, {13, 21}, {40, 33}}) {
      const auto img = testing::random_image(rng, h, w);
      for (Strategy s : kAllStrategies) {
        const auto out = embed(img, "dev", s);
        CHECK(out.image.height() == img.height());
        CHECK(out.image.width() == img.width());
        CHECK(out.image.green() == img.green());
        CHECK(out.image.blue() == img.blue());
        CHECK(out.strategy == s);
        CHECK(out.digest_hex == derive_key("dev").digest_hex);
      }
    }
  }

  TEST_CASE("embed is deterministic") {
    std::mt19937_64 rng(31);
    const auto img = testing::random_image(rng, 24, 40);
    CHECK(embed(img, "dev", Strategy::MAC).image == embed(img, "dev", Strategy::MAC).image);
  }

  TEST_CASE("512x512 MAC embed stays above 30 dB") {
    std::mt19937_64 rng(32);
    const auto img = testing::smooth_image(rng, 512, 512);
    CHECK(psnr(img, embed(img, "dev", Strategy::MAC).image) > 30.0);
  }

  TEST_CASE("without clipping the embedded coefficient is within rounding of the target") {
    // Mid-range red and no padding, so the only perturbation is rounding.
    std::mt19937_64 rng(33);
    RgbImage img = testing::random_image(rng, 32, 32);
    img.channel(Channel::Red) = testing::random_plane(rng, 32, 32, 100, 150);
    const auto key = derive_key("dev");
    const auto out = embed(img, key, Strategy::LAC);
    const auto target = forward_blockwise(encrypt_plane(pad_to_block_multiple(img.blue()), key).bytes);
    const auto got = forward_blockwise(out.image.red());
    double l1 = 0.0;
    for (double b : basis_image({8, 8})) l1 += std::abs(b);
    for (std::size_t i = 0; i < got.blocks.size(); ++i) {
      CHECK(std::abs(got.blocks[i][{8, 8}] - target.blocks[i][{8, 8}]) <= 0.5 * l1 + 1e-9);
    }
  }

  TEST_CASE("empty image is rejected") {
    CHECK_THROWS_AS(embed(RgbImage(), "dev", Strategy::MAC), std::invalid_argument);
    CHECK_THROWS_AS(embed(RgbImage(8, 8), "", Strategy::MAC), std::invalid_argument);
  }
}
