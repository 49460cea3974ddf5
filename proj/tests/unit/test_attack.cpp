#include <random>
#include <set>

#include "doctest.h"
#include "oicmark/attack.hpp"
#include "support.hpp"

using namespace oic;

namespace {

std::size_t changed_samples(const RgbImage& a, const RgbImage& b, Channel ch) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.channel(ch).size(); ++i) n += a.channel(ch).samples()[i] != b.channel(ch).samples()[i];
  return n;
}

}  // namespace

TEST_SUITE("attack") {
  TEST_CASE("fig10a fills a 4x4 blue patch with 255") {
    std::mt19937_64 rng(70);
    const auto img = testing::random_image(rng, 300, 400, 0, 200);
    const auto out = apply_attack(img, find_preset("fig10a").spec);
    CHECK(changed_samples(img, out, Channel::Blue) == 16);
    CHECK(out.red() == img.red());
    CHECK(out.green() == img.green());
    for (std::size_t r = 237; r <= 240; ++r) {
      for (std::size_t c = 299; c <= 302; ++c) CHECK(out.blue()(r, c) == 255);
    }
  }

  TEST_CASE("fig11a copies green into blue") {
    std::mt19937_64 rng(71);
    const auto img = testing::random_image(rng, 200, 250);
    const auto out = apply_attack(img, find_preset("fig11a").spec);
    for (std::size_t r = 0; r < 200; ++r) {
      for (std::size_t c = 0; c < 250; ++c) {
        const bool inside = r >= 137 && r <= 140 && c >= 199 && c <= 202;
        CHECK(out.blue()(r, c) == (inside ? img.green()(r, c) : img.blue()(r, c)));
      }
    }
  }

  TEST_CASE("fill with the existing value is a no-op") {
    RgbImage img(Plane(300, 320, 7), Plane(300, 320, 9), Plane(300, 320, 255));
    CHECK(apply_attack(img, find_preset("fig10a").spec) == img);
  }

  TEST_CASE("catalog") {
    const auto presets = attack_presets();
    CHECK(presets.size() == 10);
    std::set<std::string> distinct;
    for (const auto& p : presets) {
      CHECK_NOTHROW(validate(p.spec, 480, 640));
      distinct.insert(attack_spec_to_json(p.spec));
    }
    CHECK(distinct.size() == 7);
    const auto& f12a = find_preset("fig12a").spec;
    CHECK(f12a.target == Channel::Red);
    CHECK(std::get<ConstantFill>(f12a.mode).value == 0);
    CHECK(find_preset("fig12b").spec.row_first == f12a.row_first);
    CHECK_THROWS_AS(find_preset("fig14"), std::invalid_argument);
  }

  TEST_CASE("validation") {
    AttackSpec s{Channel::Blue, 1, 4, 1, 4, ConstantFill{1}};
    CHECK_NOTHROW(validate(s, 4, 4));
    CHECK_THROWS_AS(validate(s, 3, 4), std::invalid_argument);
    s.row_first = 0;
    CHECK_THROWS_AS(validate(s, 4, 4), std::invalid_argument);
    s = {Channel::Blue, 3, 2, 1, 1, ConstantFill{1}};
    CHECK_THROWS_AS(validate(s, 4, 4), std::invalid_argument);
    s = {Channel::Blue, 1, 1, 1, 1, CopyChannel{Channel::Blue}};
    CHECK_THROWS_AS(validate(s, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(apply_attack(RgbImage(100, 100), find_preset("fig9a").spec), std::invalid_argument);
  }

  TEST_CASE("clip_to_bounds") {
    const auto spec = find_preset("fig10a").spec;
    const auto clipped = clip_to_bounds(spec, 240, 302);
    REQUIRE(clipped);
    CHECK(clipped->row_first == 238);
    CHECK(clipped->row_last == 240);
    CHECK(clipped->col_last == 302);
    CHECK_FALSE(clip_to_bounds(spec, 237, 640));
    CHECK(*clip_to_bounds(spec, 480, 640) == spec);
  }

  TEST_CASE("json spec round trip and errors") {
    const auto spec = parse_attack_spec(R"({"channel":"blue","rows":[138,141],"cols":[200,203],"copy_from":"green"})");
    CHECK(spec == find_preset("fig11a").spec);
    CHECK(parse_attack_spec(attack_spec_to_json(find_preset("fig12b").spec)) == find_preset("fig12b").spec);
    CHECK_THROWS_AS(parse_attack_spec("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_attack_spec(R"({"channel":"red","rows":[1,2],"cols":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_attack_spec(R"({"channel":"red","rows":[1,2],"cols":[1,2],"fill":1,"copy_from":"blue"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_attack_spec(R"({"channel":"red","rows":[1],"cols":[1,2],"fill":1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_attack_spec(R"({"channel":"red","rows":[1,2],"cols":[1,2],"fill":300})"),
                    std::invalid_argument);
  }
}
