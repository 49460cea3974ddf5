#include "oicmark/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oic {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroBasis = 1e-14;

// One in-image sample: its basis value, the total basis weight of every
// sample that shares its value (itself plus its replicas in the margin), and
// the interval the pre-rounding value must lie in.
struct Term {
  double basis;
  double weight;
  double lo;
  double hi;
};

class CoefficientRange {
 public:
  CoefficientRange(std::vector<Term> terms, double margin_slope)
      : terms_(std::move(terms)), margin_slope_(margin_slope) {}

  // [L(s), H(s)]: extremes of <X, basis> over admissible X for a given s.
  std::pair<double, double> at(double s) const {
    double lo_sum = margin_slope_ * s;
    double hi_sum = lo_sum;
    for (const Term& t : terms_) {
      const double lo = std::max(t.lo, s * t.basis);
      const double hi = std::min(t.hi, 255.0 + s * t.basis);
      if (t.weight >= 0.0) {
        lo_sum += t.weight * lo;
        hi_sum += t.weight * hi;
      } else {
        lo_sum += t.weight * hi;
        hi_sum += t.weight * lo;
      }
    }
    return {lo_sum, hi_sum};
  }

  double gap(double s, double expected) const {
    const auto [lo, hi] = at(s);
    return std::max({0.0, lo - expected, expected - hi});
  }

 private:
  std::vector<Term> terms_;
  double margin_slope_;
};

}  // namespace

BlockObservation BlockObservation::fully_known(const std::array<std::uint8_t, 64>& samples) {
  BlockObservation obs;
  obs.samples = samples;
  for (std::size_t i = 0; i < 64; ++i) obs.source[i] = static_cast<std::uint8_t>(i);
  return obs;
}

double consistency_deviation(const BlockObservation& obs, const Block8& basis, double expected) {
  std::array<double, 64> weight{};
  double margin_slope = 0.0;
  double basis_l1 = 0.0;
  for (std::size_t i = 0; i < 64; ++i) {
    const std::size_t src = obs.source[i];
    if (src >= 64 || obs.source[src] != src) {
      throw std::invalid_argument("consistency_deviation: replica source is not an in-image sample");
    }
    weight[src] += basis[i];
    if (src != i) margin_slope += (basis[i] - basis[src]) * basis[i];
    basis_l1 += std::abs(basis[i]);
  }

  // s = expected - <R, basis> is bounded because R lies in [0, 255].
  const double s_bound = std::abs(expected) + 255.0 * basis_l1 + 1.0;
  double s_min = -s_bound;
  double s_max = s_bound;

  std::vector<Term> terms;
  std::vector<double> breaks = {0.0};
  terms.reserve(64);
  breaks.reserve(130);
  for (std::size_t i = 0; i < 64; ++i) {
    if (obs.source[i] != i) continue;
    const std::uint8_t y = obs.samples[i];
    const double lo = y == 0 ? -kInf : y - 0.5;
    const double hi = y == 255 ? kInf : y + 0.5;
    const double b = std::abs(basis[i]) < kZeroBasis ? 0.0 : basis[i];
    terms.push_back({b, weight[i], lo, hi});
    if (b == 0.0) continue;
    // Admissible s: lo <= 255 + s*b and s*b <= hi.
    const double a1 = (lo - 255.0) / b;
    const double a2 = hi / b;
    if (b > 0) {
      s_min = std::max(s_min, a1);
      s_max = std::min(s_max, a2);
    } else {
      s_min = std::max(s_min, a2);
      s_max = std::min(s_max, a1);
    }
    if (std::isfinite(lo)) breaks.push_back(lo / b);
    if (std::isfinite(hi)) breaks.push_back((hi - 255.0) / b);
  }
  // s = 0 is always admissible; guard against rounding in the bounds above.
  s_min = std::min(s_min, 0.0);
  s_max = std::max(s_max, 0.0);

  breaks.push_back(s_min);
  breaks.push_back(s_max);
  std::erase_if(breaks, [&](double s) { return s < s_min || s > s_max; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const CoefficientRange range(std::move(terms), margin_slope);
  if (range.gap(0.0, expected) == 0.0) return 0.0;
  // The gap is convex in s, so a positive minimum sits on a breakpoint; a
  // zero may also lie inside a segment where one bound crosses `expected`.
  // Every breakpoint and segment is checked because near-duplicate
  // breakpoints make a search over the samples unreliable.
  std::vector<std::pair<double, double>> bounds(breaks.size());
  double result = kInf;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    bounds[k] = range.at(breaks[k]);
    const auto [l, h] = bounds[k];
    result = std::min(result, std::max({0.0, l - expected, expected - h}));
    if (result == 0.0) return 0.0;
  }
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const auto [la, ha] = bounds[k];
    const auto [lb, hb] = bounds[k + 1];
    for (auto [ya, yb] : {std::pair{la, lb}, std::pair{ha, hb}}) {
      if ((ya - expected) * (yb - expected) < 0.0) {
        const double s = breaks[k] + (expected - ya) / (yb - ya) * (breaks[k + 1] - breaks[k]);
        result = std::min(result, range.gap(s, expected));
      }
    }
  }
  return result;
}

}  // namespace oic
