#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pixshuffle/errors.hpp"
#include "pixshuffle/image.hpp"
#include "pixshuffle/keying.hpp"

namespace pixshuffle {

enum class Direction { horizontal = 0, vertical = 1, diagonal = 2 };

std::string_view to_string(Direction direction);

inline constexpr std::size_t kDefaultSeriesLength = 10000;

struct RgbSeries {
  std::vector<std::uint8_t> red;
  std::vector<std::uint8_t> green;
  std::vector<std::uint8_t> blue;

  std::size_t size() const noexcept { return red.size(); }
  friend bool operator==(const RgbSeries&, const RgbSeries&) = default;
};

/// First min(n, c*p) pixels in raster order, one sequence per channel.
/// Throws InvalidArgument if n == 0.
RgbSeries rgb_series(const ImageMatrix& img, std::size_t n = kDefaultSeriesLength);

/// Pearson coefficient of two equally long series, clamped to [-1, 1].
/// Symmetric in its arguments. Throws UndefinedCorrelation when fewer than two
/// pairs are given or either series has zero variance.
template <typename DerivedX, typename DerivedY>
double pearson(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y) {
  if (x.size() != y.size()) throw SizeMismatch("pearson: series lengths differ");
  if (x.size() < 2) throw UndefinedCorrelation("pearson: fewer than two pairs");
  const Eigen::ArrayXd xs = x.derived().template cast<double>().array();
  const Eigen::ArrayXd ys = y.derived().template cast<double>().array();
  const Eigen::ArrayXd xc = xs - xs.mean();
  const Eigen::ArrayXd yc = ys - ys.mean();
  const double sxx = xc.square().sum();
  const double syy = yc.square().sum();
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelation("pearson: zero variance");
  const double r = (xc * yc).sum() / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

/// Correlation of each sample with its right, lower or lower-right neighbour
/// within one channel, over every in-bounds pair.
double adjacent_correlation(const ImageMatrix& img, Direction direction, ChannelLabel channel);

/// [direction][channel]; nullopt where the coefficient is undefined.
using CorrelationTable = std::array<std::array<std::optional<double>, 3>, 3>;

struct ImageSummary {
  KeyMaterial key;
  PooledHistogram pooled;
  std::array<Histogram, 3> channels{};
  RgbSeries series;
  CorrelationTable correlations{};

  friend bool operator==(const ImageSummary&, const ImageSummary&) = default;
};

/// Plain-vs-ciphered checks that a pixel-shuffling cipher must satisfy.
struct PairVerdicts {
  bool dimensions = false;
  bool histograms = false;
  bool entropy = false;
  bool mean = false;
  bool key = false;

  bool all_passed() const noexcept { return dimensions && histograms && entropy && mean && key; }
  friend bool operator==(const PairVerdicts&, const PairVerdicts&) = default;
};

struct AnalysisReport {
  std::size_t series_length = kDefaultSeriesLength;
  ImageSummary plain;
  std::optional<ImageSummary> ciphered;
  std::optional<PairVerdicts> verdicts;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

ImageSummary summarize(const ImageMatrix& img, std::size_t n = kDefaultSeriesLength);

AnalysisReport build_report(const ImageMatrix& plain, std::size_t n = kDefaultSeriesLength);
/// Throws DimensionMismatch if the two images differ in shape.
AnalysisReport build_report(const ImageMatrix& plain, const ImageMatrix& ciphered,
                            std::size_t n = kDefaultSeriesLength);

}  // namespace pixshuffle
