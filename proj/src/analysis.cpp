#include "pixshuffle/analysis.hpp"

#include <algorithm>
#include <string>

namespace pixshuffle {

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::horizontal: return "horizontal";
    case Direction::vertical: return "vertical";
    case Direction::diagonal: return "diagonal";
  }
  return "unknown";
}

RgbSeries rgb_series(const ImageMatrix& img, std::size_t n) {
  if (n == 0) throw InvalidArgument("series length must be at least 1");
  const auto count = std::min(n, static_cast<std::size_t>(img.pixel_count()));
  const auto head = img.pixels().topRows(static_cast<Index>(count));
  RgbSeries series;
  series.red.assign(head.col(0).begin(), head.col(0).end());
  series.green.assign(head.col(1).begin(), head.col(1).end());
  series.blue.assign(head.col(2).begin(), head.col(2).end());
  return series;
}

double adjacent_correlation(const ImageMatrix& img, Direction direction, ChannelLabel channel) {
  const Channel plane = split_channels(img)[channel];
  const Index down = direction == Direction::horizontal ? 0 : 1;
  const Index right = direction == Direction::vertical ? 0 : 1;
  const Index rows = plane.rows() - down;
  const Index cols = plane.cols() - right;
  if (rows < 1 || cols < 1 || rows * cols < 2) {
    throw UndefinedCorrelation(std::string(to_string(direction)) +
                               " correlation needs at least two pairs");
  }
  const Channel first = plane.topLeftCorner(rows, cols);
  const Channel second = plane.bottomRightCorner(rows, cols);
  return pearson(first.reshaped<Eigen::RowMajor>(), second.reshaped<Eigen::RowMajor>());
}

ImageSummary summarize(const ImageMatrix& img, std::size_t n) {
  ImageSummary summary;
  summary.key = derive_key(img);
  summary.pooled = pooled_histogram(img);
  for (std::size_t c = 0; c < 3; ++c) {
    summary.channels[c] = channel_histogram(img, static_cast<ChannelLabel>(c));
  }
  summary.series = rgb_series(img, n);
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t c = 0; c < 3; ++c) {
      try {
        summary.correlations[d][c] = adjacent_correlation(img, static_cast<Direction>(d),
                                                          static_cast<ChannelLabel>(c));
      } catch (const UndefinedCorrelation&) {
        summary.correlations[d][c] = std::nullopt;
      }
    }
  }
  return summary;
}

AnalysisReport build_report(const ImageMatrix& plain, std::size_t n) {
  AnalysisReport report;
  report.series_length = n;
  report.plain = summarize(plain, n);
  return report;
}

AnalysisReport build_report(const ImageMatrix& plain, const ImageMatrix& ciphered, std::size_t n) {
  if (plain.rows() != ciphered.rows() || plain.cols() != ciphered.cols()) {
    throw DimensionMismatch("cannot pair a " + std::to_string(plain.rows()) + "x" +
                            std::to_string(plain.cols()) + " image with a " +
                            std::to_string(ciphered.rows()) + "x" +
                            std::to_string(ciphered.cols()) + " image");
  }
  AnalysisReport report = build_report(plain, n);
  report.ciphered = summarize(ciphered, n);
  const ImageSummary& a = report.plain;
  const ImageSummary& b = *report.ciphered;
  PairVerdicts v;
  v.dimensions = a.key.rows == b.key.rows && a.key.cols == b.key.cols;
  v.histograms = a.pooled == b.pooled;
  v.entropy = a.key.entropy == b.key.entropy;
  v.mean = a.key.mean == b.key.mean;
  v.key = a.key == b.key;
  report.verdicts = v;
  return report;
}

}  // namespace pixshuffle
