#include "pixshuffle/image.hpp"

#include <algorithm>

#include "pixshuffle/errors.hpp"

namespace pixshuffle {

namespace {

void check_dimensions(Index rows, Index cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("image dimensions must be at least 1x1, got " + std::to_string(rows) +
                          "x" + std::to_string(cols));
  }
}

}  // namespace

char to_char(ChannelLabel label) {
  switch (label) {
    case ChannelLabel::R: return 'R';
    case ChannelLabel::G: return 'G';
    case ChannelLabel::B: return 'B';
  }
  return '?';
}

ChannelOrder::ChannelOrder(ChannelLabel first, ChannelLabel second, ChannelLabel third)
    : labels_{first, second, third} {
  std::array<bool, 3> seen{};
  for (const auto label : labels_) {
    const auto slot = static_cast<std::size_t>(label);
    if (slot > 2 || seen[slot]) {
      throw InvalidArgument("channel order must name R, G and B exactly once");
    }
    seen[slot] = true;
  }
}

std::string ChannelOrder::str() const {
  return {'(', to_char(labels_[0]), ',', to_char(labels_[1]), ',', to_char(labels_[2]), ')'};
}

ChannelOrder rotate_channels(const ChannelOrder& order, std::uint64_t steps) {
  const auto shift = static_cast<std::size_t>(steps % 3);
  return {order[shift], order[(shift + 1) % 3], order[(shift + 2) % 3]};
}

ImageMatrix::ImageMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
  check_dimensions(rows, cols);
  pixels_ = PixelArray::Zero(rows * cols, 3);
}

ImageMatrix::ImageMatrix(Index rows, Index cols, std::span<const std::uint8_t> samples)
    : ImageMatrix(rows, cols) {
  if (static_cast<Index>(samples.size()) != sample_count()) {
    throw InvalidArgument("expected " + std::to_string(sample_count()) + " samples, got " +
                          std::to_string(samples.size()));
  }
  std::copy(samples.begin(), samples.end(), pixels_.data());
}

ImageMatrix::ImageMatrix(Index rows, Index cols, PixelArray pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  check_dimensions(rows, cols);
  if (pixels_.rows() != rows * cols) {
    throw InvalidArgument("pixel array has " + std::to_string(pixels_.rows()) +
                          " rows, expected " + std::to_string(rows * cols));
  }
}

const Channel& ChannelSet::operator[](ChannelLabel label) const {
  switch (label) {
    case ChannelLabel::R: return red;
    case ChannelLabel::G: return green;
    case ChannelLabel::B: return blue;
  }
  throw InvalidArgument("bad channel label");
}

Channel& ChannelSet::operator[](ChannelLabel label) {
  return const_cast<Channel&>(std::as_const(*this)[label]);
}

ChannelSet split_channels(const ImageMatrix& img) {
  const Index n = img.pixel_count();
  ChannelSet set{Channel(img.rows(), img.cols()), Channel(img.rows(), img.cols()),
                 Channel(img.rows(), img.cols())};
  for (Index k = 0; k < 3; ++k) {
    auto& plane = set[static_cast<ChannelLabel>(k)];
    Eigen::Map<Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>>(plane.data(), n) =
        img.pixels().col(k);
  }
  return set;
}

ImageMatrix merge_channels(const Channel& r, const Channel& g, const Channel& b,
                           const ChannelOrder& order) {
  if (r.rows() != g.rows() || r.rows() != b.rows() || r.cols() != g.cols() ||
      r.cols() != b.cols()) {
    throw DimensionMismatch("channel shapes differ: " + std::to_string(r.rows()) + "x" +
                            std::to_string(r.cols()) + ", " + std::to_string(g.rows()) + "x" +
                            std::to_string(g.cols()) + ", " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  const std::array<const Channel*, 3> planes{&r, &g, &b};
  const Index n = r.size();
  ImageMatrix::PixelArray pixels(n, 3);
  for (Index slot = 0; slot < 3; ++slot) {
    const Channel& source = *planes[static_cast<std::size_t>(order[static_cast<std::size_t>(slot)])];
    pixels.col(slot) = Eigen::Map<const Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>>(
        source.data(), n);
  }
  return {r.rows(), r.cols(), std::move(pixels)};
}

}  // namespace pixshuffle
