#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pixshuffle {

using Index = Eigen::Index;

/// A c x p plane of samples, row-major so that `data()` follows raster order.
template <typename Scalar>
using Plane = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One 8-bit color component of an image.
using Channel = Plane<std::uint8_t>;

enum class ChannelLabel : std::uint8_t { R = 0, G = 1, B = 2 };

char to_char(ChannelLabel label);

/// An arrangement of the three component labels. Merging with order (o0, o1, o2)
/// places input plane o0 in the red slot, o1 in green and o2 in blue.
class ChannelOrder {
 public:
  /// Identity order (R, G, B).
  ChannelOrder() = default;
  /// Throws InvalidArgument unless the labels are a permutation of R, G, B.
  ChannelOrder(ChannelLabel first, ChannelLabel second, ChannelLabel third);

  static ChannelOrder identity() { return {}; }

  ChannelLabel operator[](std::size_t slot) const { return labels_[slot]; }
  const std::array<ChannelLabel, 3>& labels() const noexcept { return labels_; }

  std::string str() const;

  friend bool operator==(const ChannelOrder&, const ChannelOrder&) = default;

 private:
  std::array<ChannelLabel, 3> labels_{ChannelLabel::R, ChannelLabel::G, ChannelLabel::B};
};

/// Cyclic left rotation: (R,G,B) rotated by 1 is (G,B,R). Rotation by 3 is the identity.
ChannelOrder rotate_channels(const ChannelOrder& order, std::uint64_t steps);

/// Three-channel 8-bit raster. Samples are stored row-major by pixel with
/// R, G, B interleaved, which is also the binary PPM payload order.
class ImageMatrix {
 public:
  using PixelArray = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 3, Eigen::RowMajor>;

  /// Zero-filled image. Throws InvalidArgument if rows or cols < 1.
  ImageMatrix(Index rows, Index cols);
  /// Throws InvalidArgument if `samples.size() != rows * cols * 3`.
  ImageMatrix(Index rows, Index cols, std::span<const std::uint8_t> samples);
  ImageMatrix(Index rows, Index cols, PixelArray pixels);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  Index pixel_count() const noexcept { return rows_ * cols_; }
  Index sample_count() const noexcept { return rows_ * cols_ * 3; }

  std::span<const std::uint8_t> samples() const noexcept {
    return {pixels_.data(), static_cast<std::size_t>(sample_count())};
  }
  std::span<std::uint8_t> samples() noexcept {
    return {pixels_.data(), static_cast<std::size_t>(sample_count())};
  }

  /// One row per pixel (raster order), columns R, G, B.
  const PixelArray& pixels() const noexcept { return pixels_; }

  std::uint8_t at(Index row, Index col, ChannelLabel channel) const {
    return pixels_(row * cols_ + col, static_cast<Index>(channel));
  }
  std::uint8_t& at(Index row, Index col, ChannelLabel channel) {
    return pixels_(row * cols_ + col, static_cast<Index>(channel));
  }

  friend bool operator==(const ImageMatrix& a, const ImageMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.pixels_ == b.pixels_;
  }

 private:
  Index rows_;
  Index cols_;
  PixelArray pixels_;
};

struct ChannelSet {
  Channel red;
  Channel green;
  Channel blue;

  const Channel& operator[](ChannelLabel label) const;
  Channel& operator[](ChannelLabel label);
};

ChannelSet split_channels(const ImageMatrix& img);

/// Throws DimensionMismatch if the three channels differ in shape.
ImageMatrix merge_channels(const Channel& r, const Channel& g, const Channel& b,
                           const ChannelOrder& order = ChannelOrder::identity());

inline ImageMatrix merge_channels(const ChannelSet& set,
                                  const ChannelOrder& order = ChannelOrder::identity()) {
  return merge_channels(set.red, set.green, set.blue, order);
}

}  // namespace pixshuffle
