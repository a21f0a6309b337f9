#pragma once

// Test-only generators and reference oracles. Nothing here calls into the
// permutation or cipher code paths it is used to check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pixshuffle/image.hpp"

namespace pixshuffle::testing {

inline ImageMatrix random_image(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<std::uint8_t> samples(static_cast<std::size_t>(rows * cols * 3));
  for (auto& s : samples) s = static_cast<std::uint8_t>(byte(rng));
  return {rows, cols, samples};
}

/// Random image whose samples come from a small palette, so that keys and
/// fixed points vary more than with uniform bytes.
inline ImageMatrix random_palette_image(std::mt19937_64& rng, Index rows, Index cols,
                                        int palette) {
  std::uniform_int_distribution<int> pick(0, palette - 1);
  std::vector<std::uint8_t> samples(static_cast<std::size_t>(rows * cols * 3));
  for (auto& s : samples) s = static_cast<std::uint8_t>(pick(rng) * (255 / std::max(1, palette - 1)));
  return {rows, cols, samples};
}

inline ImageMatrix constant_image(Index rows, Index cols, std::uint8_t value) {
  return {rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows * cols * 3), value)};
}

/// Literal transpose then column-major reshape back to rows x cols, the way an
/// array language does it: Eigen matrices are column-major by default, so
/// mapping the transposed storage as rows x cols is exactly that reshape.
inline Channel literal_transpose_reshape(const Channel& plane) {
  using ColMajor = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
  const ColMajor source = plane;             // same values, column-major storage
  const ColMajor transposed = source.transpose();  // cols x rows
  const ColMajor reshaped =
      Eigen::Map<const ColMajor>(transposed.data(), plane.rows(), plane.cols());
  return reshaped;
}

/// Extract r, g, b; transpose and reshape each; concatenate; repeat `rounds`
/// times. With `rotate`, each concatenation is (g, b, r).
inline ImageMatrix literal_encrypt_loop(const ImageMatrix& img, std::uint64_t rounds, bool rotate) {
  const Index rows = img.rows();
  const Index cols = img.cols();
  std::vector<std::uint8_t> current(img.samples().begin(), img.samples().end());
  for (std::uint64_t round = 0; round < rounds; ++round) {
    std::array<Channel, 3> planes{Channel(rows, cols), Channel(rows, cols), Channel(rows, cols)};
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) {
        for (std::size_t c = 0; c < 3; ++c) {
          planes[c](i, j) = current[static_cast<std::size_t>((i * cols + j) * 3) + c];
        }
      }
    }
    for (auto& plane : planes) plane = literal_transpose_reshape(plane);
    const std::array<std::size_t, 3> source = rotate ? std::array<std::size_t, 3>{1, 2, 0}
                                                     : std::array<std::size_t, 3>{0, 1, 2};
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) {
        for (std::size_t c = 0; c < 3; ++c) {
          current[static_cast<std::size_t>((i * cols + j) * 3) + c] = planes[source[c]](i, j);
        }
      }
    }
  }
  return {rows, cols, current};
}

/// Pearson correlation from an explicit list of neighbour pairs, in long double.
inline double brute_force_correlation(const std::vector<std::pair<int, int>>& pairs) {
  long double sx = 0, sy = 0;
  for (const auto& [x, y] : pairs) {
    sx += x;
    sy += y;
  }
  const long double n = static_cast<long double>(pairs.size());
  const long double mx = sx / n;
  const long double my = sy / n;
  long double cxy = 0, cxx = 0, cyy = 0;
  for (const auto& [x, y] : pairs) {
    cxy += (x - mx) * (y - my);
    cxx += (x - mx) * (x - mx);
    cyy += (y - my) * (y - my);
  }
  return static_cast<double>(cxy / std::sqrt(cxx * cyy));
}

/// Every in-bounds (sample, neighbour) pair offset by (down, right) in one channel.
inline std::vector<std::pair<int, int>> neighbour_pairs(const ImageMatrix& img, int down, int right,
                                                        ChannelLabel channel) {
  std::vector<std::pair<int, int>> pairs;
  for (Index i = 0; i + down < img.rows(); ++i) {
    for (Index j = 0; j + right < img.cols(); ++j) {
      pairs.emplace_back(img.at(i, j, channel), img.at(i + down, j + right, channel));
    }
  }
  return pairs;
}

/// Row-major raster ramp: sample value = linear pixel index mod 256, all channels.
inline ImageMatrix raster_ramp(Index rows, Index cols) {
  ImageMatrix img(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    for (Index c = 0; c < 3; ++c) {
      img.samples()[static_cast<std::size_t>(k * 3 + c)] = static_cast<std::uint8_t>(k % 256);
    }
  }
  return img;
}

/// Every row reads 0, 1, ..., cols-1 (mod 256) in every channel.
inline ImageMatrix row_ramp(Index rows, Index cols) {
  ImageMatrix img(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      for (auto c : {ChannelLabel::R, ChannelLabel::G, ChannelLabel::B}) {
        img.at(i, j, c) = static_cast<std::uint8_t>(j % 256);
      }
    }
  }
  return img;
}

}  // namespace pixshuffle::testing
