#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "pixshuffle/image.hpp"

namespace pixshuffle {

/// Non-negative decimal with exactly four fractional digits, stored as an
/// integer count of ten-thousandths so keys stay bit-stable across platforms.
class Fixed4 {
 public:
  static constexpr std::int64_t kScale = 10000;

  constexpr Fixed4() = default;
  static constexpr Fixed4 from_ten_thousandths(std::int64_t units) { return Fixed4(units); }
  /// Rounds half away from zero.
  static Fixed4 from_double(double value);

  constexpr std::int64_t ten_thousandths() const noexcept { return units_; }
  constexpr double value() const noexcept { return static_cast<double>(units_) / kScale; }
  /// Always four decimals, e.g. "100.0000".
  std::string str() const;

  friend constexpr auto operator<=>(const Fixed4&, const Fixed4&) = default;

 private:
  constexpr explicit Fixed4(std::int64_t units) : units_(units) {}
  std::int64_t units_ = 0;
};

using Histogram = std::array<std::uint64_t, 256>;

/// Occurrence counts over all samples of all three channels.
struct PooledHistogram {
  Histogram bins{};
  std::uint64_t total = 0;

  friend bool operator==(const PooledHistogram&, const PooledHistogram&) = default;
};

PooledHistogram pooled_histogram(const ImageMatrix& img);
Histogram channel_histogram(const ImageMatrix& img, ChannelLabel channel);

/// Unquantized Shannon entropy in bits (Neumaier-compensated sum).
/// Throws InvalidArgument for an empty histogram.
double entropy_bits(const Histogram& bins, std::uint64_t total);

/// Pooled entropy quantized to 4 decimals.
Fixed4 shannon_entropy(const PooledHistogram& h);

/// Mean over all c*p*3 samples from the exact integer sum, quantized to 4 decimals.
Fixed4 sample_mean(const ImageMatrix& img);

std::uint64_t sample_sum(const ImageMatrix& img);

/// Everything the key schedule reads from an image, plus the resulting
/// iteration count Sk.
struct KeyMaterial {
  Index rows = 0;
  Index cols = 0;
  Fixed4 entropy;
  Fixed4 mean;
  std::uint64_t iterations = 0;

  friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;
};

/// Sk = floor(c*p + 1000*He + mean) mod p, with 0 mapped to p.
/// Only permutation-invariant statistics feed in, so the ciphertext yields the
/// same key as the plaintext.
KeyMaterial derive_key(const ImageMatrix& img);

/// "c=<rows> p=<cols> He=<x.xxxx> mean=<x.xxxx> Sk=<n>"
std::string to_string(const KeyMaterial& key);

}  // namespace pixshuffle
