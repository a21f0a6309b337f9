#include "pixshuffle/keying.hpp"

#include <cmath>
#include <numeric>

#include "pixshuffle/errors.hpp"

namespace pixshuffle {

Fixed4 Fixed4::from_double(double value) {
  return Fixed4(static_cast<std::int64_t>(std::llround(value * kScale)));
}

std::string Fixed4::str() const {
  const std::int64_t magnitude = units_ < 0 ? -units_ : units_;
  std::string frac = std::to_string(magnitude % kScale);
  frac.insert(0, 4 - frac.size(), '0');
  return (units_ < 0 ? "-" : "") + std::to_string(magnitude / kScale) + "." + frac;
}

PooledHistogram pooled_histogram(const ImageMatrix& img) {
  PooledHistogram h;
  for (const auto s : img.samples()) ++h.bins[s];
  h.total = static_cast<std::uint64_t>(img.sample_count());
  return h;
}

Histogram channel_histogram(const ImageMatrix& img, ChannelLabel channel) {
  Histogram bins{};
  const auto column = img.pixels().col(static_cast<Index>(channel));
  for (Index k = 0; k < column.size(); ++k) ++bins[column(k)];
  return bins;
}

double entropy_bits(const Histogram& bins, std::uint64_t total) {
  if (total == 0) throw InvalidArgument("entropy of an empty histogram");
  const double n = static_cast<double>(total);
  double sum = 0.0;
  double compensation = 0.0;
  for (const auto count : bins) {
    if (count == 0) continue;
    const double prob = static_cast<double>(count) / n;
    const double term = -prob * std::log2(prob);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  // -0.0 for a single symbol
  return sum + compensation + 0.0;
}

Fixed4 shannon_entropy(const PooledHistogram& h) {
  return Fixed4::from_double(entropy_bits(h.bins, h.total));
}

std::uint64_t sample_sum(const ImageMatrix& img) {
  const auto s = img.samples();
  return std::accumulate(s.begin(), s.end(), std::uint64_t{0});
}

Fixed4 sample_mean(const ImageMatrix& img) {
  // round(sum * 10^4 / n) half away from zero, in integers
  const auto n = static_cast<std::uint64_t>(img.sample_count());
  const std::uint64_t scaled = sample_sum(img) * Fixed4::kScale;
  const std::uint64_t units = (2 * scaled + n) / (2 * n);
  return Fixed4::from_ten_thousandths(static_cast<std::int64_t>(units));
}

KeyMaterial derive_key(const ImageMatrix& img) {
  KeyMaterial key;
  key.rows = img.rows();
  key.cols = img.cols();
  key.entropy = shannon_entropy(pooled_histogram(img));
  key.mean = sample_mean(img);

  const auto area = static_cast<std::uint64_t>(img.rows() * img.cols());
  const auto raw_units = area * Fixed4::kScale +
                         static_cast<std::uint64_t>(key.entropy.ten_thousandths()) * 1000 +
                         static_cast<std::uint64_t>(key.mean.ten_thousandths());
  const auto cols = static_cast<std::uint64_t>(img.cols());
  const std::uint64_t reduced = (raw_units / Fixed4::kScale) % cols;
  key.iterations = reduced == 0 ? cols : reduced;
  return key;
}

std::string to_string(const KeyMaterial& key) {
  return "c=" + std::to_string(key.rows) + " p=" + std::to_string(key.cols) +
         " He=" + key.entropy.str() + " mean=" + key.mean.str() +
         " Sk=" + std::to_string(key.iterations);
}

}  // namespace pixshuffle
