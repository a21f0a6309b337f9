#include "pixshuffle/permutation.hpp"

#include <numeric>
#include <string>

namespace pixshuffle {

Permutation::Permutation(std::vector<size_type> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (const auto dst : map_) {
    if (dst >= map_.size() || hit[dst]) {
      throw InvalidArgument("not a bijection: destination " + std::to_string(dst) +
                            " repeated or out of range");
    }
    hit[dst] = true;
  }
  decompose();
}

Permutation Permutation::identity(size_type n) {
  std::vector<size_type> map(n);
  std::iota(map.begin(), map.end(), size_type{0});
  return Permutation(std::move(map));
}

void Permutation::decompose() {
  cycle_elements_.clear();
  cycle_elements_.reserve(map_.size());
  cycle_offsets_.assign(1, 0);
  std::vector<bool> visited(map_.size(), false);
  for (size_type start = 0; start < map_.size(); ++start) {
    if (visited[start]) continue;
    for (size_type k = start; !visited[k]; k = map_[k]) {
      visited[k] = true;
      cycle_elements_.push_back(k);
    }
    cycle_offsets_.push_back(cycle_elements_.size());
  }
}

std::optional<std::uint64_t> Permutation::order() const {
  std::uint64_t result = 1;
  for (size_type i = 0; i < cycle_count(); ++i) {
    const auto len = static_cast<std::uint64_t>(cycle(i).size());
    const std::uint64_t g = std::gcd(result, len);
    const std::uint64_t factor = len / g;
    if (result > UINT64_MAX / factor) return std::nullopt;
    result *= factor;
  }
  return result;
}

Permutation transpose_reshape_permutation(Index rows, Index cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("permutation dimensions must be positive");
  }
  const auto c = static_cast<std::size_t>(rows);
  const auto p = static_cast<std::size_t>(cols);
  std::vector<std::size_t> map(c * p);
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = (k % c) * p + k / c;
  return Permutation(std::move(map));
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) {
    throw SizeMismatch("cannot compose permutations of sizes " + std::to_string(first.size()) +
                       " and " + std::to_string(second.size()));
  }
  std::vector<std::size_t> map(first.size());
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = second[first[k]];
  return Permutation(std::move(map));
}

Permutation invert_permutation(const Permutation& perm) {
  std::vector<std::size_t> map(perm.size());
  for (std::size_t k = 0; k < map.size(); ++k) map[perm[k]] = k;
  return Permutation(std::move(map));
}

Permutation permutation_power(const Permutation& perm, std::uint64_t k) {
  std::vector<std::size_t> map(perm.size());
  for (std::size_t i = 0; i < perm.cycle_count(); ++i) {
    const auto members = perm.cycle(i);
    const std::size_t len = members.size();
    const auto shift = static_cast<std::size_t>(k % len);
    for (std::size_t pos = 0; pos < len; ++pos) {
      map[members[pos]] = members[(pos + shift) % len];
    }
  }
  return Permutation(std::move(map));
}

Permutation naive_iterate(const Permutation& perm, std::uint64_t k) {
  Permutation result = Permutation::identity(perm.size());
  for (std::uint64_t step = 0; step < k; ++step) result = compose(result, perm);
  return result;
}

}  // namespace pixshuffle
