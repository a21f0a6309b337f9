#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pixshuffle/errors.hpp"
#include "pixshuffle/image.hpp"

namespace pixshuffle {

/// Bijection on linear indices {0..N-1}. `map()[k]` is the destination of the
/// sample at source index k. The cycle decomposition is built on construction:
/// each cycle starts at its smallest element and lists k, map[k], map[map[k]], ...
class Permutation {
 public:
  using size_type = std::size_t;

  Permutation() = default;
  /// Throws InvalidArgument unless `map` is a bijection on {0..map.size()-1}.
  explicit Permutation(std::vector<size_type> map);

  static Permutation identity(size_type n);

  size_type size() const noexcept { return map_.size(); }
  size_type operator[](size_type k) const { return map_[k]; }
  std::span<const size_type> map() const noexcept { return map_; }

  size_type cycle_count() const noexcept { return cycle_offsets_.size() - 1; }
  std::span<const size_type> cycle(size_type i) const {
    return std::span<const size_type>(cycle_elements_)
        .subspan(cycle_offsets_[i], cycle_offsets_[i + 1] - cycle_offsets_[i]);
  }

  bool is_identity() const noexcept { return cycle_count() == size(); }

  /// Smallest k >= 1 with P^k = identity (lcm of cycle lengths), or nullopt
  /// if it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }

 private:
  void decompose();

  std::vector<size_type> map_;
  std::vector<size_type> cycle_elements_;
  std::vector<size_type> cycle_offsets_{0};
};

/// Transpose a rows x cols row-major plane, then refill rows x cols in
/// column-major order: map[k] = (k mod rows) * cols + floor(k / rows).
/// A row-major refill would make this the identity, so the two are not interchangeable.
Permutation transpose_reshape_permutation(Index rows, Index cols);

/// `first` followed by `second`.
Permutation compose(const Permutation& first, const Permutation& second);

Permutation invert_permutation(const Permutation& perm);

/// P^k in O(N): each index advances k mod (cycle length) steps along its cycle.
Permutation permutation_power(const Permutation& perm, std::uint64_t k);

/// Literal k-fold composition, O(k*N). Reference for permutation_power.
Permutation naive_iterate(const Permutation& perm, std::uint64_t k);

/// out[map[k]] = in[k] over the row-major sample order.
template <typename Scalar>
Plane<Scalar> apply_permutation(const Permutation& perm, const Plane<Scalar>& plane) {
  if (perm.size() != static_cast<std::size_t>(plane.size())) {
    throw SizeMismatch("permutation of size " + std::to_string(perm.size()) +
                       " applied to a " + std::to_string(plane.rows()) + "x" +
                       std::to_string(plane.cols()) + " channel");
  }
  Plane<Scalar> out(plane.rows(), plane.cols());
  const Scalar* in = plane.data();
  Scalar* dst = out.data();
  const auto map = perm.map();
  for (std::size_t k = 0; k < map.size(); ++k) dst[map[k]] = in[k];
  return out;
}

}  // namespace pixshuffle
