#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "compa/types.hpp"

namespace compa {

/// A bijection of {0, ..., n-1} stored as its image sequence.
///
/// Products are read left to right: `p * q` first applies `p`, then `q`, so
/// `(p * q)[i] == q[p[i]]`. This matches the exponential notation x^(pq) used
/// for permutation groups.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InvalidArgument if not.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; throws InvalidArgument on repeated or
  /// out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Skips validation. Caller guarantees a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_even() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// Order as an element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Smallest point moved, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Disjoint-cycle notation over 0-based points, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Left-to-right product; throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

/// p^-1 * g * p, i.e. the conjugate g^p.
Permutation conjugate(const Permutation& g, const Permutation& p);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace compa
