#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "compa/permutation.hpp"
#include "compa/types.hpp"

namespace compa {

/// One level of a stabilizer chain: the fundamental orbit of `base_point`
/// under the level's group, with explicit transversal elements.
struct ChainLevel {
  Point base_point = 0;
  /// Strong generators fixing every earlier base point.
  std::vector<Permutation> generators;
  /// Orbit points in discovery order; orbit[0] is the base point.
  std::vector<Point> orbit;
  /// orbit_index[p] is the position of p in `orbit`, or -1.
  std::vector<std::int32_t> orbit_index;
  /// transversal[k] maps base_point to orbit[k].
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
  /// tested[g][k]: Schreier generator for (generators[g], orbit[k]) already sifted.
  std::vector<std::vector<bool>> tested;

  bool in_orbit(Point p) const { return orbit_index[p] >= 0; }
};

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Building is the only mutating phase; the chain is then used
/// read-only through PermGroup.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  /// Builds a chain whose base starts with `base_prefix` (levels are created
  /// for every prefix point even when their orbits are trivial).
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  /// Adds `g` to the group. Returns false if `g` was already a member.
  bool extend(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  /// Sifts `g` starting at `from_level`. Returns the residue and the level
  /// at which sifting stopped (levels().size() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level = 0) const;

  bool contains(const Permutation& g) const;

  /// The chain of the stabilizer of the first `from` base points.
  StabilizerChain tail(std::size_t from) const;

  /// Generators of level 0 plus those added deeper, without duplicates.
  std::vector<Permutation> strong_generators() const;

  /// Mixed-radix coordinates of an element (one orbit position per level),
  /// or an empty vector if `g` is not a member.
  std::vector<std::uint32_t> coordinates(const Permutation& g) const;

  /// Inverse of coordinates().
  Permutation element_at(std::span<const std::uint32_t> coordinates) const;

 private:
  void add_level(Point base_point);
  void add_generator_to_level(std::size_t level, const Permutation& g);
  void schreier_sims(std::size_t start_level);

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

}  // namespace compa
