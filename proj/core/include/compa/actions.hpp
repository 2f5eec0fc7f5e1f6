#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "compa/perm_group.hpp"
#include "compa/types.hpp"

namespace compa {

/// A G-invariant partition of {0..n-1} into blocks of equal size.
/// Canonical form: each block sorted, blocks sorted by their minimum.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> blocks;
  std::vector<std::uint32_t> block_of;

  /// Canonicalizes a partition given as one label per point.
  static BlockSystem from_labels(std::span<const std::uint32_t> labels);
  static BlockSystem from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks);

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t block_count() const { return blocks.size(); }
  /// Singletons or a single block.
  bool is_trivial() const { return block_size() <= 1 || block_count() <= 1; }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
    return a.degree == b.degree && a.blocks == b.blocks;
  }
};

/// A group induced on a quotient or an invariant subset, with the kernel of
/// the action (a subgroup of the source group on the source points).
struct InducedAction {
  PermGroup image;
  PermGroup kernel;
  /// point_map[p] is the action point that source point p maps to, or -1.
  std::vector<std::int32_t> point_map;
};

std::vector<Point> orbit(const PermGroup& group, Point x);

/// Orbits sorted by their minimum, each sorted.
std::vector<std::vector<Point>> orbits(const PermGroup& group);

bool is_transitive(const PermGroup& group);

/// Whether every block is mapped onto a block by every generator.
bool is_block_system(const PermGroup& group, const BlockSystem& blocks);

/// The finest block system in which x and y share a block (union-find
/// closure seeded with {x, y}).
BlockSystem block_system_joining(const PermGroup& group, Point x, Point y);

/// Smallest block containing x and y. Whole domain iff no proper block
/// contains both. Throws InvalidArgument if x == y or the group is
/// intransitive.
std::vector<Point> minimal_block_containing(const PermGroup& group, Point x, Point y);

/// Throws InvalidArgument on intransitive input.
bool is_primitive(const PermGroup& group);

/// Systems generated by the distinct minimal nontrivial blocks through
/// point 0, sorted by block size then blocks. Empty for primitive groups.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& group);

/// A block system with primitive quotient action (so its blocks are maximal
/// proper blocks). Throws InvalidArgument on primitive or intransitive input.
BlockSystem maximal_block_containing(const PermGroup& group, Point x);

/// Action on block indices. Throws InvalidArgument if `blocks` is not a
/// block system of the group.
InducedAction block_action(const PermGroup& group, const BlockSystem& blocks);

/// Setwise stabilizer of blocks.blocks[index].
PermGroup block_stabilizer(const PermGroup& group, const BlockSystem& blocks, std::size_t index);

/// Action on an invariant set, re-indexed 0..|S|-1 in increasing point
/// order. Throws InvalidArgument if the set is not invariant.
InducedAction restrict_to_invariant_set(const PermGroup& group, std::span<const Point> points);

/// Transitive with every minimal normal subgroup transitive. Subject to the
/// enumeration limit of minimal_normal_subgroups.
bool is_quasiprimitive(const PermGroup& group, const Limits& limits = {});

}  // namespace compa
