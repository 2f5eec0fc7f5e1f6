#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "compa/permutation.hpp"
#include "compa/stabilizer_chain.hpp"
#include "compa/types.hpp"

namespace compa {

/// A permutation group given by generators together with its stabilizer
/// chain. Immutable after construction and cheap to copy (the chain is
/// shared).
class PermGroup {
 public:
  /// The trivial group of degree 1.
  PermGroup();

  /// Builds the stabilizer chain deterministically. Identity generators are
  /// kept in generators() but do not affect the chain.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  /// Group generated by a greedy, order-increasing subset of `elements`.
  static PermGroup generated_by(std::size_t degree, std::span<const Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Permutation& g) const { return chain_->contains(g); }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<const StabilizerChain> chain);

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  BigInt order_ = 1;

  friend PermGroup normal_closure(const PermGroup&, std::span<const Permutation>);
};

PermGroup group_from_generators(std::vector<Permutation> generators, std::size_t degree);

inline const BigInt& order(const PermGroup& group) { return group.order(); }
inline bool contains(const PermGroup& group, const Permutation& g) { return group.contains(g); }

/// The stabilizer of `x`. Throws InvalidArgument when x >= degree.
PermGroup point_stabilizer(const PermGroup& group, Point x);

/// The subgroup fixing every point of `points`, computed by rebuilding the
/// chain with `points` as base prefix.
PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points);

/// Smallest normal subgroup of `group` containing `seeds`. Throws
/// InvalidArgument if a seed is not in the group.
PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> seeds);

/// True when every generator of `sub` lies in `group`.
bool is_subgroup(const PermGroup& sub, const PermGroup& group);

/// `sub` is normalized by every generator of `group`. Assumes sub <= group.
bool is_normal(const PermGroup& group, const PermGroup& sub);

/// Same degree, same order, and one contains the other.
bool same_group(const PermGroup& a, const PermGroup& b);

/// Number of elements, converted to 64 bits; throws ResourceLimit above `limit`.
std::uint64_t checked_order(const PermGroup& group, std::uint64_t limit);

/// Visits every element exactly once, in increasing (or decreasing) index
/// order, where the index is the mixed-radix value of the element's chain
/// coordinates. Throws ResourceLimit when the order exceeds `limit`.
void for_each_element(const PermGroup& group, std::uint64_t limit, bool reverse,
                      const std::function<void(std::uint64_t index, const Permutation&)>& visit);

/// As for_each_element, stopping as soon as `visit` returns true. Returns
/// whether the scan stopped early.
bool for_each_element_until(const PermGroup& group, std::uint64_t limit, bool reverse,
                            const std::function<bool(std::uint64_t, const Permutation&)>& visit);

std::vector<Permutation> elements(const PermGroup& group,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

/// Index of `g` in the enumeration order of for_each_element; throws
/// InvalidArgument if g is not in the group.
std::uint64_t element_index(const PermGroup& group, const Permutation& g);

/// Computes element indices without allocating. The argument must be a
/// member of the group; the result is unspecified otherwise.
class ElementIndexer {
 public:
  explicit ElementIndexer(const PermGroup& group);
  std::uint64_t operator()(const Permutation& g) const;

 private:
  const StabilizerChain* chain_;
  std::vector<std::uint64_t> strides_;
  mutable std::vector<const Permutation*> scratch_;
};

}  // namespace compa
