#include "compa/actions.hpp"

#include <algorithm>
#include <numeric>

#include "compa/error.hpp"
#include "compa/structure.hpp"

namespace compa {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Smaller root wins so labels stay deterministic.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void require_transitive(const PermGroup& group, const char* what) {
  if (!is_transitive(group)) {
    throw InvalidArgument(std::string(what) + " requires a transitive group");
  }
}

/// Subgroup fixing `fixed_extra_points` in the action of the group on its own
/// points followed by q extra action points, where extra_images[g][i] is the
/// image of action point i under generator g.
PermGroup subgroup_from_extended_chain(const PermGroup& group,
                                       const std::vector<std::vector<Point>>& extra_images,
                                       std::size_t q, std::span<const Point> fixed_extra_points) {
  const std::size_t n = group.degree();
  std::vector<Permutation> combined;
  combined.reserve(group.generators().size());
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    const auto& g = group.generators()[i];
    std::vector<Point> images(g.images().begin(), g.images().end());
    images.reserve(n + q);
    for (Point a : extra_images[i]) images.push_back(static_cast<Point>(n + a));
    combined.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  std::vector<Point> prefix;
  for (Point a : fixed_extra_points) prefix.push_back(static_cast<Point>(n + a));
  auto chain = StabilizerChain::build(n + q, combined, prefix);
  std::vector<Permutation> restricted;
  for (const auto& s : chain.tail(prefix.size()).strong_generators()) {
    std::vector<Point> images(s.images().begin(), s.images().begin() + static_cast<std::ptrdiff_t>(n));
    restricted.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  return PermGroup::generated_by(n, restricted);
}

std::vector<std::vector<Point>> induced_block_images(const PermGroup& group,
                                                     const BlockSystem& blocks) {
  std::vector<std::vector<Point>> out;
  for (const auto& g : group.generators()) {
    std::vector<Point> images(blocks.block_count());
    for (std::size_t b = 0; b < blocks.block_count(); ++b) {
      images[b] = blocks.block_of[g[blocks.blocks[b].front()]];
    }
    out.push_back(std::move(images));
  }
  return out;
}

}  // namespace

BlockSystem BlockSystem::from_labels(std::span<const std::uint32_t> labels) {
  std::vector<std::vector<Point>> groups;
  std::vector<std::int64_t> slot(labels.size(), -1);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    auto label = labels[p];
    if (slot[label] < 0) {
      slot[label] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[label])].push_back(static_cast<Point>(p));
  }
  return from_blocks(labels.size(), std::move(groups));
}

BlockSystem BlockSystem::from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks) {
  BlockSystem out;
  out.degree = degree;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  out.block_of.assign(degree, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Point p : blocks[i]) out.block_of[p] = static_cast<std::uint32_t>(i);
  }
  out.blocks = std::move(blocks);
  return out;
}

std::vector<Point> orbit(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> out = {x};
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : group.generators()) {
      Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(group.degree(), false);
  for (Point x = 0; x < group.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(group, x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermGroup& group) { return orbit(group, 0).size() == group.degree(); }

bool is_block_system(const PermGroup& group, const BlockSystem& blocks) {
  if (blocks.degree != group.degree() || blocks.blocks.empty()) return false;
  const std::size_t size = blocks.block_size();
  std::vector<bool> covered(group.degree(), false);
  for (const auto& b : blocks.blocks) {
    if (b.size() != size) return false;
    for (Point p : b) {
      if (p >= group.degree() || covered[p] || blocks.block_of[p] != blocks.block_of[b.front()]) {
        return false;
      }
      covered[p] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
  for (const auto& g : group.generators()) {
    for (const auto& b : blocks.blocks) {
      auto target = blocks.block_of[g[b.front()]];
      for (Point p : b) {
        if (blocks.block_of[g[p]] != target) return false;
      }
    }
  }
  return true;
}

BlockSystem block_system_joining(const PermGroup& group, Point x, Point y) {
  const std::size_t n = group.degree();
  if (x >= n || y >= n) throw InvalidArgument("point out of range");
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending;
  if (uf.unite(x, y)) pending.emplace_back(x, y);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto [a, b] = pending[k];
    for (const auto& g : group.generators()) {
      if (uf.unite(g[a], g[b])) pending.emplace_back(g[a], g[b]);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t p = 0; p < n; ++p) labels[p] = uf.find(static_cast<std::uint32_t>(p));
  return BlockSystem::from_labels(labels);
}

std::vector<Point> minimal_block_containing(const PermGroup& group, Point x, Point y) {
  if (x == y) throw InvalidArgument("minimal_block_containing needs two distinct points");
  require_transitive(group, "minimal_block_containing");
  auto system = block_system_joining(group, x, y);
  return system.blocks[system.block_of[x]];
}

bool is_primitive(const PermGroup& group) {
  require_transitive(group, "is_primitive");
  const std::size_t n = group.degree();
  for (Point y = 1; y < n; ++y) {
    if (block_system_joining(group, 0, y).block_count() != 1) return false;
  }
  return true;
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& group) {
  require_transitive(group, "minimal_block_systems");
  const std::size_t n = group.degree();
  std::vector<BlockSystem> candidates;
  for (Point y = 1; y < n; ++y) {
    auto system = block_system_joining(group, 0, y);
    if (system.block_count() == 1) continue;
    if (std::find(candidates.begin(), candidates.end(), system) == candidates.end()) {
      candidates.push_back(std::move(system));
    }
  }
  auto block_of_zero = [](const BlockSystem& s) -> const std::vector<Point>& {
    return s.blocks[s.block_of[0]];
  };
  std::vector<BlockSystem> out;
  for (const auto& c : candidates) {
    const auto& mine = block_of_zero(c);
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const BlockSystem& o) {
      const auto& other = block_of_zero(o);
      return other.size() < mine.size() &&
             std::includes(mine.begin(), mine.end(), other.begin(), other.end());
    });
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks < b.blocks;
  });
  return out;
}

BlockSystem maximal_block_containing(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point out of range");
  auto minimal = minimal_block_systems(group);
  if (minimal.empty()) throw InvalidArgument("maximal_block_containing requires an imprimitive group");
  const BlockSystem& system = minimal.front();
  auto quotient = block_action(group, system);
  if (is_primitive(quotient.image)) return system;
  auto upper = maximal_block_containing(quotient.image, system.block_of[x]);
  std::vector<std::vector<Point>> merged;
  for (const auto& block_of_blocks : upper.blocks) {
    std::vector<Point> points;
    for (Point b : block_of_blocks) {
      points.insert(points.end(), system.blocks[b].begin(), system.blocks[b].end());
    }
    merged.push_back(std::move(points));
  }
  return BlockSystem::from_blocks(group.degree(), std::move(merged));
}

InducedAction block_action(const PermGroup& group, const BlockSystem& blocks) {
  if (!is_block_system(group, blocks)) {
    throw InvalidArgument("partition is not a block system of the group");
  }
  auto images = induced_block_images(group, blocks);
  std::vector<Permutation> image_gens;
  for (auto& im : images) image_gens.push_back(Permutation::from_images_unchecked(im));
  InducedAction out{PermGroup::generated_by(blocks.block_count(), image_gens),
                    PermGroup::trivial(group.degree()),
                    {}};
  std::vector<Point> all_blocks(blocks.block_count());
  std::iota(all_blocks.begin(), all_blocks.end(), Point{0});
  out.kernel = subgroup_from_extended_chain(group, images, blocks.block_count(), all_blocks);
  out.point_map.assign(blocks.block_of.begin(), blocks.block_of.end());
  return out;
}

PermGroup block_stabilizer(const PermGroup& group, const BlockSystem& blocks, std::size_t index) {
  if (!is_block_system(group, blocks)) {
    throw InvalidArgument("partition is not a block system of the group");
  }
  if (index >= blocks.block_count()) throw InvalidArgument("block index out of range");
  auto images = induced_block_images(group, blocks);
  const Point fixed[] = {static_cast<Point>(index)};
  return subgroup_from_extended_chain(group, images, blocks.block_count(), fixed);
}

InducedAction restrict_to_invariant_set(const PermGroup& group, std::span<const Point> points) {
  const std::size_t n = group.degree();
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int32_t> local(n, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= n) throw InvalidArgument("point out of range");
    local[sorted[i]] = static_cast<std::int32_t>(i);
  }
  if (sorted.empty()) throw InvalidArgument("cannot restrict to the empty set");
  std::vector<Permutation> image_gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> images(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      std::int32_t target = local[g[sorted[i]]];
      if (target < 0) throw InvalidArgument("point set is not invariant under the group");
      images[i] = static_cast<Point>(target);
    }
    image_gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  return InducedAction{PermGroup::generated_by(sorted.size(), image_gens),
                       pointwise_stabilizer(group, sorted), std::move(local)};
}

bool is_quasiprimitive(const PermGroup& group, const Limits& limits) {
  if (!is_transitive(group)) return false;
  for (const auto& n : minimal_normal_subgroups(group, limits)) {
    if (!is_transitive(n)) return false;
  }
  return true;
}

}  // namespace compa
