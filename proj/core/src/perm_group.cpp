#include "compa/perm_group.hpp"

#include <algorithm>

#include "compa/error.hpp"

namespace compa {

namespace {

void check_degree(const Permutation& g, std::size_t degree) {
  if (g.degree() != degree) {
    throw InvalidArgument("permutation of degree " + std::to_string(g.degree()) +
                          " used with a group of degree " + std::to_string(degree));
  }
}

std::vector<std::uint64_t> strides(const StabilizerChain& chain) {
  const auto& levels = chain.levels();
  std::vector<std::uint64_t> out(levels.size(), 1);
  for (std::size_t l = levels.size(); l-- > 1;) {
    out[l - 1] = out[l] * levels[l].orbit.size();
  }
  return out;
}

}  // namespace

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  for (const auto& g : generators_) check_degree(g, degree);
  chain_ = std::make_shared<const StabilizerChain>(
      StabilizerChain::build(degree, generators_));
  order_ = chain_->order();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::shared_ptr<const StabilizerChain> chain)
    : degree_(degree),
      generators_(std::move(generators)),
      chain_(std::move(chain)),
      order_(chain_->order()) {}

PermGroup PermGroup::generated_by(std::size_t degree, std::span<const Permutation> elements) {
  StabilizerChain chain(degree);
  std::vector<Permutation> kept;
  for (const auto& g : elements) {
    check_degree(g, degree);
    if (chain.extend(g)) kept.push_back(g);
  }
  return PermGroup(degree, std::move(kept),
                   std::make_shared<const StabilizerChain>(std::move(chain)));
}

PermGroup group_from_generators(std::vector<Permutation> generators, std::size_t degree) {
  return PermGroup(degree, std::move(generators));
}

PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points) {
  if (points.empty()) return group;
  std::vector<Point> prefix(points.begin(), points.end());
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  for (Point p : prefix) {
    if (p >= group.degree()) {
      throw InvalidArgument("point " + std::to_string(p) + " out of range for degree " +
                            std::to_string(group.degree()));
    }
  }
  auto chain = StabilizerChain::build(group.degree(), group.generators(), prefix);
  auto strong = chain.tail(prefix.size()).strong_generators();
  return PermGroup::generated_by(group.degree(), strong);
}

PermGroup point_stabilizer(const PermGroup& group, Point x) {
  const Point points[] = {x};
  return pointwise_stabilizer(group, points);
}

PermGroup normal_closure(const PermGroup& group, std::span<const Permutation> seeds) {
  StabilizerChain chain(group.degree());
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    check_degree(s, group.degree());
    if (!group.contains(s)) {
      throw InvalidArgument("normal closure seed " + s.to_cycle_string() + " is not in the group");
    }
    if (chain.extend(s)) gens.push_back(s);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : group.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (chain.extend(c)) gens.push_back(std::move(c));
    }
  }
  return PermGroup(group.degree(), std::move(gens),
                   std::make_shared<const StabilizerChain>(std::move(chain)));
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return group.contains(g); });
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
  for (const auto& n : sub.generators()) {
    for (const auto& g : group.generators()) {
      if (!sub.contains(conjugate(n, g))) return false;
    }
  }
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

std::uint64_t checked_order(const PermGroup& group, std::uint64_t limit) {
  if (group.order() > limit) {
    throw ResourceLimit("group of order " + group.order().str() +
                        " exceeds the limit " + std::to_string(limit));
  }
  return group.order().convert_to<std::uint64_t>();
}

void for_each_element(const PermGroup& group, std::uint64_t limit, bool reverse,
                      const std::function<void(std::uint64_t, const Permutation&)>& visit) {
  for_each_element_until(group, limit, reverse, [&](std::uint64_t i, const Permutation& g) {
    visit(i, g);
    return false;
  });
}

bool for_each_element_until(const PermGroup& group, std::uint64_t limit, bool reverse,
                            const std::function<bool(std::uint64_t, const Permutation&)>& visit) {
  const std::uint64_t total = checked_order(group, limit);
  const auto& chain = group.chain();
  const auto& levels = chain.levels();
  const std::size_t depth = levels.size();
  if (depth == 0) return visit(0, Permutation::identity(group.degree()));
  const auto stride = strides(chain);
  std::vector<std::uint32_t> digit(depth);
  auto first_digit = [&](std::size_t l) -> std::uint32_t {
    return reverse ? static_cast<std::uint32_t>(levels[l].orbit.size() - 1) : 0U;
  };
  // partial[l] = u_l * partial[l-1]
  std::vector<Permutation> partial(depth);
  auto rebuild_from = [&](std::size_t l) {
    for (std::size_t j = l; j < depth; ++j) {
      const Permutation& u = levels[j].transversal[digit[j]];
      partial[j] = j == 0 ? u : u * partial[j - 1];
    }
  };
  for (std::size_t l = 0; l < depth; ++l) digit[l] = first_digit(l);
  rebuild_from(0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::uint64_t index = 0;
    for (std::size_t l = 0; l < depth; ++l) index += digit[l] * stride[l];
    if (visit(index, partial[depth - 1])) return true;
    // odometer step, least significant digit is the deepest level
    std::size_t l = depth;
    while (l-- > 0) {
      const auto radix = static_cast<std::uint32_t>(levels[l].orbit.size());
      if (!reverse && digit[l] + 1 < radix) {
        ++digit[l];
        break;
      }
      if (reverse && digit[l] > 0) {
        --digit[l];
        break;
      }
      digit[l] = first_digit(l);
    }
    if (l < depth) rebuild_from(l);
  }
  return false;
}

std::vector<Permutation> elements(const PermGroup& group, std::uint64_t limit) {
  std::vector<Permutation> out;
  out.reserve(checked_order(group, limit));
  for_each_element(group, limit, false,
                   [&](std::uint64_t, const Permutation& g) { out.push_back(g); });
  return out;
}

std::uint64_t element_index(const PermGroup& group, const Permutation& g) {
  check_degree(g, group.degree());
  auto coords = group.chain().coordinates(g);
  if (!group.contains(g)) {
    throw InvalidArgument(g.to_cycle_string() + " is not an element of the group");
  }
  const auto stride = strides(group.chain());
  std::uint64_t index = 0;
  for (std::size_t l = 0; l < coords.size(); ++l) index += coords[l] * stride[l];
  return index;
}

ElementIndexer::ElementIndexer(const PermGroup& group)
    : chain_(&group.chain()), strides_(strides(group.chain())) {
  scratch_.reserve(strides_.size());
}

std::uint64_t ElementIndexer::operator()(const Permutation& g) const {
  const auto& levels = chain_->levels();
  scratch_.clear();
  std::uint64_t index = 0;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    Point p = g[levels[l].base_point];
    for (const Permutation* inv : scratch_) p = (*inv)[p];
    auto pos = static_cast<std::size_t>(levels[l].orbit_index[p]);
    index += pos * strides_[l];
    if (pos != 0) scratch_.push_back(&levels[l].transversal_inverse[pos]);
  }
  return index;
}

}  // namespace compa
