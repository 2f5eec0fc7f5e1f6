#include "compa/orbitals.hpp"

#include <algorithm>

#include "compa/actions.hpp"
#include "compa/error.hpp"

namespace compa {

namespace {

/// Some g in the group with g[from] == to, read off the first chain level.
Permutation element_mapping(const PermGroup& group, Point from, Point to) {
  const auto& levels = group.chain().levels();
  if (levels.empty()) {
    if (from == to) return Permutation::identity(group.degree());
    throw InvalidArgument("points lie in different orbits");
  }
  const ChainLevel& top = levels.front();
  auto from_pos = top.orbit_index[from];
  auto to_pos = top.orbit_index[to];
  if (from_pos < 0 || to_pos < 0) throw InvalidArgument("points lie in different orbits");
  // base -> from is u_from, base -> to is u_to
  return top.transversal_inverse[static_cast<std::size_t>(from_pos)] *
         top.transversal[static_cast<std::size_t>(to_pos)];
}

}  // namespace

std::vector<Suborbit> suborbits(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point out of range");
  if (!is_transitive(group)) throw InvalidArgument("suborbits require a transitive group");
  PermGroup stab = point_stabilizer(group, x);
  std::vector<Suborbit> out;
  for (auto& o : orbits(stab)) {
    Suborbit s;
    s.base_point = x;
    s.representative = o.front();
    s.points = std::move(o);
    out.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].paired_index = paired_suborbit(group, x, out, i);
    out[i].self_paired = out[i].paired_index == i;
  }
  return out;
}

std::size_t paired_suborbit(const PermGroup& group, Point x, const std::vector<Suborbit>& all,
                            std::size_t delta) {
  const Point y = all.at(delta).representative;
  Permutation g = element_mapping(group, y, x);
  const Point target = g[x];
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (std::binary_search(all[i].points.begin(), all[i].points.end(), target)) return i;
  }
  throw InvalidArgument("suborbit list does not partition the domain");
}

std::optional<Suborbit> smallest_self_paired_nontrivial(const PermGroup& group, Point x) {
  std::optional<Suborbit> best;
  for (auto& s : suborbits(group, x)) {
    if (!s.self_paired || s.size() < 2) continue;
    if (!best || s.size() < best->size()) best = std::move(s);
  }
  return best;
}

WielandtData wielandt_data(const PermGroup& group, Point x, const Suborbit& delta) {
  if (delta.is_trivial() || delta.points.empty()) {
    throw InvalidArgument("Wielandt data needs a suborbit other than {x}");
  }
  if (!is_primitive(group)) throw InvalidArgument("Wielandt data needs a primitive group");
  PermGroup stab = point_stabilizer(group, x);
  if (stab.is_trivial()) throw InvalidArgument("Wielandt data needs a nonregular group");
  auto all = suborbits(group, x);
  const std::size_t index = static_cast<std::size_t>(
      std::find_if(all.begin(), all.end(),
                   [&](const Suborbit& s) { return s.points == delta.points; }) -
      all.begin());
  if (index == all.size()) throw InvalidArgument("not a suborbit of the given point");
  const Suborbit& paired = all[all[index].paired_index];

  auto on_delta = restrict_to_invariant_set(stab, all[index].points);
  const Point y = all[index].representative;
  const Point y_paired = paired.representative;
  PermGroup stab_y = point_stabilizer(stab, y);
  PermGroup stab_y_paired = point_stabilizer(stab, y_paired);
  return WielandtData{x,
                      y,
                      y_paired,
                      stab,
                      on_delta.kernel,
                      on_delta.image,
                      restrict_to_invariant_set(stab_y, all[index].points).image,
                      restrict_to_invariant_set(stab_y_paired, paired.points).image};
}

}  // namespace compa
