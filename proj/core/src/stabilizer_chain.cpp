#include "compa/stabilizer_chain.hpp"

#include <algorithm>

#include "compa/error.hpp"

namespace compa {

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  StabilizerChain chain(degree);
  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidArgument("base point " + std::to_string(b) + " out of range");
    chain.add_level(b);
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree));
    }
    chain.extend(g);
  }
  return chain;
}

void StabilizerChain::add_level(Point base_point) {
  ChainLevel level;
  level.base_point = base_point;
  level.orbit = {base_point};
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[base_point] = 0;
  level.transversal = {Permutation::identity(degree_)};
  level.transversal_inverse = {Permutation::identity(degree_)};
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_generator_to_level(std::size_t index, const Permutation& g) {
  ChainLevel& level = levels_[index];
  level.generators.push_back(g);
  level.tested.emplace_back();
  // Extend the orbit: apply every generator to every orbit point until closed.
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      Point image = s[level.orbit[k]];
      if (level.orbit_index[image] >= 0) continue;
      level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation u = level.transversal[k] * s;
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
  for (auto& row : level.tested) row.resize(level.orbit.size(), false);
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) {
    throw InvalidArgument("generator degree does not match chain degree");
  }
  if (g.is_identity() || contains(g)) return false;
  std::size_t top = 0;
  for (; top < levels_.size(); ++top) {
    if (g[levels_[top].base_point] != levels_[top].base_point) break;
  }
  if (top == levels_.size()) add_level(g.first_moved_point());
  for (std::size_t l = 0; l <= top; ++l) add_generator_to_level(l, g);
  schreier_sims(levels_.size() - 1);
  return true;
}

void StabilizerChain::schreier_sims(std::size_t start_level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    bool restarted = false;
    ChainLevel& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t gi = 0; !restarted && gi < level.generators.size(); ++gi) {
      for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        if (level.tested[gi][k]) continue;
        level.tested[gi][k] = true;
        const Permutation& s = level.generators[gi];
        Point image = s[level.orbit[k]];
        Permutation h = level.transversal[k] * s *
                        level.transversal_inverse[static_cast<std::size_t>(level.orbit_index[image])];
        if (h.is_identity()) continue;
        auto [residue, stop] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) add_level(residue.first_moved_point());
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          add_generator_to_level(l, residue);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    Point beta = g[level.base_point];
    std::int32_t pos = level.orbit_index[beta];
    if (pos < 0) return {std::move(g), l};
    if (pos != 0) g = g * level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw InvalidArgument("membership test for a permutation of degree " +
                          std::to_string(g.degree()) + " in a group of degree " +
                          std::to_string(degree_));
  }
  auto [residue, stop] = strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

StabilizerChain StabilizerChain::tail(std::size_t from) const {
  StabilizerChain out(degree_);
  out.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(std::min(from, levels_.size())),
                     levels_.end());
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

std::vector<std::uint32_t> StabilizerChain::coordinates(const Permutation& g) const {
  std::vector<std::uint32_t> coords(levels_.size());
  Permutation h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    std::int32_t pos = level.orbit_index[h[level.base_point]];
    if (pos < 0) return {};
    coords[l] = static_cast<std::uint32_t>(pos);
    if (pos != 0) h = h * level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  if (!h.is_identity()) return {};
  return coords;
}

Permutation StabilizerChain::element_at(std::span<const std::uint32_t> coordinates) const {
  // g = u_{k-1} ... u_1 u_0
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    g = levels_[l].transversal[coordinates[l]] * g;
  }
  return g;
}

}  // namespace compa
