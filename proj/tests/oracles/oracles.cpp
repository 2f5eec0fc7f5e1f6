#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::uint64_t perm_order(const Perm& p) {
  const Perm id = identity(p.size());
  Perm x = p;
  std::uint64_t k = 1;
  while (x != id) {
    x = mul(x, p);
    ++k;
  }
  return k;
}

ElementSet closure(std::size_t n, const std::vector<Perm>& gens, std::size_t limit) {
  ElementSet seen{identity(n)};
  std::deque<Perm> queue{identity(n)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = mul(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > limit) throw std::length_error("closure exceeds limit");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

namespace {

std::vector<Perm> as_vector(const ElementSet& s) { return {s.begin(), s.end()}; }

bool subset_of(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ElementSet normal_closure(const ElementSet& group, const std::vector<Perm>& seeds) {
  const std::size_t n = group.begin()->size();
  std::vector<Perm> conjugates;
  for (const auto& s : seeds) {
    for (const auto& g : group) conjugates.push_back(mul(mul(inv(g), s), g));
  }
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return closure(n, conjugates);
}

ElementSet derived_subgroup(const ElementSet& group) {
  const std::size_t n = group.begin()->size();
  std::set<Perm> comms;
  for (const auto& a : group) {
    for (const auto& b : group) comms.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
  }
  return closure(n, as_vector(comms));
}

ElementSet stabilizer(const ElementSet& group, std::uint32_t x) {
  ElementSet out;
  for (const auto& g : group) {
    if (g[x] == x) out.insert(g);
  }
  return out;
}

std::set<std::uint32_t> orbit(const ElementSet& group, std::uint32_t x) {
  std::set<std::uint32_t> out;
  for (const auto& g : group) out.insert(g[x]);
  return out;
}

std::vector<ElementSet> minimal_normal_subgroups(const ElementSet& group) {
  std::vector<ElementSet> closures;
  const Perm id = identity(group.begin()->size());
  for (const auto& g : group) {
    if (g == id) continue;
    ElementSet c = normal_closure(group, {g});
    if (std::find(closures.begin(), closures.end(), c) == closures.end()) closures.push_back(std::move(c));
  }
  std::vector<ElementSet> out;
  for (const auto& c : closures) {
    bool minimal = true;
    for (const auto& d : closures) {
      if (d.size() < c.size() && subset_of(d, c)) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> normal_subgroups(const ElementSet& group) {
  const std::size_t n = group.begin()->size();
  const Perm id = identity(n);
  std::set<ElementSet> all{ElementSet{id}};
  std::vector<ElementSet> frontier{ElementSet{id}};
  std::vector<ElementSet> singles;
  for (const auto& g : group) {
    ElementSet c = normal_closure(group, {g});
    if (all.insert(c).second) {
      frontier.push_back(c);
    }
    singles.push_back(std::move(c));
  }
  std::sort(singles.begin(), singles.end());
  singles.erase(std::unique(singles.begin(), singles.end()), singles.end());
  // Joins: every normal subgroup is a product of normal closures of elements.
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& a : frontier) {
      for (const auto& b : singles) {
        if (subset_of(b, a)) continue;
        std::vector<Perm> gens = as_vector(a);
        gens.insert(gens.end(), b.begin(), b.end());
        ElementSet j = closure(n, gens);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<std::uint64_t> composition_factor_orders(const ElementSet& group) {
  std::vector<std::uint64_t> out;
  ElementSet current = group;
  while (current.size() > 1) {
    const auto normals = normal_subgroups(current);
    const ElementSet* best = nullptr;
    for (const auto& s : normals) {
      if (s.size() == current.size()) continue;
      if (!best || s.size() > best->size()) best = &s;
    }
    // A largest proper normal subgroup is maximal normal.
    out.push_back(current.size() / best->size());
    current = *best;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::set<std::uint64_t> comp_a(const ElementSet& group) {
  std::set<std::uint64_t> out;
  for (auto f : composition_factor_orders(group)) {
    if (is_prime_small(f)) out.insert(f);
  }
  return out;
}

ElementSet induced_on(const ElementSet& group, const std::vector<std::uint32_t>& subset) {
  std::map<std::uint32_t, std::uint32_t> local;
  for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = static_cast<std::uint32_t>(i);
  ElementSet out;
  for (const auto& g : group) {
    Perm img(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) img[i] = local.at(g[subset[i]]);
    out.insert(std::move(img));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> block_systems(std::size_t n, const std::vector<Perm>& gens) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> labels(n);
  // Restricted growth strings enumerate every set partition once.
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
    if (i == n) {
      for (const auto& g : gens) {
        std::map<std::uint32_t, std::uint32_t> image_label;
        for (std::size_t x = 0; x < n; ++x) {
          auto [it, fresh] = image_label.emplace(labels[x], labels[g[x]]);
          if (!fresh && it->second != labels[g[x]]) return;
        }
      }
      out.push_back(labels);
      return;
    }
    for (std::uint32_t l = 0; l <= used && l < n; ++l) {
      labels[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  if (n > 0) {
    labels[0] = 0;
    rec(1, 1);
  }
  return out;
}

std::size_t max_distinct_primes(std::uint64_t k) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= k; ++p) {
    if (is_prime_small(p)) primes.push_back(p);
  }
  std::size_t best = 0;
  // Choose a multiplicity for each prime in turn.
  std::function<void(std::size_t, std::uint64_t, std::size_t, std::uint64_t)> rec =
      [&](std::size_t i, std::uint64_t budget, std::size_t distinct, std::uint64_t twos) {
        if (i == primes.size()) {
          if (twos % 2 == 0) best = std::max(best, distinct);
          return;
        }
        const auto p = primes[i];
        for (std::uint64_t mult = 0; mult * p <= budget; ++mult) {
          rec(i + 1, budget - mult * p, distinct + (mult > 0 ? 1 : 0), p == 2 ? mult : twos);
        }
      };
  rec(0, k, 0, 0);
  return best;
}

}  // namespace oracle
