#pragma once

#include <vector>

#include "compa/compa.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Perm to_oracle(const compa::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<oracle::Perm> oracle_generators(const compa::PermGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.generators()) out.push_back(to_oracle(p));
  return out;
}

inline oracle::ElementSet oracle_elements(const compa::PermGroup& g) {
  return oracle::closure(g.degree(), oracle_generators(g));
}

inline compa::Permutation cyc(std::size_t n, std::vector<std::vector<compa::Point>> cycles) {
  return compa::Permutation::from_cycles(n, cycles);
}

inline compa::PermGroup group(std::size_t n, std::vector<std::vector<std::vector<compa::Point>>> gens) {
  std::vector<compa::Permutation> perms;
  for (auto& c : gens) perms.push_back(compa::Permutation::from_cycles(n, c));
  return compa::PermGroup(n, std::move(perms));
}

/// Default corpus, built once per test binary.
inline const std::vector<compa::CorpusEntry>& corpus() {
  static const auto entries = compa::enumerate_corpus();
  return entries;
}

}  // namespace testing_support
