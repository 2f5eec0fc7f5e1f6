#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "compa/perm_group.hpp"

namespace compa {

enum class Family {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  frobenius,
  johnson,
  psl2,
  wreath_imprimitive,
  wreath_power,
  regular_rep,
  coset_action,
  diagonal,
  random,
};

std::string_view to_string(Family family);

/// A named construction. Nested specs go in `components`; `subgroup` holds
/// cycle-notation generators for coset_action, separated by ';'.
struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec> components;
  std::string subgroup;

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec alternating(std::uint64_t n);
  static GroupSpec frobenius(std::uint64_t p, std::uint64_t d);
  static GroupSpec johnson(std::uint64_t n);
  static GroupSpec psl2(std::uint64_t p);
  static GroupSpec wreath_imprimitive(GroupSpec a, GroupSpec b);
  static GroupSpec wreath_power(GroupSpec a, std::uint64_t b);
  static GroupSpec regular_rep(GroupSpec h);
  /// Right cosets of the subgroup generated by `subgroup` in h.
  static GroupSpec coset_action(GroupSpec h, std::string subgroup);
  /// T x T acting on T by x -> a^-1 x b.
  static GroupSpec diagonal(GroupSpec t);
  static GroupSpec random(std::uint64_t degree, std::uint64_t order_cap, std::uint64_t seed);

  /// "wreath_imprimitive(cyclic(2),cyclic(2))"
  std::string name() const;
  /// "wreath_imprimitive_cyclic-2_cyclic-2"
  std::string slug() const;
  /// "<slug>_<degree>.grp"
  std::string file_name(std::size_t degree) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws InvalidArgument on invalid parameters.
PermGroup build(const GroupSpec& spec);

/// Order predicted by the construction; nullopt for random, coset_action
/// and diagonal specs.
std::optional<BigInt> closed_form_order(const GroupSpec& spec);

/// Linear congruential stream (Knuth's MMIX constants), top 32 bits out.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed);
  std::uint32_t next();
  /// Uniform-ish value in [0, bound).
  std::uint32_t below(std::uint32_t bound);

 private:
  std::uint64_t state_;
};

/// Transitive group of order <= order_cap from 2-3 pseudorandom generators,
/// or nullopt once the retry budget runs out.
std::optional<PermGroup> random_transitive(std::size_t degree, std::uint64_t order_cap,
                                           std::uint64_t seed);

struct CorpusEntry {
  GroupSpec spec;
  PermGroup group;
};

struct CorpusOptions {
  std::size_t max_degree = 12;
  std::uint64_t max_order = 1'000'000;
  std::size_t seed_count = 5;
  std::uint64_t seed0 = 1;
};

std::vector<CorpusEntry> enumerate_corpus(const CorpusOptions& options = {});

/// Writes one generator file per entry; returns the paths written.
std::vector<std::filesystem::path> export_corpus(const std::vector<CorpusEntry>& entries,
                                                 const std::filesystem::path& dir);

/// A group on first ⊔ second that projects onto both constituents.
struct SubdirectInstance {
  std::string name;
  PermGroup group;
  std::vector<Point> first;
  std::vector<Point> second;
};

std::vector<SubdirectInstance> subdirect_instances();

}  // namespace compa
