#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "compa/perm_group.hpp"
#include "compa/report.hpp"
#include "compa/types.hpp"

namespace compa {

/// Isomorphism type of a composition factor, as far as this library
/// distinguishes them: cyclic of prime order, or nonabelian simple of a given
/// order. Nonabelian orders shared by two nonisomorphic simple groups carry
/// the element-order frequencies of the factor as a refinement.
struct FactorSignature {
  enum class Kind { abelian, nonabelian };
  using Refinement = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

  Kind kind = Kind::abelian;
  BigInt order = 1;
  std::optional<Refinement> refinement;

  static FactorSignature abelian(std::uint64_t prime);
  static FactorSignature nonabelian(BigInt order, std::optional<Refinement> refinement = {});

  bool is_abelian() const { return kind == Kind::abelian; }
  /// "C2", "C3", ... or "simple(60)".
  std::string to_string() const;

  /// Kinds and orders agree, and refinements agree when both are present.
  friend bool operator==(const FactorSignature& a, const FactorSignature& b);
  /// Total order used to sort factor lists.
  friend bool operator<(const FactorSignature& a, const FactorSignature& b);
};

using FactorList = std::vector<FactorSignature>;
using PrimeSet = std::set<std::uint64_t>;

/// Every factor of `small` can be matched to a distinct factor of `big`.
bool multiset_contains(const FactorList& big, const FactorList& small);
/// big minus small, or nullopt when small is not contained in big.
std::optional<FactorList> multiset_difference(const FactorList& big, const FactorList& small);
FactorList multiset_union(FactorList a, const FactorList& b);
/// Distinct signatures.
FactorList signature_set(const FactorList& factors);
bool set_contains(const FactorList& big_set, const FactorList& small_set);

struct CompositionSeries {
  /// G = chain[0] > chain[1] > ... > chain.back() = 1, each normal in the previous.
  std::vector<PermGroup> chain;
  /// factors[i] is the type of chain[i] / chain[i + 1].
  FactorList factors;
};

/// Order in which elements are scanned by the normal-subgroup searches. The
/// resulting factor multiset does not depend on it.
enum class ScanOrder { forward, reverse };

/// Subgroup generated by the commutators, as a normal closure.
PermGroup derived_subgroup(const PermGroup& group);

/// Inclusion-minimal nontrivial normal subgroups, sorted by order and then by
/// generators. Each is the normal closure of a prime-order element; one
/// representative per conjugacy class is scanned. Throws ResourceLimit when
/// the order exceeds limits.enumeration.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group, const Limits& limits = {},
                                                ScanOrder scan = ScanOrder::forward);

/// A minimal normal subgroup when it is proper, nullopt when the group is
/// simple or trivial.
std::optional<PermGroup> proper_normal_subgroup(const PermGroup& group, const Limits& limits = {},
                                                ScanOrder scan = ScanOrder::forward);

/// Descends through the derived series in prime-index steps; perfect
/// sections are split at minimal normal subgroups and refined by normal
/// closures. Throws ResourceLimit above limits.enumeration.
CompositionSeries composition_series(const PermGroup& group, const Limits& limits = {},
                                     ScanOrder scan = ScanOrder::forward);

/// Factor multiset, sorted.
FactorList composition_factors(const PermGroup& group, const Limits& limits = {},
                               ScanOrder scan = ScanOrder::forward);

/// Primes p such that C_p is a composition factor.
PrimeSet comp_a(const PermGroup& group, const Limits& limits = {});
PrimeSet comp_a(const FactorList& factors);

PermGroup socle(const PermGroup& group, const Limits& limits = {});

/// Distinct primes dividing the group order, read off the orbit lengths of
/// the stabilizer chain.
std::vector<std::uint64_t> order_prime_divisors(const PermGroup& group);

/// Product of the distinct primes dividing |G|.
BigInt pi_product(const PermGroup& group);

/// Least common multiple of element orders, by enumeration.
BigInt exponent(const PermGroup& group, const Limits& limits = {});

/// Socle of a primitive group: a power of one simple type, and when
/// abelian, elementary abelian of order p^s = n with |G / Soc| < p^(s^2).
/// Throws InvalidArgument on imprimitive input; SKIPPED on resource limits.
CheckReport check_socle_primitive(const PermGroup& group, const Limits& limits = {});

/// Subdirect structure of a group acting on two disjoint invariant sets
/// that cover the domain. The constituents are the projections, or
/// `first`/`second` when given (on the re-indexed sets); a projection that
/// is not onto its constituent throws InvalidArgument.
CheckReport check_subdirect(const PermGroup& group, std::span<const Point> first_domain,
                            std::span<const Point> second_domain, const Limits& limits = {},
                            const PermGroup* first = nullptr, const PermGroup* second = nullptr);

}  // namespace compa
