#pragma once

// Brute-force reference implementations. Nothing here touches the
// stabilizer chain: groups are explicit element sets built by closure.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using ElementSet = std::set<Perm>;

Perm identity(std::size_t n);
/// Left-to-right product: apply p, then q.
Perm mul(const Perm& p, const Perm& q);
Perm inv(const Perm& p);
std::uint64_t perm_order(const Perm& p);

/// All products of the generators. Throws std::length_error above `limit`.
ElementSet closure(std::size_t n, const std::vector<Perm>& gens, std::size_t limit = 200000);

/// Smallest normal subgroup of `group` containing `seeds`, as an element set.
ElementSet normal_closure(const ElementSet& group, const std::vector<Perm>& seeds);
ElementSet derived_subgroup(const ElementSet& group);
ElementSet stabilizer(const ElementSet& group, std::uint32_t x);
std::set<std::uint32_t> orbit(const ElementSet& group, std::uint32_t x);

/// Inclusion-minimal nontrivial normal subgroups.
std::vector<ElementSet> minimal_normal_subgroups(const ElementSet& group);

/// All normal subgroups, closed under joins.
std::vector<ElementSet> normal_subgroups(const ElementSet& group);

/// Factor orders of a composition series obtained by repeatedly descending
/// to a maximal normal subgroup. Sorted.
std::vector<std::uint64_t> composition_factor_orders(const ElementSet& group);

/// Primes p such that some composition factor is cyclic of order p.
std::set<std::uint64_t> comp_a(const ElementSet& group);

/// The images of the group elements on an invariant subset (as maps on the
/// sorted subset), deduplicated.
ElementSet induced_on(const ElementSet& group, const std::vector<std::uint32_t>& subset);

/// Every block system of a transitive group of small degree, as label
/// vectors normalised to first-occurrence order. Includes the trivial ones.
std::vector<std::vector<std::uint32_t>> block_systems(std::size_t n, const std::vector<Perm>& gens);

/// Max number of distinct primes in a multiset of primes with sum <= k and
/// an even number of 2s, by exhaustive search.
std::size_t max_distinct_primes(std::uint64_t k);

}  // namespace oracle
