#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compa/actions.hpp"
#include "compa/orbitals.hpp"
#include "compa/perm_group.hpp"
#include "compa/report.hpp"
#include "compa/structure.hpp"

namespace compa {

// Lemma checks. Precondition violations throw InvalidArgument; enumeration
// limits hit inside a check turn it into a SKIPPED report.

/// For a primitive group: every prime dividing |G_x| divides the order of
/// G_x induced on each suborbit of length at least 2.
CheckReport check_jordan(const PermGroup& group, const Limits& limits = {});

/// For a transitive group of odd order: pi(G) <= n^(log n) and
/// exponent(G) <= n^((log n)^2). Throws InvalidArgument on even order.
CheckReport check_odd_order(const PermGroup& group, const Limits& limits = {});

/// For a transitive group: |Comp_A(G) \ Comp_A(G_x)| < log n.
CheckReport check_comp_a_gap(const PermGroup& group, const Limits& limits = {});

/// |Comp_A(G)| <= log |G|.
CheckReport check_comp_a_order_bound(const PermGroup& group, const Limits& limits = {});

/// Every composition factor type of the kernel T(x) of G_x on the suborbit
/// occurs in (G_{x,y}) on the suborbit or in (G_{x,y'}) on the paired one.
CheckReport check_wielandt(const PermGroup& group, Point x, const Suborbit& delta,
                           const Limits& limits = {});

// Reductions.

enum class TransitiveCase { quasiprimitive_not_primitive, intransitive_normal };
std::string_view to_string(TransitiveCase c);

/// An imprimitive transitive group split into the action on a block system
/// (`block_group`, degree t) and the action of a subgroup inside one block
/// (`constituent`, degree m), with
///   |Comp_A(G_x)| <= |Comp_A(block_group_a)| + |Comp_A(constituent_b)| + slack * log n.
struct TransitiveReduction {
  TransitiveCase kind = TransitiveCase::intransitive_normal;
  std::size_t degree = 0;
  BlockSystem blocks;
  PermGroup block_group;         // transitive of degree t
  Point block_point = 0;         // the block through x
  PermGroup constituent;         // transitive of degree m
  Point constituent_point = 0;   // x inside its block
  std::size_t comp_a_stabilizer = 0;
  std::size_t comp_a_block_stabilizer = 0;
  std::size_t comp_a_constituent_stabilizer = 0;
  /// Order of the intransitive normal subgroup (intransitive case) or of the
  /// block stabilizer (quasiprimitive case).
  BigInt witness_subgroup_order = 1;
  BigInt kernel_order = 1;
  bool holds = false;

  std::size_t t() const { return blocks.block_count(); }
  std::size_t m() const { return blocks.block_size(); }
  /// Inequality with `slack` copies of log n, checked as exact integers.
  bool inequality_holds(unsigned slack) const;
  json certificate() const;
};

/// Prefers the intransitive-normal-subgroup case when the group is not
/// quasiprimitive. Throws InvalidArgument on primitive or intransitive input.
TransitiveReduction decompose_transitive(const PermGroup& group, const Limits& limits = {});

enum class PrimitiveCase { abelian_socle_bound, primitive_nonabelian_socle, imprimitive_suborbit_action };
std::string_view to_string(PrimitiveCase c);

/// A primitive nonregular group reduced through the action P of G_x on its
/// smallest nontrivial self-paired suborbit.
struct PrimitiveReduction {
  PrimitiveCase kind = PrimitiveCase::abelian_socle_bound;
  std::size_t degree = 0;
  Suborbit suborbit;
  PermGroup suborbit_action;             // P
  PermGroup suborbit_action_stabilizer;  // P_y, y the minimum of the suborbit
  PrimeSet comp_a_stabilizer;            // Comp_A(G_x)
  PrimeSet comp_a_action;                // Comp_A(P)
  PrimeSet comp_a_action_stabilizer;     // Comp_A(P_y)
  bool containment_holds = false;        // Comp_A(G_x) within Comp_A(P) ∪ Comp_A(P_y)
  bool action_within_stabilizer = false; // Comp_A(P) within Comp_A(P_y), nonabelian socle case
  bool holds = false;
  double bound = 0;                      // (log n)^2 in the abelian socle case
  std::optional<TransitiveReduction> nested;

  json certificate() const;
};

/// Throws InvalidArgument if the group is imprimitive, regular, or has no
/// nontrivial self-paired suborbit.
PrimitiveReduction decompose_primitive(const PermGroup& group, const Limits& limits = {});

// Recursive verification of |Comp_A(G_x)| < 2 (log n)^2.

enum class NodeKind { odd_order, regular, primitive_reduction, transitive_reduction, bound_direct };
std::string_view to_string(NodeKind kind);

struct TraceNode {
  NodeKind kind = NodeKind::bound_direct;
  std::size_t degree = 0;
  BigInt order = 1;
  std::optional<std::size_t> comp_a_stabilizer;
  double bound = 0;
  bool bound_holds = false;
  Verdict verdict = Verdict::pass;
  json certificate = json::object();
  std::vector<TraceNode> children;

  json to_json() const;
  static TraceNode from_json(const json& j);
};

struct DecompositionTrace {
  TraceNode root;

  /// Worst verdict over all nodes.
  Verdict verdict() const;
  std::size_t depth() const;
  std::size_t node_count() const;
  /// Whether some node has the given kind.
  bool contains(NodeKind kind) const;
  CheckReport report(std::string name = {}) const;
  json to_json() const { return root.to_json(); }
};

/// Throws InvalidArgument on intransitive input or degree < 2, and
/// ResourceLimit when |Comp_A(G_x)| of the root cannot be computed.
DecompositionTrace verify_stabilizer_bound(const PermGroup& group, const Limits& limits = {});

/// 2 (log t)^2 + 2 (log k)^2 + 2 log n <= 2 (log n)^2 with t the smaller
/// part and k = n / t.
bool combination_arithmetic_holds(std::size_t n, std::size_t t, std::size_t m);

// Distinct-prime cycle types in alternating groups.

struct DistinctPrimeCycles {
  std::uint64_t points = 0;  // the budget k; the cycles may fix some points
  std::size_t distinct_primes = 0;
  /// Cycle lengths, sorted; 2 appears twice when present.
  std::vector<std::uint64_t> cycle_type;
};

/// Prefix sums of odd primes, answering m(k) for every k <= k_max.
class DistinctPrimeTable {
 public:
  explicit DistinctPrimeTable(std::uint64_t k_max);
  std::size_t count(std::uint64_t k) const;
  DistinctPrimeCycles witness(std::uint64_t k) const;
  std::uint64_t k_max() const { return k_max_; }

 private:
  std::size_t odd_prefix_count(std::uint64_t budget) const;

  std::uint64_t k_max_;
  std::vector<std::uint64_t> odd_primes_;
  std::vector<std::uint64_t> prefix_;  // prefix_[j] = sum of the first j odd primes
};

/// Maximum number of distinct primes occurring as cycle lengths of an even
/// permutation of at most k points, with a witness cycle type.
DistinctPrimeCycles alt_max_distinct_primes(std::uint64_t k);

/// m > 2 k^(2/5), evaluated exactly as m^5 > 32 k^2.
bool exceeds_stabilizer_bound(std::uint64_t k, std::size_t m);

/// Least k0 with m(k) > 2 k^(2/5) for every k in [k0, k_max]; nullopt when
/// it fails at k_max. Throws InvalidArgument for k_max < 2.
std::optional<std::uint64_t> alternating_quotient_threshold(std::uint64_t k_max);

/// For primitive G and nontrivial normal N with G/N of order k!/2 and a
/// single nonabelian factor: N is transitive, and G does not satisfy both
/// k > (log n)^5 and m(k) > 2 k^(2/5). Throws InvalidArgument when the
/// preconditions fail.
CheckReport check_alternating_quotient(const PermGroup& group, const PermGroup& normal,
                                       const Limits& limits = {});

}  // namespace compa
