#include <algorithm>

#include "bounds.hpp"
#include "compa/error.hpp"
#include "compa/primes.hpp"
#include "compa/theorems.hpp"

namespace compa {

DistinctPrimeTable::DistinctPrimeTable(std::uint64_t k_max) : k_max_(k_max) {
  prefix_.push_back(0);
  for (auto p : primes_up_to(k_max)) {
    if (p == 2) continue;
    if (prefix_.back() + p > k_max) break;
    odd_primes_.push_back(p);
    prefix_.push_back(prefix_.back() + p);
  }
}

std::size_t DistinctPrimeTable::odd_prefix_count(std::uint64_t budget) const {
  return static_cast<std::size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), budget) -
                                  prefix_.begin()) - 1;
}

std::size_t DistinctPrimeTable::count(std::uint64_t k) const {
  if (k > k_max_) throw InvalidArgument("k exceeds the table range");
  const std::size_t odd_only = odd_prefix_count(k);
  const std::size_t with_two = k >= 4 ? 1 + odd_prefix_count(k - 4) : 0;
  return std::max(odd_only, with_two);
}

DistinctPrimeCycles DistinctPrimeTable::witness(std::uint64_t k) const {
  if (k > k_max_) throw InvalidArgument("k exceeds the table range");
  DistinctPrimeCycles out;
  out.points = k;
  const std::size_t odd_only = odd_prefix_count(k);
  const std::size_t with_two = k >= 4 ? 1 + odd_prefix_count(k - 4) : 0;
  // An even permutation needs the 2-cycles in pairs.
  if (odd_only >= with_two) {
    out.distinct_primes = odd_only;
    out.cycle_type.assign(odd_primes_.begin(), odd_primes_.begin() + static_cast<std::ptrdiff_t>(odd_only));
  } else {
    out.distinct_primes = with_two;
    out.cycle_type = {2, 2};
    out.cycle_type.insert(out.cycle_type.end(), odd_primes_.begin(),
                          odd_primes_.begin() + static_cast<std::ptrdiff_t>(with_two - 1));
  }
  return out;
}

DistinctPrimeCycles alt_max_distinct_primes(std::uint64_t k) {
  return DistinctPrimeTable(k).witness(k);
}

bool exceeds_stabilizer_bound(std::uint64_t k, std::size_t m) {
  const BigInt lhs = boost::multiprecision::pow(BigInt(m), 5);
  return lhs > BigInt(32) * BigInt(k) * BigInt(k);
}

std::optional<std::uint64_t> alternating_quotient_threshold(std::uint64_t k_max) {
  if (k_max < 2) throw InvalidArgument("threshold scan needs k_max >= 2");
  const DistinctPrimeTable table(k_max);
  if (!exceeds_stabilizer_bound(k_max, table.count(k_max))) return std::nullopt;
  std::uint64_t k = k_max;
  while (k > 2 && exceeds_stabilizer_bound(k - 1, table.count(k - 1))) --k;
  return k;
}

namespace {

// k with k!/2 == q, k >= 5.
std::optional<std::uint64_t> alternating_degree(const BigInt& q) {
  BigInt half = 60;
  for (std::uint64_t k = 5; half <= q; ++k) {
    if (half == q) return k;
    half *= k + 1;
  }
  return std::nullopt;
}

}  // namespace

CheckReport check_alternating_quotient(const PermGroup& group, const PermGroup& normal,
                                       const Limits& limits) {
  if (!is_primitive(group)) throw InvalidArgument("check_alternating_quotient requires a primitive group");
  if (normal.degree() != group.degree()) throw InvalidArgument("normal subgroup has a different degree");
  if (normal.is_trivial()) throw InvalidArgument("normal subgroup must be nontrivial");
  if (!is_subgroup(normal, group) || !is_normal(group, normal)) {
    throw InvalidArgument("subgroup is not normal in the group");
  }
  const BigInt quotient = group.order() / normal.order();
  const auto k = alternating_degree(quotient);
  if (!k) throw InvalidArgument("quotient order is not k!/2 for any k >= 5");

  const std::string lemma = "alternating_quotient";
  FactorList difference;
  try {
    auto diff = multiset_difference(composition_factors(group, limits), composition_factors(normal, limits));
    if (diff) difference = std::move(*diff);
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
  if (difference.size() != 1 || difference.front().is_abelian() || difference.front().order != quotient) {
    throw InvalidArgument("quotient is not simple of order k!/2");
  }

  const bool transitive = is_transitive(normal);
  const double log_n = detail::log2_of(group.degree());
  const double log5 = std::pow(log_n, 5);
  const bool large = detail::strictly_below(log5, static_cast<double>(*k));
  const DistinctPrimeCycles cycles = alt_max_distinct_primes(*k);
  const bool exceeds = exceeds_stabilizer_bound(*k, cycles.distinct_primes);
  const bool consistent = !(large && exceeds);

  CheckReport report;
  report.lemma = lemma;
  report.group = describe(group);
  report.witness = {{"k", *k},
                    {"quotient_order", big(quotient)},
                    {"quotient_identification", "order k!/2 with a single nonabelian composition factor"},
                    {"normal_order", big(normal.order())},
                    {"normal_transitive", transitive},
                    {"log2_degree_pow5", bound_value(log5)},
                    {"k_exceeds_log_bound", large},
                    {"distinct_primes", cycles.distinct_primes},
                    {"cycle_type", cycles.cycle_type},
                    {"distinct_primes_exceed_bound", exceeds},
                    {"consistent", consistent}};
  report.verdict = transitive && consistent ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace compa
