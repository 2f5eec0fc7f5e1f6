#include "compa/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "compa/actions.hpp"
#include "compa/error.hpp"
#include "compa/primes.hpp"

namespace compa {

namespace {

// Below the default enumeration limit the only order shared by two
// nonisomorphic simple groups is 20160 = |Alt(8)| = |PSL(3,4)|.
bool order_needs_refinement(const BigInt& order) { return order == 20160; }

bool is_prime_order(const BigInt& order) {
  return order <= std::numeric_limits<std::uint64_t>::max() &&
         is_prime(order.convert_to<std::uint64_t>());
}

/// Visits the first element (in scan order) of every conjugacy class whose
/// elements satisfy `accept`. `accept` must be constant on classes. Stops
/// when `visit` returns true.
void scan_class_representatives(const PermGroup& group, const Limits& limits, ScanOrder scan,
                                const std::function<bool(const Permutation&)>& accept,
                                const std::function<bool(const Permutation&)>& visit) {
  const std::uint64_t total = checked_order(group, limits.enumeration);
  ElementIndexer index_of(group);
  std::vector<bool> seen(total, false);
  std::vector<Permutation> frontier;
  for_each_element_until(
      group, limits.enumeration, scan == ScanOrder::reverse,
      [&](std::uint64_t index, const Permutation& g) {
        if (seen[index] || !accept(g)) return false;
        seen[index] = true;
        frontier.assign(1, g);
        for (std::size_t k = 0; k < frontier.size(); ++k) {
          for (const auto& s : group.generators()) {
            Permutation c = conjugate(frontier[k], s);
            auto i = index_of(c);
            if (seen[i]) continue;
            seen[i] = true;
            frontier.push_back(std::move(c));
          }
        }
        return visit(g);
      });
}

/// Smallest d dividing the order of g with g^d in `sub`.
std::uint64_t relative_order(const Permutation& g, const PermGroup& sub) {
  for (std::uint64_t d : divisors(g.order())) {
    if (sub.contains(g.pow(static_cast<std::int64_t>(d)))) return d;
  }
  return g.order();
}

FactorSignature::Refinement quotient_element_orders(const PermGroup& top, const PermGroup& bottom,
                                                    const Limits& limits) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for_each_element(top, limits.enumeration, false, [&](std::uint64_t, const Permutation& g) {
    ++counts[relative_order(g, bottom)];
  });
  const auto coset = bottom.order().convert_to<std::uint64_t>();
  FactorSignature::Refinement out;
  for (auto [ord, count] : counts) out.emplace_back(ord, count / coset);
  return out;
}

FactorSignature factor_of(const PermGroup& top, const PermGroup& bottom, const Limits& limits) {
  BigInt index = top.order() / bottom.order();
  if (is_prime_order(index)) return FactorSignature::abelian(index.convert_to<std::uint64_t>());
  std::optional<FactorSignature::Refinement> refinement;
  if (order_needs_refinement(index) && top.order() <= limits.enumeration) {
    refinement = quotient_element_orders(top, bottom, limits);
  }
  return FactorSignature::nonabelian(index, std::move(refinement));
}

/// Chain top = H_0 > H_1 > ... > bottom with prime indices, where bottom
/// contains the derived subgroup of top.
std::vector<PermGroup> abelian_section(const PermGroup& top, const PermGroup& bottom,
                                       ScanOrder scan) {
  std::vector<PermGroup> ascending = {bottom};
  std::vector<Permutation> gens = top.generators();
  if (scan == ScanOrder::reverse) std::reverse(gens.begin(), gens.end());
  while (ascending.back().order() < top.order()) {
    const PermGroup& current = ascending.back();
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const Permutation& g) { return !current.contains(g); });
    const std::uint64_t rel = relative_order(*it, current);
    const std::uint64_t q = prime_factors(rel).front();
    Permutation step = it->pow(static_cast<std::int64_t>(rel / q));
    std::vector<Permutation> next_gens = current.generators();
    next_gens.push_back(std::move(step));
    ascending.push_back(PermGroup::generated_by(top.degree(), next_gens));
  }
  return {ascending.rbegin(), ascending.rend()};
}

/// Chain top > ... > bottom with simple sections, for bottom normal in top.
std::vector<PermGroup> refine_normal_pair(const PermGroup& top, const PermGroup& bottom,
                                          const Limits& limits, ScanOrder scan) {
  if (top.order() == bottom.order()) return {top};
  if (is_prime_order(top.order() / bottom.order())) return {top, bottom};
  std::optional<PermGroup> middle;
  scan_class_representatives(
      top, limits, scan, [&](const Permutation& g) { return !bottom.contains(g); },
      [&](const Permutation& g) {
        std::vector<Permutation> seeds = bottom.generators();
        seeds.push_back(g);
        PermGroup candidate = normal_closure(top, seeds);
        if (candidate.order() == top.order()) return false;
        middle = std::move(candidate);
        return true;
      });
  if (!middle) return {top, bottom};
  auto upper = refine_normal_pair(top, *middle, limits, scan);
  auto lower = refine_normal_pair(*middle, bottom, limits, scan);
  upper.insert(upper.end(), lower.begin() + 1, lower.end());
  return upper;
}

}  // namespace

FactorSignature FactorSignature::abelian(std::uint64_t prime) {
  FactorSignature s;
  s.kind = Kind::abelian;
  s.order = prime;
  return s;
}

FactorSignature FactorSignature::nonabelian(BigInt order, std::optional<Refinement> refinement) {
  FactorSignature s;
  s.kind = Kind::nonabelian;
  s.order = std::move(order);
  s.refinement = std::move(refinement);
  return s;
}

std::string FactorSignature::to_string() const {
  if (is_abelian()) return "C" + order.str();
  return "simple(" + order.str() + ")";
}

bool operator==(const FactorSignature& a, const FactorSignature& b) {
  if (a.kind != b.kind || a.order != b.order) return false;
  if (a.refinement && b.refinement) return *a.refinement == *b.refinement;
  return true;
}

bool operator<(const FactorSignature& a, const FactorSignature& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.order != b.order) return a.order < b.order;
  return a.refinement < b.refinement;
}

bool multiset_contains(const FactorList& big, const FactorList& small) {
  return multiset_difference(big, small).has_value();
}

std::optional<FactorList> multiset_difference(const FactorList& big, const FactorList& small) {
  FactorList rest = big;
  for (const auto& f : small) {
    auto it = std::find(rest.begin(), rest.end(), f);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  std::sort(rest.begin(), rest.end());
  return rest;
}

FactorList multiset_union(FactorList a, const FactorList& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

FactorList signature_set(const FactorList& factors) {
  FactorList out;
  for (const auto& f : factors) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool set_contains(const FactorList& big_set, const FactorList& small_set) {
  return std::all_of(small_set.begin(), small_set.end(), [&](const FactorSignature& f) {
    return std::find(big_set.begin(), big_set.end(), f) != big_set.end();
  });
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> seeds;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  }
  return normal_closure(group, seeds);
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group, const Limits& limits,
                                                ScanOrder scan) {
  if (group.is_trivial()) return {};
  checked_order(group, limits.enumeration);
  if (is_prime_order(group.order())) return {group};
  std::vector<PermGroup> closures;
  scan_class_representatives(
      group, limits, scan, [](const Permutation& g) { return is_prime(g.order()); },
      [&](const Permutation& g) {
        const Permutation seed[] = {g};
        PermGroup n = normal_closure(group, seed);
        bool known = std::any_of(closures.begin(), closures.end(),
                                 [&](const PermGroup& c) { return same_group(c, n); });
        if (!known) closures.push_back(std::move(n));
        return false;
      });
  std::vector<PermGroup> out;
  for (const auto& n : closures) {
    bool minimal = std::none_of(closures.begin(), closures.end(), [&](const PermGroup& other) {
      return other.order() < n.order() && is_subgroup(other, n);
    });
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.generators() < b.generators();
  });
  return out;
}

std::optional<PermGroup> proper_normal_subgroup(const PermGroup& group, const Limits& limits,
                                                ScanOrder scan) {
  auto minimal = minimal_normal_subgroups(group, limits, scan);
  if (minimal.empty() || minimal.front().order() == group.order()) return std::nullopt;
  return minimal.front();
}

CompositionSeries composition_series(const PermGroup& group, const Limits& limits,
                                     ScanOrder scan) {
  checked_order(group, limits.order);
  checked_order(group, limits.enumeration);
  CompositionSeries series;
  series.chain.push_back(group);
  auto append = [&](const std::vector<PermGroup>& steps) {
    for (std::size_t i = 1; i < steps.size(); ++i) {
      series.factors.push_back(factor_of(steps[i - 1], steps[i], limits));
      series.chain.push_back(steps[i]);
    }
  };
  PermGroup current = group;
  while (!current.is_trivial()) {
    PermGroup derived = derived_subgroup(current);
    if (derived.order() < current.order()) {
      append(abelian_section(current, derived, scan));
      current = std::move(derived);
      continue;
    }
    auto normal = proper_normal_subgroup(current, limits, scan);
    if (!normal) {
      append({current, PermGroup::trivial(group.degree())});
      break;
    }
    append(refine_normal_pair(current, *normal, limits, scan));
    current = std::move(*normal);
  }
  return series;
}

FactorList composition_factors(const PermGroup& group, const Limits& limits, ScanOrder scan) {
  FactorList factors = composition_series(group, limits, scan).factors;
  std::sort(factors.begin(), factors.end());
  return factors;
}

PrimeSet comp_a(const FactorList& factors) {
  PrimeSet out;
  for (const auto& f : factors) {
    if (f.is_abelian()) out.insert(f.order.convert_to<std::uint64_t>());
  }
  return out;
}

PrimeSet comp_a(const PermGroup& group, const Limits& limits) {
  return comp_a(composition_series(group, limits).factors);
}

PermGroup socle(const PermGroup& group, const Limits& limits) {
  std::vector<Permutation> gens;
  for (const auto& n : minimal_normal_subgroups(group, limits)) {
    gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  }
  return PermGroup::generated_by(group.degree(), gens);
}

std::vector<std::uint64_t> order_prime_divisors(const PermGroup& group) {
  std::set<std::uint64_t> primes;
  for (const auto& level : group.chain().levels()) {
    for (auto p : prime_factors(level.orbit.size())) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

BigInt pi_product(const PermGroup& group) {
  BigInt out = 1;
  for (auto p : order_prime_divisors(group)) out *= p;
  return out;
}

BigInt exponent(const PermGroup& group, const Limits& limits) {
  std::uint64_t result = 1;
  for_each_element(group, limits.enumeration, false, [&](std::uint64_t, const Permutation& g) {
    result = std::lcm(result, g.order());
  });
  return result;
}

namespace {

json factor_strings(const FactorList& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(f.to_string());
  return out;
}

}  // namespace

CheckReport check_socle_primitive(const PermGroup& group, const Limits& limits) {
  if (!is_primitive(group)) throw InvalidArgument("check_socle_primitive requires a primitive group");
  const std::string lemma = "primitive_socle";
  try {
    auto minimal = minimal_normal_subgroups(group, limits);
    std::vector<Permutation> gens;
    bool all_transitive = true;
    for (const auto& n : minimal) {
      gens.insert(gens.end(), n.generators().begin(), n.generators().end());
      all_transitive = all_transitive && is_transitive(n);
    }
    PermGroup soc = PermGroup::generated_by(group.degree(), gens);
    FactorList factors = composition_factors(soc, limits);
    const bool one_type = std::all_of(factors.begin(), factors.end(),
                                      [&](const FactorSignature& f) { return f == factors.front(); });
    CheckReport report;
    report.lemma = lemma;
    report.group = describe(group);
    json w;
    w["minimal_normal_count"] = minimal.size();
    w["minimal_normal_transitive"] = all_transitive;
    w["socle_order"] = big(soc.order());
    w["socle_factors"] = factor_strings(factors);
    w["single_simple_type"] = one_type;
    const bool abelian = !factors.empty() && factors.front().is_abelian();
    w["abelian"] = abelian;
    bool ok = one_type && all_transitive && minimal.size() >= 1;
    if (abelian) {
      const auto p = factors.front().order.convert_to<std::uint64_t>();
      const auto s = factors.size();
      BigInt p_to_s = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s));
      bool elementary = true;
      for (std::size_t i = 0; i < soc.generators().size(); ++i) {
        const auto& a = soc.generators()[i];
        elementary = elementary && a.order() == p;
        for (std::size_t j = i + 1; j < soc.generators().size(); ++j) {
          elementary = elementary && a * soc.generators()[j] == soc.generators()[j] * a;
        }
      }
      BigInt quotient = group.order() / soc.order();
      BigInt bound = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s * s));
      w["prime"] = p;
      w["rank"] = s;
      w["elementary_abelian"] = elementary;
      w["order_equals_degree"] = p_to_s == soc.order() && soc.order() == group.degree();
      w["quotient_order"] = big(quotient);
      w["quotient_bound"] = big(bound);
      w["quotient_below_bound"] = quotient < bound;
      ok = ok && elementary && p_to_s == soc.order() && soc.order() == group.degree() &&
           quotient < bound;
    }
    report.witness = std::move(w);
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    return report;
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
}

CheckReport check_subdirect(const PermGroup& group, std::span<const Point> first_domain,
                            std::span<const Point> second_domain, const Limits& limits,
                            const PermGroup* first, const PermGroup* second) {
  const std::string lemma = "subdirect_product";
  std::vector<bool> covered(group.degree(), false);
  for (auto domain : {first_domain, second_domain}) {
    for (Point p : domain) {
      if (p >= group.degree() || covered[p]) {
        throw InvalidArgument("constituent domains must be disjoint subsets of the domain");
      }
      covered[p] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw InvalidArgument("constituent domains must cover the domain");
  }
  auto on_first = restrict_to_invariant_set(group, first_domain);
  auto on_second = restrict_to_invariant_set(group, second_domain);
  if (first && !same_group(on_first.image, *first)) {
    throw InvalidArgument("group does not project onto the first constituent");
  }
  if (second && !same_group(on_second.image, *second)) {
    throw InvalidArgument("group does not project onto the second constituent");
  }
  const PermGroup& d1 = on_first.image;
  const PermGroup& d2 = on_second.image;
  // N1 = G meet D1 is the kernel of the projection onto the second constituent.
  PermGroup n1_full = on_second.kernel;
  PermGroup n2_full = on_first.kernel;
  PermGroup n1 = restrict_to_invariant_set(n1_full, first_domain).image;
  PermGroup n2 = restrict_to_invariant_set(n2_full, second_domain).image;
  std::vector<Permutation> product_gens = n1_full.generators();
  product_gens.insert(product_gens.end(), n2_full.generators().begin(),
                      n2_full.generators().end());
  PermGroup product = PermGroup::generated_by(group.degree(), product_gens);

  CheckReport report;
  report.lemma = lemma;
  report.group = describe(group);
  json w;
  const BigInt q1 = d1.order() / n1.order();
  const BigInt q2 = d2.order() / n2.order();
  const BigInt q = group.order() / product.order();
  w["first_constituent_order"] = big(d1.order());
  w["second_constituent_order"] = big(d2.order());
  w["first_intersection_order"] = big(n1.order());
  w["second_intersection_order"] = big(n2.order());
  w["quotient_orders"] = json::array({big(q), big(q1), big(q2)});
  const bool direct = product.order() == n1.order() * n2.order() && is_normal(group, product);
  const bool normal = is_normal(d1, n1) && is_normal(d2, n2);
  const bool order_identity = group.order() == n1.order() * n2.order() * q1 && q == q1 && q1 == q2;
  w["intersection_product_normal"] = direct;
  w["intersections_normal_in_constituents"] = normal;
  w["order_identity"] = order_identity;
  bool ok = direct && normal && order_identity;
  try {
    FactorList fg = composition_factors(group, limits);
    FactorList f1 = composition_factors(d1, limits);
    FactorList f2 = composition_factors(d2, limits);
    FactorList fn1 = composition_factors(n1, limits);
    FactorList fn2 = composition_factors(n2, limits);
    auto top = multiset_difference(fg, multiset_union(fn1, fn2));
    auto top1 = multiset_difference(f1, fn1);
    auto top2 = multiset_difference(f2, fn2);
    const bool quotients_agree = top && top1 && top2 && *top == *top1 && *top1 == *top2;
    const bool contained = multiset_contains(multiset_union(f1, f2), fg);
    w["group_factors"] = factor_strings(fg);
    w["constituent_factors"] = factor_strings(multiset_union(f1, f2));
    w["quotient_factors"] = top1 ? factor_strings(*top1) : json(nullptr);
    w["quotient_factors_agree"] = quotients_agree;
    w["factors_contained"] = contained;
    ok = ok && quotients_agree && contained;
  } catch (const ResourceLimit& e) {
    report.witness = std::move(w);
    report.witness["reason"] = e.what();
    report.verdict = ok ? Verdict::skipped : Verdict::fail;
    return report;
  }
  report.witness = std::move(w);
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace compa
