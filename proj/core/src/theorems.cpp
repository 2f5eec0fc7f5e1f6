#include "compa/theorems.hpp"

#include <algorithm>

#include "bounds.hpp"
#include "compa/error.hpp"
#include "compa/primes.hpp"

namespace compa {

using detail::log2_of;

CheckReport check_jordan(const PermGroup& group, const Limits& limits) {
  (void)limits;
  if (!is_primitive(group)) throw InvalidArgument("check_jordan requires a primitive group");
  const PermGroup stab = point_stabilizer(group, 0);
  const auto primes = order_prime_divisors(stab);

  CheckReport report;
  report.lemma = "jordan_prime_divisibility";
  report.group = describe(group);
  json w;
  w["base_point"] = 0;
  w["stabilizer_order"] = big(stab.order());
  w["stabilizer_primes"] = primes;
  json subs = json::array();
  bool ok = true;
  for (const auto& s : suborbits(group, 0)) {
    if (s.size() < 2) continue;
    const BigInt image_order = restrict_to_invariant_set(stab, s.points).image.order();
    bool divides = true;
    for (auto p : primes) divides = divides && image_order % p == 0;
    ok = ok && divides;
    subs.push_back({{"representative", s.representative},
                    {"size", s.size()},
                    {"image_order", big(image_order)},
                    {"primes_divide", divides}});
  }
  w["suborbits"] = std::move(subs);
  report.witness = std::move(w);
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  return report;
}

CheckReport check_odd_order(const PermGroup& group, const Limits& limits) {
  if (!is_transitive(group)) throw InvalidArgument("check_odd_order requires a transitive group");
  if (group.order() % 2 == 0) throw InvalidArgument("check_odd_order requires a group of odd order");
  const std::string lemma = "odd_order_bounds";
  try {
    const BigInt pi = pi_product(group);
    const BigInt exp = exponent(group, limits);
    const double log_n = log2_of(group.degree());
    const double log_pi = log2_of(pi);
    const double log_exp = log2_of(exp);
    const double pi_bound = log_n * log_n;
    const double exp_bound = log_n * log_n * log_n;
    const bool pi_ok = detail::at_most(log_pi, pi_bound);
    const bool exp_ok = detail::at_most(log_exp, exp_bound);

    CheckReport report;
    report.lemma = lemma;
    report.group = describe(group);
    report.witness = {{"pi", big(pi)},
                      {"exponent", big(exp)},
                      {"log2_pi", bound_value(log_pi)},
                      {"log2_pi_bound", bound_value(pi_bound)},
                      {"log2_exponent", bound_value(log_exp)},
                      {"log2_exponent_bound", bound_value(exp_bound)},
                      {"pi_within_bound", pi_ok},
                      {"exponent_within_bound", exp_ok}};
    report.verdict = pi_ok && exp_ok ? Verdict::pass : Verdict::fail;
    return report;
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
}

CheckReport check_comp_a_gap(const PermGroup& group, const Limits& limits) {
  if (!is_transitive(group)) throw InvalidArgument("check_comp_a_gap requires a transitive group");
  const std::string lemma = "stabilizer_comp_a_gap";
  try {
    const PrimeSet whole = comp_a(group, limits);
    const PrimeSet stab = comp_a(point_stabilizer(group, 0), limits);
    const PrimeSet diff = detail::set_difference(whole, stab);
    // |diff| < log n  <=>  2^|diff| < n
    const bool ok = detail::pow2_at_most(diff.size(), group.degree() - 1);

    CheckReport report;
    report.lemma = lemma;
    report.group = describe(group);
    report.witness = {{"comp_a_group", detail::prime_list(whole)},
                      {"comp_a_stabilizer", detail::prime_list(stab)},
                      {"difference", detail::prime_list(diff)},
                      {"log2_degree", bound_value(log2_of(group.degree()))},
                      {"holds", ok}};
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    return report;
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
}

CheckReport check_comp_a_order_bound(const PermGroup& group, const Limits& limits) {
  const std::string lemma = "comp_a_order_bound";
  try {
    const PrimeSet primes = comp_a(group, limits);
    const bool ok = detail::pow2_at_most(primes.size(), group.order());
    CheckReport report;
    report.lemma = lemma;
    report.group = describe(group);
    report.witness = {{"comp_a", detail::prime_list(primes)},
                      {"log2_order", bound_value(log2_of(group.order()))},
                      {"holds", ok}};
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    return report;
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
}

CheckReport check_wielandt(const PermGroup& group, Point x, const Suborbit& delta,
                           const Limits& limits) {
  const WielandtData data = wielandt_data(group, x, delta);
  const std::string lemma = "wielandt_kernel_factors";
  try {
    const FactorList kernel = signature_set(composition_factors(data.kernel, limits));
    const FactorList first = signature_set(composition_factors(data.two_point_image, limits));
    const FactorList second = signature_set(composition_factors(data.two_point_paired_image, limits));
    const FactorList either = signature_set(multiset_union(first, second));
    const bool ok = set_contains(either, kernel);

    CheckReport report;
    report.lemma = lemma;
    report.group = describe(group);
    report.witness = {{"base_point", x},
                      {"suborbit_representative", data.y},
                      {"paired_representative", data.y_paired},
                      {"suborbit_size", delta.size()},
                      {"kernel_order", big(data.kernel.order())},
                      {"image_order", big(data.image.order())},
                      {"two_point_image_order", big(data.two_point_image.order())},
                      {"two_point_paired_image_order", big(data.two_point_paired_image.order())},
                      {"kernel_factors", detail::factor_list(kernel)},
                      {"two_point_factors", detail::factor_list(first)},
                      {"two_point_paired_factors", detail::factor_list(second)},
                      {"contained", ok}};
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    return report;
  } catch (const ResourceLimit& e) {
    return skipped_report(lemma, group, e.what());
  }
}

}  // namespace compa
