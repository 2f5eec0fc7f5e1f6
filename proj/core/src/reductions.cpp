#include <algorithm>

#include "bounds.hpp"
#include "compa/error.hpp"
#include "compa/theorems.hpp"

namespace compa {

using detail::log2_of;

namespace {

// c <= a + b + slack * log n, as 2^(c - a - b) <= n^slack.
bool within_log_slack(std::size_t c, std::size_t a, std::size_t b, std::size_t n, unsigned slack) {
  if (c <= a + b) return true;
  return detail::pow2_at_most(c - a - b, boost::multiprecision::pow(BigInt(n), slack));
}

std::size_t local_index(const std::vector<Point>& sorted, Point x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

}  // namespace

std::string_view to_string(TransitiveCase c) {
  switch (c) {
    case TransitiveCase::quasiprimitive_not_primitive: return "quasiprimitive_not_primitive";
    case TransitiveCase::intransitive_normal: return "intransitive_normal";
  }
  return "unknown";
}

std::string_view to_string(PrimitiveCase c) {
  switch (c) {
    case PrimitiveCase::abelian_socle_bound: return "abelian_socle_bound";
    case PrimitiveCase::primitive_nonabelian_socle: return "primitive_nonabelian_socle";
    case PrimitiveCase::imprimitive_suborbit_action: return "imprimitive_suborbit_action";
  }
  return "unknown";
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::odd_order: return "odd_order";
    case NodeKind::regular: return "regular";
    case NodeKind::primitive_reduction: return "primitive_reduction";
    case NodeKind::transitive_reduction: return "transitive_reduction";
    case NodeKind::bound_direct: return "bound_direct";
  }
  return "unknown";
}

bool TransitiveReduction::inequality_holds(unsigned slack) const {
  return within_log_slack(comp_a_stabilizer, comp_a_block_stabilizer, comp_a_constituent_stabilizer,
                          degree, slack);
}

json TransitiveReduction::certificate() const {
  return {{"case", to_string(kind)},
          {"degree", degree},
          {"t", t()},
          {"m", m()},
          {"block", blocks.blocks.at(block_point)},
          {"block_point", block_point},
          {"constituent_point", constituent_point},
          {"comp_a_stabilizer", comp_a_stabilizer},
          {"comp_a_block_stabilizer", comp_a_block_stabilizer},
          {"comp_a_constituent_stabilizer", comp_a_constituent_stabilizer},
          {"log2_degree", bound_value(log2_of(degree))},
          {"witness_subgroup_order", big(witness_subgroup_order)},
          {"kernel_order", big(kernel_order)},
          {"holds", holds}};
}

TransitiveReduction decompose_transitive(const PermGroup& group, const Limits& limits) {
  if (!is_transitive(group)) throw InvalidArgument("decompose_transitive requires a transitive group");
  if (is_primitive(group)) throw InvalidArgument("decompose_transitive requires an imprimitive group");
  constexpr Point x = 0;

  TransitiveReduction r;
  r.degree = group.degree();
  r.comp_a_stabilizer = comp_a(point_stabilizer(group, x), limits).size();

  std::optional<PermGroup> intransitive;
  for (auto& n : minimal_normal_subgroups(group, limits)) {
    if (!is_transitive(n)) {
      intransitive = std::move(n);
      break;
    }
  }

  PermGroup inside;  // the subgroup acting on the block through x
  if (intransitive) {
    r.kind = TransitiveCase::intransitive_normal;
    r.witness_subgroup_order = intransitive->order();
    r.blocks = BlockSystem::from_blocks(group.degree(), orbits(*intransitive));
    InducedAction act = block_action(group, r.blocks);
    r.block_group = std::move(act.image);
    r.kernel_order = act.kernel.order();
    inside = std::move(act.kernel);
  } else {
    r.kind = TransitiveCase::quasiprimitive_not_primitive;
    r.blocks = maximal_block_containing(group, x);
    InducedAction act = block_action(group, r.blocks);
    r.block_group = std::move(act.image);
    r.kernel_order = act.kernel.order();
    inside = block_stabilizer(group, r.blocks, r.blocks.block_of[x]);
    r.witness_subgroup_order = inside.order();
  }
  r.block_point = r.blocks.block_of[x];
  const auto& block = r.blocks.blocks[r.block_point];
  r.constituent = restrict_to_invariant_set(inside, block).image;
  r.constituent_point = static_cast<Point>(local_index(block, x));

  r.comp_a_block_stabilizer = comp_a(point_stabilizer(r.block_group, r.block_point), limits).size();
  r.comp_a_constituent_stabilizer =
      comp_a(point_stabilizer(r.constituent, r.constituent_point), limits).size();
  r.holds = is_transitive(r.block_group) && is_transitive(r.constituent) && r.inequality_holds(1);
  if (r.kind == TransitiveCase::quasiprimitive_not_primitive) {
    r.holds = r.holds && r.kernel_order == 1 && is_primitive(r.block_group);
  }
  return r;
}

json PrimitiveReduction::certificate() const {
  json c = {{"case", to_string(kind)},
            {"degree", degree},
            {"suborbit_representative", suborbit.representative},
            {"suborbit_size", suborbit.size()},
            {"suborbit_action_order", big(suborbit_action.order())},
            {"comp_a_stabilizer", detail::prime_list(comp_a_stabilizer)},
            {"comp_a_action", detail::prime_list(comp_a_action)},
            {"comp_a_action_stabilizer", detail::prime_list(comp_a_action_stabilizer)},
            {"containment_holds", containment_holds},
            {"holds", holds}};
  switch (kind) {
    case PrimitiveCase::abelian_socle_bound:
      c["bound"] = bound_value(bound);
      break;
    case PrimitiveCase::primitive_nonabelian_socle:
      c["action_within_stabilizer"] = action_within_stabilizer;
      break;
    case PrimitiveCase::imprimitive_suborbit_action:
      c["nested"] = nested->certificate();
      break;
  }
  return c;
}

PrimitiveReduction decompose_primitive(const PermGroup& group, const Limits& limits) {
  if (!is_primitive(group)) throw InvalidArgument("decompose_primitive requires a primitive group");
  constexpr Point x = 0;
  const PermGroup stab = point_stabilizer(group, x);
  if (stab.is_trivial()) throw InvalidArgument("decompose_primitive requires a nonregular group");
  auto delta = smallest_self_paired_nontrivial(group, x);
  if (!delta) throw InvalidArgument("group has no nontrivial self-paired suborbit");

  PrimitiveReduction r;
  r.degree = group.degree();
  r.suborbit = *delta;
  r.suborbit_action = restrict_to_invariant_set(stab, delta->points).image;
  r.suborbit_action_stabilizer = point_stabilizer(r.suborbit_action, 0);
  r.comp_a_stabilizer = comp_a(stab, limits);
  r.comp_a_action = comp_a(r.suborbit_action, limits);
  r.comp_a_action_stabilizer = comp_a(r.suborbit_action_stabilizer, limits);
  PrimeSet either = r.comp_a_action;
  either.insert(r.comp_a_action_stabilizer.begin(), r.comp_a_action_stabilizer.end());
  r.containment_holds = detail::includes(either, r.comp_a_stabilizer);

  const std::size_t c = r.comp_a_stabilizer.size();
  const double log_n = log2_of(group.degree());
  if (r.suborbit_action.degree() >= 2 && is_primitive(r.suborbit_action)) {
    const FactorList soc = composition_factors(socle(r.suborbit_action, limits), limits);
    if (!soc.empty() && soc.front().is_abelian()) {
      r.kind = PrimitiveCase::abelian_socle_bound;
      r.bound = log_n * log_n;
      r.holds = detail::at_most(static_cast<double>(c), r.bound);
    } else {
      r.kind = PrimitiveCase::primitive_nonabelian_socle;
      r.action_within_stabilizer = detail::includes(r.comp_a_action_stabilizer, r.comp_a_action);
      r.holds = c <= r.comp_a_action_stabilizer.size() && r.action_within_stabilizer;
    }
  } else {
    r.kind = PrimitiveCase::imprimitive_suborbit_action;
    r.nested = decompose_transitive(r.suborbit_action, limits);
    r.holds = r.nested->holds &&
              within_log_slack(c, r.nested->comp_a_block_stabilizer,
                               r.nested->comp_a_constituent_stabilizer, group.degree(), 2);
  }
  r.holds = r.holds && r.containment_holds;
  return r;
}

bool combination_arithmetic_holds(std::size_t n, std::size_t t, std::size_t m) {
  const std::size_t smaller = std::min(t, m);
  if (smaller < 2 || n < 2 * smaller) return false;
  const double log_n = log2_of(n);
  const double a = log2_of(smaller);
  const double b = log_n - a;  // log of k = n / t'
  return detail::at_most(2 * a * a + 2 * b * b + 2 * log_n, 2 * log_n * log_n);
}

// Trace construction.

namespace {

TraceNode build_node(const PermGroup& group, const Limits& limits, bool root);

void add_children(TraceNode& node, const PermGroup& x_group, const PermGroup& y_group,
                  const Limits& limits) {
  node.children.push_back(build_node(x_group, limits, false));
  node.children.push_back(build_node(y_group, limits, false));
}

// Re-checks c <= c_X + c_Y + slack * log n from the values recorded in the children.
void check_combination(TraceNode& node, unsigned slack, std::size_t t, std::size_t m) {
  const auto& cx = node.children[0].comp_a_stabilizer;
  const auto& cy = node.children[1].comp_a_stabilizer;
  if (!cx || !cy) {
    node.certificate["combination_holds"] = nullptr;
    node.verdict = combine(node.verdict, Verdict::skipped);
  } else {
    const bool ok = within_log_slack(*node.comp_a_stabilizer, *cx, *cy, node.degree, slack);
    node.certificate["combination_holds"] = ok;
    if (!ok) node.verdict = Verdict::fail;
  }
  const bool arithmetic = combination_arithmetic_holds(node.degree, t, m);
  node.certificate["arithmetic_holds"] = arithmetic;
  if (!arithmetic) node.verdict = Verdict::fail;
}

TraceNode build_node(const PermGroup& group, const Limits& limits, bool root) {
  TraceNode node;
  node.degree = group.degree();
  node.order = group.order();
  const double log_n = log2_of(node.degree);
  node.bound = 2 * log_n * log_n;

  const PermGroup stab = point_stabilizer(group, 0);
  try {
    node.comp_a_stabilizer = comp_a(stab, limits).size();
  } catch (const ResourceLimit& e) {
    if (root) throw;
    node.kind = NodeKind::bound_direct;
    node.verdict = Verdict::skipped;
    node.certificate = {{"reason", e.what()}};
    return node;
  }
  const std::size_t c = *node.comp_a_stabilizer;
  node.bound_holds = detail::strictly_below(static_cast<double>(c), node.bound);
  node.verdict = node.bound_holds ? Verdict::pass : Verdict::fail;

  try {
    if (is_primitive(group)) {
      if (stab.is_trivial()) {
        node.kind = NodeKind::regular;
        return node;
      }
      if (group.order() % 2 != 0) {
        node.kind = NodeKind::odd_order;
        const auto primes = order_prime_divisors(group).size();
        const bool ok = detail::at_most(static_cast<double>(primes), log_n * log_n);
        node.certificate = {{"distinct_primes", primes},
                            {"bound", bound_value(log_n * log_n)},
                            {"holds", ok}};
        if (!ok) node.verdict = Verdict::fail;
        return node;
      }
      node.kind = NodeKind::primitive_reduction;
      if (!smallest_self_paired_nontrivial(group, 0)) {
        node.certificate = {{"reason", "even order but no nontrivial self-paired suborbit"}};
        node.verdict = Verdict::fail;
        return node;
      }
      PrimitiveReduction red = decompose_primitive(group, limits);
      node.certificate = red.certificate();
      if (!red.holds) node.verdict = Verdict::fail;
      if (red.kind == PrimitiveCase::primitive_nonabelian_socle) {
        node.children.push_back(build_node(red.suborbit_action, limits, false));
        const auto& cp = node.children[0].comp_a_stabilizer;
        if (cp) {
          const bool ok = c <= *cp;
          node.certificate["combination_holds"] = ok;
          if (!ok) node.verdict = Verdict::fail;
        } else {
          node.certificate["combination_holds"] = nullptr;
          node.verdict = combine(node.verdict, Verdict::skipped);
        }
      } else if (red.kind == PrimitiveCase::imprimitive_suborbit_action) {
        add_children(node, red.nested->block_group, red.nested->constituent, limits);
        check_combination(node, 2, red.nested->t(), red.nested->m());
      }
    } else {
      node.kind = NodeKind::transitive_reduction;
      TransitiveReduction red = decompose_transitive(group, limits);
      node.certificate = red.certificate();
      if (!red.holds) node.verdict = Verdict::fail;
      add_children(node, red.block_group, red.constituent, limits);
      check_combination(node, 1, red.t(), red.m());
    }
  } catch (const ResourceLimit& e) {
    node.kind = NodeKind::bound_direct;
    node.children.clear();
    node.certificate = {{"reason", e.what()}};
    node.verdict = node.bound_holds ? Verdict::skipped : Verdict::fail;
  }
  for (const auto& child : node.children) node.verdict = combine(node.verdict, child.verdict);
  return node;
}

NodeKind node_kind_from_string(std::string_view text) {
  for (auto k : {NodeKind::odd_order, NodeKind::regular, NodeKind::primitive_reduction,
                 NodeKind::transitive_reduction, NodeKind::bound_direct}) {
    if (to_string(k) == text) return k;
  }
  throw InvalidArgument("unknown trace node kind: " + std::string(text));
}

}  // namespace

json TraceNode::to_json() const {
  json j = {{"kind", to_string(kind)},
            {"degree", degree},
            {"order", big(order)},
            {"comp_a_stabilizer", comp_a_stabilizer ? json(*comp_a_stabilizer) : json(nullptr)},
            {"bound", bound_value(bound)},
            {"bound_holds", bound_holds},
            {"verdict", to_string(verdict)},
            {"certificate", certificate}};
  json kids = json::array();
  for (const auto& c : children) kids.push_back(c.to_json());
  j["children"] = std::move(kids);
  return j;
}

TraceNode TraceNode::from_json(const json& j) {
  TraceNode node;
  node.kind = node_kind_from_string(j.at("kind").get<std::string>());
  node.degree = j.at("degree").get<std::size_t>();
  node.order = BigInt(j.at("order").get<std::string>());
  if (!j.at("comp_a_stabilizer").is_null()) {
    node.comp_a_stabilizer = j.at("comp_a_stabilizer").get<std::size_t>();
  }
  node.bound = j.at("bound").get<double>();
  node.bound_holds = j.at("bound_holds").get<bool>();
  node.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  node.certificate = j.at("certificate");
  for (const auto& c : j.at("children")) node.children.push_back(from_json(c));
  return node;
}

namespace {

template <typename F>
void visit(const TraceNode& node, std::size_t depth, F&& f) {
  f(node, depth);
  for (const auto& c : node.children) visit(c, depth + 1, f);
}

}  // namespace

Verdict DecompositionTrace::verdict() const {
  Verdict v = Verdict::pass;
  visit(root, 1, [&](const TraceNode& n, std::size_t) { v = combine(v, n.verdict); });
  return v;
}

std::size_t DecompositionTrace::depth() const {
  std::size_t d = 0;
  visit(root, 1, [&](const TraceNode&, std::size_t depth) { d = std::max(d, depth); });
  return d;
}

std::size_t DecompositionTrace::node_count() const {
  std::size_t count = 0;
  visit(root, 1, [&](const TraceNode&, std::size_t) { ++count; });
  return count;
}

bool DecompositionTrace::contains(NodeKind kind) const {
  bool found = false;
  visit(root, 1, [&](const TraceNode& n, std::size_t) { found = found || n.kind == kind; });
  return found;
}

CheckReport DecompositionTrace::report(std::string name) const {
  CheckReport r;
  r.lemma = "stabilizer_comp_a_bound";
  r.group = GroupDescriptor{std::move(name), root.degree, root.order};
  r.verdict = verdict();
  r.witness = {{"depth", depth()}, {"nodes", node_count()}, {"trace", root.to_json()}};
  return r;
}

DecompositionTrace verify_stabilizer_bound(const PermGroup& group, const Limits& limits) {
  if (group.degree() < 2) throw InvalidArgument("verify_stabilizer_bound requires degree at least 2");
  if (!is_transitive(group)) throw InvalidArgument("verify_stabilizer_bound requires a transitive group");
  return DecompositionTrace{build_node(group, limits, true)};
}

}  // namespace compa
