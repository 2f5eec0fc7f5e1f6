#include "compa/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "compa/actions.hpp"
#include "compa/error.hpp"
#include "compa/generator_format.hpp"
#include "compa/primes.hpp"

namespace compa {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::frobenius: return "frobenius";
    case Family::johnson: return "johnson";
    case Family::psl2: return "psl2";
    case Family::wreath_imprimitive: return "wreath_imprimitive";
    case Family::wreath_power: return "wreath_power";
    case Family::regular_rep: return "regular_rep";
    case Family::coset_action: return "coset_action";
    case Family::diagonal: return "diagonal";
    case Family::random: return "random";
  }
  return "unknown";
}

// Spec factories and names.

namespace {

GroupSpec make(Family f, std::vector<std::uint64_t> params, std::vector<GroupSpec> components = {}) {
  GroupSpec s;
  s.family = f;
  s.params = std::move(params);
  s.components = std::move(components);
  return s;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) { return make(Family::cyclic, {n}); }
GroupSpec GroupSpec::dihedral(std::uint64_t n) { return make(Family::dihedral, {n}); }
GroupSpec GroupSpec::symmetric(std::uint64_t n) { return make(Family::symmetric, {n}); }
GroupSpec GroupSpec::alternating(std::uint64_t n) { return make(Family::alternating, {n}); }
GroupSpec GroupSpec::frobenius(std::uint64_t p, std::uint64_t d) { return make(Family::frobenius, {p, d}); }
GroupSpec GroupSpec::johnson(std::uint64_t n) { return make(Family::johnson, {n}); }
GroupSpec GroupSpec::psl2(std::uint64_t p) { return make(Family::psl2, {p}); }
GroupSpec GroupSpec::wreath_imprimitive(GroupSpec a, GroupSpec b) {
  return make(Family::wreath_imprimitive, {}, {std::move(a), std::move(b)});
}
GroupSpec GroupSpec::wreath_power(GroupSpec a, std::uint64_t b) {
  return make(Family::wreath_power, {b}, {std::move(a)});
}
GroupSpec GroupSpec::regular_rep(GroupSpec h) { return make(Family::regular_rep, {}, {std::move(h)}); }
GroupSpec GroupSpec::coset_action(GroupSpec h, std::string subgroup) {
  GroupSpec s = make(Family::coset_action, {}, {std::move(h)});
  s.subgroup = std::move(subgroup);
  return s;
}
GroupSpec GroupSpec::diagonal(GroupSpec t) { return make(Family::diagonal, {}, {std::move(t)}); }
GroupSpec GroupSpec::random(std::uint64_t degree, std::uint64_t order_cap, std::uint64_t seed) {
  return make(Family::random, {degree, order_cap, seed});
}

std::string GroupSpec::name() const {
  std::string out(to_string(family));
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ',';
    first = false;
  };
  for (const auto& c : components) {
    sep();
    out += c.name();
  }
  for (auto p : params) {
    sep();
    out += std::to_string(p);
  }
  if (!subgroup.empty()) {
    sep();
    out += subgroup;
  }
  return out + ')';
}

std::string GroupSpec::slug() const {
  std::string out(to_string(family));
  for (const auto& c : components) {
    std::string inner = c.slug();
    std::replace(inner.begin(), inner.end(), '_', '-');
    out += '_' + inner;
  }
  for (auto p : params) out += '_' + std::to_string(p);
  if (!subgroup.empty()) {
    std::string sub = "c";
    for (char ch : subgroup) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        sub += ch;
      } else if (sub.back() != '-') {
        sub += '-';
      }
    }
    while (sub.back() == '-') sub.pop_back();
    out += '_' + sub;
  }
  return out;
}

std::string GroupSpec::file_name(std::size_t degree) const {
  return slug() + '_' + std::to_string(degree) + ".grp";
}

// Constructions.

namespace {

std::uint64_t param(const GroupSpec& spec, std::size_t i) {
  if (spec.params.size() <= i) throw InvalidArgument("missing parameter for " + spec.name());
  return spec.params[i];
}

const GroupSpec& component(const GroupSpec& spec, std::size_t i) {
  if (spec.components.size() <= i) throw InvalidArgument("missing component for " + spec.name());
  return spec.components[i];
}

Permutation from_map(std::size_t n, const std::function<std::uint64_t(std::uint64_t)>& f) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Permutation cycle_on(std::size_t n, Point from, Point to) {
  std::vector<Point> c;
  for (Point i = from; i <= to; ++i) c.push_back(i);
  return Permutation::from_cycles(n, {c});
}

// Degrees stay far below 2^32, so the product fits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (a %= m; e; e >>= 1, a = mul_mod(a, a, m)) {
    if (e & 1) r = mul_mod(r, a, m);
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t k = 1;
  for (std::uint64_t x = a % p; x != 1; x = mul_mod(x, a, p)) ++k;
  return k;
}

PermGroup build_symmetric(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("symmetric(n) requires n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) gens.push_back(cycle_on(n, 0, static_cast<Point>(n - 1)));
  return PermGroup(n, std::move(gens));
}

PermGroup build_alternating(std::uint64_t n) {
  if (n < 3) throw InvalidArgument("alternating(n) requires n >= 3");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n >= 4) {
    gens.push_back(n % 2 == 1 ? cycle_on(n, 0, static_cast<Point>(n - 1))
                              : cycle_on(n, 1, static_cast<Point>(n - 1)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup build_frobenius(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p)) throw InvalidArgument("frobenius(p,d) requires prime p");
  if (d == 0 || (p - 1) % d != 0) throw InvalidArgument("frobenius(p,d) requires d | p-1");
  std::vector<Permutation> gens{from_map(p, [p](std::uint64_t x) { return (x + 1) % p; })};
  if (d > 1) {
    std::uint64_t a = 2;
    while (multiplicative_order(a, p) != d) ++a;
    gens.push_back(from_map(p, [p, a](std::uint64_t x) { return mul_mod(a, x, p); }));
  }
  return PermGroup(p, std::move(gens));
}

PermGroup build_johnson(std::uint64_t n) {
  if (n < 3) throw InvalidArgument("johnson(n) requires n >= 3");
  std::map<std::pair<Point, Point>, Point> index;
  std::vector<std::pair<Point, Point>> pairs;
  for (Point i = 0; i < n; ++i) {
    for (Point j = i + 1; j < n; ++j) {
      index[{i, j}] = static_cast<Point>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  const PermGroup sym = build_symmetric(n);
  std::vector<Permutation> gens;
  for (const auto& g : sym.generators()) {
    gens.push_back(from_map(pairs.size(), [&](std::uint64_t k) {
      Point a = g[pairs[k].first], b = g[pairs[k].second];
      return index.at({std::min(a, b), std::max(a, b)});
    }));
  }
  return PermGroup(pairs.size(), std::move(gens));
}

PermGroup build_psl2(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("psl2(p) requires prime p >= 5");
  const std::uint64_t inf = p;
  auto t = from_map(p + 1, [&](std::uint64_t z) { return z == inf ? inf : (z + 1) % p; });
  auto s = from_map(p + 1, [&](std::uint64_t z) -> std::uint64_t {
    if (z == inf) return 0;
    if (z == 0) return inf;
    return p - pow_mod(z, p - 2, p);
  });
  return PermGroup(p + 1, {t, s});
}

PermGroup build_wreath_imprimitive(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree(), n = da * db;
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    gens.push_back(from_map(n, [&](std::uint64_t x) { return x < da ? g[static_cast<Point>(x)] : x; }));
  }
  for (const auto& h : b.generators()) {
    gens.push_back(from_map(n, [&](std::uint64_t x) { return h[static_cast<Point>(x / da)] * da + x % da; }));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup build_wreath_power(const PermGroup& a, std::uint64_t b) {
  if (b < 2) throw InvalidArgument("wreath_power(A,b) requires b >= 2");
  const std::size_t d = a.degree();
  std::size_t n = 1;
  for (std::uint64_t i = 0; i < b; ++i) n *= d;
  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint64_t> out(b);
    for (auto& v : out) {
      v = x % d;
      x /= d;
    }
    return out;
  };
  auto number = [&](const std::vector<std::uint64_t>& ds) {
    std::uint64_t x = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) x = x * d + *it;
    return x;
  };
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    gens.push_back(from_map(n, [&](std::uint64_t x) {
      auto ds = digits(x);
      ds[0] = g[static_cast<Point>(ds[0])];
      return number(ds);
    }));
  }
  // Coordinate permutations: (0 1) and, for b >= 3, (0 1 ... b-1).
  std::vector<Permutation> coords{Permutation::from_cycles(b, {{0, 1}})};
  if (b >= 3) coords.push_back(cycle_on(b, 0, static_cast<Point>(b - 1)));
  for (const auto& pi : coords) {
    gens.push_back(from_map(n, [&](std::uint64_t x) {
      auto ds = digits(x);
      std::vector<std::uint64_t> out(b);
      for (std::uint64_t c = 0; c < b; ++c) out[pi[static_cast<Point>(c)]] = ds[c];
      return number(out);
    }));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup build_regular(const PermGroup& h) {
  const auto elems = elements(h);
  const ElementIndexer index(h);
  std::vector<Permutation> gens;
  for (const auto& s : h.generators()) {
    gens.push_back(from_map(elems.size(), [&](std::uint64_t i) { return index(elems[i] * s); }));
  }
  return PermGroup(elems.size(), std::move(gens));
}

PermGroup build_coset_action(const PermGroup& h, const std::string& subgroup) {
  std::vector<Permutation> sub_gens;
  std::size_t start = 0;
  while (start <= subgroup.size()) {
    const auto end = std::min(subgroup.find(';', start), subgroup.size());
    sub_gens.push_back(parse_cycles(std::string_view(subgroup).substr(start, end - start), h.degree()));
    start = end + 1;
  }
  const PermGroup k(h.degree(), sub_gens);
  if (!is_subgroup(k, h)) throw InvalidArgument("coset_action subgroup is not contained in the group");
  const auto k_elems = elements(k);
  const ElementIndexer index(h);
  auto canonical = [&](const Permutation& g) {
    std::uint64_t best = UINT64_MAX;
    for (const auto& x : k_elems) best = std::min(best, index(x * g));
    return best;
  };
  std::map<std::uint64_t, Point> id;
  std::vector<Permutation> reps{Permutation::identity(h.degree())};
  id[canonical(reps[0])] = 0;
  std::vector<std::vector<Point>> images(h.generators().size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t s = 0; s < h.generators().size(); ++s) {
      Permutation t = reps[c] * h.generators()[s];
      auto [it, inserted] = id.emplace(canonical(t), static_cast<Point>(reps.size()));
      if (inserted) reps.push_back(std::move(t));
      images[s].push_back(it->second);
    }
  }
  std::vector<Permutation> gens;
  for (auto& img : images) gens.emplace_back(std::move(img));
  return PermGroup(reps.size(), std::move(gens));
}

PermGroup build_diagonal(const PermGroup& t) {
  const auto elems = elements(t);
  const ElementIndexer index(t);
  std::vector<Permutation> gens;
  for (const auto& a : t.generators()) {
    const Permutation inv = a.inverse();
    gens.push_back(from_map(elems.size(), [&](std::uint64_t i) { return index(inv * elems[i]); }));
  }
  for (const auto& b : t.generators()) {
    gens.push_back(from_map(elems.size(), [&](std::uint64_t i) { return index(elems[i] * b); }));
  }
  return PermGroup(elems.size(), std::move(gens));
}

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

PermGroup build(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::cyclic: {
      const auto n = param(spec, 0);
      if (n < 1) throw InvalidArgument("cyclic(n) requires n >= 1");
      if (n == 1) return PermGroup::trivial(1);
      return PermGroup(n, {cycle_on(n, 0, static_cast<Point>(n - 1))});
    }
    case Family::dihedral: {
      const auto n = param(spec, 0);
      if (n < 3) throw InvalidArgument("dihedral(n) requires n >= 3");
      return PermGroup(n, {cycle_on(n, 0, static_cast<Point>(n - 1)),
                           from_map(n, [n](std::uint64_t x) { return (n - x) % n; })});
    }
    case Family::symmetric: return build_symmetric(param(spec, 0));
    case Family::alternating: return build_alternating(param(spec, 0));
    case Family::frobenius: return build_frobenius(param(spec, 0), param(spec, 1));
    case Family::johnson: return build_johnson(param(spec, 0));
    case Family::psl2: return build_psl2(param(spec, 0));
    case Family::wreath_imprimitive:
      return build_wreath_imprimitive(build(component(spec, 0)), build(component(spec, 1)));
    case Family::wreath_power: return build_wreath_power(build(component(spec, 0)), param(spec, 0));
    case Family::regular_rep: return build_regular(build(component(spec, 0)));
    case Family::coset_action: return build_coset_action(build(component(spec, 0)), spec.subgroup);
    case Family::diagonal: return build_diagonal(build(component(spec, 0)));
    case Family::random: {
      auto g = random_transitive(param(spec, 0), param(spec, 1), param(spec, 2));
      if (!g) throw InvalidArgument(spec.name() + " found no group within the retry budget");
      return std::move(*g);
    }
  }
  throw InvalidArgument("unknown family");
}

std::optional<BigInt> closed_form_order(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::cyclic: return BigInt(param(spec, 0));
    case Family::dihedral: return BigInt(2 * param(spec, 0));
    case Family::symmetric: return factorial(param(spec, 0));
    case Family::alternating: return factorial(param(spec, 0)) / 2;
    case Family::frobenius: return BigInt(param(spec, 0) * param(spec, 1));
    case Family::johnson: return factorial(param(spec, 0));
    case Family::psl2: {
      const BigInt p = param(spec, 0);
      return p * (p * p - 1) / 2;
    }
    case Family::wreath_imprimitive: {
      auto a = closed_form_order(component(spec, 0));
      auto b = closed_form_order(component(spec, 1));
      if (!a || !b) return std::nullopt;
      const auto deg_b = build(component(spec, 1)).degree();
      return boost::multiprecision::pow(*a, static_cast<unsigned>(deg_b)) * *b;
    }
    case Family::wreath_power: {
      auto a = closed_form_order(component(spec, 0));
      if (!a) return std::nullopt;
      const auto b = param(spec, 0);
      return boost::multiprecision::pow(*a, static_cast<unsigned>(b)) * factorial(b);
    }
    case Family::regular_rep: return closed_form_order(component(spec, 0));
    case Family::coset_action:
    case Family::diagonal:
    case Family::random: return std::nullopt;
  }
  return std::nullopt;
}

// Pseudorandom sampling.

Lcg::Lcg(std::uint64_t seed) : state_(seed) {}

std::uint32_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 32);
}

std::uint32_t Lcg::below(std::uint32_t bound) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(next()) * bound) >> 32);
}

namespace {

std::vector<Point> random_arrangement(Lcg& rng, std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(static_cast<std::uint32_t>(i))]);
  return v;
}

// Preserves the partition into consecutive blocks of the given size.
Permutation random_block_preserving(Lcg& rng, std::size_t n, std::size_t block) {
  const auto outer = random_arrangement(rng, n / block);
  std::vector<Point> images(n);
  for (std::size_t j = 0; j < n / block; ++j) {
    const auto inner = random_arrangement(rng, block);
    for (std::size_t i = 0; i < block; ++i) {
      images[j * block + i] = static_cast<Point>(outer[j] * block + inner[i]);
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

std::optional<PermGroup> random_transitive(std::size_t degree, std::uint64_t order_cap,
                                           std::uint64_t seed) {
  if (degree < 2) throw InvalidArgument("random_transitive requires degree >= 2");
  constexpr int kRetryBudget = 64;
  Lcg rng((seed << 16) ^ degree);
  std::vector<std::uint64_t> block_sizes;
  for (auto d : divisors(degree)) {
    if (d > 1 && d < degree) block_sizes.push_back(d);
  }
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const std::size_t count = 2 + rng.below(2);
    const bool blocked = attempt % 2 == 1 && !block_sizes.empty();
    const std::size_t block =
        blocked ? block_sizes[rng.below(static_cast<std::uint32_t>(block_sizes.size()))] : 1;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < count; ++i) {
      gens.push_back(blocked ? random_block_preserving(rng, degree, block)
                             : Permutation(random_arrangement(rng, degree)));
    }
    PermGroup g(degree, std::move(gens));
    if (g.order() <= order_cap && is_transitive(g)) return g;
  }
  return std::nullopt;
}

// Corpus enumeration.

namespace {

std::vector<GroupSpec> base_groups(std::uint64_t k) {
  std::vector<GroupSpec> out{GroupSpec::cyclic(k)};
  if (k >= 3) out.push_back(GroupSpec::symmetric(k));
  if (k >= 4) {
    out.push_back(GroupSpec::dihedral(k));
    out.push_back(GroupSpec::alternating(k));
  }
  return out;
}

std::vector<GroupSpec> family_specs(std::uint64_t d) {
  std::vector<GroupSpec> out{GroupSpec::cyclic(d)};
  if (d >= 3) out.push_back(GroupSpec::dihedral(d));
  out.push_back(GroupSpec::symmetric(d));
  if (d >= 3) out.push_back(GroupSpec::alternating(d));
  if (d >= 3 && is_prime(d)) {
    for (auto e : divisors(d - 1)) {
      if (e >= 2) out.push_back(GroupSpec::frobenius(d, e));
    }
  }
  for (std::uint64_t k = 4; k * (k - 1) / 2 <= d; ++k) {
    if (k * (k - 1) / 2 == d) out.push_back(GroupSpec::johnson(k));
  }
  if (d >= 6 && is_prime(d - 1)) out.push_back(GroupSpec::psl2(d - 1));
  for (auto a : divisors(d)) {
    const auto b = d / a;
    if (a < 2 || b < 2) continue;
    for (const auto& sa : base_groups(a)) {
      for (const auto& sb : base_groups(b)) out.push_back(GroupSpec::wreath_imprimitive(sa, sb));
    }
  }
  for (std::uint64_t a = 2; a * a <= d; ++a) {
    if (a * a == d) {
      for (const auto& sa : base_groups(a)) out.push_back(GroupSpec::wreath_power(sa, 2));
    }
    if (a * a * a == d) {
      for (const auto& sa : base_groups(a)) out.push_back(GroupSpec::wreath_power(sa, 3));
    }
  }
  // Regular representations of the smaller noncyclic family members of order d.
  for (std::uint64_t k = 3; k < d; ++k) {
    for (auto& h : family_specs(k)) {
      if (h.family == Family::cyclic || h.family == Family::regular_rep) continue;
      if (auto order = closed_form_order(h); order && *order == d) {
        out.push_back(GroupSpec::regular_rep(std::move(h)));
      }
    }
  }
  if (d == 12) out.push_back(GroupSpec::coset_action(GroupSpec::alternating(5), "(0 1 2 3 4)"));
  return out;
}

using DedupKey = std::tuple<std::size_t, std::string, std::vector<std::vector<Point>>>;

DedupKey dedup_key(const PermGroup& g) {
  std::vector<std::vector<Point>> images;
  for (const auto& p : g.generators()) {
    if (!p.is_identity()) images.emplace_back(p.images().begin(), p.images().end());
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return {g.degree(), g.order().str(), std::move(images)};
}

}  // namespace

std::vector<CorpusEntry> enumerate_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> out;
  std::set<DedupKey> seen;
  auto add = [&](GroupSpec spec, PermGroup group) {
    if (group.order() > options.max_order) return;
    if (seen.insert(dedup_key(group)).second) out.push_back({std::move(spec), std::move(group)});
  };
  for (std::uint64_t d = 2; d <= options.max_degree; ++d) {
    for (auto& spec : family_specs(d)) {
      if (auto order = closed_form_order(spec); order && *order > options.max_order) continue;
      PermGroup g = build(spec);
      add(std::move(spec), std::move(g));
    }
    for (std::size_t i = 0; i < options.seed_count; ++i) {
      const auto seed = options.seed0 + i;
      if (auto g = random_transitive(d, options.max_order, seed)) {
        add(GroupSpec::random(d, options.max_order, seed), std::move(*g));
      }
    }
  }
  return out;
}

std::vector<std::filesystem::path> export_corpus(const std::vector<CorpusEntry>& entries,
                                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& e : entries) {
    const auto path = dir / e.spec.file_name(e.group.degree());
    std::ofstream file(path);
    if (!file) throw Error("cannot write " + path.string());
    file << "# " << e.spec.name() << "\n"
         << format_generator_document(e.group.degree(), e.group.generators());
    written.push_back(path);
  }
  return written;
}

// Subdirect instances.

namespace {

Permutation side_by_side(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(a.images().begin(), a.images().end());
  for (Point p : b.images()) images.push_back(static_cast<Point>(p + a.degree()));
  return Permutation(std::move(images));
}

// Schreier generators of the even part, coset representatives {1, o}.
std::vector<Permutation> even_part_generators(const PermGroup& h) {
  std::optional<Permutation> odd;
  for (const auto& g : h.generators()) {
    if (!g.is_even()) {
      odd = g;
      break;
    }
  }
  if (!odd) return h.generators();
  const Permutation odd_inv = odd->inverse();
  std::vector<Permutation> out;
  for (const auto& s : h.generators()) {
    if (s.is_even()) {
      out.push_back(s);
      out.push_back(*odd * s * odd_inv);
    } else {
      out.push_back(s * odd_inv);
      out.push_back(*odd * s);
    }
  }
  return out;
}

Permutation first_odd(const PermGroup& h) {
  for (const auto& g : h.generators()) {
    if (!g.is_even()) return g;
  }
  throw InvalidArgument("group has no odd generator");
}

std::vector<Point> range(std::size_t from, std::size_t to) {
  std::vector<Point> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(static_cast<Point>(i));
  return v;
}

SubdirectInstance on_two_domains(std::string name, std::size_t n1, std::size_t n2,
                                 std::vector<Permutation> gens) {
  return {std::move(name), PermGroup::generated_by(n1 + n2, gens), range(0, n1), range(n1, n1 + n2)};
}

SubdirectInstance diagonal_instance(const GroupSpec& spec) {
  const PermGroup h = build(spec);
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) gens.push_back(side_by_side(g, g));
  return on_two_domains("diagonal_pair(" + spec.name() + ")", h.degree(), h.degree(), std::move(gens));
}

SubdirectInstance product_instance(const GroupSpec& a, const GroupSpec& b) {
  const PermGroup ga = build(a), gb = build(b);
  std::vector<Permutation> gens;
  for (const auto& g : ga.generators()) gens.push_back(side_by_side(g, Permutation::identity(gb.degree())));
  for (const auto& g : gb.generators()) gens.push_back(side_by_side(Permutation::identity(ga.degree()), g));
  return on_two_domains("product(" + a.name() + "," + b.name() + ")", ga.degree(), gb.degree(),
                        std::move(gens));
}

SubdirectInstance sign_fiber_instance(const GroupSpec& a, const GroupSpec& b) {
  const PermGroup ga = build(a), gb = build(b);
  const auto ida = Permutation::identity(ga.degree());
  const auto idb = Permutation::identity(gb.degree());
  std::vector<Permutation> gens;
  for (const auto& g : even_part_generators(ga)) gens.push_back(side_by_side(g, idb));
  for (const auto& g : even_part_generators(gb)) gens.push_back(side_by_side(ida, g));
  gens.push_back(side_by_side(first_odd(ga), first_odd(gb)));
  return on_two_domains("sign_fiber(" + a.name() + "," + b.name() + ")", ga.degree(), gb.degree(),
                        std::move(gens));
}

SubdirectInstance quotient_graph_instance(const GroupSpec& spec) {
  const PermGroup h = build(spec);
  const BlockSystem blocks = minimal_block_systems(h).front();
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) {
    std::vector<Point> img(blocks.block_count());
    for (std::size_t j = 0; j < img.size(); ++j) img[j] = blocks.block_of[g[blocks.blocks[j].front()]];
    gens.push_back(side_by_side(g, Permutation(std::move(img))));
  }
  return on_two_domains("quotient_graph(" + spec.name() + ")", h.degree(), blocks.block_count(),
                        std::move(gens));
}

}  // namespace

std::vector<SubdirectInstance> subdirect_instances() {
  using S = GroupSpec;
  std::vector<SubdirectInstance> out;
  for (const auto& s : {S::cyclic(2), S::cyclic(3), S::cyclic(4), S::symmetric(3), S::dihedral(4),
                        S::dihedral(5), S::alternating(4), S::symmetric(4), S::alternating(5)}) {
    out.push_back(diagonal_instance(s));
  }
  const std::vector<std::pair<S, S>> products{{S::cyclic(2), S::cyclic(2)},
                                              {S::cyclic(3), S::symmetric(3)},
                                              {S::symmetric(3), S::symmetric(3)},
                                              {S::alternating(4), S::cyclic(3)},
                                              {S::dihedral(4), S::cyclic(2)}};
  for (const auto& [a, b] : products) out.push_back(product_instance(a, b));
  const std::vector<std::pair<S, S>> fibers{{S::symmetric(3), S::symmetric(3)},
                                            {S::symmetric(4), S::symmetric(3)},
                                            {S::symmetric(4), S::symmetric(4)},
                                            {S::dihedral(4), S::symmetric(3)},
                                            {S::symmetric(3), S::cyclic(2)},
                                            {S::symmetric(4), S::cyclic(2)},
                                            {S::dihedral(4), S::dihedral(4)}};
  for (const auto& [a, b] : fibers) out.push_back(sign_fiber_instance(a, b));
  for (const auto& s : {S::cyclic(4), S::dihedral(4), S::cyclic(6), S::dihedral(6),
                        S::wreath_imprimitive(S::cyclic(2), S::cyclic(3)),
                        S::wreath_imprimitive(S::cyclic(3), S::cyclic(2)),
                        S::wreath_imprimitive(S::symmetric(3), S::cyclic(2))}) {
    out.push_back(quotient_graph_instance(s));
  }
  return out;
}

}  // namespace compa
