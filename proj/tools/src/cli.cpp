#include "compa_cli/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace compa::cli {

namespace {

json primes_json(const std::optional<PrimeSet>& primes) {
  if (!primes) return nullptr;
  json out = json::array();
  for (auto p : *primes) out.push_back(p);
  return out;
}

std::optional<PrimeSet> primes_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  PrimeSet out;
  for (const auto& p : j) out.insert(p.get<std::uint64_t>());
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::string format_set(const std::optional<PrimeSet>& primes) {
  if (!primes) return "(not computed)";
  std::string out = "{";
  for (auto p : *primes) out += (out.size() > 1 ? ", " : "") + std::to_string(p);
  return out + "}";
}

std::string format_blocks(const BlockSystem& blocks) {
  std::string out = "{";
  for (const auto& b : blocks.blocks) {
    if (out.size() > 1) out += ",";
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += "}";
  }
  return out + "}";
}

std::string format_bound(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

CheckReport named(CheckReport report, const std::string& name) {
  report.group.name = name;
  return report;
}

}  // namespace

// AnalysisReport

Verdict AnalysisReport::verdict() const {
  Verdict v = Verdict::pass;
  for (const auto& c : checks) v = combine(v, c.verdict);
  if (trace) v = combine(v, DecompositionTrace{*trace}.verdict());
  if (root_limit) v = combine(v, Verdict::skipped);
  return v;
}

json AnalysisReport::to_json() const {
  json blocks = json::array();
  for (const auto& b : minimal_block_systems) blocks.push_back(b.blocks);
  json subs = json::array();
  for (const auto& s : suborbits) {
    subs.push_back({{"representative", s.representative}, {"size", s.size}, {"self_paired", s.self_paired}});
  }
  json reports = json::array();
  for (const auto& c : checks) reports.push_back(c.to_json());
  return {{"group", descriptor_json(group)},
          {"transitive", transitive},
          {"primitive", optional_json(primitive)},
          {"quasiprimitive", optional_json(quasiprimitive)},
          {"minimal_block_systems", std::move(blocks)},
          {"suborbits", std::move(subs)},
          {"comp_a_group", primes_json(comp_a_group)},
          {"comp_a_stabilizer", primes_json(comp_a_stabilizer)},
          {"checks", std::move(reports)},
          {"trace", trace ? trace->to_json() : json(nullptr)},
          {"root_limit", optional_json(root_limit)},
          {"verdict", to_string(verdict())}};
}

AnalysisReport AnalysisReport::from_json(const json& j) {
  AnalysisReport r;
  r.group = descriptor_from_json(j.at("group"));
  r.transitive = j.at("transitive").get<bool>();
  r.primitive = optional_from_json<bool>(j.at("primitive"));
  r.quasiprimitive = optional_from_json<bool>(j.at("quasiprimitive"));
  for (const auto& b : j.at("minimal_block_systems")) {
    r.minimal_block_systems.push_back(
        BlockSystem::from_blocks(r.group.degree, b.get<std::vector<std::vector<Point>>>()));
  }
  for (const auto& s : j.at("suborbits")) {
    r.suborbits.push_back({s.at("representative").get<Point>(), s.at("size").get<std::size_t>(),
                           s.at("self_paired").get<bool>()});
  }
  r.comp_a_group = primes_from_json(j.at("comp_a_group"));
  r.comp_a_stabilizer = primes_from_json(j.at("comp_a_stabilizer"));
  for (const auto& c : j.at("checks")) r.checks.push_back(CheckReport::from_json(c));
  if (!j.at("trace").is_null()) r.trace = TraceNode::from_json(j.at("trace"));
  r.root_limit = optional_from_json<std::string>(j.at("root_limit"));
  return r;
}

AnalysisReport analyze_group(const PermGroup& group, std::string name, const Limits& limits) {
  AnalysisReport r;
  r.group = describe(group, std::move(name));
  r.transitive = is_transitive(group);
  const bool nontrivial_domain = r.transitive && group.degree() >= 2;
  if (nontrivial_domain) {
    r.primitive = is_primitive(group);
    try {
      r.quasiprimitive = is_quasiprimitive(group, limits);
    } catch (const ResourceLimit&) {
    }
    if (!*r.primitive) r.minimal_block_systems = minimal_block_systems(group);
    for (const auto& s : suborbits(group, 0)) r.suborbits.push_back({s.representative, s.size(), s.self_paired});
  }
  try {
    r.comp_a_group = comp_a(group, limits);
  } catch (const ResourceLimit&) {
  }
  if (r.transitive) {
    try {
      r.comp_a_stabilizer = comp_a(point_stabilizer(group, 0), limits);
    } catch (const ResourceLimit&) {
    }
  }

  r.checks.push_back(check_comp_a_order_bound(group, limits));
  if (nontrivial_domain) {
    r.checks.push_back(check_comp_a_gap(group, limits));
    if (group.order() % 2 != 0) r.checks.push_back(check_odd_order(group, limits));
    if (*r.primitive) {
      r.checks.push_back(check_jordan(group, limits));
      r.checks.push_back(check_socle_primitive(group, limits));
      if (!point_stabilizer(group, 0).is_trivial()) {
        if (auto delta = smallest_self_paired_nontrivial(group, 0)) {
          r.checks.push_back(check_wielandt(group, 0, *delta, limits));
        }
      }
    }
    try {
      r.trace = verify_stabilizer_bound(group, limits).root;
    } catch (const ResourceLimit& e) {
      r.root_limit = e.what();
    }
  }
  for (auto& c : r.checks) c.group.name = r.group.name;
  return r;
}

// Verification over the corpus.

void LemmaCounts::add(Verdict v) {
  switch (v) {
    case Verdict::pass: ++pass; break;
    case Verdict::fail: ++fail; break;
    case Verdict::skipped: ++skipped; break;
  }
}

bool VerifySummary::any_failure() const {
  for (const auto& [lemma, c] : counts) {
    if (c.fail > 0) return true;
  }
  return false;
}

json VerifySummary::to_json() const {
  json lemmas = json::object();
  for (const auto& [lemma, c] : counts) {
    lemmas[lemma] = {{"PASS", c.pass}, {"FAIL", c.fail}, {"SKIPPED", c.skipped}};
  }
  json ex = json::array();
  for (const auto& r : exceptions) ex.push_back(r.to_json());
  return {{"options",
           {{"max_degree", options.max_degree},
            {"max_order", options.max_order},
            {"seeds", options.seed_count},
            {"seed0", options.seed0}}},
          {"corpus_size", corpus_size},
          {"lemmas", std::move(lemmas)},
          {"exceptions", std::move(ex)},
          {"failed", any_failure()}};
}

std::vector<CheckReport> corpus_checks(const CorpusEntry& entry, const Limits& limits) {
  const PermGroup& g = entry.group;
  const std::string name = entry.spec.name();
  std::vector<CheckReport> out;
  out.push_back(check_comp_a_order_bound(g, limits));
  out.push_back(check_comp_a_gap(g, limits));
  if (g.order() % 2 != 0) out.push_back(check_odd_order(g, limits));
  if (is_primitive(g)) {
    out.push_back(check_jordan(g, limits));
    out.push_back(check_socle_primitive(g, limits));
    if (!point_stabilizer(g, 0).is_trivial()) {
      if (auto delta = smallest_self_paired_nontrivial(g, 0)) {
        out.push_back(check_wielandt(g, 0, *delta, limits));
      } else if (g.order() % 2 == 0) {
        CheckReport r;
        r.lemma = "wielandt_kernel_factors";
        r.group = describe(g);
        r.verdict = Verdict::fail;
        r.witness = {{"reason", "even order but no nontrivial self-paired suborbit"}};
        out.push_back(std::move(r));
      }
    }
  }
  try {
    out.push_back(verify_stabilizer_bound(g, limits).report());
  } catch (const ResourceLimit& e) {
    out.push_back(skipped_report("stabilizer_comp_a_bound", g, e.what()));
  }
  for (auto& r : out) r.group.name = name;
  return out;
}

namespace {

CheckReport alternating_quotient_instance(const Limits& limits) {
  const GroupSpec spec = GroupSpec::diagonal(GroupSpec::alternating(5));
  const PermGroup g = build(spec);
  // The first half of the generators are the left multiplications.
  const auto& gens = g.generators();
  const PermGroup left(g.degree(), std::vector<Permutation>(gens.begin(), gens.begin() + gens.size() / 2));
  return named(check_alternating_quotient(g, left, limits), spec.name());
}

void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) task(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

VerifySummary verify_corpus(const CorpusOptions& options, const Limits& limits, unsigned jobs) {
  const auto corpus = enumerate_corpus(options);
  const auto subdirect = subdirect_instances();
  const std::size_t total = corpus.size() + subdirect.size() + 1;
  std::vector<std::vector<CheckReport>> results(total);
  run_parallel(total, jobs, [&](std::size_t i) {
    if (i < corpus.size()) {
      results[i] = corpus_checks(corpus[i], limits);
    } else if (i < corpus.size() + subdirect.size()) {
      const auto& s = subdirect[i - corpus.size()];
      results[i] = {named(check_subdirect(s.group, s.first, s.second, limits), s.name)};
    } else {
      results[i] = {alternating_quotient_instance(limits)};
    }
  });

  VerifySummary summary;
  summary.options = options;
  summary.corpus_size = corpus.size();
  for (const auto& group_reports : results) {
    for (const auto& r : group_reports) {
      summary.counts[r.lemma].add(r.verdict);
      if (r.verdict != Verdict::pass) summary.exceptions.push_back(r);
    }
  }
  return summary;
}

// Commands.

int run_analyze(const std::string& path, bool as_json, const Limits& limits, std::ostream& out,
                std::ostream& err) {
  GeneratorDocument doc;
  try {
    doc = read_generator_file(path);
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kInputError;
  }
  AnalysisReport r;
  try {
    r = analyze_group(doc.group(), path, limits);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (as_json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << "group: " << path << "\n"
        << "degree: " << r.group.degree << "\n"
        << "order: " << r.group.order.str() << "\n"
        << "transitive: " << (r.transitive ? "yes" : "no") << "\n";
    if (r.primitive) out << "primitive: " << (*r.primitive ? "yes" : "no") << "\n";
    if (r.quasiprimitive) out << "quasiprimitive: " << (*r.quasiprimitive ? "yes" : "no") << "\n";
    for (const auto& b : r.minimal_block_systems) out << "minimal block system: " << format_blocks(b) << "\n";
    if (!r.suborbits.empty()) {
      out << "suborbit sizes:";
      for (const auto& s : r.suborbits) out << " " << s.size << (s.self_paired ? "" : "'");
      out << "  (' marks non-self-paired)\n";
    }
    out << "comp_A(G): " << format_set(r.comp_a_group) << "\n";
    if (r.transitive) out << "comp_A(G_x): " << format_set(r.comp_a_stabilizer) << "\n";
    if (r.trace) {
      out << "stabilizer bound: " << (r.trace->comp_a_stabilizer ? std::to_string(*r.trace->comp_a_stabilizer) : "?")
          << " < " << format_bound(r.trace->bound) << "  " << to_string(DecompositionTrace{*r.trace}.verdict())
          << "\n";
    }
    for (const auto& c : r.checks) out << c.lemma << ": " << to_string(c.verdict) << "\n";
    out << "verdict: " << to_string(r.verdict()) << "\n";
  }
  if (r.root_limit) {
    err << "resource limit: " << *r.root_limit << "\n";
    return kResourceLimit;
  }
  return r.verdict() == Verdict::fail ? kCheckFailed : kOk;
}

int run_verify(const CorpusOptions& options, bool as_json, const Limits& limits, unsigned jobs,
               std::ostream& out, std::ostream& err) {
  const VerifySummary s = verify_corpus(options, limits, jobs);
  if (as_json) {
    out << s.to_json().dump(2) << "\n";
  } else {
    out << "corpus: " << s.corpus_size << " groups\n";
    for (const auto& [lemma, c] : s.counts) {
      out << lemma << ": PASS " << c.pass << "  FAIL " << c.fail << "  SKIPPED " << c.skipped << "\n";
    }
    for (const auto& r : s.exceptions) {
      out << to_string(r.verdict) << " " << r.lemma << " " << r.group.name << "\n";
    }
  }
  if (s.any_failure()) {
    err << "verification failed\n";
    return kCheckFailed;
  }
  return kOk;
}

int run_threshold(std::uint64_t k_max, bool as_json, std::ostream& out, std::ostream& err) {
  if (k_max < 2) {
    err << "error: k_max must be at least 2\n";
    return kInputError;
  }
  const DistinctPrimeTable table(k_max);
  std::vector<std::uint64_t> samples;
  for (std::uint64_t k = 10; k < k_max; k *= 10) samples.push_back(k);
  samples.push_back(k_max);
  const auto k0 = alternating_quotient_threshold(k_max);

  json rows = json::array();
  for (auto k : samples) {
    const auto m = table.count(k);
    const double bound = 2 * std::pow(static_cast<double>(k), 0.4);
    rows.push_back({{"k", k}, {"m", m}, {"bound", bound_value(bound)}, {"exceeds", exceeds_stabilizer_bound(k, m)}});
  }
  if (as_json) {
    out << json{{"k_max", k_max}, {"rows", rows}, {"k0", k0 ? json(*k0) : json(nullptr)}}.dump(2) << "\n";
    return kOk;
  }
  out << "k\tm(k)\t2k^(2/5)\n";
  for (const auto& r : rows) {
    out << r["k"].get<std::uint64_t>() << "\t" << r["m"].get<std::size_t>() << "\t"
        << format_bound(r["bound"].get<double>()) << "\n";
  }
  if (k0) {
    out << "K0 = " << *k0 << "\n";
  } else {
    out << "K0 = none <= " << k_max << "\n";
  }
  return kOk;
}

int run_corpus_export(const std::string& dir, const CorpusOptions& options, std::ostream& out,
                      std::ostream& err) {
  try {
    const auto written = export_corpus(enumerate_corpus(options), dir);
    out << "wrote " << written.size() << " files to " << dir << "\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Permutation-group composition-factor checks"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--order-limit", limits.order, "Largest group order for composition series")
      ->capture_default_str();
  app.add_option("--enum-limit", limits.enumeration, "Largest group order for element scans")
      ->capture_default_str();

  bool as_json = false;
  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Analyze one group given as a generator file");
  analyze->add_option("file", path, "Generator file")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");

  CorpusOptions options;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto corpus_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-degree", options.max_degree, "Largest degree")->capture_default_str();
    cmd->add_option("--max-order", options.max_order, "Largest order")->capture_default_str();
    cmd->add_option("--seeds", options.seed_count, "Random groups per degree")->capture_default_str();
    cmd->add_option("--seed0", options.seed0, "First random seed")->capture_default_str();
  };
  auto* verify = app.add_subcommand("verify", "Run every check over the generated corpus");
  corpus_flags(verify);
  verify->add_flag("--json", as_json, "Emit JSON");
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  std::uint64_t k_max = 0;
  auto* threshold = app.add_subcommand("threshold", "Distinct-prime threshold scan");
  threshold->add_option("kmax", k_max, "Largest k")->required();
  threshold->add_flag("--json", as_json, "Emit JSON");

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "Corpus utilities");
  corpus->require_subcommand(1);
  auto* exporter = corpus->add_subcommand("export", "Write the corpus as generator files");
  exporter->add_option("dir", dir, "Output directory")->required();
  corpus_flags(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return run_analyze(path, as_json, limits, std::cout, std::cerr);
    if (*verify) return run_verify(options, as_json, limits, jobs, std::cout, std::cerr);
    if (*threshold) return run_threshold(k_max, as_json, std::cout, std::cerr);
    return run_corpus_export(dir, options, std::cout, std::cerr);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace compa::cli
