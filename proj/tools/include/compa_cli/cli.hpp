#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compa/compa.hpp"

namespace compa::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kResourceLimit = 3 };

struct SuborbitSummary {
  Point representative = 0;
  std::size_t size = 0;
  bool self_paired = false;

  friend bool operator==(const SuborbitSummary&, const SuborbitSummary&) = default;
};

/// Everything `analyze` reports about one group.
struct AnalysisReport {
  GroupDescriptor group;
  bool transitive = false;
  std::optional<bool> primitive;
  std::optional<bool> quasiprimitive;
  std::vector<BlockSystem> minimal_block_systems;
  std::vector<SuborbitSummary> suborbits;
  std::optional<PrimeSet> comp_a_group;
  std::optional<PrimeSet> comp_a_stabilizer;
  std::vector<CheckReport> checks;
  std::optional<TraceNode> trace;
  /// Set when the stabilizer bound could not be evaluated at the root.
  std::optional<std::string> root_limit;

  Verdict verdict() const;
  json to_json() const;
  static AnalysisReport from_json(const json& j);
};

AnalysisReport analyze_group(const PermGroup& group, std::string name = {}, const Limits& limits = {});

struct LemmaCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;

  void add(Verdict v);
};

struct VerifySummary {
  CorpusOptions options;
  std::size_t corpus_size = 0;
  std::map<std::string, LemmaCounts> counts;
  /// Every non-PASS report, in corpus order.
  std::vector<CheckReport> exceptions;

  bool any_failure() const;
  json to_json() const;
};

/// Runs every applicable check over the corpus and the subdirect instances.
/// Work is spread over `jobs` threads; results keep corpus order.
VerifySummary verify_corpus(const CorpusOptions& options, const Limits& limits = {}, unsigned jobs = 1);

/// All reports for one corpus member, in a fixed order.
std::vector<CheckReport> corpus_checks(const CorpusEntry& entry, const Limits& limits = {});

int run_analyze(const std::string& path, bool as_json, const Limits& limits, std::ostream& out,
                std::ostream& err);
int run_verify(const CorpusOptions& options, bool as_json, const Limits& limits, unsigned jobs,
               std::ostream& out, std::ostream& err);
int run_threshold(std::uint64_t k_max, bool as_json, std::ostream& out, std::ostream& err);
int run_corpus_export(const std::string& dir, const CorpusOptions& options, std::ostream& out,
                      std::ostream& err);

/// Parses the command line and dispatches.
int main(int argc, char** argv);

}  // namespace compa::cli
