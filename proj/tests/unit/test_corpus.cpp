#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "support.hpp"

using namespace compa;
using testing_support::corpus;

TEST(Families, ClosedFormExamples) {
  const auto f = build(GroupSpec::frobenius(7, 3));
  EXPECT_EQ(f.degree(), 7u);
  EXPECT_EQ(f.order(), 21);
  const auto w = build(GroupSpec::wreath_imprimitive(GroupSpec::cyclic(2), GroupSpec::cyclic(2)));
  EXPECT_EQ(w.degree(), 4u);
  EXPECT_EQ(w.order(), 8);
  const auto j = build(GroupSpec::johnson(5));
  EXPECT_EQ(j.degree(), 10u);
  EXPECT_EQ(j.order(), 120);
  const auto p = build(GroupSpec::psl2(7));
  EXPECT_EQ(p.degree(), 8u);
  EXPECT_EQ(p.order(), 168);
  const auto wp = build(GroupSpec::wreath_power(GroupSpec::symmetric(3), 2));
  EXPECT_EQ(wp.degree(), 9u);
  EXPECT_EQ(wp.order(), 72);
  EXPECT_TRUE(is_primitive(wp));
  const auto d = build(GroupSpec::dihedral(5));
  EXPECT_EQ(d.order(), 10);
  const auto r = build(GroupSpec::regular_rep(GroupSpec::symmetric(3)));
  EXPECT_EQ(r.degree(), 6u);
  EXPECT_EQ(r.order(), 6);
  EXPECT_TRUE(is_transitive(r));
  const auto c = build(GroupSpec::coset_action(GroupSpec::alternating(5), "(0 1 2 3 4)"));
  EXPECT_EQ(c.degree(), 12u);
  EXPECT_EQ(c.order(), 60);
  const auto diag = build(GroupSpec::diagonal(GroupSpec::alternating(5)));
  EXPECT_EQ(diag.degree(), 60u);
  EXPECT_EQ(diag.order(), 3600);
  EXPECT_TRUE(is_primitive(diag));
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(build(GroupSpec::frobenius(6, 2)), InvalidArgument);
  EXPECT_THROW(build(GroupSpec::frobenius(7, 4)), InvalidArgument);
  EXPECT_THROW(build(GroupSpec::psl2(9)), InvalidArgument);
  EXPECT_THROW(build(GroupSpec::cyclic(0)), InvalidArgument);
}

TEST(Families, Names) {
  const auto spec = GroupSpec::wreath_imprimitive(GroupSpec::cyclic(2), GroupSpec::cyclic(2));
  EXPECT_EQ(spec.name(), "wreath_imprimitive(cyclic(2),cyclic(2))");
  EXPECT_EQ(spec.slug(), "wreath_imprimitive_cyclic-2_cyclic-2");
  EXPECT_EQ(spec.file_name(4), "wreath_imprimitive_cyclic-2_cyclic-2_4.grp");
  EXPECT_EQ(GroupSpec::symmetric(5).file_name(5), "symmetric_5_5.grp");
}

TEST(Lcg, KnownStream) {
  Lcg g(0);
  EXPECT_EQ(g.next(), 335903614u);
  EXPECT_EQ(g.next(), 436792849u);
  EXPECT_EQ(g.next(), 2599843874u);
  Lcg h(42);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(h.below(7), 7u);
}

TEST(Sampler, ContractsAndDeterminism) {
  for (std::size_t degree = 2; degree <= 10; ++degree) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto a = random_transitive(degree, 100'000, seed);
      const auto b = random_transitive(degree, 100'000, seed);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (!a) continue;
      EXPECT_EQ(a->generators(), b->generators());
      EXPECT_EQ(a->degree(), degree);
      EXPECT_TRUE(is_transitive(*a));
      EXPECT_LE(a->order(), 100'000);
      EXPECT_GE(a->generators().size(), 2u);
      EXPECT_LE(a->generators().size(), 3u);
    }
  }
}

TEST(Corpus, ClosedFormsMatchChains) {
  for (const auto& e : corpus()) {
    if (auto order = closed_form_order(e.spec)) EXPECT_EQ(*order, e.group.order()) << e.spec.name();
  }
}

TEST(Corpus, RespectsOptionsAndIsUnique) {
  const CorpusOptions options;
  std::set<std::string> names;
  std::map<std::string, int> per_family;
  for (const auto& e : corpus()) {
    EXPECT_LE(e.group.degree(), options.max_degree);
    EXPECT_LE(e.group.order(), options.max_order);
    EXPECT_TRUE(is_transitive(e.group)) << e.spec.name();
    EXPECT_TRUE(names.insert(e.spec.name()).second) << e.spec.name();
    ++per_family[std::string(to_string(e.spec.family))];
  }
  EXPECT_GE(corpus().size(), 100u);
  for (const char* f : {"cyclic", "dihedral", "symmetric", "alternating", "frobenius", "johnson", "psl2",
                        "wreath_imprimitive", "wreath_power", "regular_rep", "random"}) {
    EXPECT_GT(per_family[f], 0) << f;
  }
}

TEST(Corpus, Deterministic) {
  CorpusOptions options;
  options.max_degree = 8;
  const auto a = enumerate_corpus(options);
  const auto b = enumerate_corpus(options);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].spec, b[i].spec);
    EXPECT_EQ(a[i].group.generators(), b[i].group.generators());
  }
  options.seed0 = 99;
  const auto c = enumerate_corpus(options);
  EXPECT_FALSE(c.empty());
}

TEST(Corpus, TinyDegreeIsEmpty) {
  CorpusOptions options;
  options.max_degree = 1;
  EXPECT_TRUE(enumerate_corpus(options).empty());
}

TEST(Corpus, ExportRoundTrip) {
  CorpusOptions options;
  options.max_degree = 6;
  const auto entries = enumerate_corpus(options);
  const auto dir = std::filesystem::temp_directory_path() / "compa_corpus_export_test";
  std::filesystem::remove_all(dir);
  const auto paths = export_corpus(entries, dir);
  ASSERT_EQ(paths.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(paths[i].filename().string(), entries[i].spec.file_name(entries[i].group.degree()));
    std::ifstream in(paths[i]);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "# " + entries[i].spec.name());
    const auto doc = read_generator_file(paths[i].string());
    EXPECT_TRUE(same_group(doc.group(), entries[i].group)) << paths[i];
  }
  std::filesystem::remove_all(dir);
}

TEST(Subdirect, InstancesAreWellFormed) {
  for (const auto& s : subdirect_instances()) {
    EXPECT_EQ(s.first.size() + s.second.size(), s.group.degree()) << s.name;
    const auto on_first = restrict_to_invariant_set(s.group, s.first);
    const auto on_second = restrict_to_invariant_set(s.group, s.second);
    EXPECT_FALSE(on_first.image.is_trivial()) << s.name;
    EXPECT_FALSE(on_second.image.is_trivial()) << s.name;
  }
}
