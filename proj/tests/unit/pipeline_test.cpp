#include <gtest/gtest.h>

#include "ontoforge/error.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/text.hpp"
#include "test_support.hpp"

using namespace ontoforge;

namespace {

config::PipelineConfig insurance_config(const fixtures::TempDir& work) {
  config::PipelineConfig cfg;
  cfg.corpus_dir = fixtures::data_dir() / "corpus-insurance";
  cfg.wordnet_dir = fixtures::data_dir() / "wordnet-mini";
  cfg.repo_dir = fixtures::data_dir() / "repository-insurance";
  cfg.work_dir = work.path();
  return cfg;
}

const pipeline::Resources& resources() {
  static const pipeline::Resources res = [] {
    config::PipelineConfig cfg;
    cfg.wordnet_dir = fixtures::data_dir() / "wordnet-mini";
    return pipeline::load_resources(cfg);
  }();
  return res;
}

}  // namespace

TEST(Pipeline, LearnIsDeterministic) {
  fixtures::TempDir a, b;
  const auto ca = insurance_config(a), cb = insurance_config(b);
  pipeline::write_outputs(ca, pipeline::learn(ca, resources()));
  pipeline::write_outputs(cb, pipeline::learn(cb, resources()));
  for (const char* f : {"pom.json", "relations.tsv", "ontology.ttl"})
    EXPECT_EQ(text::read_file(a / f), text::read_file(b / f)) << f;
}

TEST(Pipeline, LearnFindsDomainConcepts) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  const auto r = pipeline::learn(cfg, resources());
  EXPECT_TRUE(r.warnings.empty());
  for (const char* c : {"premium", "idv", "claim", "policy", "car"}) EXPECT_TRUE(r.onto.concepts.contains(c)) << c;
  EXPECT_FALSE(r.onto.relations.empty());
  EXPECT_NE(std::find_if(r.relations.begin(), r.relations.end(), [](const auto& x) { return x.label == "rise"; }),
            r.relations.end());
  for (const auto& k : r.kept) EXPECT_GE(k.relevance * 100.0, cfg.static_theta);
  EXPECT_EQ(r.onto.concepts.size() + std::count_if(r.kept.begin(), r.kept.end(), [](const auto& e) {
              return e.kind == pom::EntityKind::relation_entity;
            }),
            r.kept.size());
}

TEST(Pipeline, ThetaAboveHundredWarnsAndEmpties) {
  fixtures::TempDir work;
  auto cfg = insurance_config(work);
  cfg.static_theta = 100.1;
  const auto r = pipeline::learn(cfg, resources());
  EXPECT_TRUE(r.onto.empty());
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings.back().find("ontology is empty"), std::string::npos);
}

TEST(Pipeline, EmptyAndOversizedCorpus) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  EXPECT_THROW(pipeline::learn(cfg, resources(), ingest::Corpus{}), InvalidInput);
  auto small = cfg;
  small.max_chars = 1000;
  const auto r = pipeline::learn(small, resources());
  EXPECT_FALSE(r.budget.within_budget);
  EXPECT_NE(r.warnings.front().find("budget"), std::string::npos);
}

TEST(Pipeline, OverridesCarryAcrossRuns) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  auto first = pipeline::learn(cfg, resources());
  const auto ranked = pom::ranked(first.pom);
  const std::string top = ranked.front().label;
  first.pom = pom::apply_overrides(first.pom, {{top, 0.0}});
  pipeline::write_outputs(cfg, first);
  const auto second = pipeline::learn(cfg, resources());
  EXPECT_EQ(second.pom.find(top)->override, 0.0);
  EXPECT_FALSE(second.onto.concepts.contains(top));
}

TEST(Pipeline, ReduceWritesSimilarPairs) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  pipeline::LearnOptions opt;
  opt.reduce = true;
  const auto reduced = pipeline::learn(cfg, resources(), opt);
  const auto plain = pipeline::learn(cfg, resources());
  EXPECT_LE(reduced.onto.concepts.size(), plain.onto.concepts.size());
  pipeline::write_outputs(cfg, reduced);
  EXPECT_EQ(std::filesystem::exists(cfg.work_dir / "similar.tsv"), !reduced.similar.empty());
}

TEST(Pipeline, IndexSearchSelect) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  const auto learned = pipeline::learn(cfg, resources());
  const auto idx = pipeline::build_index(cfg, resources(), learned.onto);
  EXPECT_EQ(idx.doc_titles.size(), 5u);
  const auto rs = pipeline::run_search(cfg, resources(), learned.onto, idx, {"idv", "", search::QueryMode::expand});
  ASSERT_FALSE(rs.empty());
  EXPECT_EQ(rs[0].doc_id, "motor-premium-guide.txt");
  const auto p = pipeline::run_select(cfg, idx, "u1", "motor-premium-guide.txt");
  EXPECT_GT(p.rating("idv"), 0.0);
  EXPECT_TRUE(std::filesystem::exists(search::profile_path(cfg.profiles_dir(), "u1")));
  EXPECT_THROW(pipeline::run_select(cfg, idx, "../evil", "motor-premium-guide.txt"), InvalidInput);
  EXPECT_THROW(pipeline::run_select(cfg, idx, "u1", "nope.txt"), InvalidInput);
}

TEST(Pipeline, CompareAgainstReference) {
  fixtures::TempDir work;
  const auto cfg = insurance_config(work);
  const auto learned = pipeline::learn(cfg, resources());
  const auto report = pipeline::run_compare(
      learned.onto, fixtures::data_dir() / "reference" / "insurance-classes.txt", resources().db);
  EXPECT_EQ(report.case_name, "insurance-classes");
  EXPECT_EQ(report.manual_count, 20u);
  EXPECT_LE(report.common_count, report.generated_count);
  EXPECT_LE(report.cc_percent, 50.0);
  EXPECT_GT(report.common_count, 10u);
  EXPECT_EQ(report.cc_text, evaluation::format_cc(report.common_count, report.generated_count, report.manual_count));
}

TEST(Pipeline, PretaggedSiblingReplacesTagger) {
  fixtures::TempDir dir;
  ingest::Corpus corpus;
  corpus.add_document("Zorbs glim.", "d1");
  text::write_file(dir / "d1.tagged", "Zorbs/NNS glim/VBP ./.\n");
  const auto tagged = pipeline::tag_corpus(corpus, resources().tagger, dir.path());
  ASSERT_EQ(tagged.size(), 1u);
  EXPECT_EQ(tagged[0].sentences[0].tokens[0].lemma, "zorb");
  EXPECT_EQ(tagged[0].sentences[0].tokens[1].tag, nlp::PosTag::VBP);
}

TEST(Pipeline, RelationEntityLabel) {
  EXPECT_EQ(pipeline::relation_entity_label({"rise", "premium", "cost", {}, 1, 1.0}), "rise(premium, cost)");
}
