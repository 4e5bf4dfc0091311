#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ontoforge/error.hpp"
#include "ontoforge/pom.hpp"
#include "ontoforge/text.hpp"
#include "test_support.hpp"

using namespace ontoforge;

namespace {

pom::Pom random_pom(std::mt19937& rng, std::size_t n) {
  pom::Pom p(10000);
  std::uniform_int_distribution<int> freq(1, 60);
  std::uniform_int_distribution<int> coin(0, 5);
  for (std::size_t i = 0; i < n; ++i) {
    pom::PomEntity e;
    e.label = "concept" + std::to_string(i);
    e.frequency = static_cast<std::size_t>(freq(rng));
    e.relevance = static_cast<double>(e.frequency) / 10000.0;
    const int c = coin(rng);
    if (c == 0) e.override = 1.0;
    if (c == 1) e.override = 0.0;
    p.put(e);
  }
  return p;
}

std::set<std::string> labels(const std::vector<pom::PomEntity>& v) {
  std::set<std::string> out;
  for (const auto& e : v) out.insert(e.label);
  return out;
}

pom::Pom without_overrides(pom::Pom p) {
  std::vector<pom::OverrideUpdate> clear;
  for (const auto& [label, _] : p.entities()) clear.push_back({label, std::nullopt});
  return pom::apply_overrides(p, clear);
}

}  // namespace

TEST(ExtractConcepts, RelevanceIsRelativeFrequency) {
  const auto p = pom::extract_concepts(fixtures::tagged("The premium rises. The premium falls."));
  EXPECT_EQ(p.corpus_token_count(), 8u);
  const auto* premium = p.find("premium");
  ASSERT_NE(premium, nullptr);
  EXPECT_EQ(premium->frequency, 2u);
  EXPECT_DOUBLE_EQ(premium->relevance, 2.0 / 8.0);
  EXPECT_EQ(premium->kind, pom::EntityKind::concept_entity);
}

TEST(ExtractConcepts, NounCompoundsAndPlurals) {
  const auto p = pom::extract_concepts(fixtures::tagged("The motor insurance premium rises. Premiums rise."));
  EXPECT_NE(p.find("motor insurance"), nullptr);
  EXPECT_NE(p.find("insurance premium"), nullptr);
  EXPECT_NE(p.find("motor insurance premium"), nullptr);
  EXPECT_EQ(p.find("premium")->frequency, 2u);
  EXPECT_EQ(p.find("rise"), nullptr);
}

TEST(ExtractConcepts, NoNounsAndEmptyCorpus) {
  EXPECT_TRUE(pom::extract_concepts(fixtures::tagged("It is very quickly done.")).empty());
  EXPECT_THROW(pom::extract_concepts({}), InvalidInput);
}

TEST(ExtractConcepts, UnigramFrequenciesBoundedByNounTokens) {
  const auto corpus = fixtures::tagged(
      "A car is a vehicle. The driver damaged the car and the fence. The claims of drivers rise.");
  std::size_t nouns = 0;
  for (const auto& s : corpus[0].sentences)
    for (const auto& t : s.tokens) nouns += nlp::is_noun(t.tag);
  std::size_t unigram_sum = 0;
  const auto p = pom::extract_concepts(corpus);
  for (const auto& [label, e] : p.entities()) {
    if (label.find(' ') == std::string::npos) unigram_sum += e.frequency;
    EXPECT_LE(e.frequency, p.corpus_token_count());
  }
  EXPECT_EQ(unigram_sum, nouns);
}

TEST(StaticThreshold, InclusiveBoundary) {
  pom::Pom p(100000);
  p.put({"a", pom::EntityKind::concept_entity, 0.0000142, std::nullopt, 1});
  p.put({"b", pom::EntityKind::concept_entity, 0.0000141, std::nullopt, 1});
  const auto kept = pom::static_threshold(p, 0.00142);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].label, "a");
  EXPECT_TRUE(pom::static_threshold(p, 100.1).empty());
  EXPECT_THROW(pom::static_threshold(p, -1), InvalidInput);
}

TEST(StaticThreshold, MonotoneInTheta) {
  std::mt19937 rng(11);
  for (int round = 0; round < 50; ++round) {
    const auto p = random_pom(rng, 40);
    double lo = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    double hi = lo + std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    const auto big = labels(pom::static_threshold(p, lo));
    const auto small = labels(pom::static_threshold(p, hi));
    EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    const auto vbig = labels(pom::variable_threshold(p, lo));
    const auto vsmall = labels(pom::variable_threshold(p, hi));
    EXPECT_TRUE(std::includes(vbig.begin(), vbig.end(), vsmall.begin(), vsmall.end()));
  }
}

TEST(VariableThreshold, OverrideAlgebra) {
  std::mt19937 rng(12);
  for (int round = 0; round < 50; ++round) {
    const auto p = random_pom(rng, 40);
    const double theta = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
    const auto kept = labels(pom::variable_threshold(p, theta));
    const auto plain = labels(pom::static_threshold(p, theta));
    for (const auto& [label, e] : p.entities()) {
      if (e.override == 1.0) {
        EXPECT_TRUE(kept.contains(label));
      } else if (e.override == 0.0) {
        EXPECT_FALSE(kept.contains(label));
      } else {
        EXPECT_EQ(kept.contains(label), plain.contains(label));
      }
    }
    EXPECT_EQ(labels(pom::variable_threshold(without_overrides(p), theta)), plain);
  }
}

TEST(VariableThreshold, SortedByRelevanceThenLabel) {
  std::mt19937 rng(13);
  const auto kept = pom::variable_threshold(random_pom(rng, 80), 0.0);
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const auto& a = kept[i - 1];
    const auto& b = kept[i];
    EXPECT_TRUE(a.relevance > b.relevance || (a.relevance == b.relevance && a.label < b.label));
  }
}

TEST(Overrides, ApplyIsAllOrNothing) {
  pom::Pom p(10);
  p.put({"premium", pom::EntityKind::concept_entity, 0.2, std::nullopt, 2});
  EXPECT_THROW(pom::apply_overrides(p, {{"premium", 1.0}, {"nope", 0.0}}), InvalidInput);
  EXPECT_THROW(pom::apply_overrides(p, {{"premium", 0.5}}), InvalidInput);
  EXPECT_FALSE(p.find("premium")->override);
  const auto q = pom::apply_overrides(p, {{"premium", 0.0}});
  EXPECT_EQ(q.find("premium")->override, 0.0);
  EXPECT_EQ(pom::apply_overrides(q, {{"premium", 0.0}}), q);
}

TEST(Boost, MultipliesAndClamps) {
  pom::Pom p(10);
  p.put({"premium", pom::EntityKind::concept_entity, 0.2, std::nullopt, 2});
  p.put({"excess", pom::EntityKind::concept_entity, 0.8, std::nullopt, 8});
  p.put({"car", pom::EntityKind::concept_entity, 0.1, std::nullopt, 1});
  const auto q = pom::boost_concepts(p, {"premium", "excess", "unknown"}, 1.5);
  EXPECT_DOUBLE_EQ(q.find("premium")->relevance, 0.3);
  EXPECT_DOUBLE_EQ(q.find("excess")->relevance, 1.0);
  EXPECT_DOUBLE_EQ(q.find("car")->relevance, 0.1);
  EXPECT_EQ(pom::boost_concepts(p, {}, 1.5), p);
  EXPECT_THROW(pom::boost_concepts(p, {}, 1.0), InvalidInput);
}

TEST(Review, ExportThenBlankImportIsIdentity) {
  std::mt19937 rng(14);
  fixtures::TempDir dir;
  const auto p = random_pom(rng, 30);
  pom::export_review(p, dir / "review.tsv");
  EXPECT_EQ(pom::import_review(p, dir / "review.tsv"), p);
  const auto contents = text::read_file(dir / "review.tsv");
  EXPECT_TRUE(contents.starts_with(pom::kReviewHeader));
}

TEST(Review, ImportSetsOverridesAndRejectsBadRows) {
  pom::Pom p(10);
  p.put({"premium", pom::EntityKind::concept_entity, 0.2, std::nullopt, 2});
  p.put({"car", pom::EntityKind::concept_entity, 0.1, std::nullopt, 1});
  const auto edited = pom::parse_review(p, std::string(pom::kReviewHeader) + "\npremium\tconcept\t2\t0.2\t0\n");
  EXPECT_EQ(edited.find("premium")->override, 0.0);
  EXPECT_FALSE(edited.find("car")->override);
  try {
    pom::parse_review(p, std::string(pom::kReviewHeader) + "\ncar\tconcept\t1\t0.1\t\npremium\tconcept\t2\t0.2\tmaybe\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(pom::parse_review(p, "ghost\tconcept\t1\t0.1\t1\n"), InvalidInput);
}

TEST(PomJson, RoundTrip) {
  std::mt19937 rng(15);
  fixtures::TempDir dir;
  auto p = random_pom(rng, 25);
  p.put({"make(idv, premium)", pom::EntityKind::relation_entity, 0.0001, std::nullopt, 1});
  pom::save_pom(p, dir / "pom.json");
  EXPECT_EQ(pom::load_pom(dir / "pom.json"), p);
  EXPECT_EQ(pom::to_json(pom::pom_from_json(pom::to_json(p))), pom::to_json(p));
  EXPECT_THROW(pom::pom_from_json("{\"entities\": 3}"), ParseError);
}
