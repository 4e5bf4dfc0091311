#include <gtest/gtest.h>

#include <random>

#include "ontoforge/error.hpp"
#include "ontoforge/evaluation.hpp"
#include "ontoforge/search.hpp"
#include "test_support.hpp"

using namespace ontoforge;
using search::QueryMode;

namespace {

ontology::Ontology insurance_ontology() {
  std::vector<ontology::ConceptEntry> entries;
  for (const char* l : {"premium", "idv", "excess", "claim", "insurer", "policy", "car", "vehicle", "accident",
                        "damage", "person", "compensation", "driver"})
    entries.push_back({l, 0.01, {}});
  entries[0].relevance = 0.05;
  const std::vector<relations::Relation> rels = {
      {"raise", "the idv", "the premium", {}, 3, 1.0},
      {"lower", "a voluntary excess", "the premium", {}, 1, 1.0},
      {"settle", "the insurer", "the claim", {}, 1, 1.0},
      {"pay", "the insurer", "the compensation", {}, 1, 1.0}};
  const std::vector<relations::SubclassPair> sub = {{"a car", "vehicle", {}}, {"a driver", "person", {}}};
  return ontology::build_ontology(entries, rels, sub);
}

struct Fixture {
  ontology::Ontology onto = insurance_ontology();
  search::IndexedMetadata idx = search::index_repository(
      search::load_repository(fixtures::data_dir() / "repository-insurance"), onto, fixtures::mini_wordnet());

  std::vector<search::SearchResult> run(const std::string& q, search::ExpandOptions opt = {},
                                        const search::UserProfile& profile = {}) const {
    return search::execute_query(search::expand_query(search::query_terms(q), onto, fixtures::mini_wordnet(), opt),
                                 idx, profile);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

std::set<std::string> ids(const std::vector<search::SearchResult>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(r.doc_id);
  return out;
}

}  // namespace

TEST(Repository, LoadsSortedWithTitles) {
  const auto docs = search::load_repository(fixtures::data_dir() / "repository-insurance");
  ASSERT_EQ(docs.size(), 5u);
  EXPECT_EQ(docs[0].doc_id, "claim-procedure.txt");
  EXPECT_EQ(docs[2].title, "Motor premium guide");
  EXPECT_THROW(search::load_repository("/nonexistent/dir"), IoError);
}

TEST(Index, AnnotationsAndInverseMaps) {
  const auto& idx = fixture().idx;
  EXPECT_TRUE(idx.consistent());
  EXPECT_TRUE(idx.doc_to_concepts.at("motor-premium-guide.txt").contains("idv"));
  EXPECT_TRUE(idx.doc_to_concepts.at("home-cover.txt").contains("policy"));
  // "Someone" is a WordNet synonym of person.
  EXPECT_TRUE(idx.doc_to_concepts.at("office-notes.txt").contains("person"));
  EXPECT_EQ(idx.concept_to_docs.at("idv"), (std::set<std::string>{"motor-premium-guide.txt"}));
  for (const auto& [c, docs] : idx.concept_to_docs)
    for (const auto& d : docs) EXPECT_TRUE(idx.doc_to_concepts.at(d).contains(c));
  for (const auto& [d, cs] : idx.doc_to_concepts)
    for (const auto& c : cs) EXPECT_TRUE(idx.concept_to_docs.at(c).contains(d));

  const auto back = search::index_from_json(search::to_json(idx));
  EXPECT_EQ(back.concept_to_docs, idx.concept_to_docs);
  EXPECT_EQ(back.doc_to_concepts, idx.doc_to_concepts);
  EXPECT_EQ(back.doc_titles, idx.doc_titles);
  EXPECT_EQ(search::to_json(back), search::to_json(idx));

  std::vector<search::RepoDocument> dup = {{"a", "A", "car"}, {"a", "B", "car"}};
  EXPECT_THROW(search::index_repository(dup, fixture().onto, fixtures::mini_wordnet()), InvalidInput);
}

TEST(Expand, DirectAndDecayedWeights) {
  const auto& f = fixture();
  const auto& db = fixtures::mini_wordnet();
  const auto q = search::expand_query({"IDV"}, f.onto, db);
  EXPECT_EQ(q.weighted_concepts,
            (std::map<std::string, double>{{"idv", 1.0}, {"premium", 0.5}, {"excess", 0.25}}));
  const auto direct = search::expand_query({"idv", "claims"}, f.onto, db, {0, 0.5, QueryMode::expand});
  EXPECT_EQ(direct.weighted_concepts, (std::map<std::string, double>{{"idv", 1.0}, {"claim", 1.0}}));
  EXPECT_EQ(direct.original_terms, (std::vector<std::string>{"idv", "claim"}));
  const auto syn = search::expand_query({"insurance"}, f.onto, db, {1, 0.5, QueryMode::expand});
  EXPECT_EQ(syn.weighted_concepts, (std::map<std::string, double>{{"policy", 1.0}}));
  const auto lit = search::expand_query({"canteen", "premium"}, f.onto, db);
  EXPECT_EQ(lit.literal_terms, (std::vector<std::string>{"canteen"}));

  EXPECT_THROW(search::expand_query({}, f.onto, db), InvalidInput);
  EXPECT_THROW(search::expand_query({"idv"}, f.onto, db, {2, 1.0, QueryMode::expand}), InvalidInput);
  EXPECT_THROW(search::expand_query({"canteen"}, f.onto, db, {2, 0.5, QueryMode::trim}), InvalidInput);
  EXPECT_TRUE(search::expand_query({"canteen", "idv"}, f.onto, db, {2, 0.5, QueryMode::trim}).literal_terms.empty());
}

TEST(Expand, DirectConceptsAlwaysWeighOne) {
  const auto& f = fixture();
  std::mt19937 rng(61);
  const std::vector<std::string> words = {"idv", "premium", "claim", "insurer", "car", "driver", "canteen", "policy"};
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> terms;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) terms.push_back(words[rng() % words.size()]);
    const auto direct = search::expand_query(terms, f.onto, fixtures::mini_wordnet(), {0, 0.5, QueryMode::expand});
    const auto wide = search::expand_query(terms, f.onto, fixtures::mini_wordnet(), {3, 0.5, QueryMode::expand});
    for (const auto& [c, w] : direct.weighted_concepts) {
      EXPECT_DOUBLE_EQ(w, 1.0);
      EXPECT_DOUBLE_EQ(wide.weighted_concepts.at(c), 1.0);
    }
    for (const auto& [c, w] : wide.weighted_concepts)
      if (!direct.weighted_concepts.contains(c)) { EXPECT_LE(w, 0.5); }
  }
}

TEST(Execute, ScoreArithmetic) {
  const auto rs = fixture().run("idv");
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[0].doc_id, "motor-premium-guide.txt");
  EXPECT_DOUBLE_EQ(rs[0].score, 1.75);
  EXPECT_EQ(rs[0].matched_concepts.front(), (std::pair<std::string, double>{"idv", 1.0}));
  EXPECT_EQ(rs[1].doc_id, "claim-procedure.txt");
  EXPECT_DOUBLE_EQ(rs[1].score, 0.25);
  EXPECT_EQ(rs[2].doc_id, "policy-terms.txt");

  search::UserProfile p{"u", {{"excess", 3.0}}};
  const auto rated = fixture().run("idv", {}, p);
  EXPECT_DOUBLE_EQ(rated[0].score, 1.0 + 0.5 + 0.25 * 4.0);
  EXPECT_DOUBLE_EQ(rated[1].score, 1.0);

  const auto lit = fixture().run("canteen");
  ASSERT_EQ(lit.size(), 1u);
  EXPECT_EQ(lit[0].doc_id, "office-notes.txt");
  EXPECT_DOUBLE_EQ(lit[0].score, search::kDefaultLiteralWeight);
  EXPECT_TRUE(fixture().run("unicorn").empty());
}

TEST(Execute, PrecisionAndRecallOnFixture) {
  const std::set<std::string> relevant = {"motor-premium-guide.txt"};
  const auto wide = ids(fixture().run("idv"));
  EXPECT_DOUBLE_EQ(evaluation::precision(wide, relevant), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(evaluation::recall(wide, relevant), 1.0);
  const auto narrow = ids(fixture().run("idv", {1, 0.5, QueryMode::expand}));
  EXPECT_DOUBLE_EQ(evaluation::precision(narrow, relevant), 1.0);

  const std::set<std::string> claims = {"claim-procedure.txt", "policy-terms.txt"};
  const auto got = ids(fixture().run("claim", {0, 0.5, QueryMode::expand}));
  EXPECT_DOUBLE_EQ(evaluation::recall(got, claims), 1.0);
  EXPECT_DOUBLE_EQ(evaluation::precision(got, claims), 2.0 / 3.0);
}

TEST(Execute, DominanceAndScaling) {
  const auto& f = fixture();
  std::mt19937 rng(62);
  const std::vector<std::string> words = {"idv", "premium", "claim", "insurer", "car", "driver", "policy", "damage"};
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> terms;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) terms.push_back(words[rng() % words.size()]);
    auto q = search::expand_query(terms, f.onto, fixtures::mini_wordnet());
    const auto rs = search::execute_query(q, f.idx, {});
    for (const auto& a : rs)
      for (const auto& b : rs) {
        const auto& ca = f.idx.doc_to_concepts.at(a.doc_id);
        const auto& cb = f.idx.doc_to_concepts.at(b.doc_id);
        if (std::includes(ca.begin(), ca.end(), cb.begin(), cb.end())) { EXPECT_GE(a.score, b.score); }
      }
    const double k = 0.5 + static_cast<double>(rng() % 10);
    auto scaled = q;
    for (auto& [_, w] : scaled.weighted_concepts) w *= k;
    const auto rs2 = search::execute_query(scaled, f.idx, {}, search::kDefaultLiteralWeight * k);
    ASSERT_EQ(rs2.size(), rs.size());
    if (!rs.empty()) { EXPECT_EQ(rs2[0].doc_id, rs[0].doc_id); }
    for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_NEAR(rs2[i].score, rs[i].score * k, 1e-9);
  }
}

TEST(Execute, DirectMatchVersusExpansionOnly) {
  search::IndexedMetadata idx;
  const std::map<std::string, std::set<std::string>> docs = {
      {"a.txt", {"premium"}}, {"b.txt", {"idv"}}, {"c.txt", {"idv", "excess", "claim"}}};
  for (const auto& [doc, concepts] : docs) {
    idx.doc_titles[doc] = doc;
    idx.doc_text[doc] = "";
    idx.doc_to_concepts[doc] = concepts;
    for (const auto& c : concepts) idx.concept_to_docs[c].insert(doc);
  }
  search::ExpandedQuery q;
  q.weighted_concepts = {{"premium", 1.0}, {"idv", 0.5}, {"excess", 0.5}, {"claim", 0.5}};
  const auto rs = search::execute_query(q, idx, {});
  ASSERT_EQ(rs.size(), 3u);
  // One expanded concept never beats a direct one at equal ratings...
  EXPECT_EQ(rs[1].doc_id, "a.txt");
  EXPECT_EQ(rs[2].doc_id, "b.txt");
  // ...but additive scoring lets several of them outrank it.
  EXPECT_EQ(rs[0].doc_id, "c.txt");
  EXPECT_DOUBLE_EQ(rs[0].score, 1.5);
}

TEST(Selection, StrictlyRaisesSelectedDocument) {
  const auto& f = fixture();
  search::UserProfile p{"u1", {}};
  double last = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto rs = f.run("claim", {}, p);
    const auto it = std::find_if(rs.begin(), rs.end(), [](const auto& r) { return r.doc_id == "policy-terms.txt"; });
    ASSERT_NE(it, rs.end());
    EXPECT_GT(it->score, last);
    last = it->score;
    p = search::record_selection(p, "policy-terms.txt", f.idx);
  }
  for (const auto& c : f.idx.doc_to_concepts.at("policy-terms.txt")) EXPECT_DOUBLE_EQ(p.rating(c), 3.0);
  EXPECT_THROW(search::record_selection(p, "nope.txt", f.idx), InvalidInput);
  EXPECT_THROW(search::record_selection(p, "policy-terms.txt", f.idx, 0.0), InvalidInput);
}

TEST(Profiles, SaveLoadAndIds) {
  fixtures::TempDir dir;
  EXPECT_EQ(search::load_profile(dir.path(), "ghost").ratings.size(), 0u);
  search::UserProfile p{"u.1-x_", {{"claim", 2.5}}};
  search::save_profile(p, dir.path());
  EXPECT_EQ(search::load_profile(dir.path(), "u.1-x_"), p);
  EXPECT_TRUE(search::valid_user_id("alice_01"));
  EXPECT_FALSE(search::valid_user_id(".hidden"));
  EXPECT_FALSE(search::valid_user_id("a/b"));
  EXPECT_FALSE(search::valid_user_id(""));
  EXPECT_FALSE(search::valid_user_id(std::string(200, 'a')));
}

TEST(Modes, SubstituteAndParse) {
  ontology::Ontology onto;
  onto.concepts["policy"] = {0.01, {}};
  onto.concepts["insurance"] = {0.05, {}};
  const auto q = search::expand_query({"policy"}, onto, fixtures::mini_wordnet(), {0, 0.5, QueryMode::substitute});
  EXPECT_EQ(q.weighted_concepts, (std::map<std::string, double>{{"insurance", 1.0}}));
  EXPECT_EQ(search::parse_mode("trim"), QueryMode::trim);
  EXPECT_FALSE(search::parse_mode("bogus"));
  EXPECT_EQ(search::to_string(QueryMode::substitute), "substitute");
}

TEST(Feedback, BoostsIndexedConcepts) {
  pom::Pom pom(1000);
  pom.put({"idv", pom::EntityKind::concept_entity, 0.01, std::nullopt, 10});
  pom.put({"unicorn", pom::EntityKind::concept_entity, 0.01, std::nullopt, 10});
  const auto boosted = search::repository_feedback(fixture().idx, pom, 1.5);
  EXPECT_DOUBLE_EQ(boosted.find("idv")->relevance, 0.015);
  EXPECT_DOUBLE_EQ(boosted.find("unicorn")->relevance, 0.01);
}

TEST(Results, JsonShape) {
  const auto json = search::results_to_json(fixture().run("idv"));
  EXPECT_TRUE(json.starts_with("[{\"doc_id\":\"motor-premium-guide.txt\",\"title\":\"Motor premium guide\",\"score\":1.75"));
}
