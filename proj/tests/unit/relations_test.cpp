#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "ontoforge/error.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/relations.hpp"
#include "test_support.hpp"

using namespace ontoforge;
using nlp::PosTag;

namespace {

const std::vector<relations::PatternRule>& default_rules() {
  static const auto rules = relations::parse_rules(pipeline::default_rules());
  return rules;
}

std::vector<relations::Relation> extract(const std::string& text) {
  return relations::extract_relations(fixtures::tagged(text), default_rules());
}

const relations::Relation* find(const std::vector<relations::Relation>& rels, const std::string& label) {
  auto it = std::find_if(rels.begin(), rels.end(), [&](const auto& r) { return r.label == label; });
  return it == rels.end() ? nullptr : &*it;
}

nlp::TaggedSentence sentence_of(const std::vector<PosTag>& tags) {
  nlp::TaggedSentence s;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    nlp::TaggedToken t;
    t.surface = "w" + std::to_string(i);
    t.lemma = t.surface;
    t.tag = tags[i];
    t.token_index = i;
    s.tokens.push_back(std::move(t));
  }
  return s;
}

}  // namespace

TEST(ParseRules, PaperVerbFragment) {
  const auto rules = relations::parse_rules(
      "Rule: Rule1\n"
      "({Token.category == NN})\n"
      "(({Token.category == VBD} | {Token.category == VBG} | {Token.category == VB} | "
      "{Token.category == VBN}):verb)*\n");
  ASSERT_EQ(rules.size(), 1u);
  ASSERT_EQ(rules[0].elements.size(), 2u);
  const auto& verb = rules[0].elements[1];
  EXPECT_EQ(verb.alternatives.size(), 4u);
  EXPECT_EQ(verb.binding, "verb");
  EXPECT_EQ(verb.quantifier, relations::Quantifier::star);
}

TEST(ParseRules, EmptyAndErrors) {
  EXPECT_TRUE(relations::parse_rules("").empty());
  EXPECT_TRUE(relations::parse_rules("// nothing here\n").empty());
  try {
    relations::parse_rules("Rule: R\n({Token.category == XX}):x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("R"), std::string::npos);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(relations::parse_rules("Rule: R\n({Token.category == NN})\nRule: R\n({Token.category == NN})\n"),
               ParseError);
  EXPECT_THROW(relations::parse_rules("Rule: R\n({Token.category == NN}\n"), ParseError);
}

TEST(ParseRules, DefaultRuleSetParses) {
  EXPECT_GE(default_rules().size(), 6u);
}

TEST(MatchRule, NounVerb) {
  const auto rules = relations::parse_rules("Rule: R\n({Token.category == NN}):domain ({Token.category == VBZ}):verb\n");
  const auto sentence = fixtures::tagged("the premium rises")[0].sentences[0];
  const auto matches = relations::match_rule(rules[0], sentence);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].text.at("domain"), "premium");
  EXPECT_EQ(matches[0].text.at("verb"), "rises");
}

TEST(MatchRule, StarVerbGroupAbsorbsParticiple) {
  const auto rules = relations::parse_rules(
      "Rule: R\n({Token.category == VBZ}):verb\n"
      "(({Token.category == VBD} | {Token.category == VBG} | {Token.category == VB} | "
      "{Token.category == VBN}):verb)*\n({Token.category == IN})\n");
  const auto s = sentence_of({PosTag::VBZ, PosTag::VBN, PosTag::IN, PosTag::VBG});
  const auto matches = relations::match_rule(rules[0], s);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].bound.at("verb"), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(relations::match_rule(rules[0], sentence_of({PosTag::NN, PosTag::DT})).empty());
}

// Exhaustive oracle: a rule of single-token elements matches span [b, e) iff
// the tokens can be assigned to elements in order with each star element
// taking a maximal run. Matches are then chosen leftmost, non-overlapping.
TEST(MatchRule, AgreesWithSpanEnumerationOracle) {
  const std::vector<PosTag> tagset = {PosTag::DT, PosTag::NN, PosTag::VBZ, PosTag::JJ};
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> tag_pick(0, 3);
  for (int round = 0; round < 400; ++round) {
    const int n_elems = 1 + round % 4;
    std::vector<std::vector<PosTag>> alts(n_elems);
    std::vector<bool> star(n_elems);
    std::string src = "Rule: R\n";
    for (int i = 0; i < n_elems; ++i) {
      const int k = 1 + tag_pick(rng) % 2;
      for (int a = 0; a < k; ++a) {
        PosTag t = tagset[tag_pick(rng)];
        if (std::find(alts[i].begin(), alts[i].end(), t) == alts[i].end()) alts[i].push_back(t);
      }
      star[i] = tag_pick(rng) == 0;
      src += "(";
      for (std::size_t a = 0; a < alts[i].size(); ++a) {
        if (a) src += " | ";
        src += "{Token.category == " + std::string(nlp::to_string(alts[i][a])) + "}";
      }
      src += ")";
      if (star[i]) src += "*";
      src += "\n";
    }
    const auto rules = relations::parse_rules(src);
    ASSERT_EQ(rules.size(), 1u);

    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 8);
    std::vector<PosTag> tags(len);
    for (auto& t : tags) t = tagset[tag_pick(rng)];
    const auto sentence = sentence_of(tags);

    auto ok = [&](int elem, std::size_t pos) {
      return pos < len && std::find(alts[elem].begin(), alts[elem].end(), tags[pos]) != alts[elem].end();
    };
    // End of the greedy-maximal assignment starting at b, or -1.
    std::function<long(int, std::size_t)> assign = [&](int elem, std::size_t pos) -> long {
      if (elem == n_elems) return static_cast<long>(pos);
      if (!star[elem]) return ok(elem, pos) ? assign(elem + 1, pos + 1) : -1;
      long found = -1;
      for (std::size_t run = 0; pos + run <= len; ++run) {
        bool all = true;
        for (std::size_t k = 0; k < run; ++k) all = all && ok(elem, pos + k);
        if (!all) break;
        if (ok(elem, pos + run)) continue;  // not maximal
        long e = assign(elem + 1, pos + run);
        if (e >= 0) found = e;
      }
      return found;
    };
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    std::size_t p = 0;
    while (p < len) {
      bool hit = false;
      for (std::size_t b = p; b < len && !hit; ++b) {
        const long e = assign(0, b);
        if (e > static_cast<long>(b)) {
          expected.emplace_back(b, static_cast<std::size_t>(e));
          p = static_cast<std::size_t>(e);
          hit = true;
        }
      }
      if (!hit) break;
    }

    std::vector<std::pair<std::size_t, std::size_t>> actual;
    for (const auto& m : relations::match_rule(rules[0], sentence)) actual.emplace_back(m.begin, m.end);
    EXPECT_EQ(actual, expected) << src;
  }
}

TEST(Extract, PaperExampleRise) {
  const auto rels = extract("If you raise the IDV, the premium rises.");
  EXPECT_NE(find(rels, "rise"), nullptr);
}

TEST(Extract, PaperExampleMake) {
  const auto rels = extract("IDV can make a whole lot of difference to the motor insurance premium.");
  const auto* make = find(rels, "make");
  ASSERT_NE(make, nullptr);
  EXPECT_EQ(make->domain, "idv");
  EXPECT_EQ(make->range, "a whole lot of difference to the motor insurance premium");
}

TEST(Extract, SameVerbTwoSubjectsGivesTwoRelations) {
  const auto rels = extract("The premium rises. The excess rises.");
  std::size_t rises = 0;
  for (const auto& r : rels) rises += r.label == "rise";
  EXPECT_EQ(rises, 2u);
}

TEST(Extract, IdenticalTriplesMergeWithCount) {
  const auto rels = extract("The insurer pays the claim. The insurer pays the claim. The driver pays the excess.");
  ASSERT_EQ(rels.size(), 2u);
  const auto it = std::find_if(rels.begin(), rels.end(), [](const auto& r) { return r.domain == "the insurer"; });
  ASSERT_NE(it, rels.end());
  EXPECT_EQ(it->count, 2u);
  EXPECT_DOUBLE_EQ(it->confidence, 1.0);
  EXPECT_EQ(it->sentence_ref.sentence_index, 0u);
}

TEST(Extract, PassiveSwapsDomainAndRange) {
  const auto rels = extract("The claim was approved by the insurer.");
  const auto* approve = find(rels, "approve");
  ASSERT_NE(approve, nullptr);
  EXPECT_EQ(approve->domain, "the insurer");
  EXPECT_EQ(approve->range, "the claim");
}

TEST(Extract, ConjoinedRangeSplits) {
  const auto rels = extract("The driver damaged the car and the fence.");
  ASSERT_EQ(rels.size(), 2u);
  EXPECT_EQ(rels[0].range, "the car");
  EXPECT_EQ(rels[1].range, "the fence");
}

TEST(Extract, SubclassPairs) {
  const auto ex = relations::extract(fixtures::tagged("A car is a vehicle. An accident is an incident."), default_rules());
  ASSERT_EQ(ex.subclass_pairs.size(), 2u);
  EXPECT_EQ(ex.subclass_pairs[0].child, "a car");
  EXPECT_EQ(ex.subclass_pairs[0].parent, "vehicle");
}

TEST(Extract, PermutationInvariantOverDocuments) {
  const nlp::Tagger tagger;
  nlp::TaggedCorpus a{{"d1", tagger.analyze("The insurer pays the claim.")},
                      {"d2", tagger.analyze("The driver pays the excess. The premium rises.")}};
  nlp::TaggedCorpus b{a[1], a[0]};
  auto strip = [](std::vector<relations::Relation> v) {
    for (auto& r : v) r.sentence_ref = {};
    return v;
  };
  EXPECT_EQ(strip(relations::extract_relations(a, default_rules())),
            strip(relations::extract_relations(b, default_rules())));
}

TEST(SplitCompound, CartesianProduct) {
  relations::Relation r{"make", "idv#premium", "cost", {}, 1, 1.0};
  EXPECT_EQ(relations::split_compound(r).size(), 2u);
  r.range = "c#d";
  r.domain = "a#b";
  const auto four = relations::split_compound(r);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(four[3].domain, "b");
  EXPECT_EQ(four[3].range, "d");
  r.domain = "plain";
  r.range = "range";
  EXPECT_EQ(relations::split_compound(r), std::vector<relations::Relation>{r});
  EXPECT_THROW(relations::split_compound(r, ' '), InvalidInput);
}

TEST(SplitCompound, CountsMultiply) {
  std::mt19937 rng(22);
  for (int round = 0; round < 100; ++round) {
    const int d = 1 + static_cast<int>(rng() % 4), g = 1 + static_cast<int>(rng() % 4);
    relations::Relation r{"v", "", "", {}, 1, 1.0};
    for (int i = 0; i < d; ++i) r.domain += (i ? "#" : "") + std::string("d") + std::to_string(i);
    for (int i = 0; i < g; ++i) r.range += (i ? "#" : "") + std::string("r") + std::to_string(i);
    EXPECT_EQ(relations::split_compound(r).size(), static_cast<std::size_t>(d * g));
  }
}

TEST(RelationsTsv, RoundTrip) {
  const auto rels = extract("The insurer pays the claim. The premium rises. IDV can make a difference.");
  const auto tsv = relations::format_relations(rels);
  EXPECT_TRUE(tsv.starts_with(relations::kRelationsHeader));
  auto back = relations::parse_relations(tsv);
  ASSERT_EQ(back.size(), rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    EXPECT_EQ(back[i].label, rels[i].label);
    EXPECT_EQ(back[i].domain, rels[i].domain);
    EXPECT_EQ(back[i].range, rels[i].range);
    EXPECT_EQ(back[i].count, rels[i].count);
  }
}
