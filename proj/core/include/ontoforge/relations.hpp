#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/nlp.hpp"

namespace ontoforge::relations {

// ---------------------------------------------------------------------------
// Pattern rules
//
//   Rule: Name
//   ({Token.category == DT})* ({Token.category == NN} | {Token.category == NNS}):domain
//   (({Token.category == VBZ} | {Token.string == "rises"}):verb)*
//
// A brace holds one or more comma-separated conditions that must all hold;
// `|` separates alternatives inside a group; `*` repeats the preceding group
// zero or more times; `:name` binds the tokens the group consumed.
// `Macro: NAME (...)` defines a group that later patterns reference by name.

enum class Attribute { category, string, lemma };

struct Condition {
  Attribute attribute = Attribute::category;
  bool negated = false;
  nlp::PosTag tag = nlp::PosTag::OTHER;  // category only
  std::string value;                     // string and lemma; compared case-insensitively
};

/// Conjunction of conditions on a single token.
struct TokenConstraint {
  std::vector<Condition> conditions;

  bool matches(const nlp::TaggedToken& token) const;
};

enum class Quantifier { one, star };

/// Either a token test with alternatives (`alternatives` non-empty) or a
/// group whose alternatives are element sequences (`groups` non-empty).
struct PatternElement {
  std::vector<TokenConstraint> alternatives;
  std::vector<std::vector<PatternElement>> groups;
  Quantifier quantifier = Quantifier::one;
  std::optional<std::string> binding;

  bool is_token() const { return groups.empty(); }
};

struct PatternRule {
  std::string name;
  std::vector<PatternElement> elements;
  /// Binding name to the indices of the top-level elements that carry it,
  /// directly or nested.
  std::map<std::string, std::vector<std::size_t>> bindings;

  bool has_binding(std::string_view name) const { return bindings.contains(std::string(name)); }
};

/// Throws ParseError (with line and column) on syntax errors, unknown tags,
/// or duplicate rule names.
std::vector<PatternRule> parse_rules(std::string_view source);

struct Match {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last token
  /// Token indices per binding name, ascending.
  std::map<std::string, std::vector<std::size_t>> bound;
  /// Surface text per binding name, space-joined.
  std::map<std::string, std::string> text;
};

/// Non-overlapping matches, leftmost first. Star groups take as many
/// repetitions as they can and never give any back; alternatives inside a
/// group pick the longest match, the earlier one on ties.
std::vector<Match> match_rule(const PatternRule& rule, const nlp::TaggedSentence& sentence);

// ---------------------------------------------------------------------------
// Relations

inline constexpr char kDefaultSeparator = '#';

struct SentenceRef {
  std::string doc_id;
  std::size_t sentence_index = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

struct Relation {
  std::string label;
  std::string domain;
  std::string range;
  /// First occurrence in (doc_id, sentence_index) order.
  SentenceRef sentence_ref;
  std::size_t count = 1;
  double confidence = 1.0;

  bool operator==(const Relation&) const = default;
};

struct SubclassPair {
  std::string child;
  std::string parent;
  SentenceRef sentence_ref;

  auto operator<=>(const SubclassPair&) const = default;
};

struct Extraction {
  std::vector<Relation> relations;
  std::vector<SubclassPair> subclass_pairs;
};

struct ExtractOptions {
  /// Split compound domains and ranges before merging.
  bool split = true;
  char separator = kDefaultSeparator;
};

/// Matches every rule against every sentence. Rules binding `verb` yield
/// relations; rules binding `child` and `parent` yield subclass pairs. A
/// match whose verb tokens are also claimed by a longer match (or by an
/// equally long one from an earlier rule) is discarded. Identical
/// (label, domain, range) triples merge into one relation with a count;
/// confidence = count / largest count. Output sorted by triple.
Extraction extract(const nlp::TaggedCorpus& corpus, const std::vector<PatternRule>& rules,
                   const ExtractOptions& options = {});

std::vector<Relation> extract_relations(const nlp::TaggedCorpus& corpus,
                                        const std::vector<PatternRule>& rules,
                                        const ExtractOptions& options = {});

/// Cartesian product of the separator-split domain and range parts.
std::vector<Relation> split_compound(const Relation& rel, char separator = kDefaultSeparator);

/// Merges identical triples, summing counts and keeping the earliest
/// sentence reference, then recomputes confidence. Sorted by triple.
std::vector<Relation> merge_relations(std::vector<Relation> relations);

inline constexpr std::string_view kRelationsHeader = "label\tdomain\trange\tdoc_id\tsentence_index\tcount";

std::string format_relations(const std::vector<Relation>& relations);
std::vector<Relation> parse_relations(std::string_view tsv);

}  // namespace ontoforge::relations
