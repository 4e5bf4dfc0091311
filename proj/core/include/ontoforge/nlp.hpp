#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontoforge::nlp {

/// The Penn Treebank subset used by concept and relation extraction. Modals,
/// wh-words, punctuation and everything else collapse into OTHER.
enum class PosTag {
  NN, NNS, NNP, NNPS,
  VB, VBD, VBG, VBN, VBP, VBZ,
  JJ, IN, DT, PRP, CC, RB, CD, TO,
  OTHER,
};

inline constexpr std::size_t kPosTagCount = 19;

std::string_view to_string(PosTag tag);
/// Exact tag name lookup ("NN", "VBZ", ...). Returns nullopt for anything else.
std::optional<PosTag> parse_tag(std::string_view name);
/// Like parse_tag, but maps any other Penn tag (MD, PRP$, WDT, ...) to OTHER.
PosTag parse_penn_tag(std::string_view name);

constexpr bool is_noun(PosTag t) {
  return t == PosTag::NN || t == PosTag::NNS || t == PosTag::NNP || t == PosTag::NNPS;
}
constexpr bool is_verb(PosTag t) {
  return t == PosTag::VB || t == PosTag::VBD || t == PosTag::VBG || t == PosTag::VBN ||
         t == PosTag::VBP || t == PosTag::VBZ;
}
constexpr bool is_adjective(PosTag t) { return t == PosTag::JJ; }

struct TaggedToken {
  std::string surface;
  PosTag tag = PosTag::OTHER;
  std::string lemma;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;

  bool operator==(const TaggedSentence&) const = default;
};

struct TaggedDocument {
  std::string doc_id;
  std::vector<TaggedSentence> sentences;
};

using TaggedCorpus = std::vector<TaggedDocument>;

/// Total number of tokens (punctuation included) across a tagged corpus.
std::size_t token_count(const TaggedCorpus& corpus);

const std::vector<std::string>& default_abbreviations();

/// Splits on `.`, `!` or `?` when followed by whitespace and an uppercase
/// letter, or by the end of the text. Words in `abbreviations` (lowercase,
/// trailing dot included) never end a sentence.
std::vector<std::string> split_sentences(std::string_view text,
                                         std::span<const std::string> abbreviations);
std::vector<std::string> split_sentences(std::string_view text);

/// Whitespace tokenization with leading and trailing punctuation split off.
/// Internal hyphens, apostrophes and periods stay inside the token.
std::vector<std::string> tokenize(std::string_view sentence);

/// Lowercase base form. Nouns lose plural endings, verbs lose inflection, and
/// every other tag is only lowercased. The result is a fixed point:
/// lemmatize(lemmatize(w, t), t) == lemmatize(w, t).
std::string lemmatize(std::string_view surface, PosTag tag);

struct LexiconEntry {
  std::string surface;
  PosTag tag;
};

/// Lexicon-and-rules tagger. Lookup order: extension entries, closed-class
/// words, the shipped open-class table, suffix heuristics, NN.
class Tagger {
 public:
  Tagger();

  /// Later lookups of these surfaces return the given tag; the last entry for a
  /// surface wins. Matching is exact first, then case-insensitive.
  void extend_lexicon(std::span<const LexiconEntry> entries);

  TaggedSentence pos_tag(std::span<const std::string> tokens,
                         std::size_t sentence_index = 0) const;

  /// Sentence split, tokenize and tag.
  std::vector<TaggedSentence> analyze(std::string_view text) const;

 private:
  std::unordered_map<std::string, PosTag> exact_;
  std::unordered_map<std::string, PosTag> folded_;
};

/// Returns a copy of `tagger` with `entries` applied.
Tagger extend_lexicon(Tagger tagger, std::span<const LexiconEntry> entries);

/// Reads a `surface<TAB>TAG` table. Blank lines and `#` comments are skipped.
std::vector<LexiconEntry> parse_lexicon(std::string_view text);

/// Parses pre-tagged text: one sentence per line, tokens as `surface/TAG`.
/// Tags outside the PosTag set map to OTHER; lemmas are computed.
std::vector<TaggedSentence> parse_pretagged(std::string_view text);

}  // namespace ontoforge::nlp
