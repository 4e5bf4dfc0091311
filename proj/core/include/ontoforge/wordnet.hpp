#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontoforge::wordnet {

struct Synset {
  std::uint32_t offset = 0;
  /// Lowercase lemmas in data-file order, underscores for spaces.
  std::vector<std::string> word_forms;
};

/// The noun half of a WNdb-3.0 database. Immutable once loaded.
class WordnetDb {
 public:
  WordnetDb() = default;

  /// Reads `index.noun` and `data.noun` from `dir`. Throws IoError when either
  /// file is missing and ParseError (with line number) on malformed lines.
  static WordnetDb load(const std::filesystem::path& dir);

  bool empty() const { return synsets_.empty(); }
  std::size_t synset_count() const { return synsets_.size(); }
  /// Every indexed lemma, sorted, underscore form.
  const std::vector<std::string>& lemmas() const { return lemmas_; }
  const Synset* synset(std::uint32_t offset) const;

  /// Synsets in index order; empty when the lemma is unknown. Spaces in the
  /// lemma are treated as underscores.
  std::vector<const Synset*> noun_synsets(std::string_view lemma) const;

  /// Union of the word forms of every synset of `lemma`, space form. A
  /// multi-word lemma missing from the index falls back to its last word:
  /// each synonym of the head is substituted back into the phrase.
  std::set<std::string> synonyms(std::string_view lemma) const;

  /// True when a == b, or when either is listed among the other's synonyms.
  bool are_synonyms(std::string_view a, std::string_view b) const;

 private:
  std::unordered_map<std::string, std::vector<std::uint32_t>> index_;
  std::unordered_map<std::uint32_t, Synset> synsets_;
  std::vector<std::string> lemmas_;
};

WordnetDb load_wordnet(const std::filesystem::path& dir);

/// Lowercase, trimmed, inner whitespace runs as single underscores.
std::string to_index_form(std::string_view lemma);
std::string to_space_form(std::string_view lemma);

}  // namespace ontoforge::wordnet
