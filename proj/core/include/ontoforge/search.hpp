#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontoforge/nlp.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/pom.hpp"
#include "ontoforge/wordnet.hpp"

namespace ontoforge::search {

struct RepoDocument {
  std::string doc_id;
  std::string title;
  std::string text;
};

/// Every `.txt` file below `dir`, doc_id = relative path with '/' separators,
/// title = first non-empty line. Sorted by doc_id.
std::vector<RepoDocument> load_repository(const std::filesystem::path& dir);

/// Word sequences that name each concept: its label, its aliases and the
/// WordNet synonyms of its label. One phrase may name several concepts.
class ConceptMatcher {
 public:
  ConceptMatcher(const ontology::Ontology& onto, const wordnet::WordnetDb& db);

  /// Concepts named by any contiguous run of `lemmas`.
  std::set<std::string> match(const std::vector<std::string>& lemmas) const;
  /// Concepts named by exactly this phrase.
  const std::vector<std::string>* lookup(std::string_view phrase) const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> phrases_;
  std::size_t max_words_ = 0;
};

struct IndexedMetadata {
  std::map<std::string, std::set<std::string>> concept_to_docs;
  std::map<std::string, std::set<std::string>> doc_to_concepts;
  std::map<std::string, std::string> doc_titles;
  /// Document text, kept for literal matching of unmatched query terms.
  std::map<std::string, std::string> doc_text;

  bool contains(std::string_view doc_id) const { return doc_titles.contains(std::string(doc_id)); }
  /// The two maps are exact inverses and every indexed doc has a title.
  bool consistent() const;
};

/// Annotates each document with every concept whose label, alias or synonym
/// occurs in its lemma sequence. Throws InvalidInput on duplicate doc ids.
IndexedMetadata index_repository(const std::vector<RepoDocument>& docs, const ontology::Ontology& onto,
                                 const wordnet::WordnetDb& db, const nlp::Tagger& tagger = nlp::Tagger());

std::string to_json(const IndexedMetadata& idx);
/// Rebuilds doc_to_concepts from concept_to_docs.
IndexedMetadata index_from_json(std::string_view json);
void save_index(const IndexedMetadata& idx, const std::filesystem::path& path);
IndexedMetadata load_index(const std::filesystem::path& path);

enum class QueryMode { expand, trim, substitute };
std::string_view to_string(QueryMode mode);
std::optional<QueryMode> parse_mode(std::string_view name);

struct ExpandOptions {
  std::size_t max_distance = 2;
  double decay = 0.5;
  QueryMode mode = QueryMode::expand;
};

struct ExpandedQuery {
  std::map<std::string, double> weighted_concepts;
  /// Lemmatized query terms in input order.
  std::vector<std::string> original_terms;
  /// Terms that named no concept; empty in trim mode.
  std::vector<std::string> literal_terms;
};

/// Splits raw query text into lowercase words.
std::vector<std::string> query_terms(std::string_view query);

/// Direct concepts score 1.0. Concepts reachable from them within
/// max_distance get decay^distance, keeping the larger weight on collision.
/// Substitute mode first swaps each direct concept for its most relevant
/// WordNet-synonym concept. Throws InvalidInput on empty terms, and when
/// nothing matched in trim mode.
ExpandedQuery expand_query(const std::vector<std::string>& terms, const ontology::Ontology& onto,
                           const ConceptMatcher& matcher, const wordnet::WordnetDb& db,
                           const ExpandOptions& options = {});
ExpandedQuery expand_query(const std::vector<std::string>& terms, const ontology::Ontology& onto,
                           const wordnet::WordnetDb& db, const ExpandOptions& options = {});

struct UserProfile {
  std::string user_id;
  std::map<std::string, double> ratings;

  double rating(std::string_view label) const;
  bool operator==(const UserProfile&) const = default;
};

struct SearchResult {
  std::string doc_id;
  std::string title;
  double score = 0.0;
  /// Weight descending, then label.
  std::vector<std::pair<std::string, double>> matched_concepts;
};

inline constexpr double kDefaultLiteralWeight = 0.25;

/// score = sum over matched concepts of weight * (1 + rating), plus
/// literal_weight for each literal term found in the document text
/// (case-insensitive). Zero-score documents are omitted. Sorted by score
/// descending, doc_id ascending.
std::vector<SearchResult> execute_query(const ExpandedQuery& q, const IndexedMetadata& idx,
                                        const UserProfile& profile,
                                        double literal_weight = kDefaultLiteralWeight);

/// Shared by the CLI and the HTTP service so both emit identical bytes.
std::string results_to_json(const std::vector<SearchResult>& results);

/// Adds `increment` to the rating of every concept annotating doc_id.
/// Throws InvalidInput on an unknown doc or a non-positive increment.
UserProfile record_selection(const UserProfile& profile, std::string_view doc_id,
                             const IndexedMetadata& idx, double increment = 1.0);

/// Letters, digits, '-', '_' and '.', not starting with '.'.
bool valid_user_id(std::string_view user_id);
std::filesystem::path profile_path(const std::filesystem::path& dir, std::string_view user_id);
/// Missing file yields an empty profile.
UserProfile load_profile(const std::filesystem::path& dir, std::string_view user_id);
void save_profile(const UserProfile& profile, const std::filesystem::path& dir);

/// Boosts every concept that annotates at least one document.
pom::Pom repository_feedback(const IndexedMetadata& idx, const pom::Pom& pom,
                             double factor = pom::kDefaultBoostFactor);

}  // namespace ontoforge::search
