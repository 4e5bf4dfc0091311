#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/config.hpp"
#include "ontoforge/evaluation.hpp"
#include "ontoforge/ingest.hpp"
#include "ontoforge/nlp.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/pom.hpp"
#include "ontoforge/relations.hpp"
#include "ontoforge/search.hpp"
#include "ontoforge/similarity.hpp"
#include "ontoforge/wordnet.hpp"

namespace ontoforge::pipeline {

/// The rule set compiled into the library.
std::string_view default_rules();

/// Everything learn, index and search need besides the corpus.
struct Resources {
  wordnet::WordnetDb db;
  nlp::Tagger tagger;
  std::vector<relations::PatternRule> rules;
};

Resources load_resources(const config::PipelineConfig& cfg);

/// Tags every document. A `<doc_id>.tagged` file next to the corpus text
/// replaces the built-in tagger for that document.
nlp::TaggedCorpus tag_corpus(const ingest::Corpus& corpus, const nlp::Tagger& tagger,
                             const std::filesystem::path& corpus_dir = {});

/// Label used for a relation's POM entity: `verb(domain, range)`.
std::string relation_entity_label(const relations::Relation& rel);

struct LearnOptions {
  bool reduce = false;
  std::optional<std::filesystem::path> review_path;
  /// Overrides stored in an existing pom.json under work_dir are carried
  /// over to entities that still exist.
  bool carry_overrides = true;
  /// Boost concepts found by a previous index run (index.json under work_dir).
  bool repository_feedback = true;
};

struct LearnResult {
  pom::Pom pom;
  std::vector<relations::Relation> relations;
  std::vector<relations::SubclassPair> subclass_pairs;
  std::vector<pom::PomEntity> kept;
  std::vector<similarity::SimilarityPair> similar;
  ontology::Ontology onto;
  ingest::BudgetReport budget;
  std::vector<std::string> warnings;
};

/// Runs extraction and thresholding; writes nothing.
LearnResult learn(const config::PipelineConfig& cfg, const Resources& res, const LearnOptions& options = {});
LearnResult learn(const config::PipelineConfig& cfg, const Resources& res, const ingest::Corpus& corpus,
                  const LearnOptions& options = {});

/// pom.json, relations.tsv and ontology.ttl (plus similar.tsv after a
/// reducing run) under work_dir.
void write_outputs(const config::PipelineConfig& cfg, const LearnResult& result);

/// Indexes repo_dir against the ontology. Throws InvalidInput if the result
/// fails the inverse-map consistency check.
search::IndexedMetadata build_index(const config::PipelineConfig& cfg, const Resources& res,
                                    const ontology::Ontology& onto);

struct SearchRequest {
  std::string query;
  std::string user;
  search::QueryMode mode = search::QueryMode::expand;
};

std::vector<search::SearchResult> run_search(const config::PipelineConfig& cfg, const Resources& res,
                                             const ontology::Ontology& onto, const search::IndexedMetadata& idx,
                                             const SearchRequest& request);

/// Records the selection in the user's profile file and returns the updated
/// profile. Throws InvalidInput for an unknown doc_id or invalid user id.
search::UserProfile run_select(const config::PipelineConfig& cfg, const search::IndexedMetadata& idx,
                               std::string_view user, std::string_view doc_id);

evaluation::ComparisonReport run_compare(const ontology::Ontology& onto, const std::filesystem::path& reference,
                                         const wordnet::WordnetDb& db);

}  // namespace ontoforge::pipeline
