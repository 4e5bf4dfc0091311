#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/nlp.hpp"

namespace ontoforge::pom {

enum class EntityKind { concept_entity, relation_entity };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_kind(std::string_view name);

struct PomEntity {
  std::string label;
  EntityKind kind = EntityKind::concept_entity;
  double relevance = 0.0;
  /// Expert decision: 1.0 keeps the entity, 0.0 drops it.
  std::optional<double> override;
  std::size_t frequency = 0;

  bool operator==(const PomEntity&) const = default;
};

/// Candidate entities keyed by label. Relevance is the entity's frequency
/// relative to the corpus token count.
class Pom {
 public:
  Pom() = default;
  explicit Pom(std::size_t corpus_token_count) : corpus_token_count_(corpus_token_count) {}

  std::size_t corpus_token_count() const { return corpus_token_count_; }
  const std::map<std::string, PomEntity, std::less<>>& entities() const { return entities_; }
  std::size_t size() const { return entities_.size(); }
  bool empty() const { return entities_.empty(); }
  const PomEntity* find(std::string_view label) const;
  PomEntity* find(std::string_view label);

  /// Inserts or replaces the entity with the same label.
  void put(PomEntity entity);

  bool operator==(const Pom&) const = default;

 private:
  std::size_t corpus_token_count_ = 0;
  std::map<std::string, PomEntity, std::less<>> entities_;
};

/// Concept candidates: every noun lemma, plus every run of two or three
/// consecutive noun tokens inside a longer noun run (lemmas joined by spaces).
/// Throws InvalidInput on a corpus without tokens.
Pom extract_concepts(const nlp::TaggedCorpus& corpus);

/// Entities whose relevance in percent reaches `theta_percent`, sorted by
/// relevance descending then label. Overrides are ignored.
std::vector<PomEntity> static_threshold(const Pom& pom, double theta_percent);

/// Overrides first: 1.0 keeps, 0.0 drops; the rest go through the static
/// threshold at `theta_percent`. Same ordering as static_threshold.
std::vector<PomEntity> variable_threshold(const Pom& pom, double theta_percent);

inline constexpr double kDefaultBoostFactor = 1.5;

/// Multiplies the relevance of every label in `found` by `factor`, clamped
/// to 1.0. Throws InvalidInput unless factor > 1.
Pom boost_concepts(const Pom& pom, const std::set<std::string>& found, double factor);

/// An override decision from a review source; nullopt clears the override.
struct OverrideUpdate {
  std::string label;
  std::optional<double> value;
};

/// Throws InvalidInput listing every unknown label, or on a value outside
/// {0, 1}. All-or-nothing: on error `pom` is not modified.
Pom apply_overrides(const Pom& pom, const std::vector<OverrideUpdate>& updates);

inline constexpr std::string_view kReviewHeader = "label\tkind\tfrequency\trelevance\toverride";

std::string format_review(const Pom& pom);
/// Rows with a blank override cell leave the entity untouched.
Pom parse_review(const Pom& pom, std::string_view tsv);

void export_review(const Pom& pom, const std::filesystem::path& path);
Pom import_review(const Pom& pom, const std::filesystem::path& path);

std::string to_json(const Pom& pom);
Pom pom_from_json(std::string_view json);
void save_pom(const Pom& pom, const std::filesystem::path& path);
Pom load_pom(const std::filesystem::path& path);

/// Entities ordered by relevance descending, then label ascending.
std::vector<PomEntity> ranked(const Pom& pom);

}  // namespace ontoforge::pom
