#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/nlp.hpp"
#include "ontoforge/pom.hpp"
#include "ontoforge/wordnet.hpp"

namespace ontoforge::similarity {

inline constexpr std::size_t kDefaultWindow = 5;
inline constexpr double kDefaultThreshold = 0.95;

/// Raw co-occurrence counts of noun, verb and adjective lemmas around the
/// (noun) occurrences of a concept. Zero weights are never stored.
struct ContextVector {
  std::string concept_label;
  std::map<std::string, double> weights;
};

/// Occurrences of a multi-word concept are contiguous noun tokens whose
/// lemmas spell the label. Context tokens must share the sentence, lie within
/// `window` tokens of the occurrence, and fall outside it.
ContextVector context_vector(std::string_view concept_label, const nlp::TaggedCorpus& corpus,
                             std::size_t window = kDefaultWindow);

/// In [0, 1]; 0 when either vector is empty.
double cosine(const ContextVector& u, const ContextVector& v);

enum class Source { synonym, cosine };
std::string_view to_string(Source source);

struct SimilarityPair {
  std::string a;
  std::string b;
  double score = 0.0;
  Source source = Source::cosine;
};

/// WordNet synonyms score 1.0; anything else scores the cosine of the two
/// context vectors. Throws InvalidInput when a == b.
SimilarityPair similarity(std::string_view a, std::string_view b, const wordnet::WordnetDb& db,
                          const nlp::TaggedCorpus& corpus, std::size_t window = kDefaultWindow);

/// Precomputed context vectors and synonym sets for a fixed concept list, for
/// the many pairwise comparisons reduction and reporting need.
class SimilarityModel {
 public:
  SimilarityModel(const std::vector<std::string>& concepts, const wordnet::WordnetDb& db,
                  const nlp::TaggedCorpus& corpus, std::size_t window = kDefaultWindow);
  ~SimilarityModel();
  SimilarityModel(SimilarityModel&&) noexcept;
  SimilarityModel& operator=(SimilarityModel&&) noexcept;

  /// Both labels must be among the model's concepts.
  SimilarityPair compare(std::string_view a, std::string_view b) const;
  ContextVector vector_of(std::string_view label) const;

  /// Concepts in first-seen order, duplicates removed.
  std::size_t size() const;
  std::size_t index_of(std::string_view label) const;
  SimilarityPair compare_at(std::size_t i, std::size_t j) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ReducedConcept {
  pom::PomEntity entity;
  /// Labels of the dropped concepts this one absorbed.
  std::set<std::string> aliases;
};

/// Scans concepts by relevance (descending, label ascending on ties) and drops
/// each one whose similarity to an already kept concept reaches `threshold`;
/// the first such kept concept takes the dropped label as an alias.
std::vector<ReducedConcept> reduce_by_similarity(const std::vector<pom::PomEntity>& concepts,
                                                 double threshold, const wordnet::WordnetDb& db,
                                                 const nlp::TaggedCorpus& corpus,
                                                 std::size_t window = kDefaultWindow);

/// Every unordered pair scoring at least `min_score`, highest score first.
std::vector<SimilarityPair> similar_pairs(const std::vector<std::string>& concepts, double min_score,
                                          const wordnet::WordnetDb& db,
                                          const nlp::TaggedCorpus& corpus,
                                          std::size_t window = kDefaultWindow);

std::string format_pairs(const std::vector<SimilarityPair>& pairs);

}  // namespace ontoforge::similarity
