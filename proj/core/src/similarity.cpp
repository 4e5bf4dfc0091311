#include "ontoforge/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::similarity {

namespace {

bool context_tag(nlp::PosTag t) { return nlp::is_noun(t) || nlp::is_verb(t) || nlp::is_adjective(t); }

// Calls fn(tokens, begin, end) for every occurrence of `words` in the corpus.
template <typename Fn>
void for_each_occurrence(const std::vector<std::string>& words, const nlp::TaggedCorpus& corpus, Fn fn) {
  if (words.empty()) return;
  for (const auto& doc : corpus) {
    for (const auto& sentence : doc.sentences) {
      const auto& toks = sentence.tokens;
      if (toks.size() < words.size()) continue;
      for (std::size_t i = 0; i + words.size() <= toks.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < words.size() && hit; ++k)
          hit = nlp::is_noun(toks[i + k].tag) && toks[i + k].lemma == words[k];
        if (hit) fn(toks, i, i + words.size());
      }
    }
  }
}

template <typename Add>
void add_context(const std::vector<nlp::TaggedToken>& toks, std::size_t begin, std::size_t end,
                 std::size_t window, std::string_view self, Add add) {
  const std::size_t lo = begin > window ? begin - window : 0;
  const std::size_t hi = std::min(toks.size(), end + window);
  for (std::size_t j = lo; j < hi; ++j) {
    if (j >= begin && j < end) continue;
    if (!context_tag(toks[j].tag) || toks[j].lemma == self) continue;
    add(toks[j].lemma);
  }
}

// Sparse vector over interned context ids, sorted by id.
struct Sparse {
  std::vector<std::pair<std::uint32_t, double>> entries;
  double norm = 0.0;
};

double sparse_cosine(const Sparse& u, const Sparse& v) {
  if (u.entries.empty() || v.entries.empty()) return 0.0;
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < u.entries.size() && j < v.entries.size()) {
    if (u.entries[i].first == v.entries[j].first) {
      dot += u.entries[i].second * v.entries[j].second;
      ++i;
      ++j;
    } else if (u.entries[i].first < v.entries[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::clamp(dot / (u.norm * v.norm), 0.0, 1.0);
}

bool by_rank(const pom::PomEntity& a, const pom::PomEntity& b) {
  if (a.relevance != b.relevance) return a.relevance > b.relevance;
  return a.label < b.label;
}

}  // namespace

std::string_view to_string(Source source) { return source == Source::synonym ? "synonym" : "cosine"; }

ContextVector context_vector(std::string_view concept_label, const nlp::TaggedCorpus& corpus,
                             std::size_t window) {
  if (window == 0) throw InvalidInput("window must be at least 1");
  ContextVector v;
  v.concept_label = std::string(concept_label);
  for_each_occurrence(text::split_whitespace(concept_label), corpus,
                      [&](const auto& toks, std::size_t b, std::size_t e) {
                        add_context(toks, b, e, window, concept_label,
                                    [&](const std::string& lemma) { v.weights[lemma] += 1.0; });
                      });
  return v;
}

double cosine(const ContextVector& u, const ContextVector& v) {
  if (u.weights.empty() || v.weights.empty()) return 0.0;
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (const auto& [k, w] : u.weights) {
    nu += w * w;
    if (auto it = v.weights.find(k); it != v.weights.end()) dot += w * it->second;
  }
  for (const auto& [_, w] : v.weights) nv += w * w;
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), 0.0, 1.0);
}

SimilarityPair similarity(std::string_view a, std::string_view b, const wordnet::WordnetDb& db,
                          const nlp::TaggedCorpus& corpus, std::size_t window) {
  if (a == b) throw InvalidInput("similarity needs two distinct concepts");
  SimilarityPair p{std::string(a), std::string(b), 1.0, Source::synonym};
  if (db.are_synonyms(a, b)) return p;
  p.source = Source::cosine;
  p.score = cosine(context_vector(a, corpus, window), context_vector(b, corpus, window));
  return p;
}

struct SimilarityModel::Impl {
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<std::string> labels;
  std::vector<Sparse> vectors;
  std::vector<std::set<std::string>> synonyms;
  std::vector<std::string> context_names;

  bool synonymous(std::size_t i, std::size_t j) const {
    return synonyms[i].contains(labels[j]) || synonyms[j].contains(labels[i]);
  }

  SimilarityPair compare(std::size_t i, std::size_t j) const {
    if (i == j) throw InvalidInput("similarity needs two distinct concepts");
    if (synonymous(i, j)) return {labels[i], labels[j], 1.0, Source::synonym};
    return {labels[i], labels[j], sparse_cosine(vectors[i], vectors[j]), Source::cosine};
  }

  std::size_t index_of(std::string_view label) const {
    auto it = slot.find(std::string(label));
    if (it == slot.end()) throw InvalidInput("concept '" + std::string(label) + "' not in model");
    return it->second;
  }
};

SimilarityModel::SimilarityModel(const std::vector<std::string>& concepts, const wordnet::WordnetDb& db,
                                 const nlp::TaggedCorpus& corpus, std::size_t window)
    : impl_(std::make_unique<Impl>()) {
  if (window == 0) throw InvalidInput("window must be at least 1");
  Impl& m = *impl_;
  for (const auto& c : concepts) {
    if (m.slot.contains(c)) continue;
    m.slot.emplace(c, m.labels.size());
    m.labels.push_back(c);
  }
  m.vectors.resize(m.labels.size());
  m.synonyms.resize(m.labels.size());

  // One pass over the corpus: index noun lemma sequences starting at each
  // token by their first word, then test every concept anchored there.
  std::unordered_map<std::string, std::vector<std::size_t>> by_first;
  std::vector<std::vector<std::string>> words(m.labels.size());
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    words[i] = text::split_whitespace(m.labels[i]);
    if (!words[i].empty()) by_first[words[i].front()].push_back(i);
    m.synonyms[i] = db.synonyms(m.labels[i]);
    m.synonyms[i].insert(m.labels[i]);
  }

  std::unordered_map<std::string, std::uint32_t> ctx_ids;
  std::vector<std::unordered_map<std::uint32_t, double>> counts(m.labels.size());
  for (const auto& doc : corpus) {
    for (const auto& sentence : doc.sentences) {
      const auto& toks = sentence.tokens;
      for (std::size_t t = 0; t < toks.size(); ++t) {
        if (!nlp::is_noun(toks[t].tag)) continue;
        auto it = by_first.find(toks[t].lemma);
        if (it == by_first.end()) continue;
        for (auto ci : it->second) {
          const auto& w = words[ci];
          if (t + w.size() > toks.size()) continue;
          bool hit = true;
          for (std::size_t k = 1; k < w.size() && hit; ++k)
            hit = nlp::is_noun(toks[t + k].tag) && toks[t + k].lemma == w[k];
          if (!hit) continue;
          add_context(toks, t, t + w.size(), window, m.labels[ci], [&](const std::string& lemma) {
            auto [pos, inserted] = ctx_ids.emplace(lemma, static_cast<std::uint32_t>(ctx_ids.size()));
            if (inserted) m.context_names.push_back(lemma);
            counts[ci][pos->second] += 1.0;
          });
        }
      }
    }
  }
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    Sparse& s = m.vectors[i];
    s.entries.assign(counts[i].begin(), counts[i].end());
    std::sort(s.entries.begin(), s.entries.end());
    double sq = 0.0;
    for (const auto& [_, w] : s.entries) sq += w * w;
    s.norm = std::sqrt(sq);
  }
}

SimilarityModel::~SimilarityModel() = default;
SimilarityModel::SimilarityModel(SimilarityModel&&) noexcept = default;
SimilarityModel& SimilarityModel::operator=(SimilarityModel&&) noexcept = default;

SimilarityPair SimilarityModel::compare(std::string_view a, std::string_view b) const {
  return impl_->compare(impl_->index_of(a), impl_->index_of(b));
}

std::size_t SimilarityModel::size() const { return impl_->labels.size(); }
std::size_t SimilarityModel::index_of(std::string_view label) const { return impl_->index_of(label); }
SimilarityPair SimilarityModel::compare_at(std::size_t i, std::size_t j) const {
  return impl_->compare(i, j);
}

ContextVector SimilarityModel::vector_of(std::string_view label) const {
  const std::size_t i = impl_->index_of(label);
  ContextVector v;
  v.concept_label = impl_->labels[i];
  for (const auto& [id, w] : impl_->vectors[i].entries) v.weights[impl_->context_names[id]] = w;
  return v;
}

std::vector<ReducedConcept> reduce_by_similarity(const std::vector<pom::PomEntity>& concepts,
                                                 double threshold, const wordnet::WordnetDb& db,
                                                 const nlp::TaggedCorpus& corpus, std::size_t window) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw InvalidInput("threshold must lie in (0, 1]");
  std::vector<pom::PomEntity> order = concepts;
  std::sort(order.begin(), order.end(), by_rank);
  order.erase(std::unique(order.begin(), order.end(),
                          [](const auto& a, const auto& b) { return a.label == b.label; }),
              order.end());

  std::vector<std::string> labels;
  for (const auto& e : order) labels.push_back(e.label);
  const SimilarityModel model(labels, db, corpus, window);

  std::vector<ReducedConcept> kept;
  std::vector<std::size_t> kept_slots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t slot = model.index_of(order[i].label);
    bool absorbed = false;
    for (std::size_t k = 0; k < kept.size() && !absorbed; ++k) {
      if (model.compare_at(kept_slots[k], slot).score >= threshold) {
        kept[k].aliases.insert(order[i].label);
        absorbed = true;
      }
    }
    if (!absorbed) {
      kept.push_back({order[i], {}});
      kept_slots.push_back(slot);
    }
  }
  return kept;
}

std::vector<SimilarityPair> similar_pairs(const std::vector<std::string>& concepts, double min_score,
                                          const wordnet::WordnetDb& db, const nlp::TaggedCorpus& corpus,
                                          std::size_t window) {
  std::vector<std::string> labels = concepts;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const SimilarityModel model(labels, db, corpus, window);
  std::vector<SimilarityPair> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      auto p = model.compare_at(i, j);
      if (p.score >= min_score) out.push_back(std::move(p));
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const SimilarityPair& x, const SimilarityPair& y) { return x.score > y.score; });
  return out;
}

std::string format_pairs(const std::vector<SimilarityPair>& pairs) {
  std::string out = "a\tb\tscore\tsource\n";
  for (const auto& p : pairs)
    out += p.a + '\t' + p.b + '\t' + text::format_fixed(p.score, 6) + '\t' + std::string(to_string(p.source)) + '\n';
  return out;
}

}  // namespace ontoforge::similarity
