#include "ontoforge/search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::search {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::vector<RepoDocument> load_repository(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("repository directory not found: " + dir.string());
  std::vector<RepoDocument> docs;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    RepoDocument d;
    d.doc_id = fs::relative(entry.path(), dir).generic_string();
    d.text = text::sanitize_utf8(text::read_file(entry.path()));
    for (const auto& line : text::split(d.text, '\n')) {
      std::string t = text::trim(line);
      if (!t.empty()) {
        d.title = std::move(t);
        break;
      }
    }
    docs.push_back(std::move(d));
  }
  std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  return docs;
}

// ---------------------------------------------------------------------------

ConceptMatcher::ConceptMatcher(const ontology::Ontology& onto, const wordnet::WordnetDb& db) {
  auto add = [&](const std::string& phrase, const std::string& concept_label) {
    const auto words = text::split_whitespace(text::to_lower(phrase));
    if (words.empty()) return;
    auto& targets = phrases_[text::join(words, " ")];
    if (std::find(targets.begin(), targets.end(), concept_label) == targets.end())
      targets.push_back(concept_label);
    max_words_ = std::max(max_words_, words.size());
  };
  for (const auto& [label, info] : onto.concepts) {
    add(label, label);
    for (const auto& alias : info.aliases) add(alias, label);
    for (const auto& syn : db.synonyms(label)) add(syn, label);
  }
}

const std::vector<std::string>* ConceptMatcher::lookup(std::string_view phrase) const {
  auto it = phrases_.find(std::string(phrase));
  return it == phrases_.end() ? nullptr : &it->second;
}

std::set<std::string> ConceptMatcher::match(const std::vector<std::string>& lemmas) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    std::string phrase;
    for (std::size_t n = 0; n < max_words_ && i + n < lemmas.size(); ++n) {
      if (n > 0) phrase += ' ';
      phrase += lemmas[i + n];
      if (auto hit = lookup(phrase)) out.insert(hit->begin(), hit->end());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool IndexedMetadata::consistent() const {
  for (const auto& [c, docs] : concept_to_docs) {
    for (const auto& d : docs) {
      auto it = doc_to_concepts.find(d);
      if (it == doc_to_concepts.end() || !it->second.contains(c)) return false;
      if (!doc_titles.contains(d)) return false;
    }
  }
  for (const auto& [d, concepts] : doc_to_concepts) {
    for (const auto& c : concepts) {
      auto it = concept_to_docs.find(c);
      if (it == concept_to_docs.end() || !it->second.contains(d)) return false;
    }
  }
  return true;
}

IndexedMetadata index_repository(const std::vector<RepoDocument>& docs, const ontology::Ontology& onto,
                                 const wordnet::WordnetDb& db, const nlp::Tagger& tagger) {
  const ConceptMatcher matcher(onto, db);
  IndexedMetadata idx;
  for (const auto& doc : docs) {
    if (idx.doc_titles.contains(doc.doc_id)) throw InvalidInput("duplicate document id '" + doc.doc_id + "'");
    idx.doc_titles[doc.doc_id] = doc.title;
    idx.doc_text[doc.doc_id] = doc.text;
    auto& concepts = idx.doc_to_concepts[doc.doc_id];
    for (const auto& sentence : tagger.analyze(doc.text)) {
      std::vector<std::string> lemmas;
      lemmas.reserve(sentence.tokens.size());
      for (const auto& t : sentence.tokens) lemmas.push_back(t.lemma);
      for (const auto& c : matcher.match(lemmas)) concepts.insert(c);
    }
    for (const auto& c : concepts) idx.concept_to_docs[c].insert(doc.doc_id);
  }
  return idx;
}

std::string to_json(const IndexedMetadata& idx) {
  ordered_json root;
  root["concept_to_docs"] = ordered_json::object();
  for (const auto& [c, docs] : idx.concept_to_docs) root["concept_to_docs"][c] = docs;
  root["doc_titles"] = ordered_json::object();
  for (const auto& [d, t] : idx.doc_titles) root["doc_titles"][d] = t;
  root["doc_text"] = ordered_json::object();
  for (const auto& [d, t] : idx.doc_text) root["doc_text"][d] = t;
  return root.dump(2) + "\n";
}

IndexedMetadata index_from_json(std::string_view content) {
  try {
    const json root = json::parse(content);
    IndexedMetadata idx;
    for (const auto& [d, t] : root.at("doc_titles").items()) {
      idx.doc_titles[d] = t.get<std::string>();
      idx.doc_to_concepts[d];
    }
    if (auto it = root.find("doc_text"); it != root.end())
      for (const auto& [d, t] : it->items()) idx.doc_text[d] = t.get<std::string>();
    for (const auto& [c, docs] : root.at("concept_to_docs").items()) {
      for (const auto& d : docs) {
        const std::string id = d.get<std::string>();
        if (!idx.doc_titles.contains(id)) throw ParseError("index json: document '" + id + "' has no title");
        idx.concept_to_docs[c].insert(id);
        idx.doc_to_concepts[id].insert(c);
      }
    }
    return idx;
  } catch (const json::exception& e) {
    throw ParseError(std::string("index json: ") + e.what());
  }
}

void save_index(const IndexedMetadata& idx, const fs::path& path) { text::write_file(path, to_json(idx)); }

IndexedMetadata load_index(const fs::path& path) { return index_from_json(text::read_file(path)); }

// ---------------------------------------------------------------------------

std::string_view to_string(QueryMode mode) {
  switch (mode) {
    case QueryMode::expand: return "expand";
    case QueryMode::trim: return "trim";
    case QueryMode::substitute: return "substitute";
  }
  return "expand";
}

std::optional<QueryMode> parse_mode(std::string_view name) {
  if (name == "expand") return QueryMode::expand;
  if (name == "trim") return QueryMode::trim;
  if (name == "substitute") return QueryMode::substitute;
  return std::nullopt;
}

std::vector<std::string> query_terms(std::string_view query) {
  std::vector<std::string> out;
  for (const auto& tok : nlp::tokenize(query)) {
    const bool wordlike = std::any_of(tok.begin(), tok.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
    });
    if (wordlike) out.push_back(text::to_lower(tok));
  }
  return out;
}

namespace {

std::string substitute_for(const std::string& c, const ontology::Ontology& onto, const wordnet::WordnetDb& db) {
  std::string best = c;
  double best_rel = onto.concepts.at(c).relevance;
  for (const auto& [label, info] : onto.concepts) {
    if (label == c || !db.are_synonyms(c, label)) continue;
    if (info.relevance > best_rel || (info.relevance == best_rel && label < best)) {
      best = label;
      best_rel = info.relevance;
    }
  }
  return best;
}

}  // namespace

ExpandedQuery expand_query(const std::vector<std::string>& terms, const ontology::Ontology& onto,
                           const ConceptMatcher& matcher, const wordnet::WordnetDb& db,
                           const ExpandOptions& options) {
  if (!(options.decay > 0.0 && options.decay < 1.0)) throw InvalidInput("decay must lie in (0, 1)");
  ExpandedQuery q;
  std::vector<std::string> raw;
  for (const auto& t : terms) {
    std::string lower = text::to_lower(text::trim(t));
    if (lower.empty()) continue;
    q.original_terms.push_back(nlp::lemmatize(lower, nlp::PosTag::NN));
    raw.push_back(std::move(lower));
  }
  if (q.original_terms.empty()) throw InvalidInput("query has no terms");

  std::vector<bool> used(q.original_terms.size(), false);
  std::set<std::string> direct;
  for (const auto* seq : {&q.original_terms, &raw}) {
    for (std::size_t i = 0; i < seq->size(); ++i) {
      std::string phrase;
      for (std::size_t n = i; n < seq->size(); ++n) {
        if (n > i) phrase += ' ';
        phrase += (*seq)[n];
        if (auto hit = matcher.lookup(phrase)) {
          for (const auto& c : *hit)
            if (onto.concepts.contains(c)) direct.insert(c);
          for (std::size_t k = i; k <= n; ++k) used[k] = true;
        }
      }
    }
  }

  if (options.mode == QueryMode::substitute) {
    std::set<std::string> swapped;
    for (const auto& c : direct) swapped.insert(substitute_for(c, onto, db));
    direct = std::move(swapped);
  }
  for (const auto& c : direct) q.weighted_concepts[c] = 1.0;
  if (options.max_distance > 0) {
    for (const auto& c : direct) {
      for (const auto& [node, dist] : ontology::related_concepts(onto, c, options.max_distance)) {
        const std::string* primary = onto.primary_label(node);
        if (!primary) continue;
        const double w = std::pow(options.decay, static_cast<double>(dist));
        double& slot = q.weighted_concepts[*primary];
        slot = std::max(slot, w);
      }
    }
  }

  if (options.mode != QueryMode::trim) {
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (!used[i]) q.literal_terms.push_back(raw[i]);
  } else if (q.weighted_concepts.empty()) {
    throw InvalidInput("no query term names a concept");
  }
  return q;
}

ExpandedQuery expand_query(const std::vector<std::string>& terms, const ontology::Ontology& onto,
                           const wordnet::WordnetDb& db, const ExpandOptions& options) {
  return expand_query(terms, onto, ConceptMatcher(onto, db), db, options);
}

double UserProfile::rating(std::string_view label) const {
  auto it = ratings.find(std::string(label));
  return it == ratings.end() ? 0.0 : it->second;
}

std::vector<SearchResult> execute_query(const ExpandedQuery& q, const IndexedMetadata& idx,
                                        const UserProfile& profile, double literal_weight) {
  std::map<std::string, SearchResult> hits;
  for (const auto& [c, w] : q.weighted_concepts) {
    auto it = idx.concept_to_docs.find(c);
    if (it == idx.concept_to_docs.end()) continue;
    for (const auto& d : it->second) {
      SearchResult& r = hits[d];
      r.score += w * (1.0 + profile.rating(c));
      r.matched_concepts.emplace_back(c, w);
    }
  }
  if (!q.literal_terms.empty()) {
    for (const auto& [d, body] : idx.doc_text) {
      const std::string lower = text::to_lower(body);
      for (const auto& term : q.literal_terms)
        if (lower.find(term) != std::string::npos) hits[d].score += literal_weight;
    }
  }
  std::vector<SearchResult> out;
  for (auto& [d, r] : hits) {
    if (r.score <= 0.0) continue;
    r.doc_id = d;
    if (auto t = idx.doc_titles.find(d); t != idx.doc_titles.end()) r.title = t->second;
    std::sort(r.matched_concepts.begin(), r.matched_concepts.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SearchResult& a, const SearchResult& b) {
    return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
  });
  return out;
}

std::string results_to_json(const std::vector<SearchResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ordered_json j;
    j["doc_id"] = r.doc_id;
    j["title"] = r.title;
    j["score"] = r.score;
    ordered_json matched = ordered_json::array();
    for (const auto& [label, w] : r.matched_concepts) matched.push_back({{"label", label}, {"weight", w}});
    j["matched_concepts"] = std::move(matched);
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

UserProfile record_selection(const UserProfile& profile, std::string_view doc_id, const IndexedMetadata& idx,
                             double increment) {
  if (!(increment > 0.0)) throw InvalidInput("selection increment must be positive");
  auto it = idx.doc_to_concepts.find(std::string(doc_id));
  if (it == idx.doc_to_concepts.end()) throw InvalidInput("unknown document '" + std::string(doc_id) + "'");
  UserProfile out = profile;
  for (const auto& c : it->second) out.ratings[c] += increment;
  return out;
}

bool valid_user_id(std::string_view user_id) {
  if (user_id.empty() || user_id.size() > 128 || user_id.front() == '.') return false;
  return std::all_of(user_id.begin(), user_id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

fs::path profile_path(const fs::path& dir, std::string_view user_id) {
  if (!valid_user_id(user_id)) throw InvalidInput("invalid user id '" + std::string(user_id) + "'");
  return dir / (std::string(user_id) + ".json");
}

UserProfile load_profile(const fs::path& dir, std::string_view user_id) {
  const fs::path path = profile_path(dir, user_id);
  UserProfile p;
  p.user_id = std::string(user_id);
  std::error_code ec;
  if (!fs::exists(path, ec)) return p;
  try {
    const json root = json::parse(text::read_file(path));
    for (const auto& [c, r] : root.at("ratings").items()) {
      const double v = r.get<double>();
      if (v < 0.0) throw ParseError("profile " + path.string() + ": negative rating for '" + c + "'");
      p.ratings[c] = v;
    }
  } catch (const json::exception& e) {
    throw ParseError("profile " + path.string() + ": " + e.what());
  }
  return p;
}

void save_profile(const UserProfile& profile, const fs::path& dir) {
  const fs::path path = profile_path(dir, profile.user_id);
  fs::create_directories(dir);
  ordered_json root;
  root["user_id"] = profile.user_id;
  root["ratings"] = ordered_json::object();
  for (const auto& [c, r] : profile.ratings) root["ratings"][c] = r;
  text::write_file(path, root.dump(2) + "\n");
}

pom::Pom repository_feedback(const IndexedMetadata& idx, const pom::Pom& pom, double factor) {
  std::set<std::string> found;
  for (const auto& [c, docs] : idx.concept_to_docs)
    if (!docs.empty()) found.insert(c);
  return pom::boost_concepts(pom, found, factor);
}

}  // namespace ontoforge::search
