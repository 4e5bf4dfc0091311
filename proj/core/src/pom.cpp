#include "ontoforge/pom.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

#include <json.hpp>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::pom {

using nlohmann::json;

std::string_view to_string(EntityKind kind) {
  return kind == EntityKind::concept_entity ? "concept" : "relation";
}

std::optional<EntityKind> parse_kind(std::string_view name) {
  if (name == "concept") return EntityKind::concept_entity;
  if (name == "relation") return EntityKind::relation_entity;
  return std::nullopt;
}

const PomEntity* Pom::find(std::string_view label) const {
  auto it = entities_.find(label);
  return it == entities_.end() ? nullptr : &it->second;
}

PomEntity* Pom::find(std::string_view label) {
  auto it = entities_.find(label);
  return it == entities_.end() ? nullptr : &it->second;
}

void Pom::put(PomEntity entity) {
  std::string key = entity.label;
  entities_.insert_or_assign(std::move(key), std::move(entity));
}

namespace {

bool concept_token(const nlp::TaggedToken& t) {
  return nlp::is_noun(t.tag) &&
         std::any_of(t.lemma.begin(), t.lemma.end(),
                     [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
}

bool by_rank(const PomEntity& a, const PomEntity& b) {
  if (a.relevance != b.relevance) return a.relevance > b.relevance;
  return a.label < b.label;
}

bool passes(const PomEntity& e, double theta_percent) {
  return e.relevance * 100.0 >= theta_percent;
}

std::optional<double> parse_override(std::string_view cell) {
  const std::string t = text::trim(cell);
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || (v != 0.0 && v != 1.0))
    throw InvalidInput("override must be 0, 1 or blank, got '" + t + "'");
  return v;
}

}  // namespace

Pom extract_concepts(const nlp::TaggedCorpus& corpus) {
  const std::size_t tokens = nlp::token_count(corpus);
  if (tokens == 0) throw InvalidInput("cannot extract concepts from an empty corpus");

  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& doc : corpus) {
    for (const auto& sentence : doc.sentences) {
      const auto& toks = sentence.tokens;
      std::size_t i = 0;
      while (i < toks.size()) {
        if (!concept_token(toks[i])) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < toks.size() && concept_token(toks[j])) ++j;
        for (std::size_t a = i; a < j; ++a) {
          std::string label = toks[a].lemma;
          ++counts[label];
          for (std::size_t b = a + 1; b < j && b < a + 3; ++b) {
            label += ' ';
            label += toks[b].lemma;
            ++counts[label];
          }
        }
        i = j;
      }
    }
  }

  Pom pom(tokens);
  for (auto& [label, freq] : counts) {
    PomEntity e;
    e.label = label;
    e.kind = EntityKind::concept_entity;
    e.frequency = freq;
    e.relevance = static_cast<double>(freq) / static_cast<double>(tokens);
    pom.put(std::move(e));
  }
  return pom;
}

std::vector<PomEntity> ranked(const Pom& pom) {
  std::vector<PomEntity> out;
  out.reserve(pom.size());
  for (const auto& [_, e] : pom.entities()) out.push_back(e);
  std::sort(out.begin(), out.end(), by_rank);
  return out;
}

std::vector<PomEntity> static_threshold(const Pom& pom, double theta_percent) {
  if (theta_percent < 0) throw InvalidInput("threshold must be non-negative");
  std::vector<PomEntity> out;
  for (const auto& [_, e] : pom.entities())
    if (passes(e, theta_percent)) out.push_back(e);
  std::sort(out.begin(), out.end(), by_rank);
  return out;
}

std::vector<PomEntity> variable_threshold(const Pom& pom, double theta_percent) {
  if (theta_percent < 0) throw InvalidInput("threshold must be non-negative");
  std::vector<PomEntity> out;
  for (const auto& [_, e] : pom.entities()) {
    const bool keep = e.override ? *e.override == 1.0 : passes(e, theta_percent);
    if (keep) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), by_rank);
  return out;
}

Pom boost_concepts(const Pom& pom, const std::set<std::string>& found, double factor) {
  if (!(factor > 1.0)) throw InvalidInput("boost factor must be greater than 1");
  Pom out = pom;
  for (const auto& label : found)
    if (PomEntity* e = out.find(label)) e->relevance = std::min(1.0, e->relevance * factor);
  return out;
}

Pom apply_overrides(const Pom& pom, const std::vector<OverrideUpdate>& updates) {
  std::vector<std::string> unknown;
  for (const auto& u : updates) {
    if (!pom.find(u.label)) unknown.push_back(u.label);
    if (u.value && *u.value != 0.0 && *u.value != 1.0)
      throw InvalidInput("override for '" + u.label + "' must be 0 or 1");
  }
  if (!unknown.empty()) throw InvalidInput("unknown labels: " + text::join(unknown, ", "));
  Pom out = pom;
  for (const auto& u : updates) out.find(u.label)->override = u.value;
  return out;
}

std::string format_review(const Pom& pom) {
  std::string out(kReviewHeader);
  out += '\n';
  for (const auto& e : ranked(pom)) {
    out += e.label;
    out += '\t';
    out += to_string(e.kind);
    out += '\t' + std::to_string(e.frequency) + '\t' + text::format_fixed(e.relevance, 6) + '\t';
    if (e.override) out += *e.override == 1.0 ? "1.0" : "0.0";
    out += '\n';
  }
  return out;
}

Pom parse_review(const Pom& pom, std::string_view tsv) {
  std::vector<OverrideUpdate> updates;
  std::size_t line_no = 0;
  for (auto line : text::split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.starts_with("label\t")) continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() < 4 || cols.size() > 5)
      throw ParseError("review file: expected 5 tab-separated columns", line_no);
    try {
      auto value = cols.size() == 5 ? parse_override(cols[4]) : std::nullopt;
      if (value) updates.push_back({cols[0], value});
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("review file: ") + e.what(), line_no);
    }
  }
  std::vector<OverrideUpdate> known;
  std::vector<std::string> unknown;
  for (auto& u : updates) {
    if (pom.find(u.label)) known.push_back(std::move(u));
    else unknown.push_back(u.label);
  }
  if (!unknown.empty()) throw InvalidInput("unknown labels in review file: " + text::join(unknown, ", "));
  return apply_overrides(pom, known);
}

void export_review(const Pom& pom, const std::filesystem::path& path) {
  text::write_file(path, format_review(pom));
}

Pom import_review(const Pom& pom, const std::filesystem::path& path) {
  return parse_review(pom, text::read_file(path));
}

std::string to_json(const Pom& pom) {
  json entities = json::array();
  for (const auto& [label, e] : pom.entities()) {
    json j = {{"label", e.label},
              {"kind", std::string(to_string(e.kind))},
              {"relevance", e.relevance},
              {"frequency", e.frequency}};
    if (e.override) j["override"] = *e.override;
    entities.push_back(std::move(j));
  }
  json root = {{"corpus_token_count", pom.corpus_token_count()}, {"entities", std::move(entities)}};
  return root.dump(2) + "\n";
}

Pom pom_from_json(std::string_view text_json) {
  json root;
  try {
    root = json::parse(text_json);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("pom json: ") + e.what());
  }
  try {
    Pom pom(root.at("corpus_token_count").get<std::size_t>());
    for (const auto& j : root.at("entities")) {
      PomEntity e;
      e.label = j.at("label").get<std::string>();
      auto kind = parse_kind(j.at("kind").get<std::string>());
      if (!kind) throw ParseError("pom json: unknown kind for '" + e.label + "'");
      e.kind = *kind;
      e.relevance = j.at("relevance").get<double>();
      e.frequency = j.at("frequency").get<std::size_t>();
      if (auto it = j.find("override"); it != j.end() && !it->is_null()) {
        const double v = it->get<double>();
        if (v != 0.0 && v != 1.0) throw ParseError("pom json: override must be 0 or 1");
        e.override = v;
      }
      if (e.relevance < 0.0 || e.relevance > 1.0)
        throw ParseError("pom json: relevance out of range for '" + e.label + "'");
      pom.put(std::move(e));
    }
    return pom;
  } catch (const json::exception& e) {
    throw ParseError(std::string("pom json: ") + e.what());
  }
}

void save_pom(const Pom& pom, const std::filesystem::path& path) {
  text::write_file(path, to_json(pom));
}

Pom load_pom(const std::filesystem::path& path) { return pom_from_json(text::read_file(path)); }

}  // namespace ontoforge::pom
