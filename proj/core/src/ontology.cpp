#include "ontoforge/ontology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "ontoforge/error.hpp"
#include "ontoforge/nlp.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::ontology {

namespace {

const std::unordered_set<std::string_view>& determiners() {
  static const std::unordered_set<std::string_view> words = {
      "a", "an", "the", "this", "that", "these", "those", "some", "any", "every", "each",
      "his", "her", "its", "their", "our", "your", "my", "no", "all", "both", "another"};
  return words;
}

const std::unordered_set<std::string_view>& prepositions() {
  static const std::unordered_set<std::string_view> words = {
      "of", "to", "in", "for", "on", "at", "by", "with", "from", "about", "into", "over",
      "under", "between", "through", "against", "during", "without", "within", "among",
      "per", "via", "after", "before", "across", "upon"};
  return words;
}

using Lookup = std::function<const std::string*(const std::string&)>;

const std::string* resolve_with(std::string_view phrase, const Lookup& lookup) {
  auto words = text::split_whitespace(text::to_lower(phrase));
  std::size_t start = 0;
  while (start < words.size() && determiners().contains(words[start])) ++start;
  if (start == words.size()) return nullptr;
  std::vector<std::string> raw(words.begin() + static_cast<std::ptrdiff_t>(start), words.end());
  std::vector<std::string> lemmas;
  for (const auto& w : raw) lemmas.push_back(nlp::lemmatize(w, nlp::PosTag::NN));

  if (auto hit = lookup(text::join(lemmas, " "))) return hit;
  if (auto hit = lookup(text::join(raw, " "))) return hit;
  const bool has_preposition = std::any_of(raw.begin(), raw.end(), [](const std::string& w) {
    return prepositions().contains(w);
  });
  if (has_preposition) return nullptr;
  for (std::size_t k = 1; k < lemmas.size(); ++k) {
    std::vector<std::string> tail(lemmas.begin() + static_cast<std::ptrdiff_t>(k), lemmas.end());
    if (auto hit = lookup(text::join(tail, " "))) return hit;
  }
  return nullptr;
}

std::string concept_segment(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (c == ' ') out += '-';
    else if (c == '-') out += "%2D";
    else out += rdf::encode_iri_segment(std::string_view(&c, 1));
  }
  return out;
}

std::string trim_base(std::string_view base) {
  std::string b(base.empty() ? kDefaultBase : base);
  while (!b.empty() && b.back() == '/') b.pop_back();
  return b;
}

bool reaches(const std::vector<std::pair<std::string, std::string>>& edges, const std::string& from,
             const std::string& to) {
  std::unordered_map<std::string, std::vector<std::string>> up;
  for (const auto& [c, p] : edges) up[c].push_back(p);
  std::deque<std::string> queue{from};
  std::unordered_set<std::string> seen{from};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    if (node == to) return true;
    for (const auto& next : up[node])
      if (seen.insert(next).second) queue.push_back(next);
  }
  return false;
}

const std::string kType = std::string(rdf::kRdf) + "type";
const std::string kLabel = std::string(rdf::kRdfs) + "label";
const std::string kSubClassOf = std::string(rdf::kRdfs) + "subClassOf";
const std::string kRdfsClass = std::string(rdf::kRdfs) + "Class";
const std::string kOwlClass = std::string(rdf::kOwl) + "Class";
const std::string kObjectProperty = std::string(rdf::kOwl) + "ObjectProperty";
const std::string kDomain = std::string(rdf::kRdfs) + "domain";
const std::string kRange = std::string(rdf::kRdfs) + "range";
const std::string kRelevance = std::string(kAnnotationNs) + "relevance";
const std::string kAlias = std::string(kAnnotationNs) + "alias";
const std::string kCount = std::string(kAnnotationNs) + "count";

// IRI -> label for every class in the graph.
std::map<std::string, std::string> class_labels(const rdf::Graph& graph) {
  std::set<std::string> classes;
  std::map<std::string, std::string> labels;
  for (const auto& t : graph.triples()) {
    const std::string& p = t.predicate.value;
    if (p == kType && t.object.is_iri() && (t.object.value == kRdfsClass || t.object.value == kOwlClass) &&
        t.subject.is_iri()) {
      classes.insert(t.subject.value);
    } else if (p == kSubClassOf) {
      if (t.subject.is_iri()) classes.insert(t.subject.value);
      if (t.object.is_iri()) classes.insert(t.object.value);
    } else if (p == kLabel && t.object.is_literal() && t.subject.is_iri()) {
      std::string l = text::to_lower(text::trim(t.object.value));
      auto it = labels.find(t.subject.value);
      if (it == labels.end()) labels.emplace(t.subject.value, std::move(l));
      else if (l < it->second) it->second = std::move(l);
    }
  }
  std::map<std::string, std::string> out;
  for (const auto& iri : classes) {
    auto it = labels.find(iri);
    out[iri] = it != labels.end() ? it->second : text::to_lower(rdf::decode_iri_segment(rdf::local_name(iri)));
  }
  return out;
}

}  // namespace

const std::string* Ontology::primary_label(std::string_view label) const {
  if (auto it = concepts.find(std::string(label)); it != concepts.end()) return &it->first;
  for (const auto& [primary, info] : concepts)
    if (info.aliases.contains(std::string(label))) return &primary;
  return nullptr;
}

const std::string* Ontology::resolve_phrase(std::string_view phrase) const {
  return resolve_with(phrase, [this](const std::string& s) { return primary_label(s); });
}

std::vector<ConceptEntry> entries_from(const std::vector<pom::PomEntity>& concepts) {
  std::vector<ConceptEntry> out;
  for (const auto& e : concepts) out.push_back({e.label, e.relevance, {}});
  return out;
}

std::vector<ConceptEntry> entries_from(const std::vector<similarity::ReducedConcept>& concepts) {
  std::vector<ConceptEntry> out;
  for (const auto& c : concepts) out.push_back({c.entity.label, c.entity.relevance, c.aliases});
  return out;
}

Ontology build_ontology(const std::vector<ConceptEntry>& concepts,
                        const std::vector<relations::Relation>& rels,
                        const std::vector<relations::SubclassPair>& subclass_pairs) {
  Ontology onto;
  for (const auto& c : concepts) {
    auto [it, inserted] = onto.concepts.try_emplace(c.label, ConceptInfo{c.relevance, c.aliases});
    if (!inserted) {
      it->second.relevance = std::max(it->second.relevance, c.relevance);
      it->second.aliases.insert(c.aliases.begin(), c.aliases.end());
    }
  }
  std::unordered_map<std::string, const std::string*> alias_index;
  for (auto& [label, info] : onto.concepts) {
    for (auto it = info.aliases.begin(); it != info.aliases.end();) {
      const bool taken = onto.concepts.contains(*it) || alias_index.contains(*it);
      if (taken) {
        it = info.aliases.erase(it);
      } else {
        alias_index.emplace(*it, &label);
        ++it;
      }
    }
  }
  Lookup lookup = [&](const std::string& s) -> const std::string* {
    if (auto it = onto.concepts.find(s); it != onto.concepts.end()) return &it->first;
    if (auto it = alias_index.find(s); it != alias_index.end()) return it->second;
    return nullptr;
  };

  std::vector<relations::Relation> kept;
  for (const auto& r : rels) {
    const std::string* d = resolve_with(r.domain, lookup);
    const std::string* g = resolve_with(r.range, lookup);
    if (!d || !g) continue;
    relations::Relation copy = r;
    copy.domain = *d;
    copy.range = *g;
    kept.push_back(std::move(copy));
  }
  onto.relations = relations::merge_relations(std::move(kept));

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& p : subclass_pairs) {
    const std::string* child = resolve_with(p.child, lookup);
    const std::string* parent = resolve_with(p.parent, lookup);
    if (!child || !parent || *child == *parent) continue;
    if (!seen.emplace(*child, *parent).second) continue;
    if (reaches(onto.subclass_edges, *parent, *child)) continue;
    onto.subclass_edges.emplace_back(*child, *parent);
  }
  std::sort(onto.subclass_edges.begin(), onto.subclass_edges.end());
  return onto;
}

Ontology build_ontology(const std::vector<pom::PomEntity>& concepts,
                        const std::vector<relations::Relation>& rels) {
  return build_ontology(entries_from(concepts), rels);
}

std::string concept_iri(std::string_view label, std::string_view base) {
  return trim_base(base) + "/concept/" + concept_segment(label);
}

std::string relation_iri(const relations::Relation& rel, std::string_view base) {
  return trim_base(base) + "/relation/" + concept_segment(rel.label) + "/" + concept_segment(rel.domain) +
         "/" + concept_segment(rel.range);
}

std::string to_turtle(const Ontology& onto, std::string_view base) {
  std::string out;
  out += "@prefix rdf: <" + std::string(rdf::kRdf) + "> .\n";
  out += "@prefix rdfs: <" + std::string(rdf::kRdfs) + "> .\n";
  out += "@prefix owl: <" + std::string(rdf::kOwl) + "> .\n";
  out += "@prefix xsd: <" + std::string(rdf::kXsd) + "> .\n";
  out += "@prefix of: <" + std::string(kAnnotationNs) + "> .\n";

  std::map<std::string, std::vector<std::string>> parents;
  for (const auto& [c, p] : onto.subclass_edges) parents[c].push_back(p);

  for (const auto& [label, info] : onto.concepts) {
    out += "\n<" + concept_iri(label, base) + "> a owl:Class ;\n";
    out += "    rdfs:label " + rdf::quote_literal(label) + " ;\n";
    for (const auto& alias : info.aliases) out += "    of:alias " + rdf::quote_literal(alias) + " ;\n";
    if (auto it = parents.find(label); it != parents.end())
      for (const auto& p : it->second) out += "    rdfs:subClassOf <" + concept_iri(p, base) + "> ;\n";
    out += "    of:relevance \"" + text::format_fixed(info.relevance, 10) + "\"^^xsd:decimal .\n";
  }
  for (const auto& r : onto.relations) {
    out += "\n<" + relation_iri(r, base) + "> a owl:ObjectProperty ;\n";
    out += "    rdfs:label " + rdf::quote_literal(r.label) + " ;\n";
    out += "    rdfs:domain <" + concept_iri(r.domain, base) + "> ;\n";
    out += "    rdfs:range <" + concept_iri(r.range, base) + "> ;\n";
    out += "    of:count \"" + std::to_string(r.count) + "\"^^xsd:integer .\n";
  }
  return out;
}

void serialize_turtle(const Ontology& onto, const std::filesystem::path& path, std::string_view base) {
  text::write_file(path, to_turtle(onto, base));
}

Ontology from_graph(const rdf::Graph& graph) {
  const auto labels = class_labels(graph);
  Ontology onto;
  for (const auto& [iri, label] : labels) onto.concepts[label];

  std::map<std::string, relations::Relation> props;
  std::set<std::string> object_props;
  for (const auto& t : graph.triples()) {
    if (!t.subject.is_iri()) continue;
    const std::string& s = t.subject.value;
    const std::string& p = t.predicate.value;
    auto cls = labels.find(s);
    if (cls != labels.end()) {
      ConceptInfo& info = onto.concepts[cls->second];
      if (p == kRelevance && t.object.is_literal()) {
        try {
          info.relevance = std::stod(t.object.value);
        } catch (const std::exception&) {
          throw ParseError("bad relevance value '" + t.object.value + "'");
        }
      } else if (p == kAlias && t.object.is_literal()) {
        info.aliases.insert(text::to_lower(t.object.value));
      } else if (p == kSubClassOf && t.object.is_iri()) {
        if (auto parent = labels.find(t.object.value); parent != labels.end() && parent->second != cls->second)
          onto.subclass_edges.emplace_back(cls->second, parent->second);
      }
    }
    if (p == kType && t.object.is_iri() && t.object.value == kObjectProperty) object_props.insert(s);
    relations::Relation& r = props[s];
    if (p == kLabel && t.object.is_literal()) r.label = t.object.value;
    else if (p == kDomain && t.object.is_iri()) r.domain = t.object.value;
    else if (p == kRange && t.object.is_iri()) r.range = t.object.value;
    else if (p == kCount && t.object.is_literal()) {
      try {
        r.count = std::stoul(t.object.value);
      } catch (const std::exception&) {
        throw ParseError("bad relation count '" + t.object.value + "'");
      }
    }
  }
  std::vector<relations::Relation> rels;
  for (const auto& iri : object_props) {
    relations::Relation r = props[iri];
    auto d = labels.find(r.domain);
    auto g = labels.find(r.range);
    if (d == labels.end() || g == labels.end()) continue;
    r.domain = d->second;
    r.range = g->second;
    if (r.label.empty()) r.label = text::to_lower(rdf::decode_iri_segment(rdf::local_name(iri)));
    rels.push_back(std::move(r));
  }
  onto.relations = relations::merge_relations(std::move(rels));
  std::sort(onto.subclass_edges.begin(), onto.subclass_edges.end());
  onto.subclass_edges.erase(std::unique(onto.subclass_edges.begin(), onto.subclass_edges.end()),
                            onto.subclass_edges.end());
  return onto;
}

Ontology load_ontology(const std::filesystem::path& path) { return from_graph(rdf::parse_rdf(path)); }

std::set<std::string> extract_classes(const rdf::Graph& graph) {
  std::set<std::string> out;
  for (const auto& [_, label] : class_labels(graph)) out.insert(label);
  return out;
}

std::set<std::string> parse_class_list(std::string_view content) {
  std::set<std::string> out;
  for (const auto& line : text::split(content, '\n')) {
    std::string t = text::to_lower(text::trim(line));
    if (t.empty() || t.front() == '#') continue;
    out.insert(std::move(t));
  }
  return out;
}

std::set<std::string> load_class_list(const std::filesystem::path& path) {
  return parse_class_list(text::read_file(path));
}

std::set<std::string> load_reference(const std::filesystem::path& path) {
  const std::string ext = text::to_lower(path.extension().string());
  if (ext == ".ttl" || ext == ".nt" || ext == ".turtle") return extract_classes(rdf::parse_rdf(path));
  return load_class_list(path);
}

std::vector<std::pair<std::string, std::size_t>> related_concepts(const Ontology& onto,
                                                                  std::string_view seed,
                                                                  std::size_t max_distance) {
  if (max_distance == 0) throw InvalidInput("max_distance must be at least 1");
  std::unordered_map<std::string, std::set<std::string>> adj;
  auto link = [&](const std::string& a, const std::string& b) {
    if (a == b) return;
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (const auto& [label, info] : onto.concepts) {
    adj[label];
    for (const auto& alias : info.aliases) link(label, alias);
  }
  for (const auto& r : onto.relations) link(r.domain, r.range);
  for (const auto& [c, p] : onto.subclass_edges) link(c, p);

  const std::string start(seed);
  std::vector<std::pair<std::string, std::size_t>> out;
  if (!adj.contains(start)) return out;
  std::unordered_map<std::string, std::size_t> dist{{start, 0}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist[node];
    if (d == max_distance) continue;
    for (const auto& next : adj[node]) {
      if (dist.contains(next)) continue;
      dist[next] = d + 1;
      out.emplace_back(next, d + 1);
      queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

}  // namespace ontoforge::ontology
