#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/pom.hpp"
#include "ontoforge/rdf.hpp"
#include "ontoforge/relations.hpp"
#include "ontoforge/similarity.hpp"

namespace ontoforge::ontology {

inline constexpr std::string_view kDefaultBase = "http://ontoforge.local";
inline constexpr std::string_view kAnnotationNs = "http://ontoforge.local/ns#";

struct ConceptInfo {
  double relevance = 0.0;
  std::set<std::string> aliases;

  bool operator==(const ConceptInfo&) const = default;
};

struct ConceptEntry {
  std::string label;
  double relevance = 0.0;
  std::set<std::string> aliases;
};

struct Ontology {
  std::map<std::string, ConceptInfo> concepts;
  /// Domain and range are primary concept labels.
  std::vector<relations::Relation> relations;
  /// (child, parent) primary labels; acyclic.
  std::vector<std::pair<std::string, std::string>> subclass_edges;

  bool empty() const { return concepts.empty(); }
  /// Primary label for a label or alias, or nullptr.
  const std::string* primary_label(std::string_view label) const;
  /// Maps a relation phrase to a concept: leading determiners dropped, each
  /// word noun-lemmatized, then matched against labels and aliases. When the
  /// phrase has no preposition, leading modifiers are dropped one by one.
  const std::string* resolve_phrase(std::string_view phrase) const;

  bool operator==(const Ontology&) const = default;
};

/// Every concept becomes a class; colliding labels keep the higher relevance
/// and the union of aliases. Relations survive only when both ends resolve to
/// concepts. Subclass pairs are resolved the same way; pairs that would close
/// a cycle are skipped.
Ontology build_ontology(const std::vector<ConceptEntry>& concepts,
                        const std::vector<relations::Relation>& relations,
                        const std::vector<relations::SubclassPair>& subclass_pairs = {});
Ontology build_ontology(const std::vector<pom::PomEntity>& concepts,
                        const std::vector<relations::Relation>& relations);

std::vector<ConceptEntry> entries_from(const std::vector<pom::PomEntity>& concepts);
std::vector<ConceptEntry> entries_from(const std::vector<similarity::ReducedConcept>& concepts);

std::string concept_iri(std::string_view label, std::string_view base = kDefaultBase);
std::string relation_iri(const relations::Relation& rel, std::string_view base = kDefaultBase);

/// Deterministic Turtle: concepts sorted by label, then relations sorted by triple.
std::string to_turtle(const Ontology& onto, std::string_view base = kDefaultBase);
void serialize_turtle(const Ontology& onto, const std::filesystem::path& path,
                      std::string_view base = kDefaultBase);

/// Rebuilds an ontology from a graph written by to_turtle. Classes without
/// annotations get relevance 0.
Ontology from_graph(const rdf::Graph& graph);
Ontology load_ontology(const std::filesystem::path& path);

/// Classes: subjects typed rdfs:Class or owl:Class plus both ends of
/// rdfs:subClassOf, blank nodes excluded. Each is named by its rdfs:label
/// (the smallest one when several exist) or else its IRI local name,
/// lowercased.
std::set<std::string> extract_classes(const rdf::Graph& graph);

/// One label per line; trimmed, lowercased, deduplicated; `#` lines skipped.
std::set<std::string> parse_class_list(std::string_view text);
std::set<std::string> load_class_list(const std::filesystem::path& path);

/// Loads `.ttl`/`.nt` files as RDF and anything else as a class list.
std::set<std::string> load_reference(const std::filesystem::path& path);

/// Breadth-first over relation, subclass and alias edges, undirected. Returns
/// nodes at distance 1..max_distance ordered by distance then label. Throws
/// InvalidInput when max_distance is 0.
std::vector<std::pair<std::string, std::size_t>> related_concepts(const Ontology& onto,
                                                                  std::string_view seed,
                                                                  std::size_t max_distance);

}  // namespace ontoforge::ontology
