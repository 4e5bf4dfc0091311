#include "ontoforge/pipeline.hpp"

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::pipeline {

namespace fs = std::filesystem;

Resources load_resources(const config::PipelineConfig& cfg) {
  Resources res;
  if (!cfg.wordnet_dir.empty()) res.db = wordnet::WordnetDb::load(cfg.wordnet_dir);
  if (!cfg.lexicon_path.empty()) {
    const auto entries = nlp::parse_lexicon(text::read_file(cfg.lexicon_path));
    res.tagger.extend_lexicon(entries);
  }
  res.rules = relations::parse_rules(cfg.rules_path.empty() ? default_rules()
                                                            : std::string_view(text::read_file(cfg.rules_path)));
  return res;
}

nlp::TaggedCorpus tag_corpus(const ingest::Corpus& corpus, const nlp::Tagger& tagger, const fs::path& corpus_dir) {
  nlp::TaggedCorpus out;
  out.reserve(corpus.documents().size());
  for (const auto& doc : corpus.documents()) {
    nlp::TaggedDocument tagged;
    tagged.doc_id = doc.doc_id;
    std::error_code ec;
    const fs::path pretagged = corpus_dir.empty() ? fs::path() : corpus_dir / (doc.doc_id + ".tagged");
    if (!pretagged.empty() && fs::is_regular_file(pretagged, ec)) {
      tagged.sentences = nlp::parse_pretagged(text::read_file(pretagged));
    } else {
      tagged.sentences = tagger.analyze(doc.text);
    }
    out.push_back(std::move(tagged));
  }
  return out;
}

std::string relation_entity_label(const relations::Relation& rel) {
  return rel.label + "(" + rel.domain + ", " + rel.range + ")";
}

LearnResult learn(const config::PipelineConfig& cfg, const Resources& res, const LearnOptions& options) {
  return learn(cfg, res, ingest::load_corpus(cfg.corpus_dir), options);
}

LearnResult learn(const config::PipelineConfig& cfg, const Resources& res, const ingest::Corpus& corpus,
                  const LearnOptions& options) {
  config::validate(cfg);
  if (corpus.empty()) throw InvalidInput("corpus " + cfg.corpus_dir.string() + " is empty");
  LearnResult out;
  out.budget = ingest::corpus_budget_check(corpus, cfg.max_chars);
  if (!out.budget.within_budget)
    out.warnings.push_back("corpus has " + std::to_string(out.budget.total_chars) + " characters, over the " +
                           std::to_string(out.budget.max_chars) + " budget");

  const nlp::TaggedCorpus tagged = tag_corpus(corpus, res.tagger, cfg.corpus_dir);
  pom::Pom pom = pom::extract_concepts(tagged);

  relations::ExtractOptions xopts;
  xopts.separator = cfg.separator;
  relations::Extraction extraction = relations::extract(tagged, res.rules, xopts);
  out.relations = extraction.relations;
  out.subclass_pairs = extraction.subclass_pairs;

  const double tokens = static_cast<double>(pom.corpus_token_count());
  for (const auto& rel : out.relations) {
    pom::PomEntity e;
    e.label = relation_entity_label(rel);
    e.kind = pom::EntityKind::relation_entity;
    e.frequency = rel.count;
    e.relevance = tokens > 0 ? static_cast<double>(rel.count) / tokens : 0.0;
    if (!pom.find(e.label)) pom.put(std::move(e));
  }

  std::error_code ec;
  if (options.carry_overrides && fs::is_regular_file(cfg.pom_path(), ec)) {
    const pom::Pom previous = pom::load_pom(cfg.pom_path());
    for (const auto& [label, e] : previous.entities()) {
      if (!e.override) continue;
      if (pom::PomEntity* cur = pom.find(label)) cur->override = e.override;
    }
  }
  if (options.review_path) pom = pom::import_review(pom, *options.review_path);

  pom::Pom scored = pom;
  if (options.repository_feedback && fs::is_regular_file(cfg.index_path(), ec))
    scored = search::repository_feedback(search::load_index(cfg.index_path()), pom, cfg.boost_factor);

  std::vector<pom::PomEntity> concepts;
  std::set<std::string> kept_relations;
  for (auto& e : pom::variable_threshold(scored, cfg.static_theta)) {
    if (e.kind == pom::EntityKind::relation_entity) {
      kept_relations.insert(e.label);
    } else {
      concepts.push_back(e);
    }
    out.kept.push_back(std::move(e));
  }
  if (concepts.empty()) out.warnings.push_back("no concept passed the threshold; the ontology is empty");

  std::vector<relations::Relation> rels;
  for (const auto& rel : out.relations)
    if (kept_relations.contains(relation_entity_label(rel))) rels.push_back(rel);

  std::vector<ontology::ConceptEntry> entries;
  if (options.reduce && !concepts.empty()) {
    const auto reduced = similarity::reduce_by_similarity(concepts, cfg.sim_threshold, res.db, tagged, cfg.window);
    entries = ontology::entries_from(reduced);
    std::vector<std::string> labels;
    for (const auto& c : concepts) labels.push_back(c.label);
    out.similar = similarity::similar_pairs(labels, cfg.sim_threshold, res.db, tagged, cfg.window);
  } else {
    entries = ontology::entries_from(concepts);
  }
  out.onto = ontology::build_ontology(entries, rels, out.subclass_pairs);
  // The stored POM keeps unboosted relevance so repeated runs do not compound.
  out.pom = std::move(pom);
  return out;
}

void write_outputs(const config::PipelineConfig& cfg, const LearnResult& result) {
  fs::create_directories(cfg.work_dir);
  pom::save_pom(result.pom, cfg.pom_path());
  text::write_file(cfg.relations_path(), relations::format_relations(result.relations));
  ontology::serialize_turtle(result.onto, cfg.ontology_path(), cfg.base_iri);
  const fs::path similar = cfg.work_dir / "similar.tsv";
  if (!result.similar.empty()) {
    text::write_file(similar, similarity::format_pairs(result.similar));
  } else {
    std::error_code ec;
    fs::remove(similar, ec);
  }
}

search::IndexedMetadata build_index(const config::PipelineConfig& cfg, const Resources& res,
                                    const ontology::Ontology& onto) {
  const auto docs = search::load_repository(cfg.repo_dir);
  auto idx = search::index_repository(docs, onto, res.db, res.tagger);
  if (!idx.consistent()) throw InvalidInput("index maps are not inverse of each other");
  return idx;
}

std::vector<search::SearchResult> run_search(const config::PipelineConfig& cfg, const Resources& res,
                                             const ontology::Ontology& onto, const search::IndexedMetadata& idx,
                                             const SearchRequest& request) {
  search::ExpandOptions opts;
  opts.max_distance = cfg.max_distance;
  opts.decay = cfg.decay;
  opts.mode = request.mode;
  const auto q = search::expand_query(search::query_terms(request.query), onto, res.db, opts);
  search::UserProfile profile;
  if (!request.user.empty()) profile = search::load_profile(cfg.profiles_dir(), request.user);
  return search::execute_query(q, idx, profile, cfg.literal_weight);
}

search::UserProfile run_select(const config::PipelineConfig& cfg, const search::IndexedMetadata& idx,
                               std::string_view user, std::string_view doc_id) {
  const auto profile = search::load_profile(cfg.profiles_dir(), user);
  auto updated = search::record_selection(profile, doc_id, idx, cfg.selection_increment);
  search::save_profile(updated, cfg.profiles_dir());
  return updated;
}

evaluation::ComparisonReport run_compare(const ontology::Ontology& onto, const fs::path& reference,
                                         const wordnet::WordnetDb& db) {
  return evaluation::compare(onto, ontology::load_reference(reference), db, reference.stem().string());
}

}  // namespace ontoforge::pipeline
