// ontoforge: command-line driver for the learn / review / index / search loop.

#include <csignal>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontoforge/config.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/evaluation.hpp"
#include "ontoforge/ingest.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/search.hpp"
#include "ontoforge/service.hpp"
#include "ontoforge/text.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace ontoforge;

namespace {

struct Globals {
  std::string config_path;
  bool json = false;
  // Flag overrides, applied over the config file in this order.
  std::vector<std::pair<std::string, std::string>> settings;
};

// Registers `--flag` that records `key=value` into the override list.
void setting_flag(CLI::App& app, Globals& g, const std::string& flag, const std::string& key,
                  const std::string& help) {
  app.add_option_function<std::string>(
      flag, [&g, key](const std::string& v) { g.settings.emplace_back(key, v); }, help);
}

config::PipelineConfig resolve_config(const Globals& g) {
  config::PipelineConfig cfg;
  if (!g.config_path.empty()) cfg = config::load_config(g.config_path);
  for (const auto& [k, v] : g.settings) config::apply_setting(cfg, k, v);
  config::validate(cfg);
  return cfg;
}

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

void print_budget(const ingest::BudgetReport& b, bool json) {
  if (json) return;
  std::cout << "corpus: " << b.total_chars << " / " << b.max_chars << " characters"
            << (b.within_budget ? "" : " (over budget)") << "\n";
}

int cmd_fetch(const Globals& g, const std::string& source_list) {
  auto cfg = resolve_config(g);
  const auto sources = ingest::parse_source_list(text::read_file(source_list));
  if (sources.empty()) {
    std::cerr << "error: source list " << source_list << " is empty\n";
    return 1;
  }
  ingest::Corpus corpus;
  std::error_code ec;
  if (fs::is_regular_file(cfg.corpus_dir / "manifest.tsv", ec)) corpus = ingest::load_corpus(cfg.corpus_dir);
  ingest::FetchResult fetched;
  try {
    fetched = ingest::fetch_documents(sources);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  for (const auto& err : fetched.errors) warn(err.source_id + ": " + err.message);
  std::vector<std::string> added;
  for (const auto& raw : fetched.documents) {
    std::string body = ingest::strip_markup(raw);
    if (text::trim(body).empty()) {
      warn(raw.source_id + ": no text after markup removal");
      continue;
    }
    std::string id = ingest::make_doc_id(raw.source_id, corpus);
    corpus.add_document(std::move(body), id, raw.source_id);
    added.push_back(std::move(id));
  }
  if (added.empty()) {
    std::cerr << "error: no documents fetched\n";
    return 1;
  }
  ingest::save_corpus(corpus, cfg.corpus_dir);
  const auto budget = ingest::corpus_budget_check(corpus, cfg.max_chars);
  if (!budget.within_budget) warn("corpus exceeds the character budget");
  if (g.json) {
    ordered_json out;
    out["fetched"] = added;
    ordered_json errors = ordered_json::array();
    for (const auto& e : fetched.errors) errors.push_back({{"source", e.source_id}, {"message", e.message}});
    out["errors"] = std::move(errors);
    out["budget"] = {{"within_budget", budget.within_budget},
                     {"total_chars", budget.total_chars},
                     {"max_chars", budget.max_chars}};
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& id : added) std::cout << "fetched " << id << "\n";
    print_budget(budget, false);
  }
  return 0;
}

int cmd_learn(const Globals& g, bool reduce, const std::string& review) {
  auto cfg = resolve_config(g);
  const auto res = pipeline::load_resources(cfg);
  pipeline::LearnOptions options;
  options.reduce = reduce;
  if (!review.empty()) options.review_path = review;
  const auto result = pipeline::learn(cfg, res, options);
  for (const auto& w : result.warnings) warn(w);
  pipeline::write_outputs(cfg, result);
  std::size_t candidates = 0;
  for (const auto& [_, e] : result.pom.entities())
    if (e.kind == pom::EntityKind::concept_entity) ++candidates;
  if (g.json) {
    ordered_json out;
    out["candidates"] = candidates;
    out["concepts"] = result.onto.concepts.size();
    out["relations"] = result.onto.relations.size();
    out["subclass_edges"] = result.onto.subclass_edges.size();
    out["extracted_relations"] = result.relations.size();
    out["warnings"] = result.warnings;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << candidates << " candidate concepts, " << result.onto.concepts.size() << " kept, "
              << result.onto.relations.size() << " relations, " << result.onto.subclass_edges.size()
              << " subclass edges\n";
    std::cout << "wrote " << cfg.pom_path().string() << ", " << cfg.relations_path().string() << ", "
              << cfg.ontology_path().string() << "\n";
  }
  return 0;
}

int cmd_review(const Globals& g, const std::string& action, const std::string& path, const std::string& pom_arg) {
  auto cfg = resolve_config(g);
  const fs::path pom_path = pom_arg.empty() ? cfg.pom_path() : fs::path(pom_arg);
  const auto pom = pom::load_pom(pom_path);
  std::size_t overrides = 0;
  if (action == "export") {
    pom::export_review(pom, path);
    for (const auto& [_, e] : pom.entities()) overrides += e.override ? 1 : 0;
  } else {
    const auto updated = pom::import_review(pom, path);
    pom::save_pom(updated, pom_path);
    for (const auto& [_, e] : updated.entities()) overrides += e.override ? 1 : 0;
  }
  if (g.json) {
    ordered_json out;
    out["action"] = action;
    out["entities"] = pom.size();
    out["overrides"] = overrides;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << action << "ed " << pom.size() << " entities (" << overrides << " overrides)\n";
  }
  return 0;
}

int cmd_compare(const Globals& g, const std::string& reference, const std::string& onto_arg) {
  auto cfg = resolve_config(g);
  const fs::path onto_path = onto_arg.empty() ? cfg.ontology_path() : fs::path(onto_arg);
  wordnet::WordnetDb db;
  if (!cfg.wordnet_dir.empty()) db = wordnet::WordnetDb::load(cfg.wordnet_dir);
  const auto report = pipeline::run_compare(ontology::load_ontology(onto_path), reference, db);
  std::cout << (g.json ? evaluation::to_json(report) + "\n" : evaluation::format_table(report));
  return 0;
}

int cmd_index(const Globals& g) {
  auto cfg = resolve_config(g);
  const auto res = pipeline::load_resources(cfg);
  const auto onto = ontology::load_ontology(cfg.ontology_path());
  const auto idx = pipeline::build_index(cfg, res, onto);
  fs::create_directories(cfg.work_dir);
  search::save_index(idx, cfg.index_path());
  if (g.json) {
    ordered_json out;
    out["documents"] = idx.doc_titles.size();
    out["concepts"] = idx.concept_to_docs.size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "indexed " << idx.doc_titles.size() << " documents under " << idx.concept_to_docs.size()
              << " concepts\n";
  }
  return 0;
}

int cmd_search(const Globals& g, const std::string& query, const std::string& user, const std::string& mode) {
  auto cfg = resolve_config(g);
  pipeline::SearchRequest req;
  req.query = query;
  req.user = user;
  auto parsed = search::parse_mode(mode);
  if (!parsed) throw InvalidInput("mode must be expand, trim or substitute");
  req.mode = *parsed;
  const auto res = pipeline::load_resources(cfg);
  const auto onto = ontology::load_ontology(cfg.ontology_path());
  const auto idx = search::load_index(cfg.index_path());
  const auto results = pipeline::run_search(cfg, res, onto, idx, req);
  if (g.json) {
    std::cout << search::results_to_json(results) << "\n";
    return 0;
  }
  if (results.empty()) std::cout << "no results\n";
  for (const auto& r : results) {
    std::cout << text::format_fixed(r.score, 4) << "\t" << r.doc_id << "\t" << r.title << "\n";
    std::vector<std::string> parts;
    for (const auto& [label, w] : r.matched_concepts) parts.push_back(label + "=" + text::format_fixed(w, 3));
    if (!parts.empty()) std::cout << "\t" << text::join(parts, ", ") << "\n";
  }
  return 0;
}

int cmd_select(const Globals& g, const std::string& user, const std::string& doc_id) {
  auto cfg = resolve_config(g);
  const auto idx = search::load_index(cfg.index_path());
  const auto profile = pipeline::run_select(cfg, idx, user, doc_id);
  const auto& concepts = idx.doc_to_concepts.at(doc_id);
  if (g.json) {
    ordered_json out;
    out["user"] = user;
    out["doc_id"] = doc_id;
    out["ratings"] = ordered_json::object();
    for (const auto& c : concepts) out["ratings"][c] = profile.rating(c);
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& c : concepts) std::cout << c << "\t" << text::format_fixed(profile.rating(c), 3) << "\n";
  }
  return 0;
}

service::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const Globals& g) {
  auto cfg = resolve_config(g);
  const auto [host, port] = config::listen_address(cfg);
  service::Server server(cfg);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  if (g.json) {
    ordered_json out;
    out["listen"] = cfg.listen;
    std::cout << out.dump() << std::endl;
  } else {
    std::cout << "listening on http://" << cfg.listen << std::endl;
  }
  server.run(host, port);
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology learning and ontology-backed document search"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("-c,--config", g.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_flag("--json", g.json, "machine-readable output");
  setting_flag(app, g, "--corpus", "corpus_dir", "corpus directory");
  setting_flag(app, g, "--work-dir", "work_dir", "directory for pom.json, ontology.ttl, index.json, profiles/");
  setting_flag(app, g, "--wordnet", "wordnet_dir", "WNdb-3.0 dict directory");
  setting_flag(app, g, "--rules", "rules_path", "extraction rules file");
  setting_flag(app, g, "--lexicon", "lexicon_path", "extra tagger lexicon (surface<TAB>TAG)");
  setting_flag(app, g, "--repo", "repo_dir", "document repository to index");
  setting_flag(app, g, "--theta", "static_theta", "static threshold, percent");
  setting_flag(app, g, "--sim-threshold", "sim_threshold", "similarity reduction threshold");
  setting_flag(app, g, "--window", "window", "co-occurrence window");
  setting_flag(app, g, "--separator", "separator", "compound relation separator");
  setting_flag(app, g, "--max-distance", "max_distance", "query expansion depth");
  setting_flag(app, g, "--decay", "decay", "weight decay per expansion step");
  setting_flag(app, g, "--boost", "boost_factor", "repository feedback boost");
  setting_flag(app, g, "--increment", "selection_increment", "rating increment per selection");
  setting_flag(app, g, "--literal-weight", "literal_weight", "weight of literal substring matches");
  setting_flag(app, g, "--max-chars", "max_chars", "corpus character budget");
  setting_flag(app, g, "--base-iri", "base_iri", "IRI base for generated concepts");
  setting_flag(app, g, "--listen", "listen", "service address host:port");
  setting_flag(app, g, "--static", "static_dir", "directory served at /");
  app.add_flag_function("--dev", [&g](std::int64_t) { g.settings.emplace_back("dev_mode", "true"); },
                        "enable CORS for a separately served UI");

  int status = 0;
  auto* fetch = app.add_subcommand("fetch", "fetch sources into the corpus");
  std::string source_list;
  fetch->add_option("sources", source_list, "file listing paths or URLs")->required();
  fetch->callback([&] { status = cmd_fetch(g, source_list); });

  auto* learn = app.add_subcommand("learn", "learn the ontology from the corpus");
  bool reduce = false;
  std::string review_file;
  learn->add_flag("--reduce", reduce, "merge similar concepts");
  learn->add_option("--review", review_file, "apply a review file before thresholding")->check(CLI::ExistingFile);
  learn->callback([&] { status = cmd_learn(g, reduce, review_file); });

  auto* review = app.add_subcommand("review", "export or import expert overrides");
  std::string review_action, review_path, pom_path;
  review->add_option("action", review_action, "export|import")->required()->check(CLI::IsMember({"export", "import"}));
  review->add_option("path", review_path, "review TSV")->required();
  review->add_option("--pom", pom_path, "pom.json (default: <work-dir>/pom.json)");
  review->callback([&] { status = cmd_review(g, review_action, review_path, pom_path); });

  auto* compare = app.add_subcommand("compare", "compare the ontology with a reference");
  std::string reference, onto_path;
  compare->add_option("reference", reference, "reference ontology (.ttl/.nt) or class list")->required();
  compare->add_option("--ontology", onto_path, "ontology to evaluate (default: <work-dir>/ontology.ttl)");
  compare->callback([&] { status = cmd_compare(g, reference, onto_path); });

  auto* index = app.add_subcommand("index", "index the document repository");
  index->callback([&] { status = cmd_index(g); });

  auto* search_cmd = app.add_subcommand("search", "search the indexed repository");
  std::string query, search_user, mode = "expand";
  search_cmd->add_option("query", query, "query text")->required();
  search_cmd->add_option("--user", search_user, "user profile for ranking");
  search_cmd->add_option("--mode", mode, "expand|trim|substitute");
  search_cmd->callback([&] { status = cmd_search(g, query, search_user, mode); });

  auto* select = app.add_subcommand("select", "record a selected search result");
  std::string select_user, doc_id;
  select->add_option("user", select_user, "user id")->required();
  select->add_option("doc_id", doc_id, "selected document")->required();
  select->callback([&] { status = cmd_select(g, select_user, doc_id); });

  auto* serve = app.add_subcommand("serve", "run the HTTP API");
  serve->callback([&] { status = cmd_serve(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
