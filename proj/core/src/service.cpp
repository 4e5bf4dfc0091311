#include "ontoforge/service.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ontoforge/error.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::service {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct ApiError {
  int status;
  std::string code;
  std::string message;
};

void send_error(httplib::Response& res, const ApiError& err) {
  ordered_json body;
  body["error"] = {{"status", err.status}, {"code", err.code}, {"message", err.message}};
  res.status = err.status;
  res.set_content(body.dump() + "\n", "application/json");
}

void send_json(httplib::Response& res, const std::string& body) {
  res.status = 200;
  res.set_content(body, "application/json");
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw ApiError{400, "invalid_json", e.what()};
  }
}

std::string entity_json(const pom::PomEntity& e) {
  ordered_json j;
  j["label"] = e.label;
  j["kind"] = std::string(pom::to_string(e.kind));
  j["frequency"] = e.frequency;
  j["relevance"] = e.relevance;
  j["override"] = e.override ? json(*e.override) : json(nullptr);
  return j.dump();
}

ordered_json ontology_json(const ontology::Ontology& onto) {
  ordered_json root;
  root["concepts"] = ordered_json::array();
  std::map<std::string, std::vector<std::string>> parents;
  for (const auto& [child, parent] : onto.subclass_edges) parents[child].push_back(parent);
  for (const auto& [label, info] : onto.concepts) {
    ordered_json c;
    c["label"] = label;
    c["relevance"] = info.relevance;
    c["aliases"] = info.aliases;
    c["parents"] = parents[label];
    root["concepts"].push_back(std::move(c));
  }
  root["relations"] = ordered_json::array();
  for (const auto& r : onto.relations)
    root["relations"].push_back({{"label", r.label}, {"domain", r.domain}, {"range", r.range}, {"count", r.count}});
  return root;
}

}  // namespace

struct Server::Impl {
  config::PipelineConfig cfg;
  Hooks hooks;
  std::shared_ptr<const pipeline::Resources> resources;

  // Snapshot pointers; readers copy them under the mutex and then work on
  // immutable data.
  mutable std::mutex snapshot_mutex;
  std::shared_ptr<const pom::Pom> pom;
  std::shared_ptr<const ontology::Ontology> onto;
  std::shared_ptr<const search::IndexedMetadata> idx;

  std::mutex writer_mutex;
  std::atomic<bool> job_running{false};

  httplib::Server http;
  std::thread worker;

  Impl(config::PipelineConfig c, Hooks h) : cfg(std::move(c)), hooks(std::move(h)) {
    config::validate(cfg);
    resources = std::make_shared<const pipeline::Resources>(pipeline::load_resources(cfg));
    std::error_code ec;
    if (fs::is_regular_file(cfg.pom_path(), ec)) pom = std::make_shared<const pom::Pom>(pom::load_pom(cfg.pom_path()));
    if (fs::is_regular_file(cfg.ontology_path(), ec))
      onto = std::make_shared<const ontology::Ontology>(ontology::load_ontology(cfg.ontology_path()));
    if (fs::is_regular_file(cfg.index_path(), ec))
      idx = std::make_shared<const search::IndexedMetadata>(search::load_index(cfg.index_path()));
    routes();
  }

  template <class T>
  std::shared_ptr<const T> get(const std::shared_ptr<const T>& slot) const {
    std::lock_guard lock(snapshot_mutex);
    return slot;
  }

  template <class T>
  void swap_in(std::shared_ptr<const T>& slot, std::shared_ptr<const T> value) {
    std::lock_guard lock(snapshot_mutex);
    slot = std::move(value);
  }

  // Claims the single learn/index slot or answers 409.
  class JobGuard {
   public:
    JobGuard(Impl& impl, std::string_view job) : impl_(impl) {
      bool expected = false;
      if (!impl_.job_running.compare_exchange_strong(expected, true))
        throw ApiError{409, "busy", "a learn or index job is already running"};
      try {
        if (impl_.hooks.on_job_start) impl_.hooks.on_job_start(job);
      } catch (...) {
        impl_.job_running = false;
        throw;
      }
    }
    ~JobGuard() { impl_.job_running = false; }
    JobGuard(const JobGuard&) = delete;
    JobGuard& operator=(const JobGuard&) = delete;

   private:
    Impl& impl_;
  };

  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  Handler guarded(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const ApiError& e) {
        send_error(res, e);
      } catch (const InvalidInput& e) {
        send_error(res, {400, "invalid_input", e.what()});
      } catch (const ParseError& e) {
        send_error(res, {400, "parse_error", e.what()});
      } catch (const std::exception& e) {
        send_error(res, {500, "internal", e.what()});
      }
    };
  }

  std::shared_ptr<const ontology::Ontology> require_ontology() const {
    auto o = get(onto);
    if (!o) throw ApiError{404, "no_ontology", "no ontology has been learned yet"};
    return o;
  }

  std::shared_ptr<const search::IndexedMetadata> require_index() const {
    auto i = get(idx);
    if (!i) throw ApiError{404, "no_index", "the repository has not been indexed yet"};
    return i;
  }

  void routes() {
    http.Get("/api/concepts", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto p = get(pom);
      if (!p) throw ApiError{404, "no_pom", "no concepts have been learned yet"};
      double min_relevance = 0.0;
      if (req.has_param("min_relevance")) {
        const std::string v = req.get_param_value("min_relevance");
        try {
          std::size_t used = 0;
          min_relevance = std::stod(v, &used);
          if (used != v.size() || !(min_relevance >= 0.0)) throw std::invalid_argument(v);
        } catch (const std::exception&) {
          throw ApiError{400, "invalid_param", "min_relevance must be a non-negative number"};
        }
      }
      std::string body = "[";
      bool first = true;
      for (const auto& e : pom::ranked(*p)) {
        if (e.kind != pom::EntityKind::concept_entity || e.relevance < min_relevance) continue;
        if (!first) body += ',';
        body += entity_json(e);
        first = false;
      }
      send_json(res, body + "]\n");
    }));

    http.Post("/api/concepts/review", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      if (!body.is_array()) throw ApiError{400, "invalid_body", "expected an array of {label, override}"};
      std::vector<pom::OverrideUpdate> updates;
      for (const auto& item : body) {
        if (!item.is_object() || !item.contains("label") || !item["label"].is_string())
          throw ApiError{400, "invalid_body", "every item needs a string label"};
        pom::OverrideUpdate u;
        u.label = item["label"].get<std::string>();
        if (item.contains("override") && !item["override"].is_null()) {
          if (!item["override"].is_number()) throw ApiError{400, "invalid_body", "override must be 0, 1 or null"};
          u.value = item["override"].get<double>();
        }
        updates.push_back(std::move(u));
      }
      std::lock_guard lock(writer_mutex);
      auto p = get(pom);
      if (!p) throw ApiError{404, "no_pom", "no concepts have been learned yet"};
      auto next = std::make_shared<const pom::Pom>(pom::apply_overrides(*p, updates));
      pom::save_pom(*next, cfg.pom_path());
      std::size_t accepted = 0, rejected = 0;
      for (const auto& [_, e] : next->entities()) {
        if (!e.override) continue;
        (*e.override == 1.0 ? accepted : rejected) += 1;
      }
      swap_in(pom, std::move(next));
      ordered_json out;
      out["updated"] = updates.size();
      out["accepted"] = accepted;
      out["rejected"] = rejected;
      send_json(res, out.dump() + "\n");
    }));

    http.Post("/api/learn", guarded([this](const httplib::Request& req, httplib::Response& res) {
      pipeline::LearnOptions options;
      if (!req.body.empty()) {
        const json body = parse_body(req);
        if (!body.is_object()) throw ApiError{400, "invalid_body", "expected a JSON object"};
        if (body.contains("reduce")) {
          if (!body["reduce"].is_boolean()) throw ApiError{400, "invalid_body", "reduce must be a boolean"};
          options.reduce = body["reduce"].get<bool>();
        }
      }
      JobGuard job(*this, "learn");
      auto result = pipeline::learn(cfg, *resources, options);
      std::lock_guard lock(writer_mutex);
      pipeline::write_outputs(cfg, result);
      ordered_json out;
      out["concepts"] = result.onto.concepts.size();
      out["relations"] = result.onto.relations.size();
      out["warnings"] = result.warnings;
      swap_in(pom, std::make_shared<const pom::Pom>(std::move(result.pom)));
      swap_in(onto, std::make_shared<const ontology::Ontology>(std::move(result.onto)));
      send_json(res, out.dump() + "\n");
    }));

    http.Get("/api/ontology", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto o = require_ontology();
      const std::string accept = req.get_header_value("Accept");
      if (accept.find("text/turtle") != std::string::npos) {
        res.set_content(ontology::to_turtle(*o, cfg.base_iri), "text/turtle");
        return;
      }
      send_json(res, ontology_json(*o).dump() + "\n");
    }));

    http.Post("/api/index", guarded([this](const httplib::Request&, httplib::Response& res) {
      JobGuard job(*this, "index");
      auto o = require_ontology();
      auto built = std::make_shared<const search::IndexedMetadata>(pipeline::build_index(cfg, *resources, *o));
      std::lock_guard lock(writer_mutex);
      fs::create_directories(cfg.work_dir);
      search::save_index(*built, cfg.index_path());
      ordered_json out;
      out["documents"] = built->doc_titles.size();
      out["concepts"] = built->concept_to_docs.size();
      swap_in(idx, std::move(built));
      send_json(res, out.dump() + "\n");
    }));

    http.Get("/api/search", guarded([this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("q")) throw ApiError{400, "invalid_param", "missing q"};
      pipeline::SearchRequest sr;
      sr.query = req.get_param_value("q");
      sr.user = req.get_param_value("user");
      if (!sr.user.empty() && !search::valid_user_id(sr.user))
        throw ApiError{400, "invalid_param", "invalid user id"};
      if (req.has_param("mode")) {
        auto mode = search::parse_mode(req.get_param_value("mode"));
        if (!mode) throw ApiError{400, "invalid_param", "mode must be expand, trim or substitute"};
        sr.mode = *mode;
      }
      auto o = require_ontology();
      auto i = require_index();
      send_json(res, search::results_to_json(pipeline::run_search(cfg, *resources, *o, *i, sr)) + "\n");
    }));

    http.Post("/api/select", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      if (!body.is_object() || !body.contains("user") || !body["user"].is_string() || !body.contains("doc_id") ||
          !body["doc_id"].is_string())
        throw ApiError{400, "invalid_body", "expected {user, doc_id}"};
      const std::string user = body["user"].get<std::string>();
      const std::string doc_id = body["doc_id"].get<std::string>();
      if (!search::valid_user_id(user)) throw ApiError{400, "invalid_param", "invalid user id"};
      auto i = require_index();
      auto doc = i->doc_to_concepts.find(doc_id);
      if (doc == i->doc_to_concepts.end()) throw ApiError{404, "unknown_doc", "unknown document '" + doc_id + "'"};
      std::lock_guard lock(writer_mutex);
      const auto profile = pipeline::run_select(cfg, *i, user, doc_id);
      ordered_json out;
      out["user"] = user;
      out["doc_id"] = doc_id;
      out["ratings"] = ordered_json::object();
      for (const auto& c : doc->second) out["ratings"][c] = profile.rating(c);
      send_json(res, out.dump() + "\n");
    }));

    http.Get("/api/profile", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string user = req.get_param_value("user");
      if (!search::valid_user_id(user)) throw ApiError{400, "invalid_param", "invalid user id"};
      std::error_code ec;
      if (!fs::is_regular_file(search::profile_path(cfg.profiles_dir(), user), ec))
        throw ApiError{404, "unknown_user", "no profile for '" + user + "'"};
      const auto profile = search::load_profile(cfg.profiles_dir(), user);
      ordered_json out;
      out["user"] = user;
      out["ratings"] = ordered_json::object();
      for (const auto& [c, r] : profile.ratings) out["ratings"][c] = r;
      send_json(res, out.dump() + "\n");
    }));

    http.Get("/api/compare", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string reference = req.get_param_value("reference");
      if (reference.empty()) throw ApiError{400, "invalid_param", "missing reference"};
      std::error_code ec;
      if (!fs::is_regular_file(reference, ec))
        throw ApiError{404, "unknown_reference", "no reference at '" + reference + "'"};
      auto o = require_ontology();
      send_json(res, evaluation::to_json(pipeline::run_compare(*o, reference, resources->db)) + "\n");
    }));

    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
      send_error(res, {500, "internal", "unhandled exception"});
    });
    http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (res.body.empty() && req.path.starts_with("/api/"))
        send_error(res, {res.status, res.status == 404 ? "not_found" : "http_error", "no route for " + req.path});
    });

    if (cfg.dev_mode) {
      http.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Headers", "Content-Type, Accept");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      });
      http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
    if (!cfg.static_dir.empty()) {
      if (!http.set_mount_point("/", cfg.static_dir.string()))
        throw IoError("static directory not found: " + cfg.static_dir.string());
    }
  }
};

Server::Server(config::PipelineConfig cfg, Hooks hooks) : impl_(std::make_unique<Impl>(std::move(cfg), std::move(hooks))) {}

Server::~Server() { stop(); }

int Server::start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
  return bound;
}

void Server::run(const std::string& host, int port) {
  if (!impl_->http.bind_to_port(host, port)) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  impl_->http.listen_after_bind();
}

void Server::stop() {
  if (!impl_) return;
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace ontoforge::service
