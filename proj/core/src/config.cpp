#include "ontoforge/config.hpp"

#include <charconv>
#include <cmath>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::config {

namespace fs = std::filesystem;

std::map<std::string, std::string> parse_key_values(std::string_view content) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(content, '\n')) {
    ++line_no;
    const std::string line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config: expected key = value", line_no);
    std::string key = text::trim(line.substr(0, eq));
    std::string value = text::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("config: empty key", line_no);
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    out[key] = value;
  }
  return out;
}

namespace {

double to_double(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v))
    throw InvalidInput("config: '" + std::string(key) + "' expects a number, got '" + std::string(value) + "'");
  return v;
}

std::size_t to_size(std::string_view key, std::string_view value) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InvalidInput("config: '" + std::string(key) + "' expects a non-negative integer, got '" +
                       std::string(value) + "'");
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = text::to_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InvalidInput("config: '" + std::string(key) + "' expects a boolean, got '" + std::string(value) + "'");
}

}  // namespace

void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "corpus_dir") cfg.corpus_dir = std::string(value);
  else if (key == "work_dir") cfg.work_dir = std::string(value);
  else if (key == "wordnet_dir") cfg.wordnet_dir = std::string(value);
  else if (key == "rules_path") cfg.rules_path = std::string(value);
  else if (key == "lexicon_path") cfg.lexicon_path = std::string(value);
  else if (key == "repo_dir") cfg.repo_dir = std::string(value);
  else if (key == "static_dir") cfg.static_dir = std::string(value);
  else if (key == "static_theta") cfg.static_theta = to_double(key, value);
  else if (key == "sim_threshold") cfg.sim_threshold = to_double(key, value);
  else if (key == "window") cfg.window = to_size(key, value);
  else if (key == "separator") {
    if (value.size() != 1) throw InvalidInput("config: 'separator' must be a single character");
    cfg.separator = value.front();
  } else if (key == "max_distance") cfg.max_distance = to_size(key, value);
  else if (key == "decay") cfg.decay = to_double(key, value);
  else if (key == "boost_factor") cfg.boost_factor = to_double(key, value);
  else if (key == "selection_increment") cfg.selection_increment = to_double(key, value);
  else if (key == "literal_weight") cfg.literal_weight = to_double(key, value);
  else if (key == "max_chars") cfg.max_chars = to_size(key, value);
  else if (key == "base_iri") cfg.base_iri = std::string(value);
  else if (key == "listen") cfg.listen = std::string(value);
  else if (key == "dev_mode") cfg.dev_mode = to_bool(key, value);
  else throw InvalidInput("config: unknown key '" + std::string(key) + "'");
}

PipelineConfig load_config(const fs::path& path) { return load_config(path, PipelineConfig{}); }

PipelineConfig load_config(const fs::path& path, PipelineConfig cfg) {
  const fs::path dir = path.parent_path();
  for (const auto& [key, value] : parse_key_values(text::read_file(path))) {
    apply_setting(cfg, key, value);
    const bool is_path = key.ends_with("_dir") || key.ends_with("_path");
    if (is_path && !value.empty() && fs::path(value).is_relative()) {
      apply_setting(cfg, key, (dir / value).lexically_normal().string());
    }
  }
  validate(cfg);
  return cfg;
}

void validate(const PipelineConfig& cfg) {
  if (!(cfg.static_theta >= 0.0)) throw InvalidInput("static_theta must be non-negative");
  if (!(cfg.sim_threshold > 0.0 && cfg.sim_threshold <= 1.0)) throw InvalidInput("sim_threshold must lie in (0, 1]");
  if (cfg.window == 0) throw InvalidInput("window must be positive");
  if (cfg.separator == ' ' || cfg.separator == '\t' || cfg.separator == '\n')
    throw InvalidInput("separator must not be whitespace");
  if (cfg.max_distance == 0) throw InvalidInput("max_distance must be positive");
  if (!(cfg.decay > 0.0 && cfg.decay < 1.0)) throw InvalidInput("decay must lie in (0, 1)");
  if (!(cfg.boost_factor > 1.0)) throw InvalidInput("boost_factor must be greater than 1");
  if (!(cfg.selection_increment > 0.0)) throw InvalidInput("selection_increment must be positive");
  if (!(cfg.literal_weight >= 0.0)) throw InvalidInput("literal_weight must be non-negative");
  if (cfg.max_chars == 0) throw InvalidInput("max_chars must be positive");
  if (cfg.base_iri.empty()) throw InvalidInput("base_iri must not be empty");
  listen_address(cfg);
}

std::pair<std::string, int> listen_address(const PipelineConfig& cfg) {
  const auto colon = cfg.listen.rfind(':');
  if (colon == std::string::npos || colon == 0) throw InvalidInput("listen must be host:port");
  const std::string host = cfg.listen.substr(0, colon);
  const std::string port_text = cfg.listen.substr(colon + 1);
  int port = -1;
  const auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port < 0 || port > 65535)
    throw InvalidInput("listen port must be 0-65535");
  return {host, port};
}

}  // namespace ontoforge::config
