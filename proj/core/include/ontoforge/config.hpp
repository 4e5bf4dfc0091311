#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace ontoforge::config {

inline constexpr double kDefaultStaticTheta = 0.00142;
inline constexpr double kDefaultBoostFactor = 1.5;
inline constexpr std::string_view kDefaultListen = "127.0.0.1:7700";

struct PipelineConfig {
  std::filesystem::path corpus_dir = "corpus";
  /// Where learn writes pom.json, relations.tsv, ontology.ttl and where index
  /// writes index.json and profiles/.
  std::filesystem::path work_dir = ".";
  /// Empty means no WordNet: synonymy degenerates to label equality.
  std::filesystem::path wordnet_dir;
  /// Empty means the built-in default rule set.
  std::filesystem::path rules_path;
  std::filesystem::path lexicon_path;
  std::filesystem::path repo_dir = "repository";
  std::filesystem::path static_dir;

  double static_theta = kDefaultStaticTheta;
  double sim_threshold = 0.95;
  std::size_t window = 5;
  char separator = '#';
  std::size_t max_distance = 2;
  double decay = 0.5;
  double boost_factor = kDefaultBoostFactor;
  double selection_increment = 1.0;
  double literal_weight = 0.25;
  std::size_t max_chars = 90000;
  std::string base_iri = "http://ontoforge.local";
  std::string listen = std::string(kDefaultListen);
  bool dev_mode = false;

  std::filesystem::path pom_path() const { return work_dir / "pom.json"; }
  std::filesystem::path relations_path() const { return work_dir / "relations.tsv"; }
  std::filesystem::path ontology_path() const { return work_dir / "ontology.ttl"; }
  std::filesystem::path index_path() const { return work_dir / "index.json"; }
  std::filesystem::path profiles_dir() const { return work_dir / "profiles"; }
};

/// `key = value` lines; `#` starts a comment line, values may be double
/// quoted. Later duplicates win. Throws ParseError with the line number.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Sets one field from its textual form. Unknown keys and out-of-domain
/// values throw InvalidInput.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Relative paths in the file are resolved against the file's directory.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base);

/// Throws InvalidInput if any numeric field is out of its domain.
void validate(const PipelineConfig& cfg);

/// host and port from `listen`.
std::pair<std::string, int> listen_address(const PipelineConfig& cfg);

}  // namespace ontoforge::config
