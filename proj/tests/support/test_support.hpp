#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <string>

#include "ontoforge/nlp.hpp"
#include "ontoforge/wordnet.hpp"

namespace ontoforge::fixtures {

inline std::filesystem::path data_dir() { return ONTOFORGE_TEST_DATA_DIR; }

inline const wordnet::WordnetDb& mini_wordnet() {
  static const wordnet::WordnetDb db = wordnet::WordnetDb::load(data_dir() / "wordnet-mini");
  return db;
}

/// Full WNdb-3.0 directory from ONTOFORGE_WORDNET_DIR, if set and readable.
inline std::optional<std::filesystem::path> real_wordnet_dir() {
  const char* dir = std::getenv("ONTOFORGE_WORDNET_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(std::filesystem::path(dir) / "index.noun", ec)) return std::nullopt;
  return std::filesystem::path(dir);
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    for (;;) {
      path_ = std::filesystem::temp_directory_path() / ("ontoforge-test-" + std::to_string(rd()));
      if (std::filesystem::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// One-document tagged corpus from plain text.
inline nlp::TaggedCorpus tagged(const std::string& text, const std::string& doc_id = "d1") {
  static const nlp::Tagger tagger;
  return {nlp::TaggedDocument{doc_id, tagger.analyze(text)}};
}

}  // namespace ontoforge::fixtures
