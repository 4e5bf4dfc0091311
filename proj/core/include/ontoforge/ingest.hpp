#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::ingest {

enum class MediaHint { html, plain };

struct RawDocument {
  std::string source_id;  // URL or file path
  std::string bytes;
  MediaHint media_hint = MediaHint::plain;
};

struct SourceError {
  std::string source_id;
  std::string message;
};

struct FetchResult {
  std::vector<RawDocument> documents;  // input order, reachable sources only
  std::vector<SourceError> errors;
};

/// Reads local files and http/https URLs. Per-source failures are collected
/// in `errors`; throws IoError only when every source failed.
FetchResult fetch_documents(const std::vector<std::string>& sources);

/// Parses a source list: one path-or-URL per line, `#` lines and blanks ignored.
std::vector<std::string> parse_source_list(std::string_view text);

/// HTML: drops script/style/comments and tags, decodes entities, turns block
/// tags into line breaks. Plain: repairs invalid UTF-8. Both then collapse
/// whitespace (a run containing a newline becomes one newline, any other run
/// one space) and drop leading whitespace.
std::string strip_markup(const RawDocument& doc);

struct CorpusDocument {
  std::string doc_id;
  std::string source_id;
  std::string text;
  std::size_t char_count = 0;
  std::size_t token_count = 0;
};

/// Ordered text repository with size accounting.
class Corpus {
 public:
  const std::vector<CorpusDocument>& documents() const noexcept { return documents_; }
  std::size_t total_chars() const noexcept { return total_chars_; }
  std::size_t total_tokens() const noexcept { return total_tokens_; }
  bool empty() const noexcept { return documents_.empty(); }

  bool contains(std::string_view doc_id) const;
  const CorpusDocument* find(std::string_view doc_id) const;

  /// Appends a document; duplicate ids are rejected with InvalidInput.
  void add_document(std::string text, std::string doc_id, std::string source_id = {});

 private:
  std::vector<CorpusDocument> documents_;
  std::size_t total_chars_ = 0;
  std::size_t total_tokens_ = 0;
};

/// Value-returning form of Corpus::add_document.
Corpus add_document(Corpus corpus, std::string text, std::string doc_id);

inline constexpr std::size_t kDefaultMaxChars = 90000;

struct BudgetReport {
  bool within_budget = true;
  std::size_t total_chars = 0;
  std::size_t max_chars = kDefaultMaxChars;
};

BudgetReport corpus_budget_check(const Corpus& corpus, std::size_t max_chars = kDefaultMaxChars);

/// Token count as the tagger sees it: sentence split, then tokenize.
std::size_t count_tokens(std::string_view text);

/// Derives a filesystem-safe document id from a source; appends -2, -3, ...
/// until it is unused in `corpus`.
std::string make_doc_id(std::string_view source_id, const Corpus& corpus);

/// Writes `<dir>/<doc_id>.txt` for every document plus `<dir>/manifest.tsv`.
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);
/// Reads a corpus directory written by save_corpus. Counts are recomputed
/// from the document text rather than trusted from the manifest.
Corpus load_corpus(const std::filesystem::path& dir);

}  // namespace ontoforge::ingest
