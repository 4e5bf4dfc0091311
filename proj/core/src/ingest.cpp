#include "ontoforge/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include <httplib.h>

#include "ontoforge/error.hpp"
#include "ontoforge/nlp.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::ingest {

namespace fs = std::filesystem;

namespace {

bool is_url(std::string_view s) { return s.starts_with("http://") || s.starts_with("https://"); }

bool looks_like_html(std::string_view name, std::string_view bytes) {
  const std::string lower = text::to_lower(name);
  if (lower.ends_with(".html") || lower.ends_with(".htm") || lower.ends_with(".xhtml"))
    return true;
  const std::string head = text::to_lower(bytes.substr(0, 512));
  return head.find("<!doctype html") != std::string::npos ||
         head.find("<html") != std::string::npos;
}

RawDocument fetch_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  const std::size_t path_start = url.find('/', scheme_end + 3);
  const std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(path);
  if (!res) throw IoError(httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300)
    throw IoError("HTTP status " + std::to_string(res->status));

  RawDocument doc;
  doc.source_id = url;
  doc.bytes = res->body;
  const std::string ctype = text::to_lower(res->get_header_value("Content-Type"));
  doc.media_hint = ctype.find("html") != std::string::npos || looks_like_html(path, doc.bytes)
                       ? MediaHint::html
                       : MediaHint::plain;
  return doc;
}

RawDocument fetch_file(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("not a readable file");
  RawDocument doc;
  doc.source_id = path;
  doc.bytes = text::read_file(path);
  doc.media_hint = looks_like_html(path, doc.bytes) ? MediaHint::html : MediaHint::plain;
  return doc;
}

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const std::unordered_map<std::string_view, char32_t> entities = {
      {"amp", '&'},     {"lt", '<'},       {"gt", '>'},       {"quot", '"'},
      {"apos", '\''},   {"nbsp", ' '},     {"ndash", 0x2013}, {"mdash", 0x2014},
      {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D},
      {"hellip", 0x2026}, {"copy", 0xA9},  {"reg", 0xAE},     {"trade", 0x2122},
      {"euro", 0x20AC}, {"pound", 0xA3},   {"eacute", 0xE9},  {"bull", 0x2022},
  };
  return entities;
}

bool is_block_tag(std::string_view name) {
  static const std::vector<std::string_view> blocks = {
      "p", "div", "br", "li", "ul", "ol", "h1", "h2", "h3", "h4", "h5", "h6",
      "tr", "td", "th", "table", "section", "article", "header", "footer", "title",
      "blockquote", "pre", "hr", "dd", "dt", "dl", "nav", "aside", "main", "form",
      "body", "head", "html", "figure", "figcaption", "caption", "address"};
  return std::find(blocks.begin(), blocks.end(), name) != blocks.end();
}

// Decodes one entity starting at `s[i] == '&'`. On success appends the
// character and returns the index past ';'; otherwise returns i.
std::size_t decode_entity(std::string_view s, std::size_t i, std::string& out) {
  const std::size_t semi = s.find(';', i + 1);
  if (semi == std::string_view::npos || semi - i > 12) return i;
  std::string_view body = s.substr(i + 1, semi - i - 1);
  if (body.empty()) return i;
  char32_t cp = 0;
  if (body.front() == '#') {
    body.remove_prefix(1);
    int base = 10;
    if (!body.empty() && (body.front() == 'x' || body.front() == 'X')) {
      base = 16;
      body.remove_prefix(1);
    }
    if (body.empty()) return i;
    for (char c : body) {
      int digit;
      if (std::isdigit(static_cast<unsigned char>(c))) digit = c - '0';
      else if (base == 16 && std::isxdigit(static_cast<unsigned char>(c)))
        digit = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      else return i;
      cp = cp * base + digit;
      if (cp > 0x10FFFF) return i;
    }
  } else {
    auto it = named_entities().find(body);
    if (it == named_entities().end()) return i;
    cp = it->second;
  }
  text::append_utf8(out, cp);
  return semi + 1;
}

std::string remove_markup(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const char c = s[i];
    if (c == '<' && i + 1 < n &&
        (std::isalpha(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '/' ||
         s[i + 1] == '!' || s[i + 1] == '?')) {
      if (s.substr(i, 4) == "<!--") {
        const std::size_t end = s.find("-->", i + 4);
        i = end == std::string_view::npos ? n : end + 3;
        continue;
      }
      const std::size_t close = s.find('>', i);
      if (close == std::string_view::npos) {
        i = n;
        continue;
      }
      std::string_view tag = s.substr(i + 1, close - i - 1);
      const bool closing = !tag.empty() && tag.front() == '/';
      if (closing) tag.remove_prefix(1);
      std::size_t name_end = 0;
      while (name_end < tag.size() && std::isalnum(static_cast<unsigned char>(tag[name_end])))
        ++name_end;
      const std::string name = text::to_lower(tag.substr(0, name_end));
      i = close + 1;
      if (!closing && (name == "script" || name == "style")) {
        const std::string lower_rest = text::to_lower(s.substr(i));
        const std::size_t end = lower_rest.find("</" + name);
        if (end == std::string::npos) {
          i = n;
        } else {
          const std::size_t gt = s.find('>', i + end);
          i = gt == std::string_view::npos ? n : gt + 1;
        }
        continue;
      }
      if (is_block_tag(name)) out += '\n';
      continue;
    }
    if (c == '&') {
      const std::size_t next = decode_entity(s, i, out);
      if (next != i) {
        i = next;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      bool newline = false;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        newline = newline || s[i] == '\n';
        ++i;
      }
      if (!out.empty()) out += newline ? '\n' : ' ';
      continue;
    }
    out += s[i++];
  }
  // A trailing single space carries no information; a trailing newline marks a
  // closed block and is kept.
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

std::vector<std::string> parse_source_list(std::string_view list) {
  std::vector<std::string> out;
  for (const auto& line : text::split(list, '\n')) {
    std::string t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

FetchResult fetch_documents(const std::vector<std::string>& sources) {
  FetchResult result;
  for (const auto& source : sources) {
    try {
      result.documents.push_back(is_url(source) ? fetch_url(source) : fetch_file(source));
    } catch (const std::exception& e) {
      result.errors.push_back({source, e.what()});
    }
  }
  if (!sources.empty() && result.documents.empty())
    throw IoError("all " + std::to_string(sources.size()) + " sources failed; first: " +
                  result.errors.front().source_id + ": " + result.errors.front().message);
  return result;
}

std::string strip_markup(const RawDocument& doc) {
  const std::string decoded = text::sanitize_utf8(doc.bytes);
  if (doc.media_hint == MediaHint::html) return collapse_whitespace(remove_markup(decoded));
  return collapse_whitespace(decoded);
}

std::size_t count_tokens(std::string_view text) {
  std::size_t n = 0;
  for (const auto& sentence : nlp::split_sentences(text)) n += nlp::tokenize(sentence).size();
  return n;
}

bool Corpus::contains(std::string_view doc_id) const { return find(doc_id) != nullptr; }

const CorpusDocument* Corpus::find(std::string_view doc_id) const {
  auto it = std::find_if(documents_.begin(), documents_.end(),
                         [&](const CorpusDocument& d) { return d.doc_id == doc_id; });
  return it == documents_.end() ? nullptr : &*it;
}

void Corpus::add_document(std::string text, std::string doc_id, std::string source_id) {
  if (doc_id.empty()) throw InvalidInput("document id must not be empty");
  if (contains(doc_id)) throw InvalidInput("duplicate document id '" + doc_id + "'");
  CorpusDocument doc;
  doc.char_count = text::utf8_length(text);
  doc.token_count = count_tokens(text);
  doc.doc_id = std::move(doc_id);
  doc.source_id = std::move(source_id);
  doc.text = std::move(text);
  total_chars_ += doc.char_count;
  total_tokens_ += doc.token_count;
  documents_.push_back(std::move(doc));
}

Corpus add_document(Corpus corpus, std::string text, std::string doc_id) {
  corpus.add_document(std::move(text), std::move(doc_id));
  return corpus;
}

BudgetReport corpus_budget_check(const Corpus& corpus, std::size_t max_chars) {
  if (max_chars == 0) throw InvalidInput("max_chars must be positive");
  return {corpus.total_chars() <= max_chars, corpus.total_chars(), max_chars};
}

std::string make_doc_id(std::string_view source_id, const Corpus& corpus) {
  std::string_view name = source_id;
  if (auto q = name.find_first_of("?#"); q != std::string_view::npos) name = name.substr(0, q);
  while (!name.empty() && name.back() == '/') name.remove_suffix(1);
  if (auto slash = name.find_last_of("/\\"); slash != std::string_view::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string_view::npos && dot > 0)
    name = name.substr(0, dot);
  std::string base;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-' || c == '_') base += static_cast<char>(std::tolower(u));
    else if (!base.empty() && base.back() != '-') base += '-';
  }
  while (!base.empty() && base.back() == '-') base.pop_back();
  if (base.empty()) base = "doc";
  std::string id = base;
  for (int k = 2; corpus.contains(id); ++k) id = base + "-" + std::to_string(k);
  return id;
}

void save_corpus(const Corpus& corpus, const fs::path& dir) {
  fs::create_directories(dir);
  std::string manifest;
  for (const auto& doc : corpus.documents()) {
    text::write_file(dir / (doc.doc_id + ".txt"), doc.text);
    manifest += doc.doc_id + '\t' + doc.source_id + '\t' + std::to_string(doc.char_count) +
                '\t' + std::to_string(doc.token_count) + '\n';
  }
  text::write_file(dir / "manifest.tsv", manifest);
}

Corpus load_corpus(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.tsv";
  std::error_code ec;
  if (!fs::is_regular_file(manifest_path, ec))
    throw IoError("no corpus manifest at " + manifest_path.string());
  Corpus corpus;
  std::size_t line_no = 0;
  for (const auto& line : text::split(text::read_file(manifest_path), '\n')) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 4) throw ParseError("manifest.tsv: expected 4 columns", line_no);
    corpus.add_document(text::read_file(dir / (cols[0] + ".txt")), cols[0], cols[1]);
  }
  return corpus;
}

}  // namespace ontoforge::ingest
