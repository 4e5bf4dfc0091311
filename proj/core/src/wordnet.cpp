#include "ontoforge/wordnet.hpp"

#include <algorithm>
#include <charconv>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::wordnet {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out, int base = 10) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string read_required(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("missing WordNet file " + path.string());
  return text::read_file(path);
}

// Header lines in the WNdb distribution start with two spaces.
template <typename Fn>
void for_each_entry(std::string_view content, Fn fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == ' ' || line == "\r") continue;
    fn(line, line_no);
  }
}

}  // namespace

std::string to_index_form(std::string_view lemma) {
  std::string out;
  for (const auto& word : text::split_whitespace(text::to_lower(lemma))) {
    if (!out.empty()) out += '_';
    out += word;
  }
  return out;
}

std::string to_space_form(std::string_view lemma) {
  return text::replace_all(std::string(lemma), "_", " ");
}

WordnetDb WordnetDb::load(const fs::path& dir) {
  const std::string index_text = read_required(dir / "index.noun");
  const std::string data_text = read_required(dir / "data.noun");
  WordnetDb db;

  for_each_entry(data_text, [&](std::string_view line, std::size_t line_no) {
    const std::size_t bar = line.find(" | ");
    const auto f = fields_of(line.substr(0, bar));
    auto fail = [&](const std::string& why) {
      throw ParseError("data.noun: " + why, line_no);
    };
    if (f.size() < 5) fail("too few fields");
    Synset s;
    if (!parse_int(f[0], s.offset)) fail("bad synset offset '" + std::string(f[0]) + "'");
    if (f[2] != "n") return;  // satellite or foreign entries never occur in data.noun
    unsigned w_cnt = 0;
    if (!parse_int(f[3], w_cnt, 16) || w_cnt == 0) fail("bad word count");
    if (f.size() < 4 + 2 * w_cnt) fail("word list shorter than its count");
    for (unsigned i = 0; i < w_cnt; ++i) s.word_forms.push_back(text::to_lower(f[4 + 2 * i]));
    if (!db.synsets_.emplace(s.offset, std::move(s)).second) fail("duplicate synset offset");
  });

  for_each_entry(index_text, [&](std::string_view line, std::size_t line_no) {
    const auto f = fields_of(line);
    auto fail = [&](const std::string& why) {
      throw ParseError("index.noun: " + why, line_no);
    };
    std::size_t synset_cnt = 0;
    std::size_t p_cnt = 0;
    if (f.size() < 6 || !parse_int(f[2], synset_cnt) || !parse_int(f[3], p_cnt))
      fail("malformed entry");
    if (f.size() != 4 + p_cnt + 2 + synset_cnt) fail("field count does not match counts");
    std::vector<std::uint32_t> offsets;
    for (std::size_t i = f.size() - synset_cnt; i < f.size(); ++i) {
      std::uint32_t off = 0;
      if (!parse_int(f[i], off)) fail("bad synset offset");
      if (!db.synsets_.contains(off)) fail("offset " + std::string(f[i]) + " not in data.noun");
      offsets.push_back(off);
    }
    std::string lemma = text::to_lower(f[0]);
    db.lemmas_.push_back(lemma);
    db.index_[std::move(lemma)] = std::move(offsets);
  });

  std::sort(db.lemmas_.begin(), db.lemmas_.end());
  return db;
}

WordnetDb load_wordnet(const fs::path& dir) { return WordnetDb::load(dir); }

const Synset* WordnetDb::synset(std::uint32_t offset) const {
  auto it = synsets_.find(offset);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<const Synset*> WordnetDb::noun_synsets(std::string_view lemma) const {
  std::vector<const Synset*> out;
  auto it = index_.find(to_index_form(lemma));
  if (it == index_.end()) return out;
  for (auto off : it->second) out.push_back(&synsets_.at(off));
  return out;
}

std::set<std::string> WordnetDb::synonyms(std::string_view lemma) const {
  std::set<std::string> out;
  const std::string key = to_index_form(lemma);
  if (key.empty()) return out;
  if (auto it = index_.find(key); it != index_.end()) {
    for (auto off : it->second)
      for (const auto& w : synsets_.at(off).word_forms) out.insert(to_space_form(w));
    return out;
  }
  const std::size_t last = key.rfind('_');
  if (last == std::string::npos) return out;
  const std::string prefix = to_space_form(key.substr(0, last + 1));
  for (const auto& head_syn : synonyms(key.substr(last + 1))) out.insert(prefix + head_syn);
  return out;
}

bool WordnetDb::are_synonyms(std::string_view a, std::string_view b) const {
  const std::string sa = to_space_form(to_index_form(a));
  const std::string sb = to_space_form(to_index_form(b));
  if (sa == sb) return true;
  return synonyms(sa).contains(sb) || synonyms(sb).contains(sa);
}

}  // namespace ontoforge::wordnet
