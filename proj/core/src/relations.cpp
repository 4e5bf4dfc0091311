#include "ontoforge/relations.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::relations {

namespace {

struct Candidate {
  std::size_t rule;
  Match match;
  bool subclass;
};

const std::vector<std::size_t>* bound(const Match& m, const std::string& name) {
  auto it = m.bound.find(name);
  return it == m.bound.end() ? nullptr : &it->second;
}

std::vector<std::size_t> anchor_tokens(const Candidate& c) {
  if (auto v = bound(c.match, "verb")) return *v;
  std::vector<std::size_t> all;
  for (std::size_t i = c.match.begin; i < c.match.end; ++i) all.push_back(i);
  return all;
}

bool overlaps(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

bool dominates(const Candidate& a, const Candidate& b) {
  const std::size_t len_a = a.match.end - a.match.begin;
  const std::size_t len_b = b.match.end - b.match.begin;
  if (a.match.begin > b.match.begin || b.match.end > a.match.end) return false;
  if (len_a == len_b && a.rule >= b.rule) return false;
  return overlaps(anchor_tokens(a), anchor_tokens(b));
}

bool is_separator(const nlp::TaggedToken& t) { return t.tag == nlp::PosTag::CC || t.surface == ","; }

std::string render(const std::vector<nlp::TaggedToken>& toks, const std::vector<std::size_t>* idx,
                   char separator) {
  if (!idx) return {};
  std::vector<std::string> parts;
  std::vector<std::string> words;
  auto flush = [&] {
    if (!words.empty()) parts.push_back(text::join(words, " "));
    words.clear();
  };
  for (auto i : *idx) {
    if (is_separator(toks[i])) flush();
    else words.push_back(text::to_lower(toks[i].surface));
  }
  flush();
  return text::join(parts, std::string(1, separator));
}

std::string verb_label(const std::vector<nlp::TaggedToken>& toks, const std::vector<std::size_t>& idx) {
  for (auto it = idx.rbegin(); it != idx.rend(); ++it)
    if (nlp::is_verb(toks[*it].tag)) return toks[*it].lemma;
  return idx.empty() ? std::string() : toks[idx.back()].lemma;
}

std::vector<std::string> split_field(const std::string& field, char separator) {
  std::vector<std::string> out;
  for (const auto& part : text::split(field, separator)) out.push_back(text::trim(part));
  return out;
}

}  // namespace

std::vector<Relation> split_compound(const Relation& rel, char separator) {
  if (separator == ' ') throw InvalidInput("separator must not be a space");
  std::vector<Relation> out;
  for (const auto& d : split_field(rel.domain, separator)) {
    for (const auto& r : split_field(rel.range, separator)) {
      Relation copy = rel;
      copy.domain = d;
      copy.range = r;
      out.push_back(std::move(copy));
    }
  }
  return out;
}

std::vector<Relation> merge_relations(std::vector<Relation> relations) {
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, Relation> merged;
  for (auto& r : relations) {
    Key key{r.label, r.domain, r.range};
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(r));
      continue;
    }
    it->second.count += r.count;
    it->second.sentence_ref = std::min(it->second.sentence_ref, r.sentence_ref);
  }
  std::size_t max_count = 0;
  for (const auto& [_, r] : merged) max_count = std::max(max_count, r.count);
  std::vector<Relation> out;
  out.reserve(merged.size());
  for (auto& [_, r] : merged) {
    r.confidence = max_count == 0 ? 0.0 : static_cast<double>(r.count) / static_cast<double>(max_count);
    out.push_back(std::move(r));
  }
  return out;
}

Extraction extract(const nlp::TaggedCorpus& corpus, const std::vector<PatternRule>& rules,
                   const ExtractOptions& options) {
  std::vector<Relation> raw;
  std::vector<SubclassPair> pairs;
  for (const auto& doc : corpus) {
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      const auto& sentence = doc.sentences[s];
      const SentenceRef ref{doc.doc_id, s};
      std::vector<Candidate> candidates;
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const bool subclass = rules[r].has_binding("child") && rules[r].has_binding("parent");
        if (!subclass && !rules[r].has_binding("verb")) continue;
        for (auto& m : match_rule(rules[r], sentence)) candidates.push_back({r, std::move(m), subclass});
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const bool suppressed = std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& a) {
          return &a != &candidates[i] && dominates(a, candidates[i]);
        });
        if (suppressed) continue;
        const Candidate& c = candidates[i];
        const auto& toks = sentence.tokens;
        if (c.subclass) {
          std::string child = render(toks, bound(c.match, "child"), options.separator);
          std::string parent = render(toks, bound(c.match, "parent"), options.separator);
          if (child.empty() || parent.empty()) continue;
          for (const auto& ch : split_field(child, options.separator))
            for (const auto& pa : split_field(parent, options.separator))
              if (!ch.empty() && !pa.empty() && ch != pa) pairs.push_back({ch, pa, ref});
          continue;
        }
        Relation rel;
        rel.label = verb_label(toks, *bound(c.match, "verb"));
        rel.domain = render(toks, bound(c.match, "domain"), options.separator);
        rel.range = render(toks, bound(c.match, "range"), options.separator);
        rel.sentence_ref = ref;
        if (rel.label.empty() || rel.domain.empty()) continue;
        if (options.split) {
          for (auto& part : split_compound(rel, options.separator))
            if (!part.domain.empty()) raw.push_back(std::move(part));
        } else {
          raw.push_back(std::move(rel));
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  // One pair per (child, parent), keeping the earliest reference.
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const SubclassPair& a, const SubclassPair& b) {
                            return a.child == b.child && a.parent == b.parent;
                          }),
              pairs.end());
  return {merge_relations(std::move(raw)), std::move(pairs)};
}

std::vector<Relation> extract_relations(const nlp::TaggedCorpus& corpus,
                                        const std::vector<PatternRule>& rules,
                                        const ExtractOptions& options) {
  return extract(corpus, rules, options).relations;
}

std::string format_relations(const std::vector<Relation>& relations) {
  std::string out(kRelationsHeader);
  out += '\n';
  for (const auto& r : relations) {
    out += r.label + '\t' + r.domain + '\t' + r.range + '\t' + r.sentence_ref.doc_id + '\t' +
           std::to_string(r.sentence_ref.sentence_index) + '\t' + std::to_string(r.count) + '\n';
  }
  return out;
}

std::vector<Relation> parse_relations(std::string_view tsv) {
  std::vector<Relation> out;
  std::size_t line_no = 0;
  for (auto line : text::split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line.starts_with("label\t"))) continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 6) throw ParseError("relations file: expected 6 columns", line_no);
    Relation r;
    r.label = cols[0];
    r.domain = cols[1];
    r.range = cols[2];
    r.sentence_ref.doc_id = cols[3];
    auto parse_num = [&](const std::string& s, std::size_t& v) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("relations file: bad number '" + s + "'", line_no);
    };
    parse_num(cols[4], r.sentence_ref.sentence_index);
    parse_num(cols[5], r.count);
    out.push_back(std::move(r));
  }
  return merge_relations(std::move(out));
}

}  // namespace ontoforge::relations
