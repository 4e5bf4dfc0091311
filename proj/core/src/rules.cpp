#include <algorithm>
#include <cctype>
#include <set>

#include "ontoforge/error.hpp"
#include "ontoforge/relations.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::relations {

bool TokenConstraint::matches(const nlp::TaggedToken& token) const {
  for (const auto& c : conditions) {
    bool ok = false;
    switch (c.attribute) {
      case Attribute::category:
        ok = token.tag == c.tag;
        break;
      case Attribute::string:
        ok = text::to_lower(token.surface) == c.value;
        break;
      case Attribute::lemma:
        ok = token.lemma == c.value;
        break;
    }
    if (ok == c.negated) return false;
  }
  return true;
}

namespace {

enum class Tok { ident, string, lparen, rparen, lbrace, rbrace, bar, colon, star, comma, eq, neq, end };

struct Lexeme {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Lexeme> run() {
    std::vector<Lexeme> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line_, col_});
        return out;
      }
      const std::size_t line = line_;
      const std::size_t col = col_;
      const char c = src_[pos_];
      auto single = [&](Tok k) {
        advance();
        out.push_back({k, std::string(1, c), line, col});
      };
      switch (c) {
        case '(': single(Tok::lparen); continue;
        case ')': single(Tok::rparen); continue;
        case '{': single(Tok::lbrace); continue;
        case '}': single(Tok::rbrace); continue;
        case '|': single(Tok::bar); continue;
        case ':': single(Tok::colon); continue;
        case '*': single(Tok::star); continue;
        case ',': single(Tok::comma); continue;
        default: break;
      }
      if ((c == '=' || c == '!') && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        advance();
        advance();
        out.push_back({c == '=' ? Tok::eq : Tok::neq, c == '=' ? "==" : "!=", line, col});
        continue;
      }
      if (c == '"') {
        advance();
        std::string value;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\n') throw ParseError("unterminated string", line, col);
          if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
          value += src_[pos_];
          advance();
        }
        if (pos_ >= src_.size()) throw ParseError("unterminated string", line, col);
        advance();
        out.push_back({Tok::string, std::move(value), line, col});
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size()) {
          const char d = src_[pos_];
          if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' || d == '$'))
            break;
          word += d;
          advance();
        }
        out.push_back({Tok::ident, std::move(word), line, col});
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool plain_token(const PatternElement& e) {
  return e.is_token() && e.quantifier == Quantifier::one && !e.binding;
}

// Collapses groups that add nothing over a single token test, so that
// `(({A} | {B}):x)*` becomes one element with two alternatives.
PatternElement simplify(PatternElement e) {
  if (e.is_token()) return e;
  for (auto& seq : e.groups)
    for (auto& child : seq) child = simplify(std::move(child));

  const bool all_plain = std::all_of(e.groups.begin(), e.groups.end(), [](const auto& seq) {
    return seq.size() == 1 && plain_token(seq.front());
  });
  if (all_plain) {
    PatternElement leaf;
    for (auto& seq : e.groups)
      for (auto& alt : seq.front().alternatives) leaf.alternatives.push_back(std::move(alt));
    leaf.quantifier = e.quantifier;
    leaf.binding = e.binding;
    return leaf;
  }
  if (e.groups.size() == 1 && e.groups.front().size() == 1) {
    PatternElement inner = e.groups.front().front();
    if (!(e.binding && inner.binding)) {
      if (e.binding) inner.binding = e.binding;
      if (e.quantifier == Quantifier::star) inner.quantifier = Quantifier::star;
      return inner;
    }
  }
  return e;
}

void collect_bindings(const PatternElement& e, std::set<std::string>& out) {
  if (e.binding) out.insert(*e.binding);
  for (const auto& seq : e.groups)
    for (const auto& child : seq) collect_bindings(child, out);
}

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> toks) : toks_(std::move(toks)) {}

  std::vector<PatternRule> run() {
    std::vector<PatternRule> rules;
    std::set<std::string> names;
    while (peek().kind != Tok::end) {
      if (at_header("Macro")) {
        parse_macro();
        continue;
      }
      PatternRule rule = parse_rule();
      if (!names.insert(rule.name).second)
        throw ParseError("duplicate rule name '" + rule.name + "'", rule_line_, rule_col_);
      rules.push_back(std::move(rule));
    }
    return rules;
  }

 private:
  const Lexeme& peek() const { return toks_[pos_]; }
  const Lexeme& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& why, const Lexeme& at) const {
    const std::string where = rule_name_.empty() ? "" : "rule '" + rule_name_ + "': ";
    throw ParseError(where + why, at.line, at.column);
  }

  const Lexeme& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    return next();
  }

  bool at_header(std::string_view word) const {
    return peek().kind == Tok::ident && peek().text == word && pos_ + 1 < toks_.size() &&
           toks_[pos_ + 1].kind == Tok::colon;
  }
  bool at_rule_header() const { return at_header("Rule") || at_header("Macro"); }

  void parse_macro() {
    rule_name_.clear();
    next();
    next();
    const Lexeme& name = expect(Tok::ident, "macro name");
    if (macros_.contains(name.text)) fail("duplicate macro '" + name.text + "'", name);
    rule_name_ = name.text;
    macros_[name.text] = simplify(parse_item());
  }

  PatternRule parse_rule() {
    rule_name_.clear();
    const Lexeme& head = peek();
    if (!at_rule_header()) fail("expected 'Rule:'", head);
    rule_line_ = head.line;
    rule_col_ = head.column;
    next();
    expect(Tok::colon, "':' after Rule");
    PatternRule rule;
    rule.name = expect(Tok::ident, "rule name").text;
    rule_name_ = rule.name;
    rule.elements = parse_sequence(true);
    for (std::size_t i = 0; i < rule.elements.size(); ++i) {
      std::set<std::string> names;
      collect_bindings(rule.elements[i], names);
      for (const auto& n : names) rule.bindings[n].push_back(i);
    }
    return rule;
  }

  std::vector<PatternElement> parse_sequence(bool top_level) {
    std::vector<PatternElement> seq;
    while (true) {
      const Lexeme& t = peek();
      if (t.kind == Tok::end || (top_level && at_rule_header())) break;
      if (!top_level && (t.kind == Tok::bar || t.kind == Tok::rparen)) break;
      seq.push_back(simplify(parse_item()));
    }
    if (seq.empty()) fail("empty pattern", peek());
    return seq;
  }

  PatternElement parse_item() {
    PatternElement e;
    const Lexeme& t = peek();
    if (t.kind == Tok::lparen) {
      next();
      e.groups.push_back(parse_sequence(false));
      while (peek().kind == Tok::bar) {
        next();
        e.groups.push_back(parse_sequence(false));
      }
      expect(Tok::rparen, "')'");
    } else if (t.kind == Tok::lbrace) {
      e.alternatives.push_back(parse_constraint());
    } else if (t.kind == Tok::ident && macros_.contains(t.text)) {
      next();
      // Wrapped so a binding or star written after the reference applies to
      // the whole macro body.
      e.groups.push_back({macros_.at(t.text)});
    } else {
      fail(t.kind == Tok::ident ? "unknown macro '" + t.text + "'" : std::string("expected '(' or '{'"), t);
    }
    bool bound = false;
    bool starred = false;
    while (true) {
      if (peek().kind == Tok::colon && !bound) {
        next();
        e.binding = expect(Tok::ident, "binding name").text;
        bound = true;
      } else if (peek().kind == Tok::star && !starred) {
        next();
        e.quantifier = Quantifier::star;
        starred = true;
      } else {
        break;
      }
    }
    return e;
  }

  TokenConstraint parse_constraint() {
    expect(Tok::lbrace, "'{'");
    TokenConstraint c;
    while (true) {
      c.conditions.push_back(parse_condition());
      if (peek().kind == Tok::comma) {
        next();
        continue;
      }
      break;
    }
    expect(Tok::rbrace, "'}'");
    return c;
  }

  Condition parse_condition() {
    const Lexeme& attr = expect(Tok::ident, "Token attribute");
    Condition c;
    if (attr.text == "Token.category") c.attribute = Attribute::category;
    else if (attr.text == "Token.string") c.attribute = Attribute::string;
    else if (attr.text == "Token.lemma") c.attribute = Attribute::lemma;
    else fail("unknown attribute '" + attr.text + "'", attr);

    const Lexeme& op = next();
    if (op.kind == Tok::eq) c.negated = false;
    else if (op.kind == Tok::neq) c.negated = true;
    else fail("expected '==' or '!='", op);

    const Lexeme& value = next();
    if (value.kind != Tok::ident && value.kind != Tok::string) fail("expected a value", value);
    if (c.attribute == Attribute::category) {
      auto tag = nlp::parse_tag(value.text);
      if (!tag) fail("unknown tag '" + value.text + "'", value);
      c.tag = *tag;
    } else {
      c.value = text::to_lower(value.text);
    }
    return c;
  }

  std::vector<Lexeme> toks_;
  std::map<std::string, PatternElement> macros_;
  std::size_t pos_ = 0;
  std::string rule_name_;
  std::size_t rule_line_ = 0;
  std::size_t rule_col_ = 0;
};

// ---------------------------------------------------------------------------
// Matching

using Captures = std::map<std::string, std::vector<std::size_t>>;

void merge_into(Captures& dst, Captures& src) {
  for (auto& [name, idx] : src) {
    auto& d = dst[name];
    d.insert(d.end(), idx.begin(), idx.end());
  }
}

std::optional<std::size_t> match_sequence(const std::vector<PatternElement>& seq,
                                          const std::vector<nlp::TaggedToken>& toks,
                                          std::size_t pos, Captures& caps);

std::optional<std::size_t> match_once(const PatternElement& e,
                                      const std::vector<nlp::TaggedToken>& toks,
                                      std::size_t pos, Captures& caps) {
  std::optional<std::size_t> end;
  if (e.is_token()) {
    if (pos < toks.size() &&
        std::any_of(e.alternatives.begin(), e.alternatives.end(),
                    [&](const TokenConstraint& c) { return c.matches(toks[pos]); }))
      end = pos + 1;
  } else {
    Captures best;
    for (const auto& alt : e.groups) {
      Captures local;
      auto r = match_sequence(alt, toks, pos, local);
      if (r && (!end || *r > *end)) {
        end = r;
        best = std::move(local);
      }
    }
    if (end) merge_into(caps, best);
  }
  if (end && e.binding)
    for (std::size_t i = pos; i < *end; ++i) caps[*e.binding].push_back(i);
  return end;
}

std::optional<std::size_t> match_element(const PatternElement& e,
                                         const std::vector<nlp::TaggedToken>& toks,
                                         std::size_t pos, Captures& caps) {
  if (e.quantifier == Quantifier::one) return match_once(e, toks, pos, caps);
  while (true) {
    Captures local;
    auto r = match_once(e, toks, pos, local);
    if (!r || *r == pos) break;
    merge_into(caps, local);
    pos = *r;
  }
  return pos;
}

std::optional<std::size_t> match_sequence(const std::vector<PatternElement>& seq,
                                          const std::vector<nlp::TaggedToken>& toks,
                                          std::size_t pos, Captures& caps) {
  for (const auto& e : seq) {
    auto r = match_element(e, toks, pos, caps);
    if (!r) return std::nullopt;
    pos = *r;
  }
  return pos;
}

}  // namespace

std::vector<PatternRule> parse_rules(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

std::vector<Match> match_rule(const PatternRule& rule, const nlp::TaggedSentence& sentence) {
  std::vector<Match> out;
  const auto& toks = sentence.tokens;
  std::size_t start = 0;
  while (start < toks.size()) {
    Captures caps;
    auto end = match_sequence(rule.elements, toks, start, caps);
    if (!end || *end == start) {
      ++start;
      continue;
    }
    Match m;
    m.begin = start;
    m.end = *end;
    for (auto& [name, idx] : caps) {
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      std::vector<std::string> words;
      for (auto i : idx) words.push_back(toks[i].surface);
      m.text[name] = text::join(words, " ");
      m.bound[name] = std::move(idx);
    }
    out.push_back(std::move(m));
    start = *end;
  }
  return out;
}

}  // namespace ontoforge::relations
