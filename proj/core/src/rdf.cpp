#include "ontoforge/rdf.hpp"

#include <cctype>
#include <map>

#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::rdf {

void Graph::add(Triple t) {
  if (t.subject.is_literal()) throw InvalidInput("literal in subject position");
  if (!t.predicate.is_iri()) throw InvalidInput("predicate must be an IRI");
  triples_.insert(std::move(t));
}

std::string resolve_iri(std::string_view base, std::string_view ref) {
  auto has_scheme = [](std::string_view s) {
    const std::size_t colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
      const char c = s[i];
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.')) return false;
    }
    return true;
  };
  if (base.empty() || has_scheme(ref)) return std::string(ref);
  if (ref.empty()) return std::string(base.substr(0, base.find('#')));
  if (ref.front() == '#') return std::string(base.substr(0, base.find('#'))) + std::string(ref);

  const std::size_t scheme_end = base.find("://");
  const std::size_t authority_end =
      scheme_end == std::string_view::npos ? 0 : base.find('/', scheme_end + 3);
  if (ref.starts_with("//")) return std::string(base.substr(0, base.find(':') + 1)) + std::string(ref);
  if (ref.front() == '/') {
    if (scheme_end == std::string_view::npos) return std::string(ref);
    return std::string(base.substr(0, authority_end)) + std::string(ref);
  }
  std::string_view path = base.substr(0, std::min(base.find('#'), base.find('?')));
  const std::size_t slash = path.rfind('/');
  if (scheme_end != std::string_view::npos && (authority_end == std::string_view::npos || slash < authority_end))
    return std::string(path) + "/" + std::string(ref);
  return std::string(path.substr(0, slash + 1)) + std::string(ref);
}

std::string quote_literal(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string encode_iri_segment(std::string_view segment) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (char ch : segment) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += ch;
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

std::string decode_iri_segment(std::string_view segment) {
  std::string out;
  for (std::size_t i = 0; i < segment.size(); ++i) {
    if (segment[i] == '%' && i + 2 < segment.size() &&
        std::isxdigit(static_cast<unsigned char>(segment[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(segment[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(segment.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += segment[i];
    }
  }
  return out;
}

std::string local_name(std::string_view iri) {
  const std::size_t cut = iri.find_last_of("#/");
  return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

namespace {

class TurtleParser {
 public:
  TurtleParser(std::string_view src, std::string_view base) : src_(src), base_(base) {}

  Graph run() {
    skip_ws();
    while (!eof()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char get() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line_, col_); }

  void skip_ws() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (eof()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    get();
  }

  bool keyword_ahead(std::string_view kw, bool case_insensitive) const {
    if (src_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = src_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    const char after = pos_ + kw.size() < src_.size() ? src_[pos_ + kw.size()] : ' ';
    return !(std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':');
  }

  void consume(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) get();
  }

  void statement() {
    if (keyword_ahead("@prefix", false)) {
      consume(7);
      prefix_decl();
      expect('.');
      return;
    }
    if (keyword_ahead("@base", false)) {
      consume(5);
      skip_ws();
      base_ = iri_ref();
      expect('.');
      return;
    }
    if (keyword_ahead("PREFIX", true)) {
      consume(6);
      prefix_decl();
      return;
    }
    if (keyword_ahead("BASE", true)) {
      consume(4);
      skip_ws();
      base_ = iri_ref();
      return;
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::string name;
    while (!eof() && peek() != ':') {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
        fail("bad prefix name");
      name += get();
    }
    if (eof()) fail("expected ':' in prefix declaration");
    get();
    skip_ws();
    prefixes_[name] = iri_ref();
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      Term subject = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    predicate_object_list(subject);
  }

  Term subject_term() {
    skip_ws();
    const char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') throw Unsupported("RDF collections '( ... )' are not supported");
    if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c)))
      fail("literal in subject position");
    return Term::iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      // A trailing ';' may close the list.
      if (peek() == '.' || peek() == ']' || eof()) return;
    }
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = object_term();
      graph_.add({subject, predicate, std::move(object)});
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  Term verb() {
    skip_ws();
    if (peek() == 'a') {
      const char after = peek(1);
      if (std::isspace(static_cast<unsigned char>(after)) || after == '<' || after == '"' ||
          after == '[' || after == '_') {
        get();
        return Term::iri(std::string(kRdf) + "type");
      }
    }
    if (peek() == '<') return Term::iri(iri_ref());
    if (peek() == '[' || peek() == '"' || peek() == '_') fail("predicate must be an IRI");
    return Term::iri(prefixed_name());
  }

  Term object_term() {
    skip_ws();
    const char c = peek();
    if (eof()) fail("expected an object before end of input");
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') throw Unsupported("RDF collections '( ... )' are not supported");
    if (c == '"' || c == '\'') return string_literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.')
      return numeric_literal();
    if (keyword_ahead("true", false) || keyword_ahead("false", false)) {
      std::string v = peek() == 't' ? "true" : "false";
      consume(v.size());
      return Term::literal(v, std::string(kXsd) + "boolean");
    }
    return Term::iri(prefixed_name());
  }

  Term blank_property_list() {
    get();  // '['
    Term node = Term::blank("_g" + std::to_string(next_blank_++));
    skip_ws();
    if (peek() == ']') {
      get();
      return node;
    }
    predicate_object_list(node);
    expect(']');
    return node;
  }

  Term blank_label() {
    consume(2);
    std::string label;
    while (!eof()) {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) break;
      label += get();
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
      --col_;
    }
    if (label.empty()) fail("empty blank node label");
    return Term::blank(label);
  }

  std::string iri_ref() {
    if (peek() != '<') fail("expected '<'");
    get();
    std::string iri;
    while (!eof() && peek() != '>') {
      const char c = peek();
      if (c == '\n' || c == ' ') fail("unterminated IRI");
      iri += get();
    }
    if (eof()) fail("unterminated IRI");
    get();
    return resolve_iri(base_, iri);
  }

  std::string prefixed_name() {
    const std::size_t line = line_;
    const std::size_t col = col_;
    std::string prefix;
    while (!eof() && peek() != ':') {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
        if (prefix.empty()) fail(std::string("unexpected '") + c + "'");
        fail("expected ':' in prefixed name '" + prefix + "'");
      }
      prefix += get();
    }
    if (eof()) fail("unexpected end of input");
    get();
    std::string local;
    while (!eof()) {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
            c == '%' || static_cast<unsigned char>(c) >= 0x80))
        break;
      local += get();
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --col_;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      throw ParseError("undeclared prefix '" + prefix + ":'", line, col);
    return it->second + local;
  }

  Term string_literal() {
    const char quote = get();
    bool long_form = false;
    if (peek() == quote && peek(1) == quote) {
      consume(2);
      long_form = true;
    }
    std::string value;
    while (true) {
      if (eof()) fail("unterminated string literal");
      const char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          consume(3);
          break;
        }
      } else {
        if (c == quote) {
          get();
          break;
        }
        if (c == '\n') fail("newline in string literal");
      }
      if (c == '\\') {
        get();
        value += escape();
        continue;
      }
      value += get();
    }
    if (peek() == '@') {
      get();
      std::string lang;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) lang += get();
      if (lang.empty()) fail("empty language tag");
      return Term::literal(value, {}, text::to_lower(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      consume(2);
      std::string dt = peek() == '<' ? iri_ref() : prefixed_name();
      return Term::literal(value, dt);
    }
    return Term::literal(value);
  }

  std::string escape() {
    if (eof()) fail("dangling escape");
    const char c = get();
    switch (c) {
      case 't': return "\t";
      case 'n': return "\n";
      case 'r': return "\r";
      case 'b': return "\b";
      case 'f': return "\f";
      case '"': return "\"";
      case '\'': return "'";
      case '\\': return "\\";
      case 'u':
      case 'U': {
        const int digits = c == 'u' ? 4 : 8;
        std::string hex;
        for (int i = 0; i < digits; ++i) {
          if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad unicode escape");
          hex += get();
        }
        std::string out;
        text::append_utf8(out, static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
        return out;
      }
      default:
        fail(std::string("unknown escape '\\") + c + "'");
    }
  }

  Term numeric_literal() {
    std::string v;
    if (peek() == '+' || peek() == '-') v += get();
    bool dot = false;
    bool exp = false;
    while (!eof()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        v += get();
      } else if (c == '.' && !dot && !exp && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        v += get();
      } else if ((c == 'e' || c == 'E') && !exp) {
        exp = true;
        v += get();
        if (peek() == '+' || peek() == '-') v += get();
      } else {
        break;
      }
    }
    if (v.empty() || v == "+" || v == "-") fail("malformed number");
    const char* type = exp ? "double" : dot ? "decimal" : "integer";
    return Term::literal(v, std::string(kXsd) + type);
  }

  std::string_view src_;
  std::string base_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::size_t next_blank_ = 0;
  std::map<std::string, std::string> prefixes_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view source, std::string_view base) {
  return TurtleParser(source, base).run();
}

Graph parse_rdf(const std::filesystem::path& path, std::string_view base) {
  return parse_turtle(text::read_file(path), base);
}

}  // namespace ontoforge::rdf
