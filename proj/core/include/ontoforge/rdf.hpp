#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::rdf {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

enum class TermKind { iri, blank, literal };

struct Term {
  TermKind kind = TermKind::iri;
  /// IRI text, blank node label, or literal lexical form.
  std::string value;
  std::string datatype;  // literals only; empty for plain strings
  std::string language;  // literals only

  static Term iri(std::string v) { return {TermKind::iri, std::move(v), {}, {}}; }
  static Term blank(std::string v) { return {TermKind::blank, std::move(v), {}, {}}; }
  static Term literal(std::string v, std::string datatype = {}, std::string language = {}) {
    return {TermKind::literal, std::move(v), std::move(datatype), std::move(language)};
  }

  bool is_iri() const { return kind == TermKind::iri; }
  bool is_blank() const { return kind == TermKind::blank; }
  bool is_literal() const { return kind == TermKind::literal; }

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

class Graph {
 public:
  /// Throws InvalidInput for a literal subject or a non-IRI predicate.
  void add(Triple t);
  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

 private:
  std::set<Triple> triples_;
};

/// Turtle subset: @prefix/@base (and the SPARQL-style PREFIX/BASE forms),
/// IRIs, prefixed names, `a`, string/number/boolean literals with language
/// tags or datatypes, `;` and `,` lists, blank node labels and bracketed
/// property lists. N-Triples is a subset. Collections raise Unsupported;
/// syntax errors raise ParseError with line and column.
Graph parse_turtle(std::string_view source, std::string_view base = {});

/// Reads a Turtle or N-Triples file. The file's own location is not used as a
/// base; relative IRIs resolve against `base` when given.
Graph parse_rdf(const std::filesystem::path& path, std::string_view base = {});

/// Resolves `ref` against `base` (scheme-relative, absolute-path and relative
/// path references, dot segments are not normalized).
std::string resolve_iri(std::string_view base, std::string_view ref);

/// Turtle string literal with quotes and escapes.
std::string quote_literal(std::string_view value);

/// Percent-encodes every byte outside the IRI-safe unreserved set.
std::string encode_iri_segment(std::string_view segment);
std::string decode_iri_segment(std::string_view segment);

/// Text after the last '#' or '/'.
std::string local_name(std::string_view iri);

}  // namespace ontoforge::rdf
