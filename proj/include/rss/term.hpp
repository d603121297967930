#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace rss {

enum class TermKind { Iri, BlankNode, Literal };

inline constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";

// An RDF term. Literals carry either a datatype IRI or a language tag,
// never both; a plain literal is normalized to xsd:string at construction.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string datatype;  // literals only
  std::string language;  // literals only

  static Term iri(std::string v) { return Term{TermKind::Iri, std::move(v), "", ""}; }
  static Term blank(std::string label) { return Term{TermKind::BlankNode, std::move(label), "", ""}; }
  static Term literal(std::string v, std::string dt = kXsdString) {
    return Term{TermKind::Literal, std::move(v), std::move(dt), ""};
  }
  static Term langLiteral(std::string v, std::string lang) {
    return Term{TermKind::Literal, std::move(v), "", std::move(lang)};
  }

  bool isIri() const { return kind == TermKind::Iri; }
  bool isBlank() const { return kind == TermKind::BlankNode; }
  bool isLiteral() const { return kind == TermKind::Literal; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

inline Triple triple(Term s, Term p, Term o) {
  if (s.isLiteral()) throw std::invalid_argument("triple subject must not be a literal");
  if (!p.isIri()) throw std::invalid_argument("triple predicate must be an IRI");
  return Triple{std::move(s), std::move(p), std::move(o)};
}

}  // namespace rss
