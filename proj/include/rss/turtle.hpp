#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rss/graph.hpp"
#include "rss/term.hpp"

namespace rss {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

inline bool isAbsoluteIri(const std::string& iri) {
  // scheme ":" per RFC 3986
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return false;
}

// Turtle subset parser: @prefix, prefixed names, <IRI>, `a`, typed and
// language-tagged literals, _:labels, `;` and `,` lists, # comments.
class TurtleParser {
 public:
  explicit TurtleParser(const std::string& text) : text_(text) {}

  Graph parse() {
    Graph graph;
    skipWs();
    while (!atEnd()) {
      if (peek() == '@') {
        parsePrefixDirective(graph);
      } else {
        parseStatement(graph);
      }
      skipWs();
    }
    for (const auto& [prefix, ns] : prefixes_) graph.addPrefix(prefix, ns);
    return graph;
  }

 private:
  void parsePrefixDirective(Graph&) {
    expectWord("@prefix");
    skipWs();
    std::string prefix = parsePrefixLabel();
    skipWs();
    Term ns = parseIriRef();
    skipWs();
    expectChar('.');
    prefixes_[prefix] = ns.value;
  }

  void parseStatement(Graph& graph) {
    Term subject = parseSubject();
    while (true) {
      skipWs();
      Term predicate = parsePredicate();
      while (true) {
        skipWs();
        Term object = parseObject();
        graph.insert(Triple{subject, predicate, object});
        skipWs();
        if (peek() == ',') {
          get();
          continue;
        }
        break;
      }
      if (peek() == ';') {
        get();
        skipWs();
        // trailing ';' before '.' is permitted
        if (peek() == '.') break;
        continue;
      }
      break;
    }
    skipWs();
    expectChar('.');
  }

  Term parseSubject() {
    Term t = parseTerm();
    if (t.isLiteral()) fail("literal is not a valid subject");
    return t;
  }

  Term parsePredicate() {
    if (peek() == 'a' && isTermBoundary(peekAt(1))) {
      get();
      return Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    }
    Term t = parseTerm();
    if (!t.isIri()) fail("predicate must be an IRI");
    return t;
  }

  Term parseObject() { return parseTerm(); }

  Term parseTerm() {
    char c = peek();
    if (c == '<') return parseIriRef();
    if (c == '"') return parseLiteral();
    if (c == '_') return parseBlankNode();
    if (c == '\0') fail("unexpected end of input");
    return parsePrefixedName();
  }

  Term parseIriRef() {
    int line = line_, col = col_;
    expectChar('<');
    std::string iri;
    while (!atEnd() && peek() != '>') {
      char c = get();
      if (c == '\n') throw ParseError(line, col, "unterminated IRI");
      iri += c;
    }
    expectChar('>');
    if (!isAbsoluteIri(iri)) throw ParseError(line, col, "relative IRI not allowed: <" + iri + ">");
    return Term::iri(iri);
  }

  Term parseBlankNode() {
    expectChar('_');
    expectChar(':');
    std::string label = parseLocalName();
    if (label.empty()) fail("empty blank node label");
    return Term::blank(label);
  }

  Term parseLiteral() {
    expectChar('"');
    std::string value;
    while (true) {
      if (atEnd()) fail("unterminated string literal");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (atEnd()) fail("unterminated escape sequence");
        char e = get();
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default: fail(std::string("unsupported escape: \\") + e);
        }
      } else {
        value += c;
      }
    }
    if (peek() == '^') {
      get();
      expectChar('^');
      Term dt = (peek() == '<') ? parseIriRef() : parsePrefixedName();
      if (!dt.isIri()) fail("datatype must be an IRI");
      return Term::literal(value, dt.value);
    }
    if (peek() == '@') {
      get();
      std::string lang;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
        lang += get();
      if (lang.empty()) fail("empty language tag");
      return Term::langLiteral(value, lang);
    }
    return Term::literal(value);
  }

  Term parsePrefixedName() {
    int line = line_, col = col_;
    std::string prefix = parsePrefixPart();
    expectChar(':');
    std::string local = parseLocalName();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      throw ParseError(line, col, "unknown prefix: " + prefix + ":");
    return Term::iri(it->second + local);
  }

  std::string parsePrefixLabel() {
    std::string prefix = parsePrefixPart();
    expectChar(':');
    return prefix;
  }

  std::string parsePrefixPart() {
    std::string s;
    while (!atEnd()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') {
        s += get();
      } else {
        break;
      }
    }
    return s;
  }

  std::string parseLocalName() {
    std::string s;
    while (!atEnd()) {
      char c = peek();
      bool nameChar = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
      // dots are allowed inside local names but a trailing dot ends the statement
      if (c == '.' && std::isalnum(static_cast<unsigned char>(peekAt(1)))) nameChar = true;
      if (!nameChar) break;
      s += get();
    }
    return s;
  }

  void expectWord(const std::string& word) {
    for (char expected : word) {
      if (atEnd() || peek() != expected) fail("expected '" + word + "'");
      get();
    }
  }

  void expectChar(char expected) {
    if (atEnd() || peek() != expected)
      fail(std::string("expected '") + expected + "', found " + describeCurrent());
    get();
  }

  std::string describeCurrent() {
    if (atEnd()) return "end of input";
    return std::string("'") + peek() + "'";
  }

  static bool isTermBoundary(char c) {
    return c == '\0' || std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' ||
           c == '#' || c == ';' || c == ',' || c == '.';
  }

  void skipWs() {
    while (!atEnd()) {
      char c = peek();
      if (c == '#') {
        while (!atEnd() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }
  char peekAt(std::size_t offset) const {
    return pos_ + offset >= text_.size() ? '\0' : text_[pos_ + offset];
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, std::string> prefixes_;
};

inline std::string shrinkIri(const std::string& iri,
                             const std::map<std::string, std::string>& prefixes) {
  for (const auto& [prefix, ns] : prefixes) {
    if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    std::string local = iri.substr(ns.size());
    bool simple = !local.empty();
    for (char c : local)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') simple = false;
    if (simple) return prefix + ":" + local;
  }
  return "<" + iri + ">";
}

inline std::string formatTerm(const Term& t, const std::map<std::string, std::string>& prefixes) {
  switch (t.kind) {
    case TermKind::Iri:
      return shrinkIri(t.value, prefixes);
    case TermKind::BlankNode:
      return "_:" + t.value;
    case TermKind::Literal: {
      std::string escaped;
      for (char c : t.value) {
        switch (c) {
          case '"': escaped += "\\\""; break;
          case '\\': escaped += "\\\\"; break;
          case '\n': escaped += "\\n"; break;
          case '\t': escaped += "\\t"; break;
          case '\r': escaped += "\\r"; break;
          default: escaped += c;
        }
      }
      std::string out = "\"" + escaped + "\"";
      if (!t.language.empty()) return out + "@" + t.language;
      if (t.datatype != kXsdString) return out + "^^" + shrinkIri(t.datatype, prefixes);
      return out;
    }
  }
  return "";
}

}  // namespace detail

inline Graph parseTurtle(const std::string& text) { return detail::TurtleParser(text).parse(); }

// Deterministic serialization: prefixes sorted, triples sorted by
// (subject, predicate, object), grouped with ';' and ','.
inline std::string serializeTurtle(const Graph& graph) {
  std::ostringstream out;
  const auto& prefixes = graph.prefixes();
  for (const auto& [prefix, ns] : prefixes) out << "@prefix " << prefix << ": <" << ns << "> .\n";
  if (!prefixes.empty() && !graph.empty()) out << "\n";

  std::vector<Triple> sorted(graph.triples().begin(), graph.triples().end());
  std::sort(sorted.begin(), sorted.end());

  for (std::size_t i = 0; i < sorted.size();) {
    const Term& subject = sorted[i].subject;
    out << detail::formatTerm(subject, prefixes);
    bool firstPredicate = true;
    while (i < sorted.size() && sorted[i].subject == subject) {
      const Term& predicate = sorted[i].predicate;
      out << (firstPredicate ? " " : " ;\n    ");
      firstPredicate = false;
      if (predicate.value == "http://www.w3.org/1999/02/22-rdf-syntax-ns#type") {
        out << "a";
      } else {
        out << detail::formatTerm(predicate, prefixes);
      }
      bool firstObject = true;
      while (i < sorted.size() && sorted[i].subject == subject &&
             sorted[i].predicate == predicate) {
        out << (firstObject ? " " : ", ");
        firstObject = false;
        out << detail::formatTerm(sorted[i].object, prefixes);
        ++i;
      }
    }
    out << " .\n";
  }
  return out.str();
}

// Graph equality up to blank-node relabeling. Ground triples must match
// exactly; blank nodes are matched by backtracking (graphs here are small).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::vector<Triple> withBlanksA, withBlanksB;
  std::set<Triple> groundB;
  for (const auto& t : b.triples()) {
    if (t.subject.isBlank() || t.object.isBlank())
      withBlanksB.push_back(t);
    else
      groundB.insert(t);
  }
  for (const auto& t : a.triples()) {
    if (t.subject.isBlank() || t.object.isBlank()) {
      withBlanksA.push_back(t);
    } else if (!groundB.count(t)) {
      return false;
    }
  }
  if (withBlanksA.size() != withBlanksB.size()) return false;

  std::map<std::string, std::string> mapping;
  std::set<std::string> used;
  std::vector<bool> taken(withBlanksB.size(), false);

  auto termsCompatible = [&](const Term& ta, const Term& tb,
                             std::vector<std::pair<std::string, std::string>>& bound) {
    if (ta.isBlank() != tb.isBlank()) return false;
    if (!ta.isBlank()) return ta == tb;
    auto it = mapping.find(ta.value);
    if (it != mapping.end()) return it->second == tb.value;
    if (used.count(tb.value)) return false;
    mapping[ta.value] = tb.value;
    used.insert(tb.value);
    bound.push_back({ta.value, tb.value});
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == withBlanksA.size()) return true;
    const Triple& ta = withBlanksA[i];
    for (std::size_t j = 0; j < withBlanksB.size(); ++j) {
      if (taken[j]) continue;
      const Triple& tb = withBlanksB[j];
      if (ta.predicate != tb.predicate) continue;
      std::vector<std::pair<std::string, std::string>> bound;
      if (termsCompatible(ta.subject, tb.subject, bound) &&
          termsCompatible(ta.object, tb.object, bound)) {
        taken[j] = true;
        if (search(i + 1)) return true;
        taken[j] = false;
      }
      for (const auto& [ka, kb] : bound) {
        mapping.erase(ka);
        used.erase(kb);
      }
    }
    return false;
  };
  return search(0);
}

}  // namespace rss
