#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rss/term.hpp"

namespace rss {

// Indexed triple store with set semantics. Intended usage: populate once
// (parser, merge, materialization), then query from anywhere; all reads
// are const and safe to share.
class Graph {
 public:
  using TripleSet = std::set<Triple>;

  bool insert(const Triple& t) {
    auto [it, added] = triples_.insert(t);
    if (!added) return false;
    bySubject_[t.subject].push_back(t);
    byPredicate_[t.predicate].push_back(t);
    byObject_[t.object].push_back(t);
    bySubjectPredicate_[{t.subject, t.predicate}].push_back(t);
    byPredicateObject_[{t.predicate, t.object}].push_back(t);
    return true;
  }

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const TripleSet& triples() const { return triples_; }

  void addPrefix(const std::string& prefix, const std::string& ns) { prefixes_[prefix] = ns; }
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  // Pattern match; absent positions are wildcards. Picks the narrowest
  // available index for the bound positions.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const {
    std::vector<Triple> out;
    auto keep = [&](const Triple& t) {
      return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
    };
    if (s && p) {
      scan(bySubjectPredicate_, std::pair{*s, *p}, keep, out);
    } else if (p && o) {
      scan(byPredicateObject_, std::pair{*p, *o}, keep, out);
    } else if (s) {
      scan(bySubject_, *s, keep, out);
    } else if (o) {
      scan(byObject_, *o, keep, out);
    } else if (p) {
      scan(byPredicate_, *p, keep, out);
    } else {
      out.assign(triples_.begin(), triples_.end());
    }
    return out;
  }

  std::vector<Term> objects(const Term& s, const Term& p) const {
    std::vector<Term> out;
    for (const auto& t : match(s, p, std::nullopt)) out.push_back(t.object);
    return out;
  }

  std::vector<Term> subjects(const Term& p, const Term& o) const {
    std::vector<Term> out;
    for (const auto& t : match(std::nullopt, p, o)) out.push_back(t.subject);
    return out;
  }

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  template <typename Map, typename Key, typename Keep>
  static void scan(const Map& index, const Key& key, Keep keep, std::vector<Triple>& out) {
    auto it = index.find(key);
    if (it == index.end()) return;
    for (const auto& t : it->second)
      if (keep(t)) out.push_back(t);
  }

  TripleSet triples_;
  std::map<std::string, std::string> prefixes_;
  std::map<Term, std::vector<Triple>> bySubject_;
  std::map<Term, std::vector<Triple>> byPredicate_;
  std::map<Term, std::vector<Triple>> byObject_;
  std::map<std::pair<Term, Term>, std::vector<Triple>> bySubjectPredicate_;
  std::map<std::pair<Term, Term>, std::vector<Triple>> byPredicateObject_;
};

// Union with set semantics. Blank nodes of `b` that would collide with
// labels already present in `a` are relabeled to fresh labels.
inline Graph mergeGraphs(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& [prefix, ns] : b.prefixes())
    if (!out.prefixes().count(prefix)) out.addPrefix(prefix, ns);

  std::set<std::string> taken;
  for (const auto& t : a.triples())
    for (const Term* term : {&t.subject, &t.object})
      if (term->isBlank()) taken.insert(term->value);

  std::map<std::string, std::string> rename;
  auto relabel = [&](const Term& term) -> Term {
    if (!term.isBlank() || !taken.count(term.value)) return term;
    auto it = rename.find(term.value);
    if (it == rename.end()) {
      int n = 0;
      std::string fresh;
      do {
        fresh = term.value + "_m" + std::to_string(n++);
      } while (taken.count(fresh));
      it = rename.emplace(term.value, fresh).first;
    }
    return Term::blank(it->second);
  };

  // When a and b are the same document (e.g. merge(G, G)), relabeling
  // would break idempotence; identical triple sets merge as-is.
  const bool sameDocument = a == b;
  for (const auto& t : b.triples()) {
    if (sameDocument) {
      out.insert(t);
    } else {
      out.insert(Triple{relabel(t.subject), t.predicate, relabel(t.object)});
    }
  }
  return out;
}

}  // namespace rss
