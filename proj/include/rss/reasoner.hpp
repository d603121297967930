#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rss/graph.hpp"
#include "rss/term.hpp"
#include "rss/vocab.hpp"

namespace rss {

// A pattern position is either a ground term or a named variable.
struct PatternTerm {
  std::optional<Term> ground;
  std::string variable;

  static PatternTerm var(std::string name) { return PatternTerm{std::nullopt, std::move(name)}; }
  static PatternTerm of(Term t) { return PatternTerm{std::move(t), ""}; }
  bool isVariable() const { return !ground.has_value(); }
};

struct TriplePattern {
  PatternTerm subject, predicate, object;
};

struct Rule {
  std::string id;
  std::vector<TriplePattern> body;
  std::vector<TriplePattern> head;
};

struct InferenceDelta {
  std::set<Triple> added;
  int iterations = 0;
};

namespace detail {

using Bindings = std::map<std::string, Term>;

inline bool bindPosition(const PatternTerm& pattern, const Term& term, Bindings& bindings) {
  if (!pattern.isVariable()) return *pattern.ground == term;
  auto it = bindings.find(pattern.variable);
  if (it != bindings.end()) return it->second == term;
  bindings[pattern.variable] = term;
  return true;
}

inline std::optional<Term> resolvePosition(const PatternTerm& pattern, const Bindings& bindings) {
  if (!pattern.isVariable()) return pattern.ground;
  auto it = bindings.find(pattern.variable);
  if (it == bindings.end()) return std::nullopt;
  return it->second;
}

template <typename Emit>
void matchBody(const Graph& graph, const std::vector<TriplePattern>& body, std::size_t index,
               Bindings& bindings, Emit emit) {
  if (index == body.size()) {
    emit(bindings);
    return;
  }
  const TriplePattern& atom = body[index];
  auto candidates = graph.match(resolvePosition(atom.subject, bindings),
                                resolvePosition(atom.predicate, bindings),
                                resolvePosition(atom.object, bindings));
  for (const Triple& t : candidates) {
    Bindings extended = bindings;
    if (bindPosition(atom.subject, t.subject, extended) &&
        bindPosition(atom.predicate, t.predicate, extended) &&
        bindPosition(atom.object, t.object, extended)) {
      matchBody(graph, body, index + 1, extended, emit);
    }
  }
}

}  // namespace detail

// The pattern's entailment rules: class hierarchy, inverse properties,
// subproperties, the member/period property chain, and owl:sameAs
// symmetry and transitivity.
inline const std::vector<Rule>& patternRules() {
  using PT = PatternTerm;
  namespace v = vocab;
  static const std::vector<Rule> rules = [] {
    auto typeOf = [](PT subject, const Term& cls) {
      return TriplePattern{std::move(subject), PT::of(v::type), PT::of(cls)};
    };
    auto link = [](PT s, const Term& p, PT o) {
      return TriplePattern{std::move(s), PT::of(p), std::move(o)};
    };
    PT x = PT::var("x"), y = PT::var("y"), z = PT::var("z");
    std::vector<Rule> r;
    r.push_back({"R1", {typeOf(x, v::RecurrentSituationSeries)},
                 {typeOf(x, v::Collection), typeOf(x, v::Situation)}});
    r.push_back({"R2", {typeOf(x, v::Situation)}, {typeOf(x, v::Eventuality)}});
    r.push_back({"R3", {link(x, v::hasMemberSituation, y)}, {link(y, v::isSituationMemberOf, x)}});
    r.push_back({"R3i", {link(x, v::isSituationMemberOf, y)}, {link(y, v::hasMemberSituation, x)}});
    r.push_back({"R4", {link(x, v::hasNextSituation, y)}, {link(y, v::hasPreviousSituation, x)}});
    r.push_back({"R4i", {link(x, v::hasPreviousSituation, y)}, {link(y, v::hasNextSituation, x)}});
    r.push_back({"R5", {link(x, v::hasImmediateNextSituation, y)},
                 {link(x, v::hasNextSituation, y)}});
    r.push_back({"R5i", {link(x, v::hasImmediatePreviousSituation, y)},
                 {link(x, v::hasPreviousSituation, y)}});
    r.push_back({"R5inv", {link(x, v::hasImmediateNextSituation, y)},
                 {link(y, v::hasImmediatePreviousSituation, x)}});
    r.push_back({"R5invi", {link(x, v::hasImmediatePreviousSituation, y)},
                 {link(y, v::hasImmediateNextSituation, x)}});
    r.push_back({"R6", {link(x, v::hasEstimatedTimePeriod, y)}, {link(x, v::hasTimePeriod, y)}});
    r.push_back({"R6i", {link(x, v::hasMeasuredTimePeriod, y)}, {link(x, v::hasTimePeriod, y)}});
    r.push_back({"R7",
                 {link(x, v::hasMemberSituation, y), link(y, v::hasTimePeriodBeforeNextSituation, z)},
                 {link(x, v::hasTimePeriod, z)}});
    r.push_back({"R8", {typeOf(x, v::UnifyingFactor)}, {typeOf(x, v::Concept)}});
    r.push_back({"R9", {link(x, v::sameAs, y)}, {link(y, v::sameAs, x)}});
    r.push_back({"R9t", {link(x, v::sameAs, y), link(y, v::sameAs, z)}, {link(x, v::sameAs, z)}});
    return r;
  }();
  return rules;
}

// Forward chaining to the least fixpoint. Rules only add triples, so the
// loop terminates once a full pass adds nothing new.
inline InferenceDelta materialize(const Graph& graph) {
  Graph working = graph;
  InferenceDelta delta;
  bool changed = true;
  while (changed) {
    changed = false;
    ++delta.iterations;
    for (const Rule& rule : patternRules()) {
      detail::Bindings empty;
      std::vector<Triple> pending;
      detail::matchBody(working, rule.body, 0, empty, [&](const detail::Bindings& bindings) {
        for (const TriplePattern& head : rule.head) {
          Term s = *detail::resolvePosition(head.subject, bindings);
          Term p = *detail::resolvePosition(head.predicate, bindings);
          Term o = *detail::resolvePosition(head.object, bindings);
          if (s == o && p == vocab::sameAs) continue;  // skip reflexive sameAs
          Triple t{std::move(s), std::move(p), std::move(o)};
          if (!working.contains(t)) pending.push_back(std::move(t));
        }
      });
      for (const Triple& t : pending) {
        if (working.insert(t)) {
          delta.added.insert(t);
          changed = true;
        }
      }
    }
  }
  return delta;
}

inline Graph withInferences(const Graph& graph) {
  Graph out = graph;
  for (const Triple& t : materialize(graph).added) out.insert(t);
  return out;
}

// Equivalence classes under the reflexive-symmetric-transitive closure of
// owl:sameAs, via union-find. Terms not mentioned in any sameAs triple are
// singletons (represented implicitly: find() returns the term itself).
class SameAsClasses {
 public:
  explicit SameAsClasses(const Graph& graph) {
    for (const Triple& t : graph.match(std::nullopt, vocab::sameAs, std::nullopt)) {
      unite(t.subject, t.object);
    }
  }

  Term find(const Term& t) const {
    auto it = parent_.find(t);
    if (it == parent_.end()) return t;
    Term root = t;
    while (true) {
      auto next = parent_.find(root);
      if (next == parent_.end() || next->second == root) break;
      root = next->second;
    }
    return root;
  }

  bool same(const Term& a, const Term& b) const { return a == b || find(a) == find(b); }

  std::vector<std::set<Term>> classes() const {
    std::map<Term, std::set<Term>> grouped;
    for (const auto& [term, _] : parent_) grouped[find(term)].insert(term);
    std::vector<std::set<Term>> out;
    for (auto& [_, members] : grouped) out.push_back(std::move(members));
    return out;
  }

 private:
  void unite(const Term& a, const Term& b) {
    Term ra = findMutable(a), rb = findMutable(b);
    if (!(ra == rb)) parent_[ra] = rb;
  }

  Term findMutable(const Term& t) {
    if (!parent_.count(t)) parent_[t] = t;
    Term root = t;
    while (!(parent_[root] == root)) root = parent_[root];
    // path compression
    Term cur = t;
    while (!(parent_[cur] == root)) {
      Term next = parent_[cur];
      parent_[cur] = root;
      cur = next;
    }
    return root;
  }

  std::map<Term, Term> parent_;
};

}  // namespace rss
