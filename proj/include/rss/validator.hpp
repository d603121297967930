#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rss/graph.hpp"
#include "rss/reasoner.hpp"
#include "rss/series_view.hpp"
#include "rss/term.hpp"
#include "rss/vocab.hpp"

namespace rss {

enum class Severity { Violation, Warning };

struct Finding {
  std::string code;
  Severity severity = Severity::Violation;
  Term focus;
  std::vector<Term> others;
  std::string message;

  auto key() const { return std::tie(code, focus, others); }
  bool operator==(const Finding& other) const {
    return key() == other.key() && severity == other.severity;
  }
  bool operator<(const Finding& other) const { return key() < other.key(); }
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool conforms = true;

  bool hasCode(const std::string& code) const {
    return std::any_of(findings.begin(), findings.end(),
                       [&](const Finding& f) { return f.code == code; });
  }
  std::size_t countCode(const std::string& code) const {
    return std::count_if(findings.begin(), findings.end(),
                         [&](const Finding& f) { return f.code == code; });
  }
};

struct ValidatorOptions {
  bool materializeFirst = true;
  bool strictlyIncreasingNumbers = false;  // relax the exact +1 step rule
  AnchorConfig anchors;
};

struct LocalConsistencyResult {
  std::set<std::pair<Term, Term>> pairs;
  Graph constructed;  // the rss:isLocallyInconsistentWith triples
};

// Native evaluation of the cross-series integrity rule: a next/previous
// link between members of two distinct, non-identical series is locally
// inconsistent. Expects a materialized graph (sameAs closure, inverses).
inline LocalConsistencyResult checkLocalConsistency(const Graph& graph) {
  namespace v = vocab;
  LocalConsistencyResult result;
  SameAsClasses sameAs(graph);
  for (const Term& linkProperty : {v::hasNextSituation, v::hasPreviousSituation}) {
    for (const Triple& link : graph.match(std::nullopt, linkProperty, std::nullopt)) {
      const Term& sit1 = link.subject;
      const Term& sit2 = link.object;
      if (sit1 == sit2) continue;
      for (const Term& rss1 : graph.subjects(v::hasMemberSituation, sit1)) {
        for (const Term& rss2 : graph.subjects(v::hasMemberSituation, sit2)) {
          if (rss1 == rss2) continue;
          if (sameAs.same(rss1, rss2)) continue;
          if (result.pairs.insert({rss1, rss2}).second)
            result.constructed.insert(Triple{rss1, v::isLocallyInconsistentWith, rss2});
        }
      }
    }
  }
  return result;
}

// Sequence integrity for one series: numbering steps, last-flag sanity,
// cycles, and branching immediate links.
inline std::vector<Finding> checkSequence(const SeriesView& view, const Graph& graph,
                                          const ValidatorOptions& options = {}) {
  namespace v = vocab;
  std::vector<Finding> findings;
  const std::set<Term> memberSet(view.members.begin(), view.members.end());

  for (const Term& m : view.members) {
    std::set<Term> successors;
    for (const Term& o : graph.objects(m, v::hasImmediateNextSituation))
      if (memberSet.count(o)) successors.insert(o);
    if (successors.size() > 1) {
      findings.push_back({"RSS-IMMEDIATE-BRANCH", Severity::Violation, m,
                          {successors.begin(), successors.end()},
                          "situation has more than one immediate next situation in the series"});
    }
    for (const Term& nextMember : successors) {
      auto cur = view.situationNumbers.find(m);
      auto nxt = view.situationNumbers.find(nextMember);
      if (cur == view.situationNumbers.end() || nxt == view.situationNumbers.end()) continue;
      bool ok = options.strictlyIncreasingNumbers ? nxt->second > cur->second
                                                  : nxt->second == cur->second + 1;
      if (!ok) {
        findings.push_back({"RSS-SEQ-ORDER", Severity::Violation, m,
                            {nextMember},
                            "situationNumber does not advance by 1 along the immediate link (" +
                                std::to_string(cur->second) + " -> " +
                                std::to_string(nxt->second) + ")"});
      }
    }
  }

  // last flag: no outgoing next-link within the series, at most one flagged
  std::vector<Term> flagged;
  for (const Term& m : view.members) {
    for (const Term& o : graph.objects(m, v::isTheLastSituation))
      if (o.isLiteral() && (o.value == "true" || o.value == "1")) flagged.push_back(m);
  }
  for (const Term& m : flagged) {
    for (const Term& o : graph.objects(m, v::hasNextSituation)) {
      if (memberSet.count(o)) {
        findings.push_back({"RSS-SEQ-LAST", Severity::Violation, m,
                            {o},
                            "situation flagged as last but has a next situation in the series"});
      }
    }
  }
  if (flagged.size() > 1) {
    findings.push_back({"RSS-SEQ-LAST", Severity::Violation, view.series,
                        flagged,
                        "more than one situation flagged as the last of the series"});
  }

  // cycle detection over hasNextSituation restricted to members
  std::set<Term> done;
  for (const Term& start : view.members) {
    if (done.count(start)) continue;
    std::vector<std::pair<Term, std::size_t>> stack{{start, 0}};
    std::set<Term> onPath{start};
    std::vector<std::vector<Term>> successors;
    auto membersNext = [&](const Term& m) {
      std::vector<Term> out;
      for (const Term& o : graph.objects(m, v::hasNextSituation))
        if (memberSet.count(o)) out.push_back(o);
      return out;
    };
    successors.push_back(membersNext(start));
    bool cycle = false;
    while (!stack.empty() && !cycle) {
      auto& [node, idx] = stack.back();
      if (idx < successors.back().size()) {
        Term succ = successors.back()[idx++];
        if (onPath.count(succ)) {
          findings.push_back({"RSS-SEQ-CYCLE", Severity::Violation, view.series,
                              {succ},
                              "hasNextSituation cycle among the members of the series"});
          cycle = true;
        } else if (!done.count(succ)) {
          stack.push_back({succ, 0});
          onPath.insert(succ);
          successors.push_back(membersNext(succ));
        }
      } else {
        done.insert(node);
        onPath.erase(node);
        stack.pop_back();
        successors.pop_back();
      }
    }
    if (cycle) break;  // one cycle finding per series is enough
  }
  return findings;
}

// Closed-world validation of the pattern's axioms plus sequence and
// cross-series integrity, over asserted plus derived triples.
inline ValidationReport validate(const Graph& input, const ValidatorOptions& options = {}) {
  namespace v = vocab;
  const Graph graph = options.materializeFirst ? withInferences(input) : input;
  std::set<Finding> findings;

  for (const Term& series : allSeries(graph)) {
    SeriesView view = buildSeriesView(graph, series, options.anchors);

    for (const Term& m : view.members) {
      if (!graph.contains(Triple{m, v::type, v::Situation})) {
        findings.insert({"RSS-MEMBER-TYPE", Severity::Violation, series,
                         {m},
                         "member situation is not typed rss:Situation"});
      }
    }

    if (view.descriptions.empty()) {
      findings.insert({"RSS-NO-DESCRIPTION", Severity::Violation, series,
                       {},
                       "series has no unifying factor typed dul:Description"});
    }

    if (graph.objects(series, v::hasTimePeriod).empty()) {
      findings.insert({"RSS-NO-PERIOD", Severity::Violation, series,
                       {},
                       "series has no time period (direct or via member periods)"});
    }

    if (!view.descriptions.empty()) {
      for (const Term& m : view.members) {
        bool satisfiesAny = false;
        for (const Term& d : view.descriptions)
          if (graph.contains(Triple{m, v::satisfies, d})) satisfiesAny = true;
        if (!satisfiesAny) {
          findings.insert({"RSS-DESC-UNSATISFIED", Severity::Warning, series,
                           {m},
                           "member does not dul:satisfies the series' unifying description"});
        }
      }
    }

    for (Finding& f : checkSequence(view, graph, options)) findings.insert(std::move(f));
  }

  for (const Term& us : graph.subjects(v::type, v::UnifyingSituation)) {
    if (graph.objects(us, v::involvesUnifyingFactor).empty()) {
      findings.insert({"RSS-USIT-NO-FACTOR", Severity::Violation, us,
                       {},
                       "unifying situation involves no unifying factor"});
    }
    bool hasInterval = false;
    for (const Term& interval : graph.objects(us, v::isValidIn))
      if (graph.contains(Triple{interval, v::type, v::TimeInterval})) hasInterval = true;
    if (!hasInterval) {
      findings.insert({"RSS-USIT-NO-INTERVAL", Severity::Violation, us,
                       {},
                       "unifying situation is not valid in any dul:TimeInterval"});
    }
  }

  for (const auto& [rss1, rss2] : checkLocalConsistency(graph).pairs) {
    findings.insert({"RSS-CROSS-SERIES", Severity::Violation, rss1,
                     {rss2},
                     "next/previous link crosses into a distinct series"});
  }

  ValidationReport report;
  report.findings.assign(findings.begin(), findings.end());
  report.conforms = std::none_of(report.findings.begin(), report.findings.end(),
                                 [](const Finding& f) { return f.severity == Severity::Violation; });
  return report;
}

inline std::string severityName(Severity s) {
  return s == Severity::Violation ? "violation" : "warning";
}

}  // namespace rss
