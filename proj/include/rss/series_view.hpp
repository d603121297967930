#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rss/graph.hpp"
#include "rss/temporal.hpp"
#include "rss/term.hpp"
#include "rss/vocab.hpp"

namespace rss {

class NotASeries : public std::runtime_error {
 public:
  explicit NotASeries(const Term& t)
      : std::runtime_error("not a recurrent situation series: " + t.value) {}
};

// Where member situations carry their dates. The default is a direct
// rss:hasStartDate xsd:date literal; the fallback follows a link to a
// dul:TimeInterval carrying start/end date literals.
struct AnchorConfig {
  Term datePredicate = vocab::hasStartDate;
  Term intervalStartPredicate = vocab::hasIntervalStartDate;
  Term intervalEndPredicate = vocab::hasIntervalEndDate;
};

struct UnifyingSituationInfo {
  Term situation;
  Term factor;
  std::optional<Term> interval;
  std::optional<Instant> validFrom;
  std::optional<Instant> validTo;
};

struct SeriesView {
  Term series;
  std::vector<Term> members;  // ordered; see buildSeriesView
  std::set<Term> unifyingFactors;
  std::vector<UnifyingSituationInfo> unifyingSituations;
  std::set<Term> descriptions;  // factors typed dul:Description
  std::optional<TimePeriod> estimated;
  std::vector<std::pair<Term, Term>> perMemberPeriods;  // (member, period individual)
  std::map<Term, Instant> anchors;
  std::optional<Term> lastFlagged;
  std::map<Term, long> situationNumbers;
};

namespace detail {

inline std::optional<long> literalInteger(const Term& t) {
  if (!t.isLiteral()) return std::nullopt;
  try {
    std::size_t used = 0;
    long v = std::stol(t.value, &used);
    if (used != t.value.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::optional<TimePeriod> readTimePeriod(const Graph& graph, const Term& periodTerm) {
  namespace v = vocab;
  std::optional<long> value;
  for (const Term& o : graph.objects(periodTerm, v::timePeriodValue))
    if (auto n = literalInteger(o)) value = *n;
  std::optional<PeriodUnit> unit;
  for (const Term& o : graph.objects(periodTerm, v::hasTimePeriodMeasurementUnit)) {
    if (o == v::UnitDay) unit = PeriodUnit::Day;
    else if (o == v::UnitWeek) unit = PeriodUnit::Week;
    else if (o == v::UnitMonth) unit = PeriodUnit::Month;
    else if (o == v::UnitYear) unit = PeriodUnit::Year;
  }
  if (!value || !unit) return std::nullopt;
  return TimePeriod{*value, *unit};
}

inline std::optional<Instant> readAnchor(const Graph& graph, const Term& member,
                                         const AnchorConfig& config) {
  for (const Term& o : graph.objects(member, config.datePredicate)) {
    if (o.isLiteral()) {
      try {
        return temporal::parseDate(o.value);
      } catch (const InvalidDate&) {
      }
    }
    if (o.isIri() || o.isBlank()) {
      for (const Term& start : graph.objects(o, config.intervalStartPredicate))
        if (start.isLiteral()) {
          try {
            return temporal::parseDate(start.value);
          } catch (const InvalidDate&) {
          }
        }
    }
  }
  return std::nullopt;
}

// Member order: walk the hasImmediateNextSituation chain when it covers
// the member set linearly; otherwise sort by situationNumber, then by
// temporal anchor, then by IRI.
inline std::vector<Term> orderMembers(const Graph& graph, const std::set<Term>& memberSet,
                                      const std::map<Term, long>& numbers,
                                      const std::map<Term, Instant>& anchors) {
  namespace v = vocab;
  std::map<Term, Term> next;
  std::set<Term> hasIncoming;
  bool linear = true;
  for (const Term& m : memberSet) {
    std::set<Term> successors;
    for (const Term& o : graph.objects(m, v::hasImmediateNextSituation))
      if (memberSet.count(o)) successors.insert(o);
    if (successors.size() > 1) linear = false;
    if (successors.size() == 1) {
      next.emplace(m, *successors.begin());
      if (!hasIncoming.insert(*successors.begin()).second) linear = false;
    }
  }
  if (linear && !next.empty()) {
    std::vector<Term> starts;
    for (const Term& m : memberSet)
      if (!hasIncoming.count(m)) starts.push_back(m);
    if (starts.size() == 1) {
      std::vector<Term> chain;
      std::set<Term> seen;
      Term cur = starts.front();
      while (seen.insert(cur).second) {
        chain.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) break;
        cur = it->second;
      }
      if (chain.size() == memberSet.size()) return chain;
    }
  }
  std::vector<Term> out(memberSet.begin(), memberSet.end());
  std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    auto na = numbers.find(a), nb = numbers.find(b);
    if (na != numbers.end() && nb != numbers.end() && na->second != nb->second)
      return na->second < nb->second;
    if ((na != numbers.end()) != (nb != numbers.end())) return na != numbers.end();
    auto aa = anchors.find(a), ab = anchors.find(b);
    if (aa != anchors.end() && ab != anchors.end() && !(aa->second == ab->second))
      return aa->second < ab->second;
    if ((aa != anchors.end()) != (ab != anchors.end())) return aa != anchors.end();
    return a < b;
  });
  return out;
}

}  // namespace detail

// Structured extraction of one series from a (preferably materialized) graph.
inline SeriesView buildSeriesView(const Graph& graph, const Term& series,
                                  const AnchorConfig& config = {}) {
  namespace v = vocab;
  if (!graph.contains(Triple{series, v::type, v::RecurrentSituationSeries})) throw NotASeries(series);

  SeriesView view;
  view.series = series;

  std::set<Term> memberSet;
  for (const Term& m : graph.objects(series, v::hasMemberSituation)) memberSet.insert(m);

  for (const Term& m : memberSet) {
    for (const Term& o : graph.objects(m, v::situationNumber))
      if (auto n = detail::literalInteger(o)) view.situationNumbers[m] = *n;
    if (auto anchor = detail::readAnchor(graph, m, config)) view.anchors[m] = *anchor;
    for (const Term& o : graph.objects(m, v::isTheLastSituation))
      if (o.isLiteral() && (o.value == "true" || o.value == "1")) view.lastFlagged = m;
    for (const Term& o : graph.objects(m, v::hasTimePeriodBeforeNextSituation))
      view.perMemberPeriods.emplace_back(m, o);
  }
  view.members = detail::orderMembers(graph, memberSet, view.situationNumbers, view.anchors);

  for (const Term& f : graph.objects(series, v::hasUnifyingFactor)) {
    view.unifyingFactors.insert(f);
    if (graph.contains(Triple{f, v::type, v::Description})) view.descriptions.insert(f);
  }

  for (const Term& us : graph.objects(series, v::hasUnifyingSituation)) {
    std::vector<Term> factors = graph.objects(us, v::involvesUnifyingFactor);
    std::vector<Term> intervals = graph.objects(us, v::isValidIn);
    for (const Term& f : factors) {
      UnifyingSituationInfo info;
      info.situation = us;
      info.factor = f;
      view.unifyingFactors.insert(f);
      if (!intervals.empty()) {
        info.interval = intervals.front();
        for (const Term& start : graph.objects(*info.interval, config.intervalStartPredicate))
          if (start.isLiteral()) {
            try {
              info.validFrom = temporal::parseDate(start.value);
            } catch (const InvalidDate&) {
            }
          }
        for (const Term& end : graph.objects(*info.interval, config.intervalEndPredicate))
          if (end.isLiteral()) {
            try {
              info.validTo = temporal::parseDate(end.value);
            } catch (const InvalidDate&) {
            }
          }
      }
      view.unifyingSituations.push_back(std::move(info));
    }
  }

  // Estimated period: explicit hasEstimatedTimePeriod wins over generic
  // hasTimePeriod objects that decode as tp: period individuals.
  for (const Term& p : graph.objects(series, v::hasEstimatedTimePeriod))
    if (auto tp = detail::readTimePeriod(graph, p)) view.estimated = *tp;
  if (!view.estimated) {
    for (const Term& p : graph.objects(series, v::hasTimePeriod))
      if (auto tp = detail::readTimePeriod(graph, p)) view.estimated = *tp;
  }
  return view;
}

inline std::vector<Term> allSeries(const Graph& graph) {
  std::vector<Term> out =
      graph.subjects(vocab::type, vocab::RecurrentSituationSeries);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rss
