#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rss/graph.hpp"
#include "rss/series_view.hpp"
#include "rss/temporal.hpp"
#include "rss/term.hpp"
#include "rss/vocab.hpp"

namespace rss {

class UnknownFactor : public std::runtime_error {
 public:
  explicit UnknownFactor(const Term& t)
      : std::runtime_error("not a unifying factor of the series: " + t.value) {}
};

// CQ1: which are the situations of the series?
inline std::vector<Term> cq1Members(const SeriesView& view) { return view.members; }

struct PeriodAnswer {
  std::optional<TimePeriod> estimated;
  std::optional<PeriodAssessment> measured;
};

// CQ2: the time period elapsing between two situations — the estimate as
// modelled, and the measured mean when enough members carry dates.
inline PeriodAnswer cq2TimePeriod(const SeriesView& view) {
  PeriodAnswer answer;
  answer.estimated = view.estimated;
  if (view.anchors.size() >= 2) {
    std::vector<Instant> anchors;
    for (const auto& [_, instant] : view.anchors) anchors.push_back(instant);
    answer.measured = temporal::assessPeriod(std::move(anchors), view.estimated);
  }
  return answer;
}

// CQ3: when is the next situation scheduled?
inline Instant cq3NextScheduled(const SeriesView& view, const Instant& today) {
  if (view.anchors.empty()) throw NoAnchor();
  if (!view.estimated) throw NoEstimatedPeriod();
  std::optional<Instant> last;
  if (view.lastFlagged) {
    auto it = view.anchors.find(*view.lastFlagged);
    if (it != view.anchors.end()) last = it->second;
  }
  if (!last) {
    for (const auto& [_, instant] : view.anchors)
      if (!last || *last < instant) last = instant;
  }
  return temporal::nextScheduled(*last, *view.estimated, today);
}

// CQ4: the unifying criteria — direct factors plus those reached through
// unifying situations.
inline std::set<Term> cq4UnifyingFactors(const SeriesView& view) { return view.unifyingFactors; }

struct FactorValidity {
  bool unbounded = false;
  std::vector<UnifyingSituationInfo> intervals;
};

// CQ5: temporal validity of a unifying factor. A factor attached only
// directly, with no unifying situation scoping it, is valid unbounded.
inline FactorValidity cq5FactorValidity(const SeriesView& view, const Term& factor) {
  if (!view.unifyingFactors.count(factor)) throw UnknownFactor(factor);
  FactorValidity out;
  for (const UnifyingSituationInfo& info : view.unifyingSituations)
    if (info.factor == factor) out.intervals.push_back(info);
  out.unbounded = out.intervals.empty();
  return out;
}

// CQ6: the description satisfied by all the situations of the series.
inline std::set<Term> cq6UnifyingDescription(const SeriesView& view) { return view.descriptions; }

// CQ7: the (immediate) next situation(s), over asserted plus derived links.
inline std::set<Term> cq7Next(const Graph& graph, const Term& situation, bool immediateOnly) {
  const Term& property = immediateOnly ? vocab::hasImmediateNextSituation : vocab::hasNextSituation;
  std::vector<Term> objects = graph.objects(situation, property);
  return {objects.begin(), objects.end()};
}

// CQ8: the (immediate) previous situation(s); mirror of CQ7 via inverses.
inline std::set<Term> cq8Previous(const Graph& graph, const Term& situation, bool immediateOnly) {
  const Term& property =
      immediateOnly ? vocab::hasImmediatePreviousSituation : vocab::hasPreviousSituation;
  std::vector<Term> objects = graph.objects(situation, property);
  return {objects.begin(), objects.end()};
}

}  // namespace rss
