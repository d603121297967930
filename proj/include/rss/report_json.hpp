#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rss/cq.hpp"
#include "rss/series_view.hpp"
#include "rss/temporal.hpp"
#include "rss/term.hpp"
#include "rss/validator.hpp"

namespace rss::json_io {

using nlohmann::ordered_json;

inline std::string termString(const Term& t) {
  switch (t.kind) {
    case TermKind::Iri: return t.value;
    case TermKind::BlankNode: return "_:" + t.value;
    case TermKind::Literal:
      if (!t.language.empty()) return "\"" + t.value + "\"@" + t.language;
      return "\"" + t.value + "\"^^" + t.datatype;
  }
  return t.value;
}

inline ordered_json findingJson(const Finding& f) {
  ordered_json j;
  j["code"] = f.code;
  j["severity"] = severityName(f.severity);
  j["focus"] = termString(f.focus);
  ordered_json others = ordered_json::array();
  for (const Term& t : f.others) others.push_back(termString(t));
  j["others"] = others;
  j["message"] = f.message;
  return j;
}

inline ordered_json reportJson(const ValidationReport& report) {
  ordered_json j;
  j["conforms"] = report.conforms;
  ordered_json findings = ordered_json::array();
  for (const Finding& f : report.findings) findings.push_back(findingJson(f));
  j["findings"] = findings;
  return j;
}

inline ordered_json periodJson(const TimePeriod& p) {
  return {{"value", p.value}, {"unit", temporal::unitName(p.unit)}};
}

inline ordered_json assessmentJson(const PeriodAssessment& a) {
  ordered_json j;
  j["measuredDays"] = a.measuredDays;
  j["measured"] = periodJson(a.measured);
  if (a.band) {
    j["band"] = {{"lowDays", a.band->lowDays}, {"highDays", a.band->highDays}};
    j["withinBand"] = a.withinBand;
  }
  return j;
}

inline ordered_json answerEnvelope(int cq, const Term& series, ordered_json answer) {
  ordered_json j;
  j["cq"] = cq;
  j["series"] = termString(series);
  j["answer"] = std::move(answer);
  return j;
}

inline ordered_json validityJson(const FactorValidity& validity) {
  if (validity.unbounded) return "unbounded";
  ordered_json arr = ordered_json::array();
  for (const UnifyingSituationInfo& info : validity.intervals) {
    ordered_json item;
    if (info.interval) item["interval"] = termString(*info.interval);
    if (info.validFrom) item["from"] = temporal::formatDate(*info.validFrom);
    if (info.validTo) item["to"] = temporal::formatDate(*info.validTo);
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace rss::json_io
