#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rss/term.hpp"

namespace rss::vocab {

namespace ns {
inline const std::string rss = "http://www.ontologydesignpatterns.org/cp/owl/recurrentsituationseries.owl#";
inline const std::string dul = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#";
inline const std::string d0 = "http://www.ontologydesignpatterns.org/ont/d0.owl#";
inline const std::string tp = "http://www.ontologydesignpatterns.org/cp/owl/timeperiod.owl#";
inline const std::string rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owl = "http://www.w3.org/2002/07/owl#";
inline const std::string xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

// Classes
inline const Term RecurrentSituationSeries = Term::iri(ns::rss + "RecurrentSituationSeries");
inline const Term Situation = Term::iri(ns::rss + "Situation");
inline const Term UnifyingFactor = Term::iri(ns::rss + "UnifyingFactor");
inline const Term UnifyingSituation = Term::iri(ns::rss + "UnifyingSituation");
inline const Term RssTimePeriod = Term::iri(ns::rss + "TimePeriod");
inline const Term Collection = Term::iri(ns::dul + "Collection");
inline const Term Concept = Term::iri(ns::dul + "Concept");
inline const Term Description = Term::iri(ns::dul + "Description");
inline const Term TimeInterval = Term::iri(ns::dul + "TimeInterval");
inline const Term Eventuality = Term::iri(ns::d0 + "Eventuality");
inline const Term TpTimePeriod = Term::iri(ns::tp + "TimePeriod");
inline const Term TimePeriodMeasurementUnit = Term::iri(ns::tp + "TimePeriodMeasurementUnit");

// Object properties
inline const Term hasMemberSituation = Term::iri(ns::rss + "hasMemberSituation");
inline const Term isSituationMemberOf = Term::iri(ns::rss + "isSituationMemberOf");
inline const Term hasUnifyingFactor = Term::iri(ns::rss + "hasUnifyingFactor");
inline const Term involvesUnifyingFactor = Term::iri(ns::rss + "involvesUnifyingFactor");
inline const Term isValidIn = Term::iri(ns::rss + "isValidIn");
inline const Term hasNextSituation = Term::iri(ns::rss + "hasNextSituation");
inline const Term hasPreviousSituation = Term::iri(ns::rss + "hasPreviousSituation");
inline const Term hasImmediateNextSituation = Term::iri(ns::rss + "hasImmediateNextSituation");
inline const Term hasImmediatePreviousSituation =
    Term::iri(ns::rss + "hasImmediatePreviousSituation");
inline const Term hasTimePeriod = Term::iri(ns::rss + "hasTimePeriod");
inline const Term hasEstimatedTimePeriod = Term::iri(ns::rss + "hasEstimatedTimePeriod");
inline const Term hasMeasuredTimePeriod = Term::iri(ns::rss + "hasMeasuredTimePeriod");
inline const Term hasTimePeriodBeforeNextSituation =
    Term::iri(ns::rss + "hasTimePeriodBeforeNextSituation");
inline const Term isLocallyInconsistentWith = Term::iri(ns::rss + "isLocallyInconsistentWith");
inline const Term hasTimePeriodMeasurementUnit =
    Term::iri(ns::tp + "hasTimePeriodMeasurementUnit");
inline const Term defines = Term::iri(ns::dul + "defines");
inline const Term isSatisfiedBy = Term::iri(ns::dul + "isSatisfiedBy");
inline const Term satisfies = Term::iri(ns::dul + "satisfies");
inline const Term classifies = Term::iri(ns::dul + "classifies");
inline const Term hasPart = Term::iri(ns::dul + "hasPart");
inline const Term sameAs = Term::iri(ns::owl + "sameAs");
inline const Term type = Term::iri(ns::rdf + "type");
inline const Term subClassOf = Term::iri(ns::rdfs + "subClassOf");

// Datatype properties
inline const Term isTheLastSituation = Term::iri(ns::rss + "isTheLastSituation");
inline const Term situationNumber = Term::iri(ns::rss + "situationNumber");
inline const Term timePeriodValue = Term::iri(ns::tp + "timePeriodValue");

// Plumbing: anchoring member situations in time (configurable at call sites).
inline const Term hasStartDate = Term::iri(ns::rss + "hasStartDate");
inline const Term hasIntervalStartDate = Term::iri(ns::rss + "hasIntervalStartDate");
inline const Term hasIntervalEndDate = Term::iri(ns::rss + "hasIntervalEndDate");
// Plumbing: links a series to the unifying situations scoping its factors.
inline const Term hasUnifyingSituation = Term::iri(ns::rss + "hasUnifyingSituation");

// Measurement unit individuals
inline const Term UnitDay = Term::iri(ns::tp + "Day");
inline const Term UnitWeek = Term::iri(ns::tp + "Week");
inline const Term UnitMonth = Term::iri(ns::tp + "Month");
inline const Term UnitYear = Term::iri(ns::tp + "Year");

// Datatypes
inline const Term xsdInteger = Term::iri(ns::xsd + "integer");
inline const Term xsdBoolean = Term::iri(ns::xsd + "boolean");
inline const Term xsdDate = Term::iri(ns::xsd + "date");

inline const std::map<std::string, std::string>& namespaces() {
  static const std::map<std::string, std::string> map = {
      {"rss", ns::rss}, {"dul", ns::dul},   {"d0", ns::d0},   {"tp", ns::tp},
      {"rdf", ns::rdf}, {"rdfs", ns::rdfs}, {"owl", ns::owl}, {"xsd", ns::xsd},
  };
  return map;
}

class UnknownPrefixError : public std::runtime_error {
 public:
  explicit UnknownPrefixError(const std::string& prefix)
      : std::runtime_error("unknown prefix: " + prefix) {}
};

inline Term resolveCurie(const std::string& prefixed,
                         const std::map<std::string, std::string>& extra = {}) {
  auto colon = prefixed.find(':');
  if (colon == std::string::npos) throw UnknownPrefixError(prefixed);
  std::string prefix = prefixed.substr(0, colon);
  std::string local = prefixed.substr(colon + 1);
  if (auto it = extra.find(prefix); it != extra.end()) return Term::iri(it->second + local);
  const auto& builtin = namespaces();
  if (auto it = builtin.find(prefix); it != builtin.end()) return Term::iri(it->second + local);
  throw UnknownPrefixError(prefix);
}

}  // namespace rss::vocab
