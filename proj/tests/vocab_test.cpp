#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "rss/vocab.hpp"

using namespace rss;
namespace v = vocab;

TEST_CASE("resolveCurie expands the pattern namespace") {
  Term t = v::resolveCurie("rss:hasMemberSituation");
  REQUIRE(t ==
          Term::iri("http://www.ontologydesignpatterns.org/cp/owl/recurrentsituationseries.owl#"
                    "hasMemberSituation"));
  REQUIRE(t == v::hasMemberSituation);
}

TEST_CASE("resolveCurie knows the well-known namespaces") {
  REQUIRE(v::resolveCurie("rdf:type") ==
          Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"));
  REQUIRE(v::resolveCurie("owl:sameAs") == v::sameAs);
  REQUIRE(v::resolveCurie("xsd:integer") == v::xsdInteger);
}

TEST_CASE("unknown prefix raises") {
  REQUIRE_THROWS_AS(v::resolveCurie("zzz:x"), v::UnknownPrefixError);
  REQUIRE_THROWS_AS(v::resolveCurie("no-colon"), v::UnknownPrefixError);
}

TEST_CASE("extra prefixes take part in resolution") {
  Term t = v::resolveCurie("ex:thing", {{"ex", "http://example.org/"}});
  REQUIRE(t == Term::iri("http://example.org/thing"));
}

TEST_CASE("every constant is an absolute IRI under its namespace") {
  const std::vector<Term> all = {
      v::RecurrentSituationSeries, v::Situation, v::UnifyingFactor, v::UnifyingSituation,
      v::RssTimePeriod, v::Collection, v::Concept, v::Description, v::TimeInterval, v::Eventuality,
      v::TpTimePeriod, v::TimePeriodMeasurementUnit, v::hasMemberSituation, v::isSituationMemberOf,
      v::hasUnifyingFactor, v::involvesUnifyingFactor, v::isValidIn, v::hasNextSituation,
      v::hasPreviousSituation, v::hasImmediateNextSituation, v::hasImmediatePreviousSituation,
      v::hasTimePeriod, v::hasEstimatedTimePeriod, v::hasMeasuredTimePeriod,
      v::hasTimePeriodBeforeNextSituation, v::isLocallyInconsistentWith,
      v::hasTimePeriodMeasurementUnit, v::defines, v::isSatisfiedBy, v::satisfies, v::classifies,
      v::hasPart, v::sameAs, v::type, v::subClassOf, v::isTheLastSituation, v::situationNumber,
      v::timePeriodValue, v::hasStartDate, v::hasUnifyingSituation, v::UnitDay, v::UnitWeek,
      v::UnitMonth, v::UnitYear};
  std::set<std::string> seen;
  for (const Term& t : all) {
    REQUIRE(t.isIri());
    bool underKnownNamespace = false;
    for (const auto& [_, ns] : v::namespaces())
      if (t.value.rfind(ns, 0) == 0) underKnownNamespace = true;
    REQUIRE(underKnownNamespace);
    REQUIRE(seen.insert(t.value).second);  // no two constants share an IRI
  }
}
