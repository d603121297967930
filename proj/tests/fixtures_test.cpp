#include <catch2/catch_amalgamated.hpp>

#include "rss/fixtures.hpp"
#include "rss/turtle.hpp"
#include "rss/validator.hpp"
#include "rss/vocab.hpp"

using namespace rss;
namespace v = vocab;

TEST_CASE("unknown fixture name raises") {
  REQUIRE_THROWS_AS(fixtures::load("palio"), fixtures::UnknownFixture);
}

TEST_CASE("every fixture parses and round-trips") {
  for (const std::string& name : fixtures::names()) {
    Graph g = fixtures::load(name);
    REQUIRE_FALSE(g.empty());
    Graph reparsed = parseTurtle(serializeTurtle(g));
    REQUIRE(isomorphic(g, reparsed));
  }
}

TEST_CASE("wop fixture triple count matches the hand count") {
  // hand count of fixtures/wop.ttl: 10 (series) + 5 + 5 + 4 (members)
  // + 5 (factor typings) + 3 (naming situation) + 2 (interval) + 3 (period)
  REQUIRE(fixtures::load("wop").size() == 37);
}

TEST_CASE("wop membership triples match the figure") {
  Graph g = fixtures::load("wop");
  auto memberships = g.match(std::nullopt, v::hasMemberSituation, std::nullopt);
  REQUIRE(memberships.size() == 3);
}

TEST_CASE("conforming fixtures conform") {
  for (const std::string& name : {"wop", "wop-described", "arctic-tern", "zero-members"}) {
    ValidationReport report = validate(fixtures::load(name));
    INFO(name);
    REQUIRE(report.conforms);
  }
}

TEST_CASE("wop-described carries no warnings at all") {
  ValidationReport report = validate(fixtures::load("wop-described"));
  REQUIRE(report.findings.empty());
}

TEST_CASE("cross-series-bad produces only RSS-CROSS-SERIES") {
  ValidationReport report = validate(fixtures::load("cross-series-bad"));
  REQUIRE_FALSE(report.conforms);
  REQUIRE(report.hasCode("RSS-CROSS-SERIES"));
  for (const Finding& f : report.findings) REQUIRE(f.code == "RSS-CROSS-SERIES");
}

TEST_CASE("sequence-bad produces only RSS-SEQ-ORDER") {
  ValidationReport report = validate(fixtures::load("sequence-bad"));
  REQUIRE_FALSE(report.conforms);
  REQUIRE(report.hasCode("RSS-SEQ-ORDER"));
  for (const Finding& f : report.findings) REQUIRE(f.code == "RSS-SEQ-ORDER");
}

TEST_CASE("zero-members fixture yields no findings") {
  ValidationReport report = validate(fixtures::load("zero-members"));
  REQUIRE(report.findings.empty());
}

TEST_CASE("arctic tern structure: parts and sub-series") {
  Graph g = fixtures::load("arctic-tern");
  Term main = Term::iri("http://example.org/arctic-tern-migration");
  Term annual = Term::iri("http://example.org/arctic-tern-migration-2019");
  REQUIRE(g.contains(Triple{main, v::hasMemberSituation, annual}));
  auto parts = g.objects(annual, v::hasPart);
  REQUIRE(parts.size() == 2);
  for (const Term& part : parts) {
    auto owners = g.subjects(v::hasMemberSituation, part);
    REQUIRE(owners.size() == 1);
    REQUIRE(g.contains(Triple{main, v::hasPart, owners[0]}));
  }
}
