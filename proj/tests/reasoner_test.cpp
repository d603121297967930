#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rss/reasoner.hpp"
#include "rss/vocab.hpp"

using namespace rss;
namespace v = vocab;

namespace {
Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }
}  // namespace

TEST_CASE("series typing chains through collection, situation, eventuality") {
  Graph g;
  g.insert(Triple{ex("s"), v::type, v::RecurrentSituationSeries});
  InferenceDelta delta = materialize(g);
  REQUIRE(delta.added.count(Triple{ex("s"), v::type, v::Collection}));
  REQUIRE(delta.added.count(Triple{ex("s"), v::type, v::Situation}));
  REQUIRE(delta.added.count(Triple{ex("s"), v::type, v::Eventuality}));
}

TEST_CASE("empty graph: empty delta, one iteration") {
  Graph g;
  InferenceDelta delta = materialize(g);
  REQUIRE(delta.added.empty());
  REQUIRE(delta.iterations == 1);
}

TEST_CASE("member inverse and period property chain") {
  Graph g;
  g.insert(Triple{ex("s"), v::hasMemberSituation, ex("m")});
  g.insert(Triple{ex("m"), v::hasTimePeriodBeforeNextSituation, ex("t")});
  InferenceDelta delta = materialize(g);
  REQUIRE(delta.added.count(Triple{ex("s"), v::hasTimePeriod, ex("t")}));
  REQUIRE(delta.added.count(Triple{ex("m"), v::isSituationMemberOf, ex("s")}));
}

TEST_CASE("immediate next entails next, previous and immediate previous") {
  Graph g;
  g.insert(Triple{ex("a"), v::hasImmediateNextSituation, ex("b")});
  Graph full = withInferences(g);
  REQUIRE(full.contains(Triple{ex("a"), v::hasNextSituation, ex("b")}));
  REQUIRE(full.contains(Triple{ex("b"), v::hasPreviousSituation, ex("a")}));
  REQUIRE(full.contains(Triple{ex("b"), v::hasImmediatePreviousSituation, ex("a")}));
}

TEST_CASE("estimated and measured periods are time periods") {
  Graph g;
  g.insert(Triple{ex("s"), v::hasEstimatedTimePeriod, ex("p")});
  g.insert(Triple{ex("s2"), v::hasMeasuredTimePeriod, ex("q")});
  Graph full = withInferences(g);
  REQUIRE(full.contains(Triple{ex("s"), v::hasTimePeriod, ex("p")}));
  REQUIRE(full.contains(Triple{ex("s2"), v::hasTimePeriod, ex("q")}));
}

TEST_CASE("unifying factors are concepts") {
  Graph g;
  g.insert(Triple{ex("f"), v::type, v::UnifyingFactor});
  REQUIRE(withInferences(g).contains(Triple{ex("f"), v::type, v::Concept}));
}

TEST_CASE("delta is disjoint from asserted triples") {
  Graph g;
  g.insert(Triple{ex("s"), v::type, v::RecurrentSituationSeries});
  g.insert(Triple{ex("s"), v::type, v::Collection});  // already asserted
  InferenceDelta delta = materialize(g);
  for (const Triple& t : delta.added) REQUIRE_FALSE(g.contains(t));
}

TEST_CASE("materialization is idempotent") {
  Graph g;
  g.insert(Triple{ex("s"), v::type, v::RecurrentSituationSeries});
  g.insert(Triple{ex("s"), v::hasMemberSituation, ex("m")});
  g.insert(Triple{ex("m"), v::hasImmediateNextSituation, ex("n")});
  g.insert(Triple{ex("a"), v::sameAs, ex("b")});
  Graph full = withInferences(g);
  REQUIRE(materialize(full).added.empty());
}

TEST_CASE("monotonicity on a growing graph") {
  Graph small;
  small.insert(Triple{ex("s"), v::type, v::RecurrentSituationSeries});
  Graph large = small;
  large.insert(Triple{ex("s"), v::hasMemberSituation, ex("m")});
  Graph smallFull = withInferences(small);
  Graph largeFull = withInferences(large);
  for (const Triple& t : smallFull.triples()) REQUIRE(largeFull.contains(t));
}

TEST_CASE("sameAs closure is symmetric and transitive") {
  Graph g;
  g.insert(Triple{ex("a"), v::sameAs, ex("b")});
  g.insert(Triple{ex("b"), v::sameAs, ex("c")});
  SameAsClasses classes(g);
  REQUIRE(classes.same(ex("a"), ex("c")));
  REQUIRE(classes.same(ex("c"), ex("a")));
  REQUIRE(classes.same(ex("b"), ex("a")));
  REQUIRE(classes.classes().size() == 1);
  REQUIRE(classes.classes()[0] == std::set<Term>{ex("a"), ex("b"), ex("c")});
}

TEST_CASE("terms without sameAs are singletons") {
  Graph g;
  g.insert(Triple{ex("x"), v::type, v::Situation});
  SameAsClasses classes(g);
  REQUIRE(classes.find(ex("x")) == ex("x"));
  REQUIRE_FALSE(classes.same(ex("x"), ex("y")));
}

TEST_CASE("union-find agrees with path enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int round = 0; round < 50; ++round) {
    Graph g;
    int links = pick(rng);
    for (int i = 0; i < links; ++i)
      g.insert(Triple{ex("n" + std::to_string(pick(rng))), v::sameAs,
                      ex("n" + std::to_string(pick(rng)))});
    SameAsClasses classes(g);
    // oracle: BFS over the undirected sameAs edges
    std::map<Term, std::set<Term>> adjacency;
    for (const Triple& t : g.triples()) {
      adjacency[t.subject].insert(t.object);
      adjacency[t.object].insert(t.subject);
    }
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        Term a = ex("n" + std::to_string(i)), b = ex("n" + std::to_string(j));
        std::set<Term> reached{a};
        std::vector<Term> frontier{a};
        while (!frontier.empty()) {
          Term cur = frontier.back();
          frontier.pop_back();
          for (const Term& next : adjacency[cur])
            if (reached.insert(next).second) frontier.push_back(next);
        }
        REQUIRE(classes.same(a, b) == (reached.count(b) > 0));
      }
    }
  }
}

TEST_CASE("fixpoint reached within the added-plus-one iteration bound") {
  Graph g;
  g.insert(Triple{ex("s"), v::type, v::RecurrentSituationSeries});
  g.insert(Triple{ex("s"), v::hasMemberSituation, ex("m")});
  InferenceDelta delta = materialize(g);
  REQUIRE(delta.iterations <= static_cast<int>(delta.added.size()) + 1);
}
