#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rss/temporal.hpp"

using namespace rss;
using namespace rss::temporal;

namespace {

// Independent oracle: count days by walking the calendar one day at a time.
std::int64_t enumerateDays(Instant from, const Instant& to) {
  if (to < from) return -enumerateDays(to, from);
  std::int64_t days = 0;
  while (from < to) {
    if (++from.day > daysInMonth(from.year, from.month)) {
      from.day = 1;
      if (++from.month > 12) {
        from.month = 1;
        ++from.year;
      }
    }
    ++days;
  }
  return days;
}

}  // namespace

TEST_CASE("daysBetween basics") {
  REQUIRE(daysBetween({2019, 7, 2}, {2019, 7, 2}) == 0);
  REQUIRE(daysBetween({2019, 1, 1}, {2020, 1, 1}) == 365);
  REQUIRE(daysBetween({2020, 1, 1}, {2021, 1, 1}) == 366);  // leap year
  REQUIRE(daysBetween({2009, 10, 25}, {2010, 11, 8}) == 379);
  REQUIRE(daysBetween({2010, 11, 8}, {2012, 11, 12}) == 735);
}

TEST_CASE("daysBetween agrees with calendar enumeration") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> year(1999, 2030), month(1, 12), day(1, 28);
  for (int i = 0; i < 60; ++i) {
    Instant a{year(rng), month(rng), day(rng)};
    Instant b{year(rng), month(rng), day(rng)};
    REQUIRE(daysBetween(a, b) == enumerateDays(a, b));
    REQUIRE(daysBetween(a, b) == -daysBetween(b, a));
  }
}

TEST_CASE("daysBetween triangle additivity") {
  Instant a{2010, 3, 14}, b{2015, 9, 26}, c{2021, 1, 5};
  REQUIRE(daysBetween(a, c) == daysBetween(a, b) + daysBetween(b, c));
}

TEST_CASE("period band reproduces the 11-to-13-month reading of yearly") {
  PeriodBand band = periodBand({1, PeriodUnit::Year});
  REQUIRE(band.lowDays == 335);
  REQUIRE(band.highDays == 396);
}

TEST_CASE("period band edge cases and scaling") {
  PeriodBand day = periodBand({1, PeriodUnit::Day});
  REQUIRE(day.lowDays == 1);
  REQUIRE(day.highDays == 1);
  PeriodBand twoYears = periodBand({2, PeriodUnit::Year});
  REQUIRE(twoYears.lowDays == 670);
  REQUIRE(twoYears.highDays == 792);
  PeriodBand week = periodBand({1, PeriodUnit::Week});
  REQUIRE(week.lowDays == 6);
  REQUIRE(week.highDays == 8);
}

TEST_CASE("band endpoints scale linearly in the period value") {
  for (PeriodUnit unit : {PeriodUnit::Week, PeriodUnit::Month, PeriodUnit::Year}) {
    PeriodBand one = periodBand({1, unit});
    for (long k = 2; k <= 5; ++k) {
      PeriodBand scaled = periodBand({k, unit});
      REQUIRE(std::abs(scaled.lowDays - k * one.lowDays) <= k);
      REQUIRE(std::abs(scaled.highDays - k * one.highDays) <= k);
    }
  }
}

TEST_CASE("measured period over the workshop dates") {
  std::vector<Instant> anchors{{2009, 10, 25}, {2010, 11, 8}, {2012, 11, 12}};
  PeriodAssessment a = assessPeriod(anchors, TimePeriod{1, PeriodUnit::Year});
  REQUIRE(a.measuredDays == 557);  // mean of 379 and 735
  REQUIRE(a.measured.value == 18);
  REQUIRE(a.measured.unit == PeriodUnit::Month);
  REQUIRE(a.band.has_value());
  REQUIRE(a.band->lowDays == 335);
  REQUIRE(a.band->highDays == 396);
  REQUIRE_FALSE(a.withinBand);
}

TEST_CASE("exact yearly gap falls inside the band") {
  PeriodAssessment a =
      assessPeriod({{2019, 1, 1}, {2020, 1, 1}}, TimePeriod{1, PeriodUnit::Year});
  REQUIRE(a.measuredDays == 365);
  REQUIRE(a.withinBand);
}

TEST_CASE("measurement needs two anchors") {
  REQUIRE_THROWS_AS(assessPeriod({{2019, 1, 1}}, TimePeriod{1, PeriodUnit::Year}),
                    FewerThanTwoAnchors);
  REQUIRE_THROWS_AS(assessPeriod({}, std::nullopt), FewerThanTwoAnchors);
}

TEST_CASE("measurement is invariant under anchor listing order") {
  std::vector<Instant> ordered{{2009, 10, 25}, {2010, 11, 8}, {2012, 11, 12}};
  std::vector<Instant> shuffled{{2012, 11, 12}, {2009, 10, 25}, {2010, 11, 8}};
  TimePeriod yearly{1, PeriodUnit::Year};
  REQUIRE(assessPeriod(ordered, yearly).measuredDays ==
          assessPeriod(shuffled, yearly).measuredDays);
}

TEST_CASE("next scheduled occurrence") {
  REQUIRE(nextScheduled({2012, 11, 12}, {1, PeriodUnit::Year}, {2013, 1, 1}) ==
          Instant{2013, 11, 12});
  // leap-day anchor clamps to Feb 28
  REQUIRE(nextScheduled({2020, 2, 29}, {1, PeriodUnit::Year}, {2020, 3, 1}) ==
          Instant{2021, 2, 28});
  // rolls forward until not before today
  REQUIRE(nextScheduled({2012, 11, 12}, {1, PeriodUnit::Year}, {2015, 6, 1}) ==
          Instant{2015, 11, 12});
}

TEST_CASE("next scheduled never precedes today") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> year(2000, 2020), month(1, 12), day(1, 28), value(1, 24);
  for (int i = 0; i < 50; ++i) {
    Instant anchor{year(rng), month(rng), day(rng)};
    Instant today{year(rng), month(rng), day(rng)};
    TimePeriod period{value(rng), PeriodUnit::Month};
    Instant next = nextScheduled(anchor, period, today);
    REQUIRE(!(next < today));
  }
}

TEST_CASE("month addition clamps day of month") {
  REQUIRE(addPeriod({2019, 1, 31}, {1, PeriodUnit::Month}) == Instant{2019, 2, 28});
  REQUIRE(addPeriod({2019, 12, 1}, {1, PeriodUnit::Month}) == Instant{2020, 1, 1});
  REQUIRE(addPeriod({2019, 1, 1}, {2, PeriodUnit::Week}) == Instant{2019, 1, 15});
}

TEST_CASE("date parsing and formatting") {
  REQUIRE(parseDate("2017-01-01") == Instant{2017, 1, 1});
  REQUIRE(formatDate({2017, 1, 1}) == "2017-01-01");
  REQUIRE_THROWS_AS(parseDate("2017-13-01"), InvalidDate);
  REQUIRE_THROWS_AS(parseDate("2017-02-30"), InvalidDate);
  REQUIRE_THROWS_AS(parseDate("17-02-03"), InvalidDate);
}
