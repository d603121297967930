#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rss {

// Proleptic Gregorian calendar date.
struct Instant {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Instant&) const = default;
  bool operator==(const Instant&) const = default;
};

enum class PeriodUnit { Day, Week, Month, Year };

struct TimePeriod {
  long value = 0;
  PeriodUnit unit = PeriodUnit::Day;

  bool operator==(const TimePeriod&) const = default;
};

struct PeriodBand {
  long lowDays = 0;
  long highDays = 0;
};

struct PeriodAssessment {
  long measuredDays = 0;           // mean gap between consecutive anchors
  TimePeriod measured;             // mean converted to the estimated unit
  std::optional<PeriodBand> band;  // present when an estimated period exists
  bool withinBand = false;
};

class FewerThanTwoAnchors : public std::runtime_error {
 public:
  FewerThanTwoAnchors() : std::runtime_error("measured period needs at least two dated members") {}
};
class NoAnchor : public std::runtime_error {
 public:
  NoAnchor() : std::runtime_error("series has no dated member") {}
};
class NoEstimatedPeriod : public std::runtime_error {
 public:
  NoEstimatedPeriod() : std::runtime_error("series has no estimated time period") {}
};
class InvalidDate : public std::runtime_error {
 public:
  explicit InvalidDate(const std::string& lexical)
      : std::runtime_error("invalid xsd:date: " + lexical) {}
};

namespace temporal {

inline constexpr double kDaysPerWeek = 7.0;
inline constexpr double kDaysPerMonth = 30.44;
inline constexpr double kDaysPerYear = 365.25;

inline bool isLeapYear(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int daysInMonth(int year, int month) {
  static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && isLeapYear(year)) return 29;
  return lengths[month - 1];
}

inline bool isValidDate(const Instant& d) {
  return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= daysInMonth(d.year, d.month);
}

// days-from-civil (Howard Hinnant's algorithm); epoch 1970-01-01.
inline std::int64_t toEpochDays(const Instant& d) {
  int y = d.year - (d.month <= 2);
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (d.month + (d.month > 2 ? -3 : 9)) + 2) / 5 + d.day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline std::int64_t daysBetween(const Instant& a, const Instant& b) {
  return toEpochDays(b) - toEpochDays(a);
}

inline double unitDays(PeriodUnit unit) {
  switch (unit) {
    case PeriodUnit::Day: return 1.0;
    case PeriodUnit::Week: return kDaysPerWeek;
    case PeriodUnit::Month: return kDaysPerMonth;
    case PeriodUnit::Year: return kDaysPerYear;
  }
  return 1.0;
}

// Width of the next-finer unit; the approximation band for a period is
// one such width per period value on either side (day has no finer unit).
inline double finerUnitDays(PeriodUnit unit) {
  switch (unit) {
    case PeriodUnit::Day: return 0.0;
    case PeriodUnit::Week: return 1.0;
    case PeriodUnit::Month: return kDaysPerWeek;
    case PeriodUnit::Year: return kDaysPerMonth;
  }
  return 0.0;
}

inline long roundHalfUp(double x) { return static_cast<long>(std::floor(x + 0.5)); }

// Unit used to report a measured mean against an estimate: the next-finer
// unit, matching how approximate yearly periods read as a month count.
inline PeriodUnit reportingUnit(PeriodUnit estimated) {
  switch (estimated) {
    case PeriodUnit::Year: return PeriodUnit::Month;
    case PeriodUnit::Month: return PeriodUnit::Week;
    case PeriodUnit::Week: return PeriodUnit::Day;
    case PeriodUnit::Day: return PeriodUnit::Day;
  }
  return PeriodUnit::Day;
}

inline PeriodBand periodBand(const TimePeriod& estimated) {
  const double center = estimated.value * unitDays(estimated.unit);
  const double slack = estimated.value * finerUnitDays(estimated.unit);
  PeriodBand band;
  band.lowDays = static_cast<long>(std::ceil(center - slack));
  band.highDays = static_cast<long>(std::ceil(center + slack));
  if (estimated.unit == PeriodUnit::Day) {
    band.lowDays = band.highDays = estimated.value;
  }
  return band;
}

// Mean of consecutive anchor gaps, expressed in the reporting unit of the
// estimate when one is known (days otherwise), with the band check.
inline PeriodAssessment assessPeriod(std::vector<Instant> anchors,
                                     const std::optional<TimePeriod>& estimated) {
  if (anchors.size() < 2) throw FewerThanTwoAnchors();
  std::sort(anchors.begin(), anchors.end());
  std::int64_t total = 0;
  for (std::size_t i = 1; i < anchors.size(); ++i)
    total += daysBetween(anchors[i - 1], anchors[i]);
  const double mean = static_cast<double>(total) / static_cast<double>(anchors.size() - 1);

  PeriodAssessment out;
  out.measuredDays = roundHalfUp(mean);
  const PeriodUnit unit = estimated ? reportingUnit(estimated->unit) : PeriodUnit::Day;
  out.measured = TimePeriod{roundHalfUp(out.measuredDays / unitDays(unit)), unit};
  if (estimated) {
    out.band = periodBand(*estimated);
    out.withinBand = out.band->lowDays <= out.measuredDays && out.measuredDays <= out.band->highDays;
  }
  return out;
}

// Calendar-aware period addition; month/year arithmetic clamps the
// day-of-month (2020-02-29 + 1 year = 2021-02-28).
inline Instant addPeriod(const Instant& date, const TimePeriod& period) {
  Instant out = date;
  switch (period.unit) {
    case PeriodUnit::Day:
    case PeriodUnit::Week: {
      std::int64_t days = period.value * (period.unit == PeriodUnit::Week ? 7 : 1);
      // walk forward day by day; period values are small
      for (std::int64_t i = 0; i < days; ++i) {
        if (++out.day > daysInMonth(out.year, out.month)) {
          out.day = 1;
          if (++out.month > 12) {
            out.month = 1;
            ++out.year;
          }
        }
      }
      return out;
    }
    case PeriodUnit::Month: {
      long months = (out.year * 12L + out.month - 1) + period.value;
      out.year = static_cast<int>(months / 12);
      out.month = static_cast<int>(months % 12) + 1;
      break;
    }
    case PeriodUnit::Year:
      out.year += static_cast<int>(period.value);
      break;
  }
  out.day = std::min(out.day, daysInMonth(out.year, out.month));
  return out;
}

inline Instant nextScheduled(const Instant& lastAnchor, const TimePeriod& estimated,
                             const Instant& today) {
  if (estimated.value < 1) throw NoEstimatedPeriod();
  Instant next = addPeriod(lastAnchor, estimated);
  while (next < today) next = addPeriod(next, estimated);
  return next;
}

inline Instant parseDate(const std::string& lexical) {
  if (lexical.size() != 10 || lexical[4] != '-' || lexical[7] != '-') throw InvalidDate(lexical);
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (!std::isdigit(static_cast<unsigned char>(lexical[i]))) throw InvalidDate(lexical);
  Instant d{std::stoi(lexical.substr(0, 4)), std::stoi(lexical.substr(5, 2)),
            std::stoi(lexical.substr(8, 2))};
  if (!isValidDate(d)) throw InvalidDate(lexical);
  return d;
}

inline std::string formatDate(const Instant& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

inline std::string unitName(PeriodUnit unit) {
  switch (unit) {
    case PeriodUnit::Day: return "day";
    case PeriodUnit::Week: return "week";
    case PeriodUnit::Month: return "month";
    case PeriodUnit::Year: return "year";
  }
  return "day";
}

}  // namespace temporal
}  // namespace rss
