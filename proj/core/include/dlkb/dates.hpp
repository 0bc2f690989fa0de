#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dlkb {

// Calendar dates, proleptic Gregorian, years 1..9999.  Ordering is
// lexicographic on (year, month, day).  Instances are always calendar-valid;
// use make() to construct from untrusted components.

bool is_leap_year(int year);
int days_in_month(int year, int month);

class Date {
 public:
  static std::optional<Date> make(int year, int month, int day);
  static Date begin_time() { return Date(1, 1, 1); }
  static Date end_time() { return Date(9999, 12, 31); }

  int year() const { return year_; }
  int month() const { return month_; }
  int day() const { return day_; }

  auto operator<=>(const Date&) const = default;

  std::string str() const;  // "1996/7/25", components unpadded

 private:
  Date(int y, int m, int d) : year_(y), month_(m), day_(d) {}
  int year_;
  int month_;
  int day_;
};

// Parses a canonical date identifier "Y/M/D"; nullopt when the text is not
// shaped like one or is not calendar-valid.
std::optional<Date> parse_date_id(const std::string& id);

// Calendar successor.  Throws std::out_of_range past end_time().
Date next_day(Date d);
// Calendar predecessor.  Throws std::out_of_range before begin_time().
Date prev_day(Date d);

// Days since begin_time() (begin_time() = 0).  Used for interval widths and
// adjacency; the test oracle deliberately does not share this code.
std::int64_t day_index(Date d);

struct DateInterval {
  Date begin;
  Date end;  // begin <= end
  auto operator<=>(const DateInterval&) const = default;
};

// Normalized, non-empty union of days: intervals sorted, pairwise disjoint
// and non-adjacent (next_day(end i) < begin i+1).  The empty union is not
// representable; factory functions return nullopt for it and callers signal
// incoherence.
class DateRangeSet {
 public:
  static std::optional<DateRangeSet> normalize(std::vector<DateInterval> raw);

  const std::vector<DateInterval>& intervals() const { return intervals_; }
  bool covers_everything() const;  // begin_time()..end_time()

  bool operator==(const DateRangeSet&) const = default;

 private:
  explicit DateRangeSet(std::vector<DateInterval> ivs)
      : intervals_(std::move(ivs)) {}
  std::vector<DateInterval> intervals_;
};

// True iff every interval of low lies inside some interval of hi.
bool range_contains(const DateRangeSet& hi, const DateRangeSet& low);
// Pairwise intersection; nullopt when empty.
std::optional<DateRangeSet> range_intersect(const DateRangeSet& a,
                                            const DateRangeSet& b);
// Exact number of days in the union.
std::int64_t range_count_days(const DateRangeSet& r);
// True iff the single date lies in the union.
bool range_contains_date(const DateRangeSet& r, Date d);

class Period;
struct PeriodMakeResult;

// A yearly-recurring rectangle of (month, day) constraints.  Stored
// canonically: month endpoints are shrunk to months that contribute at least
// one real day, and the day upper bound is clamped to the longest month in
// range, so that equal day-denotations have equal representations.  The
// full rectangle (1..12, 1..31) and empty denotations are not representable;
// make_period reports them via Period::Class.
class Period {
 public:
  enum class Class { Proper, Universal, Empty };

  int month_lo() const { return month_lo_; }
  int month_hi() const { return month_hi_; }
  int day_lo() const { return day_lo_; }
  int day_hi() const { return day_hi_; }

  bool matches(Date d) const;

  bool operator==(const Period&) const = default;

 private:
  friend PeriodMakeResult make_period(int, int, int, int);
  Period(int ml, int mh, int dl, int dh)
      : month_lo_(ml), month_hi_(mh), day_lo_(dl), day_hi_(dh) {}
  int month_lo_;
  int month_hi_;
  int day_lo_;
  int day_hi_;
};

struct PeriodMakeResult {
  Period::Class cls;
  std::optional<Period> period;  // set iff cls == Proper
};

// Validates and canonicalizes the rectangle.
PeriodMakeResult make_period(int month_lo, int month_hi, int day_lo,
                             int day_hi);

// Rectangle containment on canonical periods; equivalent to day-denotation
// containment.
bool period_contains_period(const Period& hi, const Period& low);

// Conjunction of two periods: component-wise max/min, re-canonicalized.
PeriodMakeResult period_intersect(const Period& a, const Period& b);

// The cookie cutter: the maximal subintervals of r all of whose days satisfy
// p, re-merged.  nullopt when no day survives.  Works month strip by month
// strip, never day by day.
std::optional<DateRangeSet> period_cut_range(const Period& p,
                                             const DateRangeSet& r);

}  // namespace dlkb
