#include "dlkb/dates.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlkb {

bool is_leap_year(int year) {
  if (year % 400 == 0) return true;
  if (year % 100 == 0) return false;
  return year % 4 == 0;
}

namespace {
constexpr int kMonthDays[13] = {0, 31, 28, 31, 30, 31, 30,
                                31, 31, 30, 31, 30, 31};
}  // namespace

int days_in_month(int year, int month) {
  if (month == 2 && is_leap_year(year)) return 29;
  return kMonthDays[month];
}

std::optional<Date> Date::make(int year, int month, int day) {
  if (year < 1 || year > 9999) return std::nullopt;
  if (month < 1 || month > 12) return std::nullopt;
  if (day < 1 || day > days_in_month(year, month)) return std::nullopt;
  return Date(year, month, day);
}

std::string Date::str() const {
  return std::to_string(year_) + "/" + std::to_string(month_) + "/" +
         std::to_string(day_);
}

std::optional<Date> parse_date_id(const std::string& id) {
  int parts[3] = {0, 0, 0};
  int n = 0;
  std::size_t i = 0;
  while (i < id.size() && n < 3) {
    std::size_t j = i;
    long v = 0;
    while (j < id.size() && id[j] >= '0' && id[j] <= '9' && j - i < 6) {
      v = v * 10 + (id[j] - '0');
      ++j;
    }
    if (j == i) return std::nullopt;
    parts[n++] = static_cast<int>(v);
    i = j;
    if (i == id.size()) break;
    if (id[i] != '/') return std::nullopt;
    ++i;
  }
  if (n != 3 || i != id.size()) return std::nullopt;
  return Date::make(parts[0], parts[1], parts[2]);
}

Date next_day(Date d) {
  if (d == Date::end_time()) {
    throw std::out_of_range("next_day past end of calendar");
  }
  int y = d.year(), m = d.month(), dd = d.day() + 1;
  if (dd > days_in_month(y, m)) {
    dd = 1;
    if (++m > 12) {
      m = 1;
      ++y;
    }
  }
  return *Date::make(y, m, dd);
}

Date prev_day(Date d) {
  if (d == Date::begin_time()) {
    throw std::out_of_range("prev_day before begin of calendar");
  }
  int y = d.year(), m = d.month(), dd = d.day() - 1;
  if (dd < 1) {
    if (--m < 1) {
      m = 12;
      --y;
    }
    dd = days_in_month(y, m);
  }
  return *Date::make(y, m, dd);
}

std::int64_t day_index(Date d) {
  // Whole years before d, then whole months, then days.
  int y = d.year() - 1;
  std::int64_t days = static_cast<std::int64_t>(y) * 365 + y / 4 - y / 100 +
                      y / 400;
  for (int m = 1; m < d.month(); ++m) {
    days += days_in_month(d.year(), m);
  }
  return days + d.day() - 1;
}

std::optional<DateRangeSet> DateRangeSet::normalize(
    std::vector<DateInterval> raw) {
  // Pairs with end before begin are dropped rather than rejected.
  std::erase_if(raw, [](const DateInterval& iv) { return iv.end < iv.begin; });
  if (raw.empty()) return std::nullopt;
  std::sort(raw.begin(), raw.end());
  std::vector<DateInterval> merged;
  merged.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    DateInterval& last = merged.back();
    // Adjacent intervals merge too: [a,b] and [next_day(b), c].
    if (day_index(raw[i].begin) <= day_index(last.end) + 1) {
      if (last.end < raw[i].end) last.end = raw[i].end;
    } else {
      merged.push_back(raw[i]);
    }
  }
  return DateRangeSet(std::move(merged));
}

bool DateRangeSet::covers_everything() const {
  return intervals_.size() == 1 && intervals_[0].begin == Date::begin_time() &&
         intervals_[0].end == Date::end_time();
}

bool range_contains(const DateRangeSet& hi, const DateRangeSet& low) {
  for (const DateInterval& iv : low.intervals()) {
    bool inside = false;
    for (const DateInterval& h : hi.intervals()) {
      if (h.begin <= iv.begin && iv.end <= h.end) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::optional<DateRangeSet> range_intersect(const DateRangeSet& a,
                                            const DateRangeSet& b) {
  std::vector<DateInterval> out;
  for (const DateInterval& x : a.intervals()) {
    for (const DateInterval& y : b.intervals()) {
      Date lo = std::max(x.begin, y.begin);
      Date hi = std::min(x.end, y.end);
      if (lo <= hi) out.push_back({lo, hi});
    }
  }
  return DateRangeSet::normalize(std::move(out));
}

std::int64_t range_count_days(const DateRangeSet& r) {
  std::int64_t n = 0;
  for (const DateInterval& iv : r.intervals()) {
    n += day_index(iv.end) - day_index(iv.begin) + 1;
  }
  return n;
}

bool range_contains_date(const DateRangeSet& r, Date d) {
  for (const DateInterval& iv : r.intervals()) {
    if (iv.begin <= d && d <= iv.end) return true;
  }
  return false;
}

namespace {

// Longest month within [month_lo, month_hi]; 29 for February counts because
// leap years exist in every denotation.
int max_day_in_months(int month_lo, int month_hi) {
  int mx = 0;
  for (int m = month_lo; m <= month_hi; ++m) {
    mx = std::max(mx, m == 2 ? 29 : kMonthDays[m]);
  }
  return mx;
}

}  // namespace

PeriodMakeResult make_period(int month_lo, int month_hi, int day_lo,
                                int day_hi) {
  if (month_lo > month_hi || day_lo > day_hi) {
    return {Period::Class::Empty, std::nullopt};
  }
  if (month_lo < 1 || month_hi > 12 || day_lo < 1 || day_hi > 31) {
    return {Period::Class::Empty, std::nullopt};
  }
  // Shrink the month endpoints to months that contribute at least one day,
  // then clamp the day upper bound to the longest contributing month.  This
  // makes equal day-denotations structurally equal, e.g. (2..2, 1..31)
  // becomes (2..2, 1..29).
  auto contributes = [&](int m) {
    return day_lo <= (m == 2 ? 29 : kMonthDays[m]);
  };
  while (month_lo <= month_hi && !contributes(month_lo)) ++month_lo;
  while (month_lo <= month_hi && !contributes(month_hi)) --month_hi;
  if (month_lo > month_hi) return {Period::Class::Empty, std::nullopt};
  day_hi = std::min(day_hi, max_day_in_months(month_lo, month_hi));
  if (day_lo > day_hi) return {Period::Class::Empty, std::nullopt};
  if (month_lo == 1 && month_hi == 12 && day_lo == 1 && day_hi == 31) {
    return {Period::Class::Universal, std::nullopt};
  }
  return {Period::Class::Proper, Period(month_lo, month_hi, day_lo, day_hi)};
}

bool Period::matches(Date d) const {
  return month_lo_ <= d.month() && d.month() <= month_hi_ &&
         day_lo_ <= d.day() && d.day() <= day_hi_;
}

bool period_contains_period(const Period& hi, const Period& low) {
  return hi.month_lo() <= low.month_lo() && low.month_hi() <= hi.month_hi() &&
         hi.day_lo() <= low.day_lo() && low.day_hi() <= hi.day_hi();
}

PeriodMakeResult period_intersect(const Period& a, const Period& b) {
  return make_period(std::max(a.month_lo(), b.month_lo()),
                      std::min(a.month_hi(), b.month_hi()),
                      std::max(a.day_lo(), b.day_lo()),
                      std::min(a.day_hi(), b.day_hi()));
}

std::optional<DateRangeSet> period_cut_range(const Period& p,
                                             const DateRangeSet& r) {
  std::vector<DateInterval> strips;
  for (const DateInterval& iv : r.intervals()) {
    int y = iv.begin.year(), m = iv.begin.month();
    while (y < iv.end.year() ||
           (y == iv.end.year() && m <= iv.end.month())) {
      if (p.month_lo() <= m && m <= p.month_hi()) {
        int dlo = p.day_lo();
        int dhi = std::min(p.day_hi(), days_in_month(y, m));
        if (dlo <= dhi) {
          Date lo = *Date::make(y, m, dlo);
          Date hi = *Date::make(y, m, dhi);
          // Clip the strip to the interval.
          if (lo < iv.begin) lo = iv.begin;
          if (iv.end < hi) hi = iv.end;
          if (lo <= hi) strips.push_back({lo, hi});
        }
      }
      if (++m > 12) {
        m = 1;
        ++y;
      }
    }
  }
  return DateRangeSet::normalize(std::move(strips));
}

}  // namespace dlkb
