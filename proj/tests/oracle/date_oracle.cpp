#include "oracle/date_oracle.hpp"

#include <stdexcept>

namespace dlkb::oracle {

// Civil-from-days and days-from-civil via the era decomposition; an
// algorithmically different route than the engine's month-table stepping.
std::int64_t civil_to_serial(Civil c) {
  int y = c.year;
  const unsigned m = static_cast<unsigned>(c.month);
  const unsigned d = static_cast<unsigned>(c.day);
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097LL + static_cast<std::int64_t>(doe) - 719468;
}

Civil serial_to_civil(std::int64_t serial) {
  std::int64_t z = serial + 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {static_cast<int>(y + (m <= 2)), static_cast<int>(m),
          static_cast<int>(d)};
}

namespace {

Civil civil_of(Date d) { return {d.year(), d.month(), d.day()}; }

}  // namespace

bool eval_date(const Description& c, Civil day) {
  if (c.get_if<AnyDateRef>()) return true;
  if (const And* a = c.get_if<And>()) {
    for (const Description& x : a->args) {
      if (!eval_date(x, day)) return false;
    }
    return true;
  }
  if (const DateRangeLit* r = c.get_if<DateRangeLit>()) {
    for (const DateInterval& iv : r->pairs) {
      if (civil_of(iv.begin) <= day && day <= civil_of(iv.end)) return true;
    }
    return false;
  }
  if (const PeriodLit* p = c.get_if<PeriodLit>()) {
    return p->month_lo <= day.month && day.month <= p->month_hi &&
           p->day_lo <= day.day && day.day <= p->day_hi;
  }
  throw std::invalid_argument("eval_date: not a date-kind description: " +
                              render_description(c));
}

std::vector<std::int64_t> date_denotation(const Description& c,
                                          const DateWindow& w) {
  std::vector<std::int64_t> days;
  const std::int64_t last = civil_to_serial(w.end);
  for (std::int64_t s = civil_to_serial(w.begin); s <= last; ++s) {
    if (eval_date(c, serial_to_civil(s))) days.push_back(s);
  }
  return days;
}

}  // namespace dlkb::oracle
