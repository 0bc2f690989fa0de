#pragma once

// Brute-force date evaluator used to check the date constructors.  It walks a
// window day by day and evaluates the parsed description directly against
// each (year, month, day) triple, sharing no interval or calendar code with
// the engine: day stepping here goes through a serial-number conversion
// rather than month tables.

#include <cstdint>
#include <vector>

#include "dlkb/ast.hpp"

namespace dlkb::oracle {

struct Civil {
  int year;
  int month;
  int day;
  auto operator<=>(const Civil&) const = default;
};

// Serial day numbers (0 = 1970-01-01, negative before).
std::int64_t civil_to_serial(Civil c);
Civil serial_to_civil(std::int64_t serial);

struct DateWindow {
  Civil begin;
  Civil end;
  // 1992-01-01 .. 2004-12-31: covers ordinary leap years and the
  // divisible-by-400 year 2000.
  static DateWindow standard() { return {{1992, 1, 1}, {2004, 12, 31}}; }
};

// True iff the day satisfies the date-kind description (dateRange, period,
// ANY-DATE and conjunctions thereof).  Throws std::invalid_argument on any
// other constructor.
bool eval_date(const Description& c, Civil day);

// The exact, sorted set of serial days inside w satisfying c.
std::vector<std::int64_t> date_denotation(const Description& c,
                                          const DateWindow& w);

}  // namespace dlkb::oracle
