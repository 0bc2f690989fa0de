#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dlkb/dates.hpp"
#include "dlkb/hooks.hpp"

namespace dlkb {

struct DateRangeTerm : TermData {
  explicit DateRangeTerm(DateRangeSet r) : range(std::move(r)) {}

  DateRangeSet range;

  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

struct PeriodTerm : TermData {
  // nullopt is the full rectangle (1..12, 1..31), kept representable so the
  // universal check can drop it after the value kind is merged.
  std::optional<Period> period;

  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

inline constexpr std::string_view kDateRangeTag = "dateRange";
inline constexpr std::string_view kPeriodTag = "period";

std::unique_ptr<ConstructorHooks> date_range_hooks();
std::unique_ptr<ConstructorHooks> period_hooks();

}  // namespace dlkb
