#include "dlkb/date_constructors.hpp"

#include "dlkb/kernel.hpp"

namespace dlkb {

namespace {

template <typename T>
const T& cast(const TermData& t) {
  return static_cast<const T&>(t);
}

std::string render_range(const DateRangeSet& r) {
  std::string out = "(dateRange";
  for (const DateInterval& iv : r.intervals()) {
    out += " (" + iv.begin.str() + ' ' + iv.end.str() + ')';
  }
  out += ')';
  return out;
}

TermPtr make_range_term(DateRangeSet r) {
  return std::make_shared<DateRangeTerm>(std::move(r));
}

TermPtr make_period_term(std::optional<Period> p) {
  auto t = std::make_shared<PeriodTerm>();
  t->period = p;
  return t;
}

class DateRangeHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kDateRangeTag; }
  bool is_branch() const override { return false; }
  ValueKind value_kind() const override { return ValueKind::DateValue; }

  bool accepts(const Description& d) const override {
    return d.get_if<DateRangeLit>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext&,
                      ImplicationQueue& todo) const override {
    const DateRangeLit& lit = *d.get_if<DateRangeLit>();
    std::optional<DateRangeSet> r = DateRangeSet::normalize(lit.pairs);
    if (!r) throw IncoherentError("dateRange over no days");
    todo.post({std::string(kDateRangeTag), make_range_term(std::move(*r))});
  }

  bool universal(const TermData& t) const override {
    return cast<DateRangeTerm>(t).range.covers_everything();
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    return range_contains(cast<DateRangeTerm>(hi).range,
                          cast<DateRangeTerm>(low).range);
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    std::optional<DateRangeSet> r = range_intersect(
        cast<DateRangeTerm>(t).range, cast<DateRangeTerm>(old).range);
    if (!r) throw IncoherentError("disjoint date ranges");
    return make_range_term(std::move(*r));
  }

  PendingTerm conjoin_to_different(PendingTerm t, const NormalizedConcept& onto,
                                   NormalizeContext&) const override {
    // A range conjoined onto a concept that already holds a period cuts
    // itself against that period.
    const TermData* p = onto.find(std::string(kPeriodTag));
    if (!p) return t;
    const auto& period = cast<PeriodTerm>(*p);
    if (!period.period) return t;
    std::optional<DateRangeSet> cut =
        period_cut_range(*period.period, cast<DateRangeTerm>(*t.term).range);
    if (!cut) throw IncoherentError("no day of the range satisfies the period");
    t.term = make_range_term(std::move(*cut));
    return t;
  }

  bool recognizes(const TermData& t, const IndividualView& b,
                  const AboxContext&, HookSink*) const override {
    std::optional<Date> d = b.date_value();
    return d && range_contains_date(cast<DateRangeTerm>(t).range, *d);
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext&, HookSink*) const override {
    std::optional<Date> d = b.date_value();
    if (!d) return false;
    if (!range_contains_date(cast<DateRangeTerm>(t).range, *d)) {
      throw InconsistentError(b.id(), "date outside asserted dateRange");
    }
    return true;
  }
};

class PeriodHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kPeriodTag; }
  bool is_branch() const override { return false; }
  ValueKind value_kind() const override { return ValueKind::DateValue; }

  bool accepts(const Description& d) const override {
    return d.get_if<PeriodLit>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext&,
                      ImplicationQueue& todo) const override {
    const PeriodLit& lit = *d.get_if<PeriodLit>();
    PeriodMakeResult r =
        make_period(lit.month_lo, lit.month_hi, lit.day_lo, lit.day_hi);
    if (r.cls == Period::Class::Empty) {
      throw IncoherentError("period admits no days");
    }
    todo.post({std::string(kPeriodTag), make_period_term(r.period)});
  }

  bool universal(const TermData& t) const override {
    return !cast<PeriodTerm>(t).period.has_value();
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    const auto& h = cast<PeriodTerm>(hi);
    const auto& l = cast<PeriodTerm>(low);
    if (!h.period) return true;
    if (!l.period) return false;
    return period_contains_period(*h.period, *l.period);
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    const auto& a = cast<PeriodTerm>(t);
    const auto& b = cast<PeriodTerm>(old);
    if (!a.period) return make_period_term(b.period);
    if (!b.period) return make_period_term(a.period);
    PeriodMakeResult r = period_intersect(*a.period, *b.period);
    if (r.cls == Period::Class::Empty) {
      throw IncoherentError("periods admit no common day");
    }
    if (r.cls == Period::Class::Universal) return make_period_term({});
    return make_period_term(r.period);
  }

  PendingTerm conjoin_to_different(PendingTerm t, const NormalizedConcept& onto,
                                   NormalizeContext&) const override {
    // The period acts as a cookie cutter on an already-present range: the
    // result is the cut range, and the period itself is not stored.
    const auto& p = cast<PeriodTerm>(*t.term);
    if (!p.period) return t;
    const TermData* r = onto.find(std::string(kDateRangeTag));
    if (!r) return t;
    std::optional<DateRangeSet> cut =
        period_cut_range(*p.period, cast<DateRangeTerm>(*r).range);
    if (!cut) throw IncoherentError("no day of the range satisfies the period");
    return {std::string(kDateRangeTag), make_range_term(std::move(*cut))};
  }

  bool subsumes_different(const TermData& t, const NormalizedConcept& low,
                          const Kernel&) const override {
    // period subsumes a concept whose dateRange is unchanged by the cutter.
    const auto& p = cast<PeriodTerm>(t);
    if (!p.period) return true;
    const TermData* r = low.find(std::string(kDateRangeTag));
    if (!r) return false;
    const DateRangeSet& range = cast<DateRangeTerm>(*r).range;
    std::optional<DateRangeSet> cut = period_cut_range(*p.period, range);
    return cut && *cut == range;
  }

  bool recognizes(const TermData& t, const IndividualView& b,
                  const AboxContext&, HookSink*) const override {
    const auto& p = cast<PeriodTerm>(t);
    std::optional<Date> d = b.date_value();
    if (!d) return false;
    return !p.period || p.period->matches(*d);
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext&, HookSink*) const override {
    const auto& p = cast<PeriodTerm>(t);
    std::optional<Date> d = b.date_value();
    if (!d) return false;
    if (p.period && !p.period->matches(*d)) {
      throw InconsistentError(b.id(), "date outside asserted period");
    }
    return true;
  }
};

}  // namespace

bool DateRangeTerm::equals(const TermData& other) const {
  return range == static_cast<const DateRangeTerm&>(other).range;
}

void DateRangeTerm::render_forms(std::vector<std::string>& out) const {
  out.push_back(render_range(range));
}

bool PeriodTerm::equals(const TermData& other) const {
  return period == static_cast<const PeriodTerm&>(other).period;
}

void PeriodTerm::render_forms(std::vector<std::string>& out) const {
  if (!period) return;
  out.push_back("(period (" + std::to_string(period->month_lo()) + ' ' +
                std::to_string(period->month_hi()) + ") (" +
                std::to_string(period->day_lo()) + ' ' +
                std::to_string(period->day_hi()) + "))");
}

std::unique_ptr<ConstructorHooks> date_range_hooks() {
  return std::make_unique<DateRangeHooks>();
}

std::unique_ptr<ConstructorHooks> period_hooks() {
  return std::make_unique<PeriodHooks>();
}

}  // namespace dlkb
