#include "dlkb/ast.hpp"

#include <sstream>

namespace dlkb {

Description Description::conj(std::vector<Description> args) {
  return Description(And{std::move(args)});
}
Description Description::all(std::string role, Description c) {
  return Description(All{std::move(role), {std::move(c)}});
}
Description Description::some(std::string role, Description c) {
  return Description(Some{std::move(role), {std::move(c)}});
}
Description Description::at_least(unsigned n, std::string role) {
  return Description(AtLeast{n, std::move(role)});
}
Description Description::at_most(unsigned n, std::string role) {
  return Description(AtMost{n, std::move(role)});
}
Description Description::fills(std::string role, std::string filler) {
  return Description(FillsRef{std::move(role), std::move(filler)});
}
Description Description::one_of(std::vector<std::string> members) {
  return Description(OneOf{std::move(members)});
}
Description Description::same_as(std::vector<std::string> l,
                                 std::vector<std::string> r) {
  return Description(SameAsRef{std::move(l), std::move(r)});
}
Description Description::date_range(std::vector<DateInterval> pairs) {
  return Description(DateRangeLit{std::move(pairs)});
}
Description Description::period(int ml, int mh, int dl, int dh) {
  return Description(PeriodLit{ml, mh, dl, dh});
}

namespace {

struct EqVisitor {
  const Description::Node& rhs;

  bool operator()(const ThingRef&) const {
    return std::holds_alternative<ThingRef>(rhs);
  }
  bool operator()(const NothingRef&) const {
    return std::holds_alternative<NothingRef>(rhs);
  }
  bool operator()(const AnyDateRef&) const {
    return std::holds_alternative<AnyDateRef>(rhs);
  }
  bool operator()(const NameRef& a) const {
    auto* b = std::get_if<NameRef>(&rhs);
    return b && a.name == b->name;
  }
  bool operator()(const And& a) const {
    auto* b = std::get_if<And>(&rhs);
    return b && a.args == b->args;
  }
  bool operator()(const All& a) const {
    auto* b = std::get_if<All>(&rhs);
    return b && a.role == b->role && a.restriction == b->restriction;
  }
  bool operator()(const Some& a) const {
    auto* b = std::get_if<Some>(&rhs);
    return b && a.role == b->role && a.restriction == b->restriction;
  }
  bool operator()(const AtLeast& a) const {
    auto* b = std::get_if<AtLeast>(&rhs);
    return b && a.count == b->count && a.role == b->role;
  }
  bool operator()(const AtMost& a) const {
    auto* b = std::get_if<AtMost>(&rhs);
    return b && a.count == b->count && a.role == b->role;
  }
  bool operator()(const FillsRef& a) const {
    auto* b = std::get_if<FillsRef>(&rhs);
    return b && a.role == b->role && a.filler == b->filler;
  }
  bool operator()(const OneOf& a) const {
    auto* b = std::get_if<OneOf>(&rhs);
    return b && a.members == b->members;
  }
  bool operator()(const SameAsRef& a) const {
    auto* b = std::get_if<SameAsRef>(&rhs);
    return b && a.left == b->left && a.right == b->right;
  }
  bool operator()(const DateRangeLit& a) const {
    auto* b = std::get_if<DateRangeLit>(&rhs);
    return b && a.pairs == b->pairs;
  }
  bool operator()(const PeriodLit& a) const {
    auto* b = std::get_if<PeriodLit>(&rhs);
    return b && a.month_lo == b->month_lo && a.month_hi == b->month_hi &&
           a.day_lo == b->day_lo && a.day_hi == b->day_hi;
  }
};

struct RenderVisitor {
  std::ostream& out;

  void render(const Description& d) { std::visit(*this, d.node()); }

  void operator()(const ThingRef&) { out << "THING"; }
  void operator()(const NothingRef&) { out << "NOTHING"; }
  void operator()(const AnyDateRef&) { out << "ANY-DATE"; }
  void operator()(const NameRef& n) { out << n.name; }
  void operator()(const And& a) {
    out << "(and";
    for (const Description& c : a.args) {
      out << ' ';
      render(c);
    }
    out << ')';
  }
  void operator()(const All& a) {
    out << "(all " << a.role << ' ';
    render(a.restriction.front());
    out << ')';
  }
  void operator()(const Some& s) {
    out << "(some " << s.role << ' ';
    render(s.restriction.front());
    out << ')';
  }
  void operator()(const AtLeast& a) {
    out << "(at-least " << a.count << ' ' << a.role << ')';
  }
  void operator()(const AtMost& a) {
    out << "(at-most " << a.count << ' ' << a.role << ')';
  }
  void operator()(const FillsRef& f) {
    out << "(fills " << f.role << ' ' << f.filler << ')';
  }
  void operator()(const OneOf& o) {
    out << "(one-of";
    for (const std::string& m : o.members) out << ' ' << m;
    out << ')';
  }
  void operator()(const SameAsRef& s) {
    out << "(same-as (";
    for (std::size_t i = 0; i < s.left.size(); ++i) {
      if (i) out << ' ';
      out << s.left[i];
    }
    out << ") (";
    for (std::size_t i = 0; i < s.right.size(); ++i) {
      if (i) out << ' ';
      out << s.right[i];
    }
    out << "))";
  }
  void operator()(const DateRangeLit& r) {
    out << "(dateRange";
    for (const DateInterval& iv : r.pairs) {
      out << " (" << iv.begin.str() << ' ' << iv.end.str() << ')';
    }
    out << ')';
  }
  void operator()(const PeriodLit& p) {
    out << "(period (" << p.month_lo << ' ' << p.month_hi << ") (" << p.day_lo
        << ' ' << p.day_hi << "))";
  }
};

}  // namespace

bool Description::operator==(const Description& other) const {
  if (node_ == other.node_) return true;
  return std::visit(EqVisitor{other.node()}, node());
}

std::string render_description(const Description& d) {
  std::ostringstream out;
  RenderVisitor v{out};
  v.render(d);
  return out.str();
}

}  // namespace dlkb
