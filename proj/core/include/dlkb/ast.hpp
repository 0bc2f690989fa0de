#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dlkb/dates.hpp"

namespace dlkb {

// Parsed concept expressions.  A Description is an immutable value; copies
// share structure.  One alternative per constructor of the surface grammar.

class Description;
struct DescriptionNode;

struct ThingRef {};
struct NothingRef {};
struct AnyDateRef {};

struct NameRef {
  std::string name;
};

struct And {
  std::vector<Description> args;  // >= 1
};

struct All {
  std::string role;
  std::vector<Description> restriction;  // exactly 1; vector for layout only
};

struct Some {
  std::string role;
  std::vector<Description> restriction;  // exactly 1
};

struct AtLeast {
  unsigned count;
  std::string role;
};

struct AtMost {
  unsigned count;
  std::string role;
};

struct FillsRef {
  std::string role;
  std::string filler;
};

struct OneOf {
  std::vector<std::string> members;  // duplicate-free, stored order
};

struct SameAsRef {
  std::vector<std::string> left;   // non-empty attribute chain
  std::vector<std::string> right;  // non-empty attribute chain
};

struct DateRangeLit {
  std::vector<DateInterval> pairs;  // raw; may be unsorted or overlapping
};

struct PeriodLit {
  int month_lo, month_hi;
  int day_lo, day_hi;
};

class Description {
 public:
  using Node =
      std::variant<ThingRef, NothingRef, AnyDateRef, NameRef, And, All, Some,
                   AtLeast, AtMost, FillsRef, OneOf, SameAsRef, DateRangeLit,
                   PeriodLit>;

  template <typename Alt>
  Description(Alt alt);  // implicit from any alternative

  const Node& node() const;

  template <typename Alt>
  const Alt* get_if() const;

  bool operator==(const Description& other) const;

  // Convenience factories, mostly for tests and internal rewriting.
  static Description thing() { return Description(ThingRef{}); }
  static Description nothing() { return Description(NothingRef{}); }
  static Description any_date() { return Description(AnyDateRef{}); }
  static Description name(std::string n) { return Description(NameRef{std::move(n)}); }
  static Description conj(std::vector<Description> args);
  static Description all(std::string role, Description c);
  static Description some(std::string role, Description c);
  static Description at_least(unsigned n, std::string role);
  static Description at_most(unsigned n, std::string role);
  static Description fills(std::string role, std::string filler);
  static Description one_of(std::vector<std::string> members);
  static Description same_as(std::vector<std::string> l, std::vector<std::string> r);
  static Description date_range(std::vector<DateInterval> pairs);
  static Description period(int ml, int mh, int dl, int dh);

 private:
  std::shared_ptr<const DescriptionNode> node_;
};

struct DescriptionNode {
  Description::Node v;
};

template <typename Alt>
Description::Description(Alt alt)
    : node_(std::make_shared<const DescriptionNode>(
          DescriptionNode{Node(std::move(alt))})) {}

inline const Description::Node& Description::node() const { return node_->v; }

template <typename Alt>
const Alt* Description::get_if() const {
  return std::get_if<Alt>(&node_->v);
}

// Canonical text; parse_description maps it back to an identical tree.
std::string render_description(const Description& d);

}  // namespace dlkb
