#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlkb/hooks.hpp"
#include "dlkb/normal_form.hpp"

namespace dlkb {

// Normalized terms of the core constructors.  These are shared across hook
// bundles because several rules read a neighbouring constructor's term
// (e.g. some strengthens its members with the all restriction of the same
// role).

struct AllTerm : TermData {
  std::string bound_role;
  NormalizedConcept restriction;  // may be the NOTHING normal form

  const std::string& role() const override { return bound_role; }
  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

struct SomeTerm : TermData {
  std::string bound_role;
  // Antichain: no member subsumes another; members sorted by rendering.
  std::vector<NormalizedConcept> members;

  const std::string& role() const override { return bound_role; }
  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

struct BoundsTerm : TermData {
  std::string bound_role;
  std::optional<unsigned> lower;  // at-least
  std::optional<unsigned> upper;  // at-most

  const std::string& role() const override { return bound_role; }
  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

struct FillsTerm : TermData {
  std::string bound_role;
  std::vector<std::string> fillers;  // sorted, duplicate-free, non-empty

  const std::string& role() const override { return bound_role; }
  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

struct OneOfTerm : TermData {
  std::vector<std::string> members;  // sorted, duplicate-free

  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;
};

inline constexpr std::string_view kAllTag = "all";
inline constexpr std::string_view kSomeTag = "some";
inline constexpr std::string_view kBoundsTag = "bounds";
inline constexpr std::string_view kFillsTag = "fills";
inline constexpr std::string_view kOneOfTag = "one-of";

// Typed component access; the tag guarantees the payload type.
template <typename T>
const T* term_as(const NormalizedConcept& nc, std::string_view tag,
                 const std::string& role = "") {
  const TermData* t = nc.find(std::string(tag), role);
  return t ? static_cast<const T*>(t) : nullptr;
}

std::unique_ptr<ConstructorHooks> all_hooks();
std::unique_ptr<ConstructorHooks> some_hooks();
std::unique_ptr<ConstructorHooks> bounds_hooks();  // at-least and at-most
std::unique_ptr<ConstructorHooks> fills_hooks();
std::unique_ptr<ConstructorHooks> oneof_hooks();

// Size of the restriction's denotation when it is finite and countable:
// a one-of member count, a date range day count, or 0 for an incoherent
// restriction.  nullopt when unbounded.
std::optional<long> finite_extent(const NormalizedConcept& nc);

}  // namespace dlkb
