#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dlkb/term.hpp"

namespace dlkb {

// What kind of value a concept ranges over.  Object and date values are
// disjoint; conjoining the two kinds is incoherent.
enum class ValueKind { Unknown, Object, DateValue };

struct ComponentKey {
  std::string tag;
  std::string role;  // empty for non-branch constructors
  auto operator<=>(const ComponentKey&) const = default;
};

// Canonical conjunction of normalized terms, one slot per (constructor, role),
// plus the set of primitive atoms the concept is told to specialize.  Values
// are immutable once normalization returns; iteration order is deterministic
// (tag, then role, lexicographic).
class NormalizedConcept {
 public:
  NormalizedConcept() = default;

  static const NormalizedConcept& thing();
  static NormalizedConcept nothing();

  bool incoherent() const { return incoherent_; }
  // Collapses to the NOTHING normal form: all components are dropped.
  void mark_incoherent();

  ValueKind kind() const { return kind_; }
  // Merges a value kind; throws IncoherentError on Object vs DateValue.
  void merge_kind(ValueKind k);

  bool is_thing() const {
    return !incoherent_ && components_.empty() && atoms_.empty() &&
           kind_ == ValueKind::Unknown;
  }

  const TermData* find(const ComponentKey& key) const;
  const TermData* find(const std::string& tag, const std::string& role = "") const;
  void put(const ComponentKey& key, TermPtr term);
  void erase(const ComponentKey& key);

  const std::map<ComponentKey, TermPtr>& components() const {
    return components_;
  }

  const std::set<std::string>& atoms() const { return atoms_; }
  void add_atom(const std::string& atom);

  // Roles mentioned by branch components, sorted.
  std::vector<std::string> restricted_roles() const;

  bool structurally_equal(const NormalizedConcept& other) const;

  // Canonical surface rendering: THING / NOTHING / ANY-OBJECT / ANY-DATE /
  // a single form / (and form...), forms sorted.
  std::string render() const;

 private:
  std::map<ComponentKey, TermPtr> components_;
  std::set<std::string> atoms_;
  ValueKind kind_ = ValueKind::Unknown;
  bool incoherent_ = false;
};

}  // namespace dlkb
