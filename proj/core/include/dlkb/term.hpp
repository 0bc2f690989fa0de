#pragma once

#include <memory>
#include <string>
#include <vector>

namespace dlkb {

// One normalized component of a concept, owned by the constructor that made
// it.  The kernel treats payloads opaquely; hooks downcast to their own type.
struct TermData {
  virtual ~TermData() = default;

  // Role this term is bound to; empty for non-branch constructors.
  virtual const std::string& role() const {
    static const std::string kNone;
    return kNone;
  }

  // Structural equality; other is guaranteed to carry the same tag.
  virtual bool equals(const TermData& other) const = 0;

  // Canonical surface forms, one string per rendered conjunct (a bounds term
  // renders as up to two forms, a some-set as one per member).
  virtual void render_forms(std::vector<std::string>& out) const = 0;
};

using TermPtr = std::shared_ptr<const TermData>;

// A normalized term awaiting conjunction, tagged with its constructor.
struct PendingTerm {
  std::string tag;
  TermPtr term;
};

}  // namespace dlkb
