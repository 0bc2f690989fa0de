#pragma once

#include "dlkb/ast.hpp"
#include "dlkb/hooks.hpp"
#include "dlkb/normal_form.hpp"

namespace dlkb {

// The conjunction-driven engine: Normalize, Conjoin and Subsumes? over
// normalized concepts, dispatching per-constructor work through the
// registry.  Read-only after construction; normalization mutates only the
// concept being built.
class Kernel {
 public:
  explicit Kernel(ConstructorRegistry registry)
      : registry_(std::move(registry)) {}

  const ConstructorRegistry& registry() const { return registry_; }

  // Builds the normal form of d.  Signals IncoherentError when the concept
  // denotes NOTHING and ResourceLimitError past the step budget.  All names
  // in d must resolve through lookup.
  NormalizedConcept normalize(const Description& d, const ConceptLookup& lookup,
                              Budget& budget) const;

  // onto's denotation becomes the intersection.  On IncoherentError onto is
  // left unusable; the caller must discard it.
  void conjoin(const NormalizedConcept& from, NormalizedConcept& onto,
               const ConceptLookup& lookup, Budget& budget) const;

  // The generic per-constructor conjunction skeleton; further implications
  // are appended to todo, which the caller drains.
  void conjoin_pending(PendingTerm t, NormalizedConcept& onto,
                       NormalizeContext& ctx, ImplicationQueue& todo) const;

  // Structural subsumption: true iff hi's denotation contains low's, as far
  // as the registered constructors can tell.  Sound; completeness is
  // per-constructor.
  bool subsumes(const NormalizedConcept& hi, const NormalizedConcept& low) const;

  bool equivalent(const NormalizedConcept& a, const NormalizedConcept& b) const {
    return subsumes(a, b) && subsumes(b, a);
  }

 private:
  void drain(NormalizedConcept& onto, NormalizeContext& ctx,
             ImplicationQueue& todo) const;
  void normalize_into(const Description& d, NormalizedConcept& onto,
                      NormalizeContext& ctx, ImplicationQueue& todo) const;

  ConstructorRegistry registry_;
};

}  // namespace dlkb
