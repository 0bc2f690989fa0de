#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlkb/ast.hpp"
#include "dlkb/dates.hpp"
#include "dlkb/normal_form.hpp"
#include "dlkb/signals.hpp"
#include "dlkb/term.hpp"

namespace dlkb {

class Kernel;

// Queue of normalized terms pending conjunction onto a concept under
// construction.  Drained to a fixpoint before normalization completes;
// duplicates are eliminated.
class ImplicationQueue {
 public:
  void post(PendingTerm t);
  bool empty() const { return queue_.empty(); }
  PendingTerm pop();

 private:
  std::deque<PendingTerm> queue_;
};

// Resolves a declared concept name to its stored normal form; null when the
// name is unknown (callers scope-check first).
using ConceptLookup =
    std::function<const NormalizedConcept*(const std::string&)>;

struct NormalizeContext {
  const Kernel& kernel;
  const ConceptLookup& lookup;
  Budget& budget;
};

// ---------------------------------------------------------------------------
// Individual-level interfaces.  The A-box implements these; hooks see one
// individual's state through IndividualView and reach the rest of the KB
// through AboxContext.  Side effects (inferred updates, dependency links) go
// through HookSink so that queries can run the same code with a null sink.

class IndividualView {
 public:
  virtual ~IndividualView() = default;
  virtual const std::string& id() const = 0;
  virtual const NormalizedConcept& descriptor() const = 0;
  virtual const std::vector<std::string>& fillers(const std::string& role) const = 0;
  virtual bool is_closed(const std::string& role) const = 0;
  virtual std::optional<Date> date_value() const = 0;
};

struct RoleSnapshot {
  const std::vector<std::string>& fillers;
  bool closed;
};

enum class DepKind { Recognize, Consistent, Infer };

struct InternalUpdate {
  enum class Kind { Member, Fill, Close };
  Kind kind;
  std::string individual;
  std::string role;    // Fill/Close
  std::string filler;  // Fill
  std::shared_ptr<const NormalizedConcept> concept_nf;  // Member
};

class HookSink {
 public:
  virtual ~HookSink() = default;
  virtual void post_update(InternalUpdate u) = 0;
  // Records "a pending check about `to` may be unblocked by new information
  // on `from`".
  virtual void post_dependency(DepKind kind, const std::string& from,
                               const std::string& to, std::string context) = 0;
};

class AboxContext {
 public:
  virtual ~AboxContext() = default;
  virtual const IndividualView* individual(const std::string& id) const = 0;
  // Structural recognition of b as a member of nc (told information only);
  // posts Recognize dependencies through sink when blocked.
  virtual bool recognizes(const std::string& id, const NormalizedConcept& nc,
                          HookSink* sink) const = 0;
  // True when conjoining nc onto b's state is provably contradictory.
  // Never mutates.
  virtual bool definitely_inconsistent(const std::string& id,
                                       const NormalizedConcept& nc) const = 0;
};

// ---------------------------------------------------------------------------
// The per-constructor hook bundle.  Concept-level hooks implement the
// normalize/conjoin/subsume skeleton; individual-level hooks implement
// recognition, consistency and propagation.  Defaults: universal?/incoherent?/
// subsumes_different? answer false, conjoin_to_different is the identity,
// find_other_implications and infer_from_* do nothing, and consistent_w_*
// answer "unable to prove" without signaling.

class ConstructorHooks {
 public:
  virtual ~ConstructorHooks() = default;

  virtual std::string_view tag() const = 0;
  virtual bool is_branch() const = 0;
  virtual ValueKind value_kind() const { return ValueKind::Object; }

  // True when this bundle normalizes the given parsed node.
  virtual bool accepts(const Description& d) const = 0;
  // Translate a parsed node into normalized terms posted onto the queue.
  // May signal IncoherentError (e.g. some over an incoherent restriction).
  virtual void normalize_term(const Description& d, NormalizeContext& ctx,
                              ImplicationQueue& todo) const = 0;

  virtual bool universal(const TermData& t) const;
  virtual bool incoherent(const TermData& t) const;
  virtual bool subsumes_same(const TermData& hi, const TermData& low,
                             const Kernel& kernel) const = 0;
  // Merge t with the previously stored term; may signal IncoherentError.
  virtual TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                                  NormalizeContext& ctx) const = 0;
  virtual bool subsumes_different(const TermData& t,
                                  const NormalizedConcept& low,
                                  const Kernel& kernel) const;
  // Strengthen t using other components; a result with a different tag is
  // posted back to the queue by the skeleton.
  virtual PendingTerm conjoin_to_different(PendingTerm t,
                                           const NormalizedConcept& onto,
                                           NormalizeContext& ctx) const;
  // Signal IncoherentError if t cannot coexist with the rest of onto.
  virtual void consistent_with_different(const TermData& t,
                                         const NormalizedConcept& onto,
                                         NormalizeContext& ctx) const;
  virtual void find_other_implications(const TermData& t,
                                       const NormalizedConcept& onto,
                                       NormalizeContext& ctx,
                                       ImplicationQueue& todo) const;

  // --- individual level ---
  virtual bool recognizes(const TermData& t, const IndividualView& b,
                          const AboxContext& kb, HookSink* sink) const;
  virtual bool recognizes_branch(const TermData& t, const IndividualView& b,
                                 const RoleSnapshot& rs, const AboxContext& kb,
                                 HookSink* sink) const;
  // Return true = provably consistent, false = unable to prove (dependencies
  // may be posted), throw InconsistentError = definite contradiction.
  virtual bool consistent_w_asserting(const TermData& t,
                                      const IndividualView& b,
                                      const AboxContext& kb,
                                      HookSink* sink) const;
  virtual bool consistent_w_filling(const TermData& t, const IndividualView& b,
                                    const std::string& role,
                                    const std::string& filler,
                                    const AboxContext& kb,
                                    HookSink* sink) const;
  virtual bool consistent_w_closing(const TermData& t, const IndividualView& b,
                                    const std::string& role,
                                    const AboxContext& kb,
                                    HookSink* sink) const;
  virtual void infer_from_asserting(const TermData& t, const IndividualView& b,
                                    const AboxContext& kb,
                                    HookSink& sink) const;
  virtual void infer_from_filling(const TermData& t, const IndividualView& b,
                                  const std::string& role,
                                  const std::string& filler,
                                  const AboxContext& kb, HookSink& sink) const;
  virtual void infer_from_closing(const TermData& t, const IndividualView& b,
                                  const std::string& role,
                                  const AboxContext& kb, HookSink& sink) const;
  // Re-run propagation after a dependency fired.  Count-only constructors
  // keep the default no-op.
  virtual void redo_infer(const TermData& t, const IndividualView& b,
                          const AboxContext& kb, HookSink& sink) const;
};

// Frozen after construction of the kernel; dispatch is by tag, iteration is
// in tag order.
class ConstructorRegistry {
 public:
  // Throws ScopeError on a duplicate tag.
  void register_constructor(std::unique_ptr<ConstructorHooks> hooks);

  const ConstructorHooks* find(const std::string& tag) const;
  const ConstructorHooks& at(const std::string& tag) const;
  const ConstructorHooks* find_for(const Description& d) const;

  const std::map<std::string, std::unique_ptr<ConstructorHooks>,
                 std::less<>>& all() const {
    return hooks_;
  }

 private:
  std::map<std::string, std::unique_ptr<ConstructorHooks>, std::less<>> hooks_;
};

// Registry with every built-in constructor: all, some, bounds (at-least and
// at-most jointly), fills, one-of, same-as, dateRange, period.
ConstructorRegistry standard_registry();

}  // namespace dlkb
