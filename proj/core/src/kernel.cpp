#include "dlkb/kernel.hpp"

namespace dlkb {

void ImplicationQueue::post(PendingTerm t) {
  for (const PendingTerm& q : queue_) {
    if (q.tag == t.tag && q.term->equals(*t.term)) return;
  }
  queue_.push_back(std::move(t));
}

PendingTerm ImplicationQueue::pop() {
  PendingTerm t = std::move(queue_.front());
  queue_.pop_front();
  return t;
}

// --- default hook behaviour ---

bool ConstructorHooks::universal(const TermData&) const { return false; }
bool ConstructorHooks::incoherent(const TermData&) const { return false; }
bool ConstructorHooks::subsumes_different(const TermData&,
                                          const NormalizedConcept&,
                                          const Kernel&) const {
  return false;
}
PendingTerm ConstructorHooks::conjoin_to_different(PendingTerm t,
                                                   const NormalizedConcept&,
                                                   NormalizeContext&) const {
  return t;
}
void ConstructorHooks::consistent_with_different(const TermData&,
                                                 const NormalizedConcept&,
                                                 NormalizeContext&) const {}
void ConstructorHooks::find_other_implications(const TermData&,
                                               const NormalizedConcept&,
                                               NormalizeContext&,
                                               ImplicationQueue&) const {}
bool ConstructorHooks::recognizes(const TermData&, const IndividualView&,
                                  const AboxContext&, HookSink*) const {
  return false;
}
bool ConstructorHooks::recognizes_branch(const TermData&,
                                         const IndividualView&,
                                         const RoleSnapshot&,
                                         const AboxContext&, HookSink*) const {
  return false;
}
bool ConstructorHooks::consistent_w_asserting(const TermData&,
                                              const IndividualView&,
                                              const AboxContext&,
                                              HookSink*) const {
  return false;
}
bool ConstructorHooks::consistent_w_filling(const TermData&,
                                            const IndividualView&,
                                            const std::string&,
                                            const std::string&,
                                            const AboxContext&,
                                            HookSink*) const {
  return false;
}
bool ConstructorHooks::consistent_w_closing(const TermData&,
                                            const IndividualView&,
                                            const std::string&,
                                            const AboxContext&,
                                            HookSink*) const {
  return false;
}
void ConstructorHooks::infer_from_asserting(const TermData&,
                                            const IndividualView&,
                                            const AboxContext&,
                                            HookSink&) const {}
void ConstructorHooks::infer_from_filling(const TermData&,
                                          const IndividualView&,
                                          const std::string&,
                                          const std::string&,
                                          const AboxContext&,
                                          HookSink&) const {}
void ConstructorHooks::infer_from_closing(const TermData&,
                                          const IndividualView&,
                                          const std::string&,
                                          const AboxContext&,
                                          HookSink&) const {}
void ConstructorHooks::redo_infer(const TermData&, const IndividualView&,
                                  const AboxContext&, HookSink&) const {}

// --- registry ---

void ConstructorRegistry::register_constructor(
    std::unique_ptr<ConstructorHooks> hooks) {
  std::string tag(hooks->tag());
  auto [it, inserted] = hooks_.emplace(tag, std::move(hooks));
  if (!inserted) {
    throw ScopeError("constructor tag '" + tag + "' already registered");
  }
}

const ConstructorHooks* ConstructorRegistry::find(const std::string& tag) const {
  auto it = hooks_.find(tag);
  return it == hooks_.end() ? nullptr : it->second.get();
}

const ConstructorHooks& ConstructorRegistry::at(const std::string& tag) const {
  const ConstructorHooks* h = find(tag);
  if (!h) throw ScopeError("no constructor registered for tag '" + tag + "'");
  return *h;
}

const ConstructorHooks* ConstructorRegistry::find_for(
    const Description& d) const {
  for (const auto& [tag, hooks] : hooks_) {
    if (hooks->accepts(d)) return hooks.get();
  }
  return nullptr;
}

// --- kernel ---

void Kernel::conjoin_pending(PendingTerm t, NormalizedConcept& onto,
                             NormalizeContext& ctx,
                             ImplicationQueue& todo) const {
  ctx.budget.spend();
  const ConstructorHooks& h = registry_.at(t.tag);
  onto.merge_kind(h.value_kind());
  if (h.universal(*t.term)) return;  // contributes only its value kind
  if (h.incoherent(*t.term)) {
    throw IncoherentError("term of constructor '" + t.tag + "' is incoherent");
  }
  ComponentKey key{t.tag, t.term->role()};
  if (const TermData* old = onto.find(key)) {
    if (h.subsumes_same(*t.term, *old, *this)) return;  // redundant, skipped
    t.term = h.conjoin_to_same(*t.term, *old, ctx);
  }
  if (h.subsumes_different(*t.term, onto, *this)) return;  // redundant
  PendingTerm stronger = h.conjoin_to_different(std::move(t), onto, ctx);
  if (stronger.tag != key.tag) {
    // The strengthened description uses another constructor; queue it for
    // later processing instead of storing it here.
    todo.post(std::move(stronger));
    return;
  }
  if (h.universal(*stronger.term)) return;
  if (h.incoherent(*stronger.term)) {
    throw IncoherentError("term of constructor '" + key.tag +
                          "' became incoherent");
  }
  h.consistent_with_different(*stronger.term, onto, ctx);
  key.role = stronger.term->role();
  onto.put(key, stronger.term);
  h.find_other_implications(*stronger.term, onto, ctx, todo);
}

void Kernel::drain(NormalizedConcept& onto, NormalizeContext& ctx,
                   ImplicationQueue& todo) const {
  while (!todo.empty()) {
    conjoin_pending(todo.pop(), onto, ctx, todo);
  }
}

void Kernel::normalize_into(const Description& d, NormalizedConcept& onto,
                            NormalizeContext& ctx,
                            ImplicationQueue& todo) const {
  ctx.budget.spend();
  if (d.get_if<ThingRef>()) return;
  if (d.get_if<NothingRef>()) {
    throw IncoherentError("NOTHING");
  }
  if (d.get_if<AnyDateRef>()) {
    onto.merge_kind(ValueKind::DateValue);
    return;
  }
  if (const NameRef* n = d.get_if<NameRef>()) {
    const NormalizedConcept* stored = ctx.lookup(n->name);
    if (!stored) {
      throw ScopeError("undeclared concept name '" + n->name + "'");
    }
    // Told-information substitution: the stored normal form stands in for
    // the name.
    if (stored->incoherent()) throw IncoherentError(n->name);
    onto.merge_kind(stored->kind());
    for (const std::string& atom : stored->atoms()) onto.add_atom(atom);
    for (const auto& [key, term] : stored->components()) {
      conjoin_pending(PendingTerm{key.tag, term}, onto, ctx, todo);
      drain(onto, ctx, todo);
    }
    return;
  }
  if (const And* a = d.get_if<And>()) {
    for (const Description& c : a->args) {
      normalize_into(c, onto, ctx, todo);
    }
    return;
  }
  const ConstructorHooks* h = registry_.find_for(d);
  if (!h) {
    throw ScopeError("no constructor registered for '" +
                     render_description(d) + "'");
  }
  ImplicationQueue fresh;
  h->normalize_term(d, ctx, fresh);
  while (!fresh.empty()) {
    conjoin_pending(fresh.pop(), onto, ctx, todo);
    drain(onto, ctx, todo);
  }
}

NormalizedConcept Kernel::normalize(const Description& d,
                                    const ConceptLookup& lookup,
                                    Budget& budget) const {
  NormalizedConcept nd;  // a copy of NormalFormTHING
  NormalizeContext ctx{*this, lookup, budget};
  ImplicationQueue todo;
  normalize_into(d, nd, ctx, todo);
  drain(nd, ctx, todo);
  return nd;
}

void Kernel::conjoin(const NormalizedConcept& from, NormalizedConcept& onto,
                     const ConceptLookup& lookup, Budget& budget) const {
  if (from.incoherent()) throw IncoherentError("conjoining NOTHING");
  NormalizeContext ctx{*this, lookup, budget};
  ImplicationQueue todo;
  onto.merge_kind(from.kind());
  for (const std::string& atom : from.atoms()) onto.add_atom(atom);
  for (const auto& [key, term] : from.components()) {
    conjoin_pending(PendingTerm{key.tag, term}, onto, ctx, todo);
    drain(onto, ctx, todo);
  }
}

bool Kernel::subsumes(const NormalizedConcept& hi,
                      const NormalizedConcept& low) const {
  if (low.incoherent()) return true;  // NOTHING is below everything
  if (hi.incoherent()) return false;
  if (hi.is_thing()) return true;
  if (hi.kind() != ValueKind::Unknown && hi.kind() != low.kind()) return false;
  for (const std::string& atom : hi.atoms()) {
    if (!low.atoms().contains(atom)) return false;
  }
  for (const auto& [key, term] : hi.components()) {
    const ConstructorHooks& h = registry_.at(key.tag);
    const TermData* lowTerm = low.find(key);
    bool ok = (lowTerm && h.subsumes_same(*term, *lowTerm, *this)) ||
              h.subsumes_different(*term, low, *this);
    if (!ok) return false;
  }
  return true;
}

}  // namespace dlkb
