#include "dlkb/core_constructors.hpp"

#include <algorithm>

#include "dlkb/date_constructors.hpp"
#include "dlkb/kernel.hpp"
#include "dlkb/sameas.hpp"

namespace dlkb {

namespace {

template <typename T>
const T& cast(const TermData& t) {
  return static_cast<const T&>(t);
}

std::shared_ptr<const NormalizedConcept> share(NormalizedConcept nc) {
  return std::make_shared<const NormalizedConcept>(std::move(nc));
}

NormalizedConcept conjoin_copy(const NormalizedConcept& a,
                               const NormalizedConcept& b,
                               NormalizeContext& ctx) {
  // Conjunction on a copy; an incoherent result collapses to NOTHING rather
  // than propagating, callers decide what incoherence means for them.
  NormalizedConcept out = a;
  try {
    ctx.kernel.conjoin(b, out, ctx.lookup, ctx.budget);
  } catch (const IncoherentError&) {
    out.mark_incoherent();
  }
  return out;
}

// Antichain insertion for some-sets: a member implied by an existing member
// is dropped; members implied by the new one are evicted.  Mutually
// subsuming members keep the earlier-inserted one.
void insert_member(std::vector<NormalizedConcept>& set, NormalizedConcept m,
                   const Kernel& kernel) {
  for (const NormalizedConcept& c : set) {
    if (kernel.subsumes(m, c)) return;
  }
  std::erase_if(set, [&](const NormalizedConcept& c) {
    return kernel.subsumes(c, m);
  });
  set.push_back(std::move(m));
}

void sort_members(std::vector<NormalizedConcept>& set) {
  std::sort(set.begin(), set.end(),
            [](const NormalizedConcept& a, const NormalizedConcept& b) {
              return a.render() < b.render();
            });
}

TermPtr make_bounds(std::string role, std::optional<unsigned> lower,
                    std::optional<unsigned> upper) {
  auto t = std::make_shared<BoundsTerm>();
  t->bound_role = std::move(role);
  t->lower = lower;
  t->upper = upper;
  return t;
}

TermPtr make_some(std::string role, std::vector<NormalizedConcept> members) {
  auto t = std::make_shared<SomeTerm>();
  t->bound_role = std::move(role);
  t->members = std::move(members);
  sort_members(t->members);
  return t;
}

TermPtr make_all(std::string role, NormalizedConcept restriction) {
  auto t = std::make_shared<AllTerm>();
  t->bound_role = std::move(role);
  t->restriction = std::move(restriction);
  return t;
}

// all(p, one-of(S)) together with at-least(|S|, p): every member of S is a
// filler and the role closes.  Triggered from whichever side arrives later.
void maybe_complete_fillers(const IndividualView& b, const std::string& role,
                            HookSink& sink) {
  const auto* all = term_as<AllTerm>(b.descriptor(), kAllTag, role);
  if (!all) return;
  const auto* oo = term_as<OneOfTerm>(all->restriction, kOneOfTag);
  if (!oo) return;
  const auto* bounds = term_as<BoundsTerm>(b.descriptor(), kBoundsTag, role);
  if (!bounds || !bounds->lower) return;
  if (*bounds->lower < oo->members.size()) return;
  for (const std::string& m : oo->members) {
    sink.post_update({InternalUpdate::Kind::Fill, b.id(), role, m, nullptr});
  }
  sink.post_update({InternalUpdate::Kind::Close, b.id(), role, "", nullptr});
}

}  // namespace

// --- term structure ---

bool AllTerm::equals(const TermData& other) const {
  const auto& o = cast<AllTerm>(other);
  return bound_role == o.bound_role &&
         restriction.structurally_equal(o.restriction);
}

void AllTerm::render_forms(std::vector<std::string>& out) const {
  out.push_back("(all " + bound_role + ' ' + restriction.render() + ')');
}

bool SomeTerm::equals(const TermData& other) const {
  const auto& o = cast<SomeTerm>(other);
  if (bound_role != o.bound_role || members.size() != o.members.size()) {
    return false;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].structurally_equal(o.members[i])) return false;
  }
  return true;
}

void SomeTerm::render_forms(std::vector<std::string>& out) const {
  for (const NormalizedConcept& m : members) {
    out.push_back("(some " + bound_role + ' ' + m.render() + ')');
  }
}

bool BoundsTerm::equals(const TermData& other) const {
  const auto& o = cast<BoundsTerm>(other);
  return bound_role == o.bound_role && lower == o.lower && upper == o.upper;
}

void BoundsTerm::render_forms(std::vector<std::string>& out) const {
  if (lower) {
    out.push_back("(at-least " + std::to_string(*lower) + ' ' + bound_role +
                  ')');
  }
  if (upper) {
    out.push_back("(at-most " + std::to_string(*upper) + ' ' + bound_role +
                  ')');
  }
}

bool FillsTerm::equals(const TermData& other) const {
  const auto& o = cast<FillsTerm>(other);
  return bound_role == o.bound_role && fillers == o.fillers;
}

void FillsTerm::render_forms(std::vector<std::string>& out) const {
  for (const std::string& f : fillers) {
    out.push_back("(fills " + bound_role + ' ' + f + ')');
  }
}

bool OneOfTerm::equals(const TermData& other) const {
  return members == cast<OneOfTerm>(other).members;
}

void OneOfTerm::render_forms(std::vector<std::string>& out) const {
  std::string s = "(one-of";
  for (const std::string& m : members) {
    s += ' ';
    s += m;
  }
  s += ')';
  out.push_back(std::move(s));
}

std::optional<long> finite_extent(const NormalizedConcept& nc) {
  if (nc.incoherent()) return 0;
  if (const auto* oo = term_as<OneOfTerm>(nc, kOneOfTag)) {
    return static_cast<long>(oo->members.size());
  }
  if (const auto* dr = term_as<DateRangeTerm>(nc, kDateRangeTag)) {
    return range_count_days(dr->range);
  }
  return std::nullopt;
}

// --- all ---

namespace {

class AllHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kAllTag; }
  bool is_branch() const override { return true; }

  bool accepts(const Description& d) const override {
    return d.get_if<All>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext& ctx,
                      ImplicationQueue& todo) const override {
    const All& a = *d.get_if<All>();
    NormalizedConcept vr;
    try {
      vr = ctx.kernel.normalize(a.restriction.front(), ctx.lookup, ctx.budget);
    } catch (const IncoherentError&) {
      // all(p, NOTHING) is legal; the at-most(0) companion is posted by
      // find_other_implications once the term is stored.
      vr.mark_incoherent();
    }
    todo.post({std::string(kAllTag), make_all(a.role, std::move(vr))});
  }

  bool universal(const TermData& t) const override {
    return cast<AllTerm>(t).restriction.is_thing();
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel& kernel) const override {
    return kernel.subsumes(cast<AllTerm>(hi).restriction,
                           cast<AllTerm>(low).restriction);
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext& ctx) const override {
    const auto& a = cast<AllTerm>(t);
    const auto& b = cast<AllTerm>(old);
    if (a.restriction.incoherent()) return make_all(a.bound_role, a.restriction);
    return make_all(a.bound_role,
                    conjoin_copy(b.restriction, a.restriction, ctx));
  }

  void consistent_with_different(const TermData& t,
                                 const NormalizedConcept& onto,
                                 NormalizeContext&) const override {
    const auto& a = cast<AllTerm>(t);
    const auto* oo = term_as<OneOfTerm>(a.restriction, kOneOfTag);
    if (!oo) return;
    const auto* f = term_as<FillsTerm>(onto, kFillsTag, a.bound_role);
    if (!f) return;
    for (const std::string& filler : f->fillers) {
      if (!std::binary_search(oo->members.begin(), oo->members.end(), filler)) {
        throw IncoherentError("filler '" + filler +
                              "' outside one-of restriction on role '" +
                              a.bound_role + "'");
      }
    }
  }

  void find_other_implications(const TermData& t, const NormalizedConcept& onto,
                               NormalizeContext& ctx,
                               ImplicationQueue& todo) const override {
    const auto& a = cast<AllTerm>(t);
    if (a.restriction.incoherent()) {
      todo.post({std::string(kBoundsTag), make_bounds(a.bound_role, {}, 0u)});
    } else if (std::optional<long> n = finite_extent(a.restriction)) {
      todo.post({std::string(kBoundsTag),
                 make_bounds(a.bound_role, {},
                             static_cast<unsigned>(*n))});
    }
    const auto* b = term_as<BoundsTerm>(onto, kBoundsTag, a.bound_role);
    if (b && b->lower && *b->lower >= 1 && !a.restriction.incoherent()) {
      todo.post({std::string(kSomeTag),
                 make_some(a.bound_role, {a.restriction})});
    }
    // Members of an existing some-set must pick up the new restriction.
    if (const auto* s = term_as<SomeTerm>(onto, kSomeTag, a.bound_role)) {
      for (const NormalizedConcept& m : s->members) {
        if (ctx.kernel.subsumes(a.restriction, m)) continue;
        todo.post({std::string(kSomeTag),
                   make_some(a.bound_role,
                             {conjoin_copy(m, a.restriction, ctx)})});
      }
    }
  }

  bool recognizes_branch(const TermData& t, const IndividualView& b,
                         const RoleSnapshot& rs, const AboxContext& kb,
                         HookSink* sink) const override {
    const auto& a = cast<AllTerm>(t);
    if (!rs.closed) return false;  // more fillers might come later
    for (const std::string& f : rs.fillers) {
      if (!kb.recognizes(f, a.restriction, sink)) {
        if (sink) {
          sink->post_dependency(DepKind::Recognize, f, b.id(),
                                "all " + a.bound_role);
        }
        return false;
      }
    }
    return true;
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext& kb,
                              HookSink* sink) const override {
    const auto& a = cast<AllTerm>(t);
    bool proven = true;
    for (const std::string& f : b.fillers(a.bound_role)) {
      if (kb.definitely_inconsistent(f, a.restriction)) {
        throw InconsistentError(b.id() + "." + a.bound_role,
                                "filler '" + f +
                                    "' contradicts value restriction");
      }
      if (!kb.recognizes(f, a.restriction, nullptr)) {
        proven = false;
        if (sink) {
          sink->post_dependency(DepKind::Consistent, f, b.id(),
                                "all " + a.bound_role);
        }
      }
    }
    return proven;
  }

  bool consistent_w_filling(const TermData& t, const IndividualView& b,
                            const std::string& role, const std::string& filler,
                            const AboxContext& kb,
                            HookSink* sink) const override {
    const auto& a = cast<AllTerm>(t);
    if (role != a.bound_role) return true;
    if (kb.definitely_inconsistent(filler, a.restriction)) {
      throw InconsistentError(
          b.id() + "." + role,
          "filler '" + filler + "' contradicts value restriction");
    }
    if (kb.recognizes(filler, a.restriction, nullptr)) return true;
    if (sink) {
      sink->post_dependency(DepKind::Consistent, filler, b.id(),
                            "all " + a.bound_role);
    }
    return false;
  }

  bool consistent_w_closing(const TermData&, const IndividualView&,
                            const std::string&, const AboxContext&,
                            HookSink*) const override {
    return true;
  }

  void infer_from_asserting(const TermData& t, const IndividualView& b,
                            const AboxContext&, HookSink& sink) const override {
    const auto& a = cast<AllTerm>(t);
    auto restriction = share(a.restriction);
    for (const std::string& f : b.fillers(a.bound_role)) {
      sink.post_update({InternalUpdate::Kind::Member, f, "", "", restriction});
    }
    maybe_complete_fillers(b, a.bound_role, sink);
  }

  void infer_from_filling(const TermData& t, const IndividualView& b,
                          const std::string& role, const std::string& filler,
                          const AboxContext&, HookSink& sink) const override {
    const auto& a = cast<AllTerm>(t);
    if (role != a.bound_role) return;
    // Only the new filler needs the restriction; the others were handled
    // when the restriction arrived.
    sink.post_update({InternalUpdate::Kind::Member, filler, "", "",
                      share(a.restriction)});
  }

  void redo_infer(const TermData& t, const IndividualView& b,
                  const AboxContext& kb, HookSink& sink) const override {
    infer_from_asserting(t, b, kb, sink);
  }
};

// --- some ---

class SomeHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kSomeTag; }
  bool is_branch() const override { return true; }

  bool accepts(const Description& d) const override {
    return d.get_if<Some>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext& ctx,
                      ImplicationQueue& todo) const override {
    const Some& s = *d.get_if<Some>();
    // some(p, NOTHING) is incoherent; the restriction's IncoherentError
    // propagates, since NOTHING has no instances.
    NormalizedConcept vr =
        ctx.kernel.normalize(s.restriction.front(), ctx.lookup, ctx.budget);
    if (vr.is_thing()) {
      // some(p, THING) is just at-least(1, p).
      todo.post({std::string(kBoundsTag), make_bounds(s.role, 1u, {})});
      return;
    }
    todo.post({std::string(kSomeTag), make_some(s.role, {std::move(vr)})});
  }

  bool incoherent(const TermData& t) const override {
    for (const NormalizedConcept& m : cast<SomeTerm>(t).members) {
      if (m.incoherent()) return true;
    }
    return false;
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel& kernel) const override {
    const auto& h = cast<SomeTerm>(hi);
    const auto& l = cast<SomeTerm>(low);
    for (const NormalizedConcept& d : h.members) {
      bool witnessed = false;
      for (const NormalizedConcept& c : l.members) {
        if (kernel.subsumes(d, c)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
    return true;
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext& ctx) const override {
    const auto& a = cast<SomeTerm>(t);
    const auto& b = cast<SomeTerm>(old);
    std::vector<NormalizedConcept> merged = b.members;
    for (const NormalizedConcept& m : a.members) {
      insert_member(merged, m, ctx.kernel);
    }
    return make_some(a.bound_role, std::move(merged));
  }

  PendingTerm conjoin_to_different(PendingTerm t, const NormalizedConcept& onto,
                                   NormalizeContext& ctx) const override {
    const auto& s = cast<SomeTerm>(*t.term);
    const auto* a = term_as<AllTerm>(onto, kAllTag, s.bound_role);
    if (!a) return t;
    std::vector<NormalizedConcept> strengthened;
    for (const NormalizedConcept& m : s.members) {
      if (ctx.kernel.subsumes(a->restriction, m)) {
        strengthened.push_back(m);
      } else {
        strengthened.push_back(conjoin_copy(m, a->restriction, ctx));
      }
    }
    std::vector<NormalizedConcept> reduced;
    for (NormalizedConcept& m : strengthened) {
      insert_member(reduced, std::move(m), ctx.kernel);
    }
    t.term = make_some(s.bound_role, std::move(reduced));
    return t;
  }

  void consistent_with_different(const TermData& t,
                                 const NormalizedConcept& onto,
                                 NormalizeContext&) const override {
    const auto& s = cast<SomeTerm>(t);
    for (const NormalizedConcept& m : s.members) {
      if (m.incoherent()) {
        throw IncoherentError("some(" + s.bound_role +
                              ", ...) restriction became incoherent");
      }
    }
    const auto* b = term_as<BoundsTerm>(onto, kBoundsTag, s.bound_role);
    if (b && b->upper && *b->upper == 0) {
      throw IncoherentError("some(" + s.bound_role + ", ...) with at-most(0, " +
                            s.bound_role + ")");
    }
  }

  bool recognizes_branch(const TermData& t, const IndividualView& b,
                         const RoleSnapshot& rs, const AboxContext& kb,
                         HookSink* sink) const override {
    const auto& s = cast<SomeTerm>(t);
    for (const NormalizedConcept& m : s.members) {
      bool witnessed = false;
      for (const std::string& f : rs.fillers) {
        if (kb.recognizes(f, m, nullptr)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        if (sink) {
          for (const std::string& f : rs.fillers) {
            sink->post_dependency(DepKind::Recognize, f, b.id(),
                                  "some " + s.bound_role);
          }
        }
        return false;
      }
    }
    return true;
  }
};

// --- at-least / at-most ---

class BoundsHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kBoundsTag; }
  bool is_branch() const override { return true; }

  bool accepts(const Description& d) const override {
    return d.get_if<AtLeast>() || d.get_if<AtMost>();
  }

  void normalize_term(const Description& d, NormalizeContext&,
                      ImplicationQueue& todo) const override {
    if (const AtLeast* al = d.get_if<AtLeast>()) {
      todo.post({std::string(kBoundsTag), make_bounds(al->role, al->count, {})});
    } else {
      const AtMost& am = *d.get_if<AtMost>();
      todo.post({std::string(kBoundsTag), make_bounds(am.role, {}, am.count)});
    }
  }

  bool universal(const TermData& t) const override {
    const auto& b = cast<BoundsTerm>(t);
    return !b.upper && (!b.lower || *b.lower == 0);
  }

  bool incoherent(const TermData& t) const override {
    const auto& b = cast<BoundsTerm>(t);
    return b.lower && b.upper && *b.lower > *b.upper;
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    const auto& h = cast<BoundsTerm>(hi);
    const auto& l = cast<BoundsTerm>(low);
    if (h.lower && (!l.lower || *l.lower < *h.lower)) return false;
    if (h.upper && (!l.upper || *l.upper > *h.upper)) return false;
    return true;
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    const auto& a = cast<BoundsTerm>(t);
    const auto& b = cast<BoundsTerm>(old);
    std::optional<unsigned> lower = a.lower;
    if (b.lower && (!lower || *b.lower > *lower)) lower = b.lower;
    std::optional<unsigned> upper = a.upper;
    if (b.upper && (!upper || *b.upper < *upper)) upper = b.upper;
    return make_bounds(a.bound_role, lower, upper);
  }

  bool subsumes_different(const TermData& t, const NormalizedConcept& low,
                          const Kernel&) const override {
    const auto& b = cast<BoundsTerm>(t);
    if (b.lower && *b.lower > 0) {
      unsigned implied = 0;
      if (term_as<SomeTerm>(low, kSomeTag, b.bound_role)) implied = 1;
      if (const auto* f = term_as<FillsTerm>(low, kFillsTag, b.bound_role)) {
        implied = std::max<unsigned>(implied, f->fillers.size());
      }
      if (implied < *b.lower) return false;
    }
    if (b.upper) {
      const auto* a = term_as<AllTerm>(low, kAllTag, b.bound_role);
      if (!a) return false;
      std::optional<long> n = finite_extent(a->restriction);
      if (!n || *n > static_cast<long>(*b.upper)) return false;
    }
    return true;
  }

  void consistent_with_different(const TermData& t,
                                 const NormalizedConcept& onto,
                                 NormalizeContext&) const override {
    const auto& b = cast<BoundsTerm>(t);
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw IncoherentError("at-least(" + std::to_string(*b.lower) + ", " +
                            b.bound_role + ") with at-most(" +
                            std::to_string(*b.upper) + ", " + b.bound_role +
                            ")");
    }
    if (b.upper) {
      const auto* f = term_as<FillsTerm>(onto, kFillsTag, b.bound_role);
      if (f && f->fillers.size() > *b.upper) {
        throw IncoherentError("more fillers than at-most(" +
                              std::to_string(*b.upper) + ", " + b.bound_role +
                              ") allows");
      }
    }
  }

  void find_other_implications(const TermData& t, const NormalizedConcept& onto,
                               NormalizeContext&,
                               ImplicationQueue& todo) const override {
    const auto& b = cast<BoundsTerm>(t);
    if (b.upper && *b.upper == 0) {
      todo.post({std::string(kAllTag),
                 make_all(b.bound_role, NormalizedConcept::nothing())});
    }
    if (b.lower && *b.lower >= 1) {
      const auto* a = term_as<AllTerm>(onto, kAllTag, b.bound_role);
      if (a && !a->restriction.incoherent()) {
        todo.post({std::string(kSomeTag),
                   make_some(b.bound_role, {a->restriction})});
      }
    }
  }

  bool recognizes_branch(const TermData& t, const IndividualView&,
                         const RoleSnapshot& rs, const AboxContext&,
                         HookSink*) const override {
    const auto& b = cast<BoundsTerm>(t);
    if (b.lower && rs.fillers.size() < *b.lower) return false;
    if (b.upper && !(rs.closed && rs.fillers.size() <= *b.upper)) return false;
    return true;
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext&, HookSink*) const override {
    const auto& bt = cast<BoundsTerm>(t);
    const auto& fillers = b.fillers(bt.bound_role);
    bool closed = b.is_closed(bt.bound_role);
    if (bt.upper && fillers.size() > *bt.upper) {
      throw InconsistentError(b.id() + "." + bt.bound_role,
                              "known fillers exceed at-most bound");
    }
    if (bt.lower && closed && fillers.size() < *bt.lower) {
      throw InconsistentError(b.id() + "." + bt.bound_role,
                              "closed role has fewer fillers than at-least");
    }
    return closed;
  }

  bool consistent_w_filling(const TermData& t, const IndividualView& b,
                            const std::string& role, const std::string&,
                            const AboxContext&, HookSink*) const override {
    const auto& bt = cast<BoundsTerm>(t);
    if (role != bt.bound_role) return true;
    if (bt.upper && b.fillers(role).size() > *bt.upper) {
      throw InconsistentError(b.id() + "." + role,
                              "known fillers exceed at-most bound");
    }
    return true;
  }

  bool consistent_w_closing(const TermData& t, const IndividualView& b,
                            const std::string& role, const AboxContext&,
                            HookSink*) const override {
    const auto& bt = cast<BoundsTerm>(t);
    if (role != bt.bound_role) return true;
    if (bt.lower && b.fillers(role).size() < *bt.lower) {
      throw InconsistentError(b.id() + "." + role,
                              "closing below at-least bound");
    }
    return true;
  }

  void infer_from_asserting(const TermData& t, const IndividualView& b,
                            const AboxContext&, HookSink& sink) const override {
    const auto& bt = cast<BoundsTerm>(t);
    derive_closure(t, b, sink);
    if (bt.lower) maybe_complete_fillers(b, bt.bound_role, sink);
  }

  void infer_from_filling(const TermData& t, const IndividualView& b,
                          const std::string& role, const std::string&,
                          const AboxContext&, HookSink& sink) const override {
    if (role == cast<BoundsTerm>(t).bound_role) derive_closure(t, b, sink);
  }

  void infer_from_closing(const TermData& t, const IndividualView& b,
                          const std::string& role, const AboxContext&,
                          HookSink& sink) const override {
    const auto& bt = cast<BoundsTerm>(t);
    if (role != bt.bound_role) return;
    post_exact_upper(b, role, sink);
  }

  // Closing a role bounds its count: membership in at-most(|fillers|, role).
  static void post_exact_upper(const IndividualView& b, const std::string& role,
                               HookSink& sink) {
    NormalizedConcept nc;
    nc.merge_kind(ValueKind::Object);
    nc.put({std::string(kBoundsTag), role},
           make_bounds(role, {},
                       static_cast<unsigned>(b.fillers(role).size())));
    sink.post_update({InternalUpdate::Kind::Member, b.id(), "", "",
                      share(std::move(nc))});
  }

 private:
  // at-most(n, p) with exactly n known fillers closes the role.
  void derive_closure(const TermData& t, const IndividualView& b,
                      HookSink& sink) const {
    const auto& bt = cast<BoundsTerm>(t);
    if (!bt.upper) return;
    if (b.is_closed(bt.bound_role)) return;
    if (b.fillers(bt.bound_role).size() == *bt.upper) {
      sink.post_update({InternalUpdate::Kind::Close, b.id(), bt.bound_role, "",
                        nullptr});
    }
  }
};

// --- fills ---

class FillsHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kFillsTag; }
  bool is_branch() const override { return true; }

  bool accepts(const Description& d) const override {
    return d.get_if<FillsRef>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext&,
                      ImplicationQueue& todo) const override {
    const FillsRef& f = *d.get_if<FillsRef>();
    auto t = std::make_shared<FillsTerm>();
    t->bound_role = f.role;
    t->fillers = {f.filler};
    todo.post({std::string(kFillsTag), std::move(t)});
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    const auto& h = cast<FillsTerm>(hi);
    const auto& l = cast<FillsTerm>(low);
    return std::includes(l.fillers.begin(), l.fillers.end(),
                         h.fillers.begin(), h.fillers.end());
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    const auto& a = cast<FillsTerm>(t);
    const auto& b = cast<FillsTerm>(old);
    auto merged = std::make_shared<FillsTerm>();
    merged->bound_role = a.bound_role;
    std::set_union(a.fillers.begin(), a.fillers.end(), b.fillers.begin(),
                   b.fillers.end(), std::back_inserter(merged->fillers));
    return merged;
  }

  void consistent_with_different(const TermData& t,
                                 const NormalizedConcept& onto,
                                 NormalizeContext&) const override {
    const auto& f = cast<FillsTerm>(t);
    const auto* b = term_as<BoundsTerm>(onto, kBoundsTag, f.bound_role);
    if (b && b->upper && f.fillers.size() > *b->upper) {
      throw IncoherentError("fills(" + f.bound_role +
                            ", ...) exceeds at-most bound");
    }
    const auto* a = term_as<AllTerm>(onto, kAllTag, f.bound_role);
    if (a) {
      if (const auto* oo = term_as<OneOfTerm>(a->restriction, kOneOfTag)) {
        for (const std::string& filler : f.fillers) {
          if (!std::binary_search(oo->members.begin(), oo->members.end(),
                                  filler)) {
            throw IncoherentError("filler '" + filler +
                                  "' outside one-of restriction on role '" +
                                  f.bound_role + "'");
          }
        }
      }
    }
  }

  void find_other_implications(const TermData& t, const NormalizedConcept&,
                               NormalizeContext&,
                               ImplicationQueue& todo) const override {
    // Unique names: n distinct fillers imply at-least(n).
    const auto& f = cast<FillsTerm>(t);
    todo.post({std::string(kBoundsTag),
               make_bounds(f.bound_role,
                           static_cast<unsigned>(f.fillers.size()), {})});
  }

  bool recognizes_branch(const TermData& t, const IndividualView&,
                         const RoleSnapshot& rs, const AboxContext&,
                         HookSink*) const override {
    const auto& f = cast<FillsTerm>(t);
    for (const std::string& x : f.fillers) {
      if (!std::binary_search(rs.fillers.begin(), rs.fillers.end(), x)) {
        return false;
      }
    }
    return true;
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext&, HookSink*) const override {
    const auto& f = cast<FillsTerm>(t);
    const auto& known = b.fillers(f.bound_role);
    bool all_known = true;
    for (const std::string& x : f.fillers) {
      if (!std::binary_search(known.begin(), known.end(), x)) {
        all_known = false;
        if (b.is_closed(f.bound_role)) {
          throw InconsistentError(b.id() + "." + f.bound_role,
                                  "filler '" + x + "' asserted on closed role");
        }
      }
    }
    return all_known;
  }

  void infer_from_asserting(const TermData& t, const IndividualView& b,
                            const AboxContext&, HookSink& sink) const override {
    const auto& f = cast<FillsTerm>(t);
    for (const std::string& x : f.fillers) {
      sink.post_update({InternalUpdate::Kind::Fill, b.id(), f.bound_role, x,
                        nullptr});
    }
  }
};

// --- one-of ---

class OneOfHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kOneOfTag; }
  bool is_branch() const override { return false; }

  bool accepts(const Description& d) const override {
    return d.get_if<OneOf>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext&,
                      ImplicationQueue& todo) const override {
    const OneOf& o = *d.get_if<OneOf>();
    auto t = std::make_shared<OneOfTerm>();
    t->members = o.members;
    std::sort(t->members.begin(), t->members.end());
    t->members.erase(std::unique(t->members.begin(), t->members.end()),
                     t->members.end());
    todo.post({std::string(kOneOfTag), std::move(t)});
  }

  bool incoherent(const TermData& t) const override {
    return cast<OneOfTerm>(t).members.empty();
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    const auto& h = cast<OneOfTerm>(hi);
    const auto& l = cast<OneOfTerm>(low);
    return std::includes(h.members.begin(), h.members.end(), l.members.begin(),
                         l.members.end());
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    const auto& a = cast<OneOfTerm>(t);
    const auto& b = cast<OneOfTerm>(old);
    auto merged = std::make_shared<OneOfTerm>();
    std::set_intersection(a.members.begin(), a.members.end(),
                          b.members.begin(), b.members.end(),
                          std::back_inserter(merged->members));
    // An empty intersection is caught by the skeleton's incoherence check.
    return merged;
  }

  bool recognizes(const TermData& t, const IndividualView& b,
                  const AboxContext&, HookSink*) const override {
    const auto& o = cast<OneOfTerm>(t);
    return std::binary_search(o.members.begin(), o.members.end(), b.id());
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext&, HookSink*) const override {
    const auto& o = cast<OneOfTerm>(t);
    if (!std::binary_search(o.members.begin(), o.members.end(), b.id())) {
      // Unique names make non-membership definite.
      throw InconsistentError(b.id(), "individual outside one-of enumeration");
    }
    return true;
  }
};

}  // namespace

std::unique_ptr<ConstructorHooks> all_hooks() {
  return std::make_unique<AllHooks>();
}
std::unique_ptr<ConstructorHooks> some_hooks() {
  return std::make_unique<SomeHooks>();
}
std::unique_ptr<ConstructorHooks> bounds_hooks() {
  return std::make_unique<BoundsHooks>();
}
std::unique_ptr<ConstructorHooks> fills_hooks() {
  return std::make_unique<FillsHooks>();
}
std::unique_ptr<ConstructorHooks> oneof_hooks() {
  return std::make_unique<OneOfHooks>();
}

ConstructorRegistry standard_registry() {
  ConstructorRegistry r;
  r.register_constructor(all_hooks());
  r.register_constructor(some_hooks());
  r.register_constructor(bounds_hooks());
  r.register_constructor(fills_hooks());
  r.register_constructor(oneof_hooks());
  r.register_constructor(sameas_hooks());
  r.register_constructor(date_range_hooks());
  r.register_constructor(period_hooks());
  return r;
}

}  // namespace dlkb
