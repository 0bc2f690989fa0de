#include "dlkb/abox.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "dlkb/core_constructors.hpp"
#include "dlkb/date_constructors.hpp"

namespace dlkb {

namespace {

const std::vector<std::string> kNoFillers;

std::string update_key(const InternalUpdate& u) {
  std::string key;
  switch (u.kind) {
    case InternalUpdate::Kind::Member:
      key = "m|" + u.individual + '|' +
            (u.concept_nf ? u.concept_nf->render() : "");
      break;
    case InternalUpdate::Kind::Fill:
      key = "f|" + u.individual + '|' + u.role + '|' + u.filler;
      break;
    case InternalUpdate::Kind::Close:
      key = "c|" + u.individual + '|' + u.role;
      break;
  }
  return key;
}

}  // namespace

// Internal update queued for later application; label names the concept for
// report lines when it is a declared class.
struct QueuedUpdate {
  InternalUpdate update;
  std::string label;
};

struct PendingDep {
  DepKind kind;
  std::string from;
  std::string to;
  std::string context;
};

// One top-level ASSERT transaction: undo log plus the five blackboard lists.
struct Abox::Tx {
  explicit Tx(long steps) : budget(steps) {}

  Budget budget;
  std::vector<std::function<void()>> undo;

  std::deque<QueuedUpdate> to_perform;
  std::set<std::string> perform_seen;
  std::deque<PendingDep> to_add_dependency;
  std::set<std::string> dep_seen;
  std::deque<std::string> to_recheck_consistency;
  std::set<std::string> recheck_seen;
  std::deque<std::string> to_redo_infer;
  std::set<std::string> redo_seen;
  std::deque<std::string> to_reclassify;
  std::set<std::string> reclassify_seen;

  std::set<std::string> derived;
  bool redundant_top = false;

  void queue_recheck(const std::string& b) {
    if (recheck_seen.insert(b).second) to_recheck_consistency.push_back(b);
  }
  void queue_redo(const std::string& b) {
    if (redo_seen.insert(b).second) to_redo_infer.push_back(b);
  }
  void queue_reclassify(const std::string& b) {
    if (reclassify_seen.insert(b).second) to_reclassify.push_back(b);
  }
};

// Read access to one individual's state for the hooks.
class Abox::View final : public IndividualView {
 public:
  View(const IndividualRecord& rec) : rec_(rec) {}

  const std::string& id() const override { return rec_.id; }
  const NormalizedConcept& descriptor() const override {
    return rec_.descriptor;
  }
  const std::vector<std::string>& fillers(
      const std::string& role) const override {
    auto it = rec_.roles.find(role);
    return it == rec_.roles.end() ? kNoFillers : it->second.fillers;
  }
  bool is_closed(const std::string& role) const override {
    auto it = rec_.roles.find(role);
    return it != rec_.roles.end() && it->second.closed;
  }
  std::optional<Date> date_value() const override { return rec_.date_value; }

 private:
  const IndividualRecord& rec_;
};

// Whole-KB view handed to hooks.  Synthesizes a fresh default view for
// individuals without a stored record; views stay alive for the lifetime of
// the context (one query or one transaction step).
class Abox::Ctx final : public AboxContext {
 public:
  explicit Ctx(const Abox& abox) : abox_(abox) {}

  const IndividualView* individual(const std::string& id) const override {
    auto it = views_.find(id);
    if (it != views_.end()) return it->second.view.get();
    const IndividualRecord* rec = abox_.record(id);
    Holder h;
    if (rec) {
      h.view = std::make_unique<View>(*rec);
    } else if (abox_.ckb_.is_individual(id) || parse_date_id(id)) {
      h.fresh = std::make_unique<IndividualRecord>(abox_.make_fresh_record(id));
      h.view = std::make_unique<View>(*h.fresh);
    } else {
      return nullptr;
    }
    return views_.emplace(id, std::move(h)).first->second.view.get();
  }

  bool recognizes(const std::string& id, const NormalizedConcept& nc,
                  HookSink* sink) const override {
    const IndividualRecord* rec = abox_.record(id);
    if (rec) return abox_.and_recognizes(*rec, nc, sink);
    if (!abox_.ckb_.is_individual(id) && !parse_date_id(id)) return false;
    return abox_.and_recognizes(abox_.make_fresh_record(id), nc, sink);
  }

  bool definitely_inconsistent(const std::string& id,
                               const NormalizedConcept& nc) const override {
    const IndividualRecord* rec = abox_.record(id);
    if (rec) return abox_.definitely_inconsistent_nf(*rec, nc);
    if (!abox_.ckb_.is_individual(id) && !parse_date_id(id)) return false;
    return abox_.definitely_inconsistent_nf(abox_.make_fresh_record(id), nc);
  }

 private:
  struct Holder {
    std::unique_ptr<IndividualRecord> fresh;  // backing for synthesized views
    std::unique_ptr<View> view;
  };
  const Abox& abox_;
  mutable std::map<std::string, Holder> views_;
};

// Collects hook side effects into the transaction blackboard.
class Abox::TxSink final : public HookSink {
 public:
  TxSink(Abox& abox, Tx& tx) : abox_(abox), tx_(tx) {}

  void post_update(InternalUpdate u) override { post_labelled(std::move(u), ""); }

  void post_labelled(InternalUpdate u, std::string label) {
    std::string key = update_key(u);
    if (!tx_.perform_seen.insert(key).second) return;
    switch (u.kind) {
      case InternalUpdate::Kind::Member: abox_.stats_.member_posts++; break;
      case InternalUpdate::Kind::Fill: abox_.stats_.fill_posts++; break;
      case InternalUpdate::Kind::Close: abox_.stats_.close_posts++; break;
    }
    tx_.to_perform.push_back({std::move(u), std::move(label)});
  }

  void post_dependency(DepKind kind, const std::string& from,
                       const std::string& to, std::string context) override {
    if (!abox_.use_links_) return;  // full rescans replace links
    std::string key = std::to_string(static_cast<int>(kind)) + '|' + from +
                      '|' + to + '|' + context;
    if (!tx_.dep_seen.insert(key).second) return;
    tx_.to_add_dependency.push_back({kind, from, to, std::move(context)});
  }

 private:
  Abox& abox_;
  Tx& tx_;
};

Abox::Abox(Ckb& ckb, bool use_dependency_links)
    : ckb_(ckb), use_links_(use_dependency_links) {}

Abox::~Abox() = default;

IndividualRecord Abox::make_fresh_record(const std::string& id) const {
  IndividualRecord rec;
  rec.id = id;
  if (std::optional<Date> d = ckb_.date_of_individual(id)) {
    rec.date_value = d;
  } else if (std::optional<Date> d2 = parse_date_id(id)) {
    rec.date_value = d2;
  }
  if (rec.date_value) {
    rec.descriptor.merge_kind(ValueKind::DateValue);
    rec.descriptor.put(
        {std::string(kDateRangeTag), ""},
        std::make_shared<DateRangeTerm>(*DateRangeSet::normalize(
            {{*rec.date_value, *rec.date_value}})));
  } else {
    rec.descriptor.merge_kind(ValueKind::Object);
  }
  return rec;
}

const IndividualRecord* Abox::record(const std::string& id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

void Abox::require_individual(const std::string& id) const {
  if (ckb_.is_individual(id) || parse_date_id(id)) return;
  throw ScopeError("undeclared individual '" + id + "'");
}

IndividualRecord& Abox::ensure_record(const std::string& id, Tx& tx) {
  auto it = records_.find(id);
  if (it != records_.end()) return it->second;
  if (std::optional<Date> d = parse_date_id(id)) {
    bool created = false;
    ckb_.ensure_date_individual(*d, &created);
    if (created) {
      tx.undo.push_back([this, id] { ckb_.retract_date_individual(id); });
    }
  }
  auto [pos, _] = records_.emplace(id, make_fresh_record(id));
  tx.undo.push_back([this, id] { records_.erase(id); });
  return pos->second;
}

// --- transactions ---

UpdateReport Abox::run_transaction(const std::function<void(Tx&)>& body) {
  Tx tx(ckb_.default_budget());
  UpdateReport report;
  try {
    body(tx);
    process_blackboard(tx);
    report.redundant = tx.redundant_top;
    report.derived.assign(tx.derived.begin(), tx.derived.end());
    return report;
  } catch (const InconsistentError& e) {
    rollback(tx);
    report.accepted = false;
    report.rejection = "inconsistent at " + e.site();
    return report;
  } catch (const IncoherentError&) {
    rollback(tx);
    report.accepted = false;
    report.rejection = "inconsistent at update";
    return report;
  } catch (const ResourceLimitError&) {
    rollback(tx);
    report.accepted = false;
    report.rejection = "resource-limit";
    return report;
  }
}

void Abox::rollback(Tx& tx) {
  for (auto it = tx.undo.rbegin(); it != tx.undo.rend(); ++it) (*it)();
}

UpdateReport Abox::assert_member(const std::string& b, const Description& c) {
  require_individual(b);
  ckb_.scope_check(c);
  return run_transaction([&](Tx& tx) {
    std::shared_ptr<const NormalizedConcept> nc;
    try {
      nc = std::make_shared<const NormalizedConcept>(
          ckb_.kernel().normalize(c, ckb_.lookup(), tx.budget));
    } catch (const IncoherentError&) {
      // Membership in NOTHING makes the KB inconsistent.
      throw InconsistentError(b, "asserted concept is incoherent");
    }
    apply_member(b, std::move(nc), "", tx, /*top=*/true);
  });
}

UpdateReport Abox::assert_fills(const std::string& b, const std::string& role,
                                const std::string& filler) {
  require_individual(b);
  require_individual(filler);
  if (!ckb_.is_role(role)) throw ScopeError("undeclared role '" + role + "'");
  return run_transaction(
      [&](Tx& tx) { apply_fill(b, role, filler, tx, /*top=*/true); });
}

UpdateReport Abox::assert_closed(const std::string& b,
                                 const std::string& role) {
  require_individual(b);
  if (!ckb_.is_role(role)) throw ScopeError("undeclared role '" + role + "'");
  return run_transaction(
      [&](Tx& tx) { apply_close(b, role, tx, /*top=*/true); });
}

// --- primitive applications ---

bool Abox::apply_member(const std::string& b,
                        std::shared_ptr<const NormalizedConcept> nc,
                        const std::string& label, Tx& tx, bool top) {
  IndividualRecord& rec = ensure_record(b, tx);
  if (ckb_.kernel().subsumes(*nc, rec.descriptor)) {
    if (top) tx.redundant_top = true;  // successful no-op
    return false;
  }
  NormalizedConcept merged = rec.descriptor;
  try {
    ckb_.kernel().conjoin(*nc, merged, ckb_.lookup(), tx.budget);
  } catch (const IncoherentError&) {
    throw InconsistentError(b, "descriptor became incoherent");
  }
  NormalizedConcept previous = std::move(rec.descriptor);
  rec.descriptor = std::move(merged);
  tx.undo.push_back([this, b, previous = std::move(previous)]() mutable {
    records_.at(b).descriptor = std::move(previous);
  });
  if (!top) {
    tx.derived.insert("(member " + b + ' ' +
                      (label.empty() ? nc->render() : label) + ')');
  }

  Ctx ctx(*this);
  TxSink sink(*this, tx);
  View view(rec);
  // Consistency first, over the newly asserted components.
  for (const auto& [key, term] : nc->components()) {
    ckb_.kernel().registry().at(key.tag).consistent_w_asserting(*term, view,
                                                                ctx, &sink);
  }
  fire_deps(rec, DepKind::Consistent, tx);
  for (const auto& [key, term] : nc->components()) {
    ckb_.kernel().registry().at(key.tag).infer_from_asserting(*term, view, ctx,
                                                              sink);
  }
  fire_deps(rec, DepKind::Infer, tx);
  tx.queue_reclassify(b);
  fire_deps(rec, DepKind::Recognize, tx);
  if (!use_links_) enqueue_everyone(tx);
  return true;
}

bool Abox::apply_fill(const std::string& b, const std::string& role,
                      const std::string& filler, Tx& tx, bool top) {
  IndividualRecord& rec = ensure_record(b, tx);
  ensure_record(filler, tx);  // registers date individuals on first use
  RoleState& state = rec.roles[role];
  if (std::binary_search(state.fillers.begin(), state.fillers.end(), filler)) {
    if (top) tx.redundant_top = true;  // redundant information
    return false;
  }
  if (state.closed) {
    throw InconsistentError(b + "." + role, "new filler on a closed role");
  }
  if (ckb_.is_attribute(role) && !state.fillers.empty()) {
    throw InconsistentError(
        b + "." + role, "attribute already has filler '" + state.fillers[0] +
                            "', cannot add '" + filler + "'");
  }
  state.fillers.insert(
      std::upper_bound(state.fillers.begin(), state.fillers.end(), filler),
      filler);
  tx.undo.push_back([this, b, role, filler] {
    auto& f = records_.at(b).roles.at(role).fillers;
    f.erase(std::find(f.begin(), f.end(), filler));
  });
  if (!top) tx.derived.insert("(fills " + b + ' ' + role + ' ' + filler + ')');

  Ctx ctx(*this);
  TxSink sink(*this, tx);
  View view(rec);
  // Attributes hold a single value, so the role closes by itself.
  if (ckb_.is_attribute(role)) {
    sink.post_update({InternalUpdate::Kind::Close, b, role, "", nullptr});
  }
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).consistent_w_filling(
        *term, view, role, filler, ctx, &sink);
  }
  fire_deps(rec, DepKind::Consistent, tx);
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).infer_from_filling(*term, view, role,
                                                            filler, ctx, sink);
  }
  fire_deps(rec, DepKind::Infer, tx);
  tx.queue_reclassify(b);
  fire_deps(rec, DepKind::Recognize, tx);
  if (!use_links_) enqueue_everyone(tx);
  return true;
}

bool Abox::apply_close(const std::string& b, const std::string& role, Tx& tx,
                       bool top) {
  IndividualRecord& rec = ensure_record(b, tx);
  RoleState& state = rec.roles[role];
  if (state.closed) {
    if (top) tx.redundant_top = true;
    return false;
  }
  state.closed = true;
  tx.undo.push_back(
      [this, b, role] { records_.at(b).roles.at(role).closed = false; });
  if (!top) tx.derived.insert("(closed " + b + ' ' + role + ')');

  Ctx ctx(*this);
  TxSink sink(*this, tx);
  View view(rec);
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).consistent_w_closing(*term, view,
                                                              role, ctx, &sink);
  }
  fire_deps(rec, DepKind::Consistent, tx);
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).infer_from_closing(*term, view, role,
                                                            ctx, sink);
  }
  fire_deps(rec, DepKind::Infer, tx);
  tx.queue_reclassify(b);
  fire_deps(rec, DepKind::Recognize, tx);
  if (!use_links_) enqueue_everyone(tx);
  return true;
}

// --- blackboard ---

void Abox::process_blackboard(Tx& tx) {
  while (true) {
    // Dependencies install first so that chasing sees them.
    if (!tx.to_add_dependency.empty()) {
      while (!tx.to_add_dependency.empty()) {
        PendingDep d = std::move(tx.to_add_dependency.front());
        tx.to_add_dependency.pop_front();
        IndividualRecord& from = ensure_record(d.from, tx);
        std::set<DepLink>* links = nullptr;
        switch (d.kind) {
          case DepKind::Recognize: links = &from.dep_recognize; break;
          case DepKind::Consistent: links = &from.dep_consistent; break;
          case DepKind::Infer: links = &from.dep_infer; break;
        }
        DepLink link{d.to, d.context};
        if (links->insert(link).second) {
          tx.undo.push_back([links, link] { links->erase(link); });
        }
      }
      continue;
    }
    if (!tx.to_perform.empty()) {
      tx.budget.spend();
      stats_.blackboard_tasks++;
      QueuedUpdate q = std::move(tx.to_perform.front());
      tx.to_perform.pop_front();
      tx.perform_seen.erase(update_key(q.update));
      switch (q.update.kind) {
        case InternalUpdate::Kind::Member:
          apply_member(q.update.individual, q.update.concept_nf, q.label, tx,
                       false);
          break;
        case InternalUpdate::Kind::Fill:
          apply_fill(q.update.individual, q.update.role, q.update.filler, tx,
                     false);
          break;
        case InternalUpdate::Kind::Close:
          apply_close(q.update.individual, q.update.role, tx, false);
          break;
      }
      continue;
    }
    if (!tx.to_redo_infer.empty()) {
      tx.budget.spend();
      stats_.blackboard_tasks++;
      std::string b = std::move(tx.to_redo_infer.front());
      tx.to_redo_infer.pop_front();
      tx.redo_seen.erase(b);
      redo_inferences(b, tx);
      continue;
    }
    if (!tx.to_reclassify.empty()) {
      tx.budget.spend();
      stats_.blackboard_tasks++;
      std::string b = std::move(tx.to_reclassify.front());
      tx.to_reclassify.pop_front();
      tx.reclassify_seen.erase(b);
      reclassify(b, tx);
      continue;
    }
    // Inconsistencies are expected to be rare; rechecks drain last.
    if (!tx.to_recheck_consistency.empty()) {
      tx.budget.spend();
      stats_.blackboard_tasks++;
      std::string b = std::move(tx.to_recheck_consistency.front());
      tx.to_recheck_consistency.pop_front();
      tx.recheck_seen.erase(b);
      recheck_consistency(b, tx);
      continue;
    }
    break;
  }
}

void Abox::reclassify(const std::string& b, Tx& tx) {
  stats_.reclassifications++;
  IndividualRecord& rec = ensure_record(b, tx);
  Ctx ctx(*this);
  TxSink sink(*this, tx);
  for (const std::string& name : ckb_.concept_names()) {
    const NormalizedConcept* nf = ckb_.concept_nf(name);
    if (nf->incoherent()) continue;
    if (ckb_.kernel().subsumes(*nf, rec.descriptor)) continue;
    if (and_recognizes(rec, *nf, &sink)) {
      // Cache the logical completion: the recognized class's normal form is
      // conjoined onto the descriptor via the update list.
      sink.post_labelled({InternalUpdate::Kind::Member, b, "", "",
                          std::make_shared<const NormalizedConcept>(*nf)},
                         name);
    }
  }
}

void Abox::recheck_consistency(const std::string& b, Tx& tx) {
  stats_.consistency_rechecks++;
  IndividualRecord& rec = ensure_record(b, tx);
  Ctx ctx(*this);
  TxSink sink(*this, tx);
  View view(rec);
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).consistent_w_asserting(*term, view,
                                                                ctx, &sink);
  }
}

void Abox::redo_inferences(const std::string& b, Tx& tx) {
  stats_.infer_reruns++;
  IndividualRecord& rec = ensure_record(b, tx);
  Ctx ctx(*this);
  TxSink sink(*this, tx);
  View view(rec);
  for (const auto& [key, term] : rec.descriptor.components()) {
    ckb_.kernel().registry().at(key.tag).redo_infer(*term, view, ctx, sink);
  }
}

void Abox::fire_deps(IndividualRecord& rec, DepKind kind, Tx& tx) {
  if (!use_links_) return;
  std::set<DepLink>* links = nullptr;
  switch (kind) {
    case DepKind::Recognize: links = &rec.dep_recognize; break;
    case DepKind::Consistent: links = &rec.dep_consistent; break;
    case DepKind::Infer: links = &rec.dep_infer; break;
  }
  if (links->empty()) return;
  std::set<DepLink> fired;
  fired.swap(*links);
  for (const DepLink& link : fired) {
    switch (kind) {
      case DepKind::Recognize: tx.queue_reclassify(link.target); break;
      case DepKind::Consistent: tx.queue_recheck(link.target); break;
      case DepKind::Infer: tx.queue_redo(link.target); break;
    }
  }
  std::string id = rec.id;
  tx.undo.push_back([this, id, kind, fired = std::move(fired)] {
    IndividualRecord& r = records_.at(id);
    std::set<DepLink>* ls = nullptr;
    switch (kind) {
      case DepKind::Recognize: ls = &r.dep_recognize; break;
      case DepKind::Consistent: ls = &r.dep_consistent; break;
      case DepKind::Infer: ls = &r.dep_infer; break;
    }
    ls->insert(fired.begin(), fired.end());
  });
}

void Abox::enqueue_everyone(Tx& tx) {
  for (const std::string& id : ckb_.individual_names()) {
    tx.queue_recheck(id);
    tx.queue_redo(id);
    tx.queue_reclassify(id);
  }
}

// --- recognition and hypothetical reasoning ---

bool Abox::and_recognizes(const IndividualRecord& rec,
                          const NormalizedConcept& nc, HookSink* sink) const {
  stats_.recognize_calls++;
  if (nc.incoherent()) return false;
  if (nc.kind() != ValueKind::Unknown && nc.kind() != rec.descriptor.kind()) {
    return false;
  }
  for (const std::string& atom : nc.atoms()) {
    if (!rec.descriptor.atoms().contains(atom)) return false;
  }
  Ctx ctx(*this);
  View view(rec);
  const ConstructorRegistry& reg = ckb_.kernel().registry();
  for (const auto& [key, term] : nc.components()) {
    if (!key.role.empty()) continue;
    if (!reg.at(key.tag).recognizes(*term, view, ctx, sink)) return false;
  }
  for (const std::string& role : nc.restricted_roles()) {
    auto it = rec.roles.find(role);
    RoleSnapshot rs{it == rec.roles.end() ? kNoFillers : it->second.fillers,
                    it != rec.roles.end() && it->second.closed};
    for (const auto& [key, term] : nc.components()) {
      if (key.role != role) continue;
      if (!reg.at(key.tag).recognizes_branch(*term, view, rs, ctx, sink)) {
        return false;
      }
    }
  }
  return true;
}

bool Abox::definitely_inconsistent_nf(const IndividualRecord& rec,
                                      const NormalizedConcept& nc) const {
  try {
    NormalizedConcept merged = rec.descriptor;
    Budget budget(ckb_.default_budget());
    ckb_.kernel().conjoin(nc, merged, ckb_.lookup(), budget);
    Ctx ctx(*this);
    View view(rec);
    for (const auto& [key, term] : merged.components()) {
      ckb_.kernel().registry().at(key.tag).consistent_w_asserting(
          *term, view, ctx, nullptr);
    }
  } catch (const IncoherentError&) {
    return true;
  } catch (const InconsistentError&) {
    return true;
  } catch (const ResourceLimitError&) {
    return false;  // cannot prove anything within the budget
  }
  return false;
}

// --- queries ---

bool Abox::ask_member(const std::string& b, const Description& c) const {
  require_individual(b);
  NormalizedConcept nc;
  try {
    nc = ckb_.normalize(c);
  } catch (const IncoherentError&) {
    return false;  // nothing is a member of NOTHING in a consistent KB
  }
  const IndividualRecord* rec = record(b);
  IndividualRecord fresh;
  if (!rec) {
    fresh = make_fresh_record(b);
    rec = &fresh;
  }
  if (ckb_.kernel().subsumes(nc, rec->descriptor)) return true;
  return and_recognizes(*rec, nc, nullptr);
}

bool Abox::ask_non_member_nf(const IndividualRecord& rec,
                             const NormalizedConcept& nc, int depth) const {
  if (definitely_inconsistent_nf(rec, nc)) return true;
  if (depth <= 0) return false;
  // b has a p-filler e with e provably not in C  =>  b is not in all(p, C).
  for (const auto& [key, term] : nc.components()) {
    if (key.tag != kAllTag) continue;
    const auto& all = static_cast<const AllTerm&>(*term);
    auto it = rec.roles.find(all.bound_role);
    if (it == rec.roles.end()) continue;
    for (const std::string& f : it->second.fillers) {
      const IndividualRecord* frec = record(f);
      IndividualRecord fresh;
      if (!frec) {
        fresh = make_fresh_record(f);
        frec = &fresh;
      }
      if (ask_non_member_nf(*frec, all.restriction, depth - 1)) return true;
    }
  }
  return false;
}

bool Abox::ask_non_member(const std::string& b, const Description& c) const {
  require_individual(b);
  NormalizedConcept nc;
  try {
    nc = ckb_.normalize(c);
  } catch (const IncoherentError&) {
    return true;  // no individual inhabits NOTHING
  }
  const IndividualRecord* rec = record(b);
  IndividualRecord fresh;
  if (!rec) {
    fresh = make_fresh_record(b);
    rec = &fresh;
  }
  return ask_non_member_nf(*rec, nc, 8);
}

std::vector<std::string> Abox::ask_for_fillers(const std::string& b,
                                               const std::string& role) const {
  require_individual(b);
  if (!ckb_.is_role(role)) throw ScopeError("undeclared role '" + role + "'");
  const IndividualRecord* rec = record(b);
  if (!rec) return {};
  auto it = rec->roles.find(role);
  if (it == rec->roles.end()) return {};
  return it->second.fillers;  // asserted plus derived, already sorted
}

bool Abox::ask_closed(const std::string& b, const std::string& role) const {
  require_individual(b);
  if (!ckb_.is_role(role)) throw ScopeError("undeclared role '" + role + "'");
  const IndividualRecord* rec = record(b);
  if (!rec) return false;
  auto it = rec->roles.find(role);
  return it != rec->roles.end() && it->second.closed;
}

std::vector<std::string> Abox::classify_individual(const std::string& b) const {
  require_individual(b);
  const IndividualRecord* rec = record(b);
  IndividualRecord fresh;
  if (!rec) {
    fresh = make_fresh_record(b);
    rec = &fresh;
  }
  std::vector<std::string> members;
  for (const std::string& name : ckb_.concept_names()) {
    const NormalizedConcept* nf = ckb_.concept_nf(name);
    if (nf->incoherent()) continue;
    if (ckb_.kernel().subsumes(*nf, rec->descriptor) ||
        and_recognizes(*rec, *nf, nullptr)) {
      members.push_back(name);
    }
  }
  // Keep the most specific ones; equivalent names stay together.
  std::vector<std::string> out;
  for (const std::string& n : members) {
    bool minimal = true;
    const NormalizedConcept& n_nf = *ckb_.concept_nf(n);
    for (const std::string& m : members) {
      if (m == n) continue;
      const NormalizedConcept& m_nf = *ckb_.concept_nf(m);
      if (ckb_.kernel().subsumes(n_nf, m_nf) &&
          !ckb_.kernel().subsumes(m_nf, n_nf)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

// --- fingerprint ---

std::string Abox::fingerprint() const {
  std::string out;
  ckb_.render_state(out);
  for (const std::string& id : ckb_.individual_names()) {
    const IndividualRecord* rec = record(id);
    IndividualRecord fresh;
    if (!rec) {
      fresh = make_fresh_record(id);
      rec = &fresh;
    }
    out += "individual " + id + " descriptor=" + rec->descriptor.render() +
           '\n';
    for (const auto& [role, state] : rec->roles) {
      if (state.fillers.empty() && !state.closed) continue;  // vacuous entry
      out += "  role " + role + " fillers=(";
      for (std::size_t i = 0; i < state.fillers.size(); ++i) {
        if (i) out += ' ';
        out += state.fillers[i];
      }
      out += state.closed ? ") closed\n" : ") open\n";
    }
  }
  return out;
}

}  // namespace dlkb
