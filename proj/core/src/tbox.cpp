#include "dlkb/tbox.hpp"

#include <algorithm>

namespace dlkb {

namespace {
const std::string kThing = "THING";
const std::string kNothing = "NOTHING";
const std::string kAnyObject = "ANY-OBJECT";
const std::string kAnyDate = "ANY-DATE";
}  // namespace

Ckb::Ckb(ConstructorRegistry registry, long default_budget)
    : kernel_(std::move(registry)), default_budget_(default_budget) {
  auto add_builtin = [&](const std::string& name, NormalizedConcept nf) {
    ConceptEntry e;
    e.kind = ConceptEntry::Kind::Builtin;
    e.nf = std::move(nf);
    e.incoherent = e.nf.incoherent();
    e.rep = name;
    e.order = next_order_++;
    concepts_.emplace(name, std::move(e));
  };
  add_builtin(kThing, NormalizedConcept{});
  NormalizedConcept any_object;
  any_object.merge_kind(ValueKind::Object);
  add_builtin(kAnyObject, std::move(any_object));
  NormalizedConcept any_date;
  any_date.merge_kind(ValueKind::DateValue);
  add_builtin(kAnyDate, std::move(any_date));
  add_builtin(kNothing, NormalizedConcept::nothing());

  parents_[kAnyObject] = {kThing};
  parents_[kAnyDate] = {kThing};
  children_[kThing] = {kAnyObject, kAnyDate};
  parents_[kNothing] = {kAnyObject, kAnyDate};
  children_[kAnyObject] = {kNothing};
  children_[kAnyDate] = {kNothing};
}

void Ckb::ensure_new_name(const std::string& name) const {
  if (name.empty()) throw ScopeError("empty identifier");
  if (roles_.contains(name) || individuals_.contains(name) ||
      concepts_.contains(name)) {
    throw ScopeError("identifier '" + name + "' already declared");
  }
}

void Ckb::declare_primitive_role(const std::string& name) {
  ensure_new_name(name);
  roles_.insert(name);
}

void Ckb::declare_primitive_attribute(const std::string& name) {
  ensure_new_name(name);
  roles_.insert(name);
  attributes_.insert(name);
}

void Ckb::declare_individual(const std::string& name) {
  ensure_new_name(name);
  individuals_.insert(name);
}

std::string Ckb::ensure_date_individual(Date d, bool* created) {
  std::string id = d.str();
  if (created) *created = false;
  if (!individuals_.contains(id)) {
    individuals_.insert(id);
    date_individuals_.emplace(id, d);
    if (created) *created = true;
  }
  return id;
}

void Ckb::retract_date_individual(const std::string& id) {
  individuals_.erase(id);
  date_individuals_.erase(id);
}

bool Ckb::is_role(const std::string& name) const {
  return roles_.contains(name);
}
bool Ckb::is_attribute(const std::string& name) const {
  return attributes_.contains(name);
}
bool Ckb::is_individual(const std::string& name) const {
  return individuals_.contains(name);
}
bool Ckb::is_concept(const std::string& name) const {
  return concepts_.contains(name);
}

std::optional<Date> Ckb::date_of_individual(const std::string& name) const {
  auto it = date_individuals_.find(name);
  if (it != date_individuals_.end()) return it->second;
  return std::nullopt;
}

const NormalizedConcept* Ckb::concept_nf(const std::string& name) const {
  auto it = concepts_.find(name);
  return it == concepts_.end() ? nullptr : &it->second.nf;
}

std::vector<std::string> Ckb::concept_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : concepts_) out.push_back(name);
  return out;
}

std::vector<std::string> Ckb::individual_names() const {
  return {individuals_.begin(), individuals_.end()};
}

ConceptLookup Ckb::lookup() const {
  return [this](const std::string& name) { return concept_nf(name); };
}

namespace {

// Scope checking walks the description once; date tokens pass as individual
// identifiers anywhere an individual is expected.
struct ScopeVisitor {
  const Ckb& kb;

  void check(const Description& d) { std::visit(*this, d.node()); }

  void role(const std::string& r) const {
    if (!kb.is_role(r)) throw ScopeError("undeclared role '" + r + "'");
  }
  void individual(const std::string& b) const {
    if (kb.is_individual(b)) return;
    if (parse_date_id(b)) return;  // registered lazily
    throw ScopeError("undeclared individual '" + b + "'");
  }

  void operator()(const ThingRef&) {}
  void operator()(const NothingRef&) {}
  void operator()(const AnyDateRef&) {}
  void operator()(const NameRef& n) {
    if (!kb.is_concept(n.name)) {
      throw ScopeError("undeclared concept name '" + n.name + "'");
    }
  }
  void operator()(const And& a) {
    for (const Description& c : a.args) check(c);
  }
  void operator()(const All& a) {
    role(a.role);
    check(a.restriction.front());
  }
  void operator()(const Some& s) {
    role(s.role);
    check(s.restriction.front());
  }
  void operator()(const AtLeast& a) { role(a.role); }
  void operator()(const AtMost& a) { role(a.role); }
  void operator()(const FillsRef& f) {
    role(f.role);
    individual(f.filler);
  }
  void operator()(const OneOf& o) {
    for (const std::string& m : o.members) individual(m);
  }
  void operator()(const SameAsRef& s) {
    for (const std::string& f : s.left) {
      if (!kb.is_attribute(f)) {
        throw ScopeError("chain member '" + f + "' is not an attribute");
      }
    }
    for (const std::string& f : s.right) {
      if (!kb.is_attribute(f)) {
        throw ScopeError("chain member '" + f + "' is not an attribute");
      }
    }
  }
  void operator()(const DateRangeLit&) {}
  void operator()(const PeriodLit&) {}
};

}  // namespace

void Ckb::scope_check(const Description& d) const {
  ScopeVisitor v{*this};
  v.check(d);
}

NormalizedConcept Ckb::normalize(const Description& d) const {
  Budget budget(default_budget_);
  return normalize(d, budget);
}

NormalizedConcept Ckb::normalize(const Description& d, Budget& budget) const {
  scope_check(d);
  return kernel_.normalize(d, lookup(), budget);
}

bool Ckb::ask_subsumes(const Description& c, const Description& d) const {
  // c implies d  <=>  norm(d) subsumes norm(c).
  NormalizedConcept low;
  try {
    low = normalize(c);
  } catch (const IncoherentError&) {
    scope_check(d);  // still a scope error if d is malformed
    return true;     // NOTHING implies everything
  }
  NormalizedConcept hi;
  try {
    hi = normalize(d);
  } catch (const IncoherentError&) {
    return false;  // low is coherent here, so it cannot imply NOTHING
  }
  return kernel_.subsumes(hi, low);
}

std::vector<std::string> Ckb::ask_ancestors(const Description& c) const {
  std::optional<NormalizedConcept> low;
  try {
    low = normalize(c);
  } catch (const IncoherentError&) {
    low.reset();  // incoherent: every declared name subsumes it
  }
  std::vector<std::string> out;
  for (const auto& [name, entry] : concepts_) {
    if (!low || kernel_.subsumes(entry.nf, *low)) out.push_back(name);
  }
  return out;  // map iteration is already sorted
}

bool Ckb::ask_is_incoherent(const Description& c) const {
  try {
    normalize(c);
  } catch (const IncoherentError&) {
    return true;
  }
  return false;
}

ClassificationReport Ckb::declare_primitive_concept(const std::string& name,
                                                    const Description& d) {
  return declare_concept(name, d, /*primitive=*/true);
}

ClassificationReport Ckb::declare_defined_concept(const std::string& name,
                                                  const Description& d) {
  return declare_concept(name, d, /*primitive=*/false);
}

ClassificationReport Ckb::declare_concept(const std::string& name,
                                          const Description& d,
                                          bool primitive) {
  ensure_new_name(name);
  scope_check(d);

  ConceptEntry e;
  e.kind = primitive ? ConceptEntry::Kind::Primitive
                     : ConceptEntry::Kind::Defined;
  e.source = d;
  e.order = next_order_;
  try {
    Budget budget(default_budget_);
    e.nf = kernel_.normalize(d, lookup(), budget);
    if (primitive) {
      // A fresh atom makes the name imply d but not conversely.
      e.nf.add_atom(name);
    }
  } catch (const IncoherentError&) {
    // Accepted but flagged: the concept is unsatisfiable.
    e.nf = NormalizedConcept::nothing();
    e.incoherent = true;
  }

  ClassificationReport report;
  report.name = name;
  report.incoherent = e.incoherent;

  // Equivalence grouping: an equivalent named concept already in the DAG
  // shares its node; the declaration is redundant.
  std::string rep;
  for (const auto& [other, oe] : concepts_) {
    if (oe.rep != other) continue;  // only reps
    if (kernel_.equivalent(e.nf, oe.nf)) {
      rep = other;
      break;
    }
  }
  if (!rep.empty()) {
    e.rep = rep;
    for (const auto& [other, oe] : concepts_) {
      if (oe.rep == rep) report.equivalent_to.push_back(other);
    }
    report.parents = dag_parents(rep);
    report.children = dag_children(rep);
    next_order_++;
    concepts_.emplace(name, std::move(e));
    return report;
  }

  e.rep = name;
  next_order_++;
  concepts_.emplace(name, std::move(e));
  insert_into_dag(name);
  report.parents = dag_parents(name);
  report.children = dag_children(name);
  return report;
}

Ckb::Placement Ckb::classify(const std::string& name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) {
    throw ScopeError("undeclared concept name '" + name + "'");
  }
  const std::string& rep = it->second.rep;
  return {dag_parents(rep), dag_children(rep)};
}

void Ckb::insert_into_dag(const std::string& name) {
  const NormalizedConcept& nf = concepts_.at(name).nf;

  // Subsumers and subsumees among existing representatives.
  std::set<std::string> above;
  std::set<std::string> below;
  for (const auto& [other, oe] : concepts_) {
    if (other == name || oe.rep != other) continue;
    if (kernel_.subsumes(oe.nf, nf)) above.insert(other);
    if (kernel_.subsumes(nf, oe.nf)) below.insert(other);
  }

  // Most specific subsumers: drop anything above something else in `above`.
  std::set<std::string> parents;
  for (const std::string& a : above) {
    bool minimal = true;
    for (const std::string& b : above) {
      if (a != b && kernel_.subsumes(concepts_.at(a).nf, concepts_.at(b).nf) &&
          !kernel_.subsumes(concepts_.at(b).nf, concepts_.at(a).nf)) {
        minimal = false;
        break;
      }
    }
    if (minimal) parents.insert(a);
  }
  // Most general subsumees.
  std::set<std::string> kids;
  for (const std::string& a : below) {
    bool maximal = true;
    for (const std::string& b : below) {
      if (a != b && kernel_.subsumes(concepts_.at(b).nf, concepts_.at(a).nf) &&
          !kernel_.subsumes(concepts_.at(a).nf, concepts_.at(b).nf)) {
        maximal = false;
        break;
      }
    }
    if (maximal) kids.insert(a);
  }

  // Splice: edges from parents to kids become transitive.
  for (const std::string& p : parents) {
    for (const std::string& k : kids) {
      children_[p].erase(k);
      parents_[k].erase(p);
    }
  }
  for (const std::string& p : parents) {
    children_[p].insert(name);
    parents_[name].insert(p);
  }
  for (const std::string& k : kids) {
    parents_[k].insert(name);
    children_[name].insert(k);
  }
}

std::vector<std::string> Ckb::dag_parents(const std::string& name) const {
  auto it = parents_.find(group_rep(name));
  if (it == parents_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<std::string> Ckb::dag_children(const std::string& name) const {
  auto it = children_.find(group_rep(name));
  if (it == children_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

const std::string& Ckb::group_rep(const std::string& name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) {
    throw ScopeError("undeclared concept name '" + name + "'");
  }
  return it->second.rep;
}

void Ckb::render_state(std::string& out) const {
  out += "roles:";
  for (const std::string& r : roles_) {
    out += ' ';
    out += r;
    if (attributes_.contains(r)) out += "[attr]";
  }
  out += "\nindividuals:";
  for (const std::string& b : individuals_) {
    out += ' ';
    out += b;
  }
  out += '\n';
  for (const auto& [name, e] : concepts_) {
    out += "concept " + name + " rep=" + e.rep +
           (e.incoherent ? " incoherent" : "") + " nf=" + e.nf.render() + '\n';
  }
  for (const auto& [name, ps] : parents_) {
    out += "isa " + name + " <=";
    for (const std::string& p : ps) {
      out += ' ';
      out += p;
    }
    out += '\n';
  }
}

}  // namespace dlkb
