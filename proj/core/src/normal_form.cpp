#include "dlkb/normal_form.hpp"

#include <algorithm>

#include "dlkb/signals.hpp"

namespace dlkb {

const NormalizedConcept& NormalizedConcept::thing() {
  static const NormalizedConcept t;
  return t;
}

NormalizedConcept NormalizedConcept::nothing() {
  NormalizedConcept n;
  n.mark_incoherent();
  return n;
}

void NormalizedConcept::mark_incoherent() {
  incoherent_ = true;
  components_.clear();
  atoms_.clear();
  kind_ = ValueKind::Unknown;
}

void NormalizedConcept::merge_kind(ValueKind k) {
  if (k == ValueKind::Unknown || kind_ == k) return;
  if (kind_ == ValueKind::Unknown) {
    kind_ = k;
    return;
  }
  throw IncoherentError("object and date values are disjoint");
}

const TermData* NormalizedConcept::find(const ComponentKey& key) const {
  auto it = components_.find(key);
  return it == components_.end() ? nullptr : it->second.get();
}

const TermData* NormalizedConcept::find(const std::string& tag,
                                        const std::string& role) const {
  return find(ComponentKey{tag, role});
}

void NormalizedConcept::put(const ComponentKey& key, TermPtr term) {
  components_[key] = std::move(term);
}

void NormalizedConcept::erase(const ComponentKey& key) {
  components_.erase(key);
}

void NormalizedConcept::add_atom(const std::string& atom) {
  atoms_.insert(atom);
}

std::vector<std::string> NormalizedConcept::restricted_roles() const {
  std::vector<std::string> roles;
  for (const auto& [key, term] : components_) {
    if (!key.role.empty() &&
        (roles.empty() || roles.back() != key.role)) {
      if (std::find(roles.begin(), roles.end(), key.role) == roles.end()) {
        roles.push_back(key.role);
      }
    }
  }
  std::sort(roles.begin(), roles.end());
  return roles;
}

bool NormalizedConcept::structurally_equal(
    const NormalizedConcept& other) const {
  if (incoherent_ != other.incoherent_ || kind_ != other.kind_ ||
      atoms_ != other.atoms_) {
    return false;
  }
  if (components_.size() != other.components_.size()) return false;
  auto it = other.components_.begin();
  for (const auto& [key, term] : components_) {
    if (key != it->first || !term->equals(*it->second)) return false;
    ++it;
  }
  return true;
}

std::string NormalizedConcept::render() const {
  if (incoherent_) return "NOTHING";
  std::vector<std::string> forms(atoms_.begin(), atoms_.end());
  for (const auto& [key, term] : components_) {
    term->render_forms(forms);
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  if (forms.empty()) {
    switch (kind_) {
      case ValueKind::Object: return "ANY-OBJECT";
      case ValueKind::DateValue: return "ANY-DATE";
      case ValueKind::Unknown: return "THING";
    }
  }
  if (forms.size() == 1) return forms.front();
  std::string out = "(and";
  for (const std::string& f : forms) {
    out += ' ';
    out += f;
  }
  out += ')';
  return out;
}

}  // namespace dlkb
