#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlkb/ast.hpp"
#include "dlkb/kernel.hpp"

namespace dlkb {

struct ClassificationReport {
  std::string name;
  std::vector<std::string> parents;   // most specific named subsumers
  std::vector<std::string> children;  // most general named subsumees
  bool incoherent = false;
  // Previously declared names this one is equivalent to (redundancy signal).
  std::vector<std::string> equivalent_to;
};

// The concept knowledge base: symbol tables for roles, attributes,
// individuals and concepts, stored normal forms, and the classified IsA DAG
// of named concepts.  Non-recursive: declarations may only mention earlier
// names.  THING, NOTHING, ANY-OBJECT and ANY-DATE are pre-declared.
class Ckb {
 public:
  explicit Ckb(ConstructorRegistry registry = standard_registry(),
               long default_budget = Budget::kDefault);

  const Kernel& kernel() const { return kernel_; }
  long default_budget() const { return default_budget_; }
  void set_default_budget(long b) { default_budget_ = b; }

  // --- declarations (ScopeError on redeclaration or bad references) ---
  void declare_primitive_role(const std::string& name);
  void declare_primitive_attribute(const std::string& name);
  void declare_individual(const std::string& name);
  ClassificationReport declare_primitive_concept(const std::string& name,
                                                 const Description& d);
  ClassificationReport declare_defined_concept(const std::string& name,
                                               const Description& d);

  // Date individuals register implicitly on first use.  Returns the
  // canonical identifier; reports whether this call created it.
  std::string ensure_date_individual(Date d, bool* created = nullptr);
  // Rollback support for the A-box transaction log.
  void retract_date_individual(const std::string& id);

  // --- lookups ---
  bool is_role(const std::string& name) const;        // includes attributes
  bool is_attribute(const std::string& name) const;
  bool is_individual(const std::string& name) const;
  bool is_concept(const std::string& name) const;
  std::optional<Date> date_of_individual(const std::string& name) const;
  const NormalizedConcept* concept_nf(const std::string& name) const;
  std::vector<std::string> concept_names() const;  // sorted
  std::vector<std::string> individual_names() const;  // sorted
  const std::set<std::string>& role_names() const { return roles_; }
  const std::set<std::string>& attribute_names() const { return attributes_; }

  // --- reasoning over descriptions ---
  // Verifies every identifier in d is declared with the right kind.
  void scope_check(const Description& d) const;
  // scope_check + kernel normalization (IncoherentError propagates).
  NormalizedConcept normalize(const Description& d) const;
  NormalizedConcept normalize(const Description& d, Budget& budget) const;
  bool subsumes_nf(const NormalizedConcept& hi,
                   const NormalizedConcept& low) const {
    return kernel_.subsumes(hi, low);
  }

  // --- ASK operations (§ concept level) ---
  // true iff c implies d, i.e. d's denotation contains c's.
  bool ask_subsumes(const Description& c, const Description& d) const;
  std::vector<std::string> ask_ancestors(const Description& c) const;
  bool ask_is_incoherent(const Description& c) const;

  // --- classification ---
  struct Placement {
    std::vector<std::string> parents;
    std::vector<std::string> children;
  };
  Placement classify(const std::string& name) const;
  std::vector<std::string> dag_parents(const std::string& name) const;
  std::vector<std::string> dag_children(const std::string& name) const;
  // Representative of the equivalence group (first-declared member).
  const std::string& group_rep(const std::string& name) const;

  // Deterministic rendering of tables and DAG, part of the KB fingerprint.
  void render_state(std::string& out) const;

  ConceptLookup lookup() const;

 private:
  struct ConceptEntry {
    enum class Kind { Builtin, Primitive, Defined };
    Kind kind;
    std::optional<Description> source;
    NormalizedConcept nf;
    bool incoherent = false;
    std::string rep;  // equivalence-group representative
    int order = 0;    // declaration order
  };

  void ensure_new_name(const std::string& name) const;
  ClassificationReport declare_concept(const std::string& name,
                                       const Description& d, bool primitive);
  void insert_into_dag(const std::string& name);

  Kernel kernel_;
  long default_budget_;

  std::set<std::string> roles_;       // includes attributes
  std::set<std::string> attributes_;
  std::set<std::string> individuals_;
  std::map<std::string, Date> date_individuals_;
  std::map<std::string, ConceptEntry> concepts_;
  int next_order_ = 0;

  // DAG edges over group representatives only.
  std::map<std::string, std::set<std::string>> parents_;
  std::map<std::string, std::set<std::string>> children_;
};

}  // namespace dlkb
