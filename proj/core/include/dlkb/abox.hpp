#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlkb/tbox.hpp"

namespace dlkb {

struct RoleState {
  std::vector<std::string> fillers;  // sorted, duplicate-free
  bool closed = false;
};

struct DepLink {
  std::string target;
  std::string context;
  auto operator<=>(const DepLink&) const = default;
};

// Per-individual state: the descriptor (asserted plus derived concept
// information), role fillers with closed flags, and the three kinds of
// outgoing dependency links.  Links mean "a pending check about `target` may
// change when this individual changes"; they are removed when fired and
// re-added if the re-run check is still pending.
struct IndividualRecord {
  std::string id;
  NormalizedConcept descriptor;
  std::optional<Date> date_value;
  std::map<std::string, RoleState> roles;
  std::set<DepLink> dep_recognize;
  std::set<DepLink> dep_consistent;
  std::set<DepLink> dep_infer;
};

struct UpdateReport {
  bool accepted = true;
  bool redundant = false;
  std::string rejection;  // set iff !accepted, e.g. "inconsistent at Anni.hasToys"
  std::vector<std::string> derived;  // sorted fact lines, e.g. "(fills a p b)"
};

// Counters for tests and instrumentation; reset_stats() zeroes them.
struct AboxStats {
  long member_posts = 0;
  long fill_posts = 0;
  long close_posts = 0;
  long recognize_calls = 0;
  long reclassifications = 0;
  long consistency_rechecks = 0;
  long infer_reruns = 0;
  long blackboard_tasks = 0;
};

// The individual store and incremental update engine.  One writer at a time:
// an update transaction owns the whole state until commit or rollback, and a
// rejected update leaves the state bit-identical (undo log of primitive
// mutations).  With use_dependency_links=false every individual is
// re-processed after each update instead; the two modes reach identical
// fingerprints, links are purely an optimization.
class Abox {
 public:
  explicit Abox(Ckb& ckb, bool use_dependency_links = true);
  ~Abox();

  Abox(const Abox&) = delete;
  Abox& operator=(const Abox&) = delete;

  UpdateReport assert_member(const std::string& b, const Description& c);
  UpdateReport assert_fills(const std::string& b, const std::string& role,
                            const std::string& filler);
  UpdateReport assert_closed(const std::string& b, const std::string& role);

  bool ask_member(const std::string& b, const Description& c) const;
  // Deliberately incomplete: false means "no proof of non-membership".
  bool ask_non_member(const std::string& b, const Description& c) const;
  std::vector<std::string> ask_for_fillers(const std::string& b,
                                           const std::string& role) const;
  bool ask_closed(const std::string& b, const std::string& role) const;

  // Most specific named concepts b provably belongs to, sorted.
  std::vector<std::string> classify_individual(const std::string& b) const;

  // Canonical text rendering of the whole KB state (symbol tables, DAG,
  // descriptors, fillers, closed flags).  Equal states have equal
  // fingerprints; dependency links are excluded, they carry no semantics.
  std::string fingerprint() const;

  const Ckb& ckb() const { return ckb_; }
  bool links_enabled() const { return use_links_; }

  const AboxStats& stats() const { return stats_; }
  void reset_stats() { stats_ = AboxStats{}; }

 private:
  struct Tx;
  class View;
  class Ctx;
  class TxSink;
  friend class Ctx;

  IndividualRecord make_fresh_record(const std::string& id) const;
  IndividualRecord& ensure_record(const std::string& id, Tx& tx);
  const IndividualRecord* record(const std::string& id) const;
  void require_individual(const std::string& id) const;

  UpdateReport run_transaction(const std::function<void(Tx&)>& body);
  void rollback(Tx& tx);

  bool apply_member(const std::string& b,
                    std::shared_ptr<const NormalizedConcept> nc,
                    const std::string& label, Tx& tx, bool top);
  bool apply_fill(const std::string& b, const std::string& role,
                  const std::string& filler, Tx& tx, bool top);
  bool apply_close(const std::string& b, const std::string& role, Tx& tx,
                   bool top);
  void process_blackboard(Tx& tx);
  void reclassify(const std::string& b, Tx& tx);
  void recheck_consistency(const std::string& b, Tx& tx);
  void redo_inferences(const std::string& b, Tx& tx);

  bool and_recognizes(const IndividualRecord& rec, const NormalizedConcept& nc,
                      HookSink* sink) const;
  bool definitely_inconsistent_nf(const IndividualRecord& rec,
                                  const NormalizedConcept& nc) const;
  bool ask_non_member_nf(const IndividualRecord& rec,
                         const NormalizedConcept& nc, int depth) const;

  void fire_deps(IndividualRecord& rec, DepKind kind, Tx& tx);
  void enqueue_everyone(Tx& tx);

  Ckb& ckb_;
  bool use_links_;
  std::map<std::string, IndividualRecord> records_;
  mutable AboxStats stats_;
};

}  // namespace dlkb
