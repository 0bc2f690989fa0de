#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dlkb/abox.hpp"
#include "dlkb/commands.hpp"
#include "dlkb/tbox.hpp"

namespace dlkb {

struct SessionOptions {
  long budget = Budget::kDefault;
  bool use_dependency_links = true;
};

struct CommandResult {
  std::vector<std::string> lines;    // printed unconditionally (answers,
                                     // rejections)
  std::vector<std::string> verbose;  // reports, printed with --verbose
};

// One knowledge-base session: a CKB plus A-box executing parsed commands with
// deterministic output.  Single-threaded.
class Session {
 public:
  explicit Session(SessionOptions options = {});

  CommandResult execute(const KbCommand& cmd);

  Ckb& ckb() { return ckb_; }
  Abox& abox() { return abox_; }
  const Abox& abox() const { return abox_; }

  std::string fingerprint() const { return abox_.fingerprint(); }

  // 0 ok; 1 when any update was rejected or a declared concept incoherent.
  int exit_status() const { return failed_ ? 1 : 0; }

 private:
  CommandResult declare_report(const ClassificationReport& report);
  CommandResult update_result(const UpdateReport& report);

  Ckb ckb_;
  Abox abox_;
  bool failed_ = false;
};

// Renders a list answer: "(a b c)".
std::string render_name_list(const std::vector<std::string>& names);

}  // namespace dlkb
