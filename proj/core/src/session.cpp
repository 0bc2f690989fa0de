#include "dlkb/session.hpp"

namespace dlkb {

std::string render_name_list(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  out += ')';
  return out;
}

Session::Session(SessionOptions options)
    : ckb_(standard_registry(), options.budget),
      abox_(ckb_, options.use_dependency_links) {}

CommandResult Session::declare_report(const ClassificationReport& report) {
  CommandResult r;
  std::string line = "declared: " + report.name +
                     " parents: " + render_name_list(report.parents) +
                     " children: " + render_name_list(report.children);
  if (report.incoherent) {
    line += " incoherent";
    failed_ = true;
  }
  r.verbose.push_back(std::move(line));
  if (!report.equivalent_to.empty()) {
    r.verbose.push_back("redundant: " + report.name + " equivalent to " +
                        render_name_list(report.equivalent_to));
  }
  return r;
}

CommandResult Session::update_result(const UpdateReport& report) {
  CommandResult r;
  if (!report.accepted) {
    failed_ = true;
    r.lines.push_back("rejected: " + report.rejection);
    return r;
  }
  if (report.redundant && report.derived.empty()) {
    r.verbose.push_back("redundant: no-op");
    return r;
  }
  r.verbose.push_back("ok");
  for (const std::string& fact : report.derived) {
    r.verbose.push_back("derived: " + fact);
  }
  return r;
}

CommandResult Session::execute(const KbCommand& cmd) {
  return std::visit(
      [&](const auto& c) -> CommandResult {
        using T = std::decay_t<decltype(c)>;
        CommandResult r;
        if constexpr (std::is_same_v<T, DeclarePrimitiveRole>) {
          ckb_.declare_primitive_role(c.name);
          r.verbose.push_back("declared: " + c.name);
        } else if constexpr (std::is_same_v<T, DeclarePrimitiveAttribute>) {
          ckb_.declare_primitive_attribute(c.name);
          r.verbose.push_back("declared: " + c.name);
        } else if constexpr (std::is_same_v<T, DeclareIndividual>) {
          ckb_.declare_individual(c.name);
          r.verbose.push_back("declared: " + c.name);
        } else if constexpr (std::is_same_v<T, DeclarePrimitiveConcept>) {
          r = declare_report(ckb_.declare_primitive_concept(c.name, c.definition));
        } else if constexpr (std::is_same_v<T, DeclareDefinedConcept>) {
          r = declare_report(ckb_.declare_defined_concept(c.name, c.definition));
        } else if constexpr (std::is_same_v<T, AssertMember>) {
          r = update_result(abox_.assert_member(c.individual, c.description));
        } else if constexpr (std::is_same_v<T, AssertFills>) {
          r = update_result(abox_.assert_fills(c.individual, c.role, c.filler));
        } else if constexpr (std::is_same_v<T, AssertClosed>) {
          r = update_result(abox_.assert_closed(c.individual, c.role));
        } else if constexpr (std::is_same_v<T, AskSubsumes>) {
          r.lines.push_back(ckb_.ask_subsumes(c.lower, c.higher) ? "true"
                                                                 : "false");
        } else if constexpr (std::is_same_v<T, AskAncestors>) {
          r.lines.push_back(render_name_list(ckb_.ask_ancestors(c.description)));
        } else if constexpr (std::is_same_v<T, AskIsIncoherent>) {
          r.lines.push_back(ckb_.ask_is_incoherent(c.description) ? "true"
                                                              : "false");
        } else if constexpr (std::is_same_v<T, AskMember>) {
          r.lines.push_back(abox_.ask_member(c.individual, c.description)
                                ? "true"
                                : "false");
        } else if constexpr (std::is_same_v<T, AskNonMember>) {
          r.lines.push_back(abox_.ask_non_member(c.individual, c.description)
                                ? "true"
                                : "false");
        } else if constexpr (std::is_same_v<T, AskForFillers>) {
          r.lines.push_back(
              render_name_list(abox_.ask_for_fillers(c.individual, c.role)));
        } else if constexpr (std::is_same_v<T, AskClosed>) {
          r.lines.push_back(abox_.ask_closed(c.individual, c.role) ? "true"
                                                                   : "false");
        }
        return r;
      },
      cmd);
}

}  // namespace dlkb
