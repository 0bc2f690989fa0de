#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dlkb/ast.hpp"

namespace dlkb {

// One parsed KBMS command.  Surface names are kebab-case with a trailing
// question mark on boolean queries: declare-primitive-role, assert-fills,
// ask-subsumes?, ask-for-fillers, ...

struct DeclarePrimitiveRole {
  std::string name;
};
struct DeclarePrimitiveAttribute {
  std::string name;
};
struct DeclareIndividual {
  std::string name;
};
struct DeclarePrimitiveConcept {
  std::string name;
  Description definition;
};
struct DeclareDefinedConcept {
  std::string name;
  Description definition;
};

struct AssertMember {
  std::string individual;
  Description description;
};
struct AssertFills {
  std::string individual;
  std::string role;
  std::string filler;
};
struct AssertClosed {
  std::string individual;
  std::string role;
};

struct AskSubsumes {
  Description lower;   // C of ask-subsumes?(C, D): true iff C implies D
  Description higher;  // D
};
struct AskAncestors {
  Description description;
};
struct AskIsIncoherent {
  Description description;
};
struct AskMember {
  std::string individual;
  Description description;
};
struct AskNonMember {
  std::string individual;
  Description description;
};
struct AskForFillers {
  std::string individual;
  std::string role;
};
struct AskClosed {
  std::string individual;
  std::string role;
};

using KbCommand =
    std::variant<DeclarePrimitiveRole, DeclarePrimitiveAttribute,
                 DeclareIndividual, DeclarePrimitiveConcept,
                 DeclareDefinedConcept, AssertMember, AssertFills,
                 AssertClosed, AskSubsumes, AskAncestors, AskIsIncoherent,
                 AskMember, AskNonMember, AskForFillers, AskClosed>;

}  // namespace dlkb
