#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dlkb/hooks.hpp"

namespace dlkb {

// An attribute-chain equality.  Stored canonically: the lexicographically
// smaller chain first, and no pair relates a chain to itself (reflexive
// pairs are rewritten to chain-definedness during normalization).
struct ChainPair {
  std::vector<std::string> left;
  std::vector<std::string> right;
  auto operator<=>(const ChainPair&) const = default;
};

ChainPair make_chain_pair(std::vector<std::string> a,
                          std::vector<std::string> b);

struct SameAsTerm : TermData {
  std::vector<ChainPair> pairs;  // sorted, duplicate-free

  bool equals(const TermData& other) const override;
  void render_forms(std::vector<std::string>& out) const override;

  // Reflexive-symmetric-transitive closure of the pairs: every mentioned
  // chain mapped to a group representative.
  std::map<std::vector<std::string>, std::vector<std::string>> closure() const;

  bool mentions_attribute(const std::string& attr) const;
};

inline constexpr std::string_view kSameAsTag = "same-as";

std::unique_ptr<ConstructorHooks> sameas_hooks();

}  // namespace dlkb
