#include "dlkb/sameas.hpp"

#include <algorithm>

#include "dlkb/core_constructors.hpp"
#include "dlkb/kernel.hpp"

namespace dlkb {

ChainPair make_chain_pair(std::vector<std::string> a,
                          std::vector<std::string> b) {
  if (b < a) std::swap(a, b);
  return ChainPair{std::move(a), std::move(b)};
}

bool SameAsTerm::equals(const TermData& other) const {
  return pairs == static_cast<const SameAsTerm&>(other).pairs;
}

void SameAsTerm::render_forms(std::vector<std::string>& out) const {
  for (const ChainPair& p : pairs) {
    std::string s = "(same-as (";
    for (std::size_t i = 0; i < p.left.size(); ++i) {
      if (i) s += ' ';
      s += p.left[i];
    }
    s += ") (";
    for (std::size_t i = 0; i < p.right.size(); ++i) {
      if (i) s += ' ';
      s += p.right[i];
    }
    s += "))";
    out.push_back(std::move(s));
  }
}

std::map<std::vector<std::string>, std::vector<std::string>>
SameAsTerm::closure() const {
  using Chain = std::vector<std::string>;
  std::map<Chain, Chain> parent;
  auto find = [&](Chain c) {
    while (true) {
      auto it = parent.find(c);
      if (it == parent.end() || it->second == c) return c;
      c = it->second;
    }
  };
  for (const ChainPair& p : pairs) {
    parent.try_emplace(p.left, p.left);
    parent.try_emplace(p.right, p.right);
    Chain ra = find(p.left);
    Chain rb = find(p.right);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<Chain, Chain> roots;
  for (const auto& [chain, _] : parent) roots[chain] = find(chain);
  return roots;
}

bool SameAsTerm::mentions_attribute(const std::string& attr) const {
  for (const ChainPair& p : pairs) {
    if (std::find(p.left.begin(), p.left.end(), attr) != p.left.end()) {
      return true;
    }
    if (std::find(p.right.begin(), p.right.end(), attr) != p.right.end()) {
      return true;
    }
  }
  return false;
}

namespace {

TermPtr make_sameas(std::vector<ChainPair> pairs) {
  auto t = std::make_shared<SameAsTerm>();
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  t->pairs = std::move(pairs);
  return t;
}

// Result of walking a chain of single-valued attributes from an individual:
// the furthest individual reached and how much of the chain remains.
struct Walk {
  std::string at;
  std::size_t next;  // index of the first attribute not followed
  bool complete(const std::vector<std::string>& chain) const {
    return next == chain.size();
  }
};

Walk follow(const std::string& start, const std::vector<std::string>& chain,
            const AboxContext& kb) {
  std::string cur = start;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const IndividualView* v = kb.individual(cur);
    if (!v) return {cur, i};
    const std::vector<std::string>& f = v->fillers(chain[i]);
    if (f.empty()) return {cur, i};
    cur = f.front();  // attributes hold at most one filler
  }
  return {cur, chain.size()};
}

class SameAsHooks final : public ConstructorHooks {
 public:
  std::string_view tag() const override { return kSameAsTag; }
  bool is_branch() const override { return false; }

  bool accepts(const Description& d) const override {
    return d.get_if<SameAsRef>() != nullptr;
  }

  void normalize_term(const Description& d, NormalizeContext& ctx,
                      ImplicationQueue& todo) const override {
    const SameAsRef& s = *d.get_if<SameAsRef>();
    if (s.left == s.right) {
      post_definedness(s.left, ctx, todo);
      return;
    }
    todo.post({std::string(kSameAsTag),
               make_sameas({make_chain_pair(s.left, s.right)})});
  }

  bool subsumes_same(const TermData& hi, const TermData& low,
                     const Kernel&) const override {
    const auto& h = static_cast<const SameAsTerm&>(hi);
    const auto& l = static_cast<const SameAsTerm&>(low);
    auto closure = l.closure();
    for (const ChainPair& p : h.pairs) {
      auto a = closure.find(p.left);
      auto b = closure.find(p.right);
      if (a == closure.end() || b == closure.end() || a->second != b->second) {
        return false;
      }
    }
    return true;
  }

  TermPtr conjoin_to_same(const TermData& t, const TermData& old,
                          NormalizeContext&) const override {
    const auto& a = static_cast<const SameAsTerm&>(t);
    const auto& b = static_cast<const SameAsTerm&>(old);
    std::vector<ChainPair> merged = b.pairs;
    merged.insert(merged.end(), a.pairs.begin(), a.pairs.end());
    return make_sameas(std::move(merged));
  }

  bool recognizes(const TermData& t, const IndividualView& b,
                  const AboxContext& kb, HookSink* sink) const override {
    const auto& s = static_cast<const SameAsTerm&>(t);
    for (const ChainPair& p : s.pairs) {
      Walk w1 = follow(b.id(), p.left, kb);
      if (!w1.complete(p.left)) {
        if (sink) {
          sink->post_dependency(DepKind::Recognize, w1.at, b.id(), "same-as");
        }
        return false;
      }
      Walk w2 = follow(b.id(), p.right, kb);
      if (!w2.complete(p.right)) {
        if (sink) {
          sink->post_dependency(DepKind::Recognize, w2.at, b.id(), "same-as");
        }
        return false;
      }
      if (w1.at != w2.at) return false;
    }
    return true;
  }

  bool consistent_w_asserting(const TermData& t, const IndividualView& b,
                              const AboxContext& kb,
                              HookSink* sink) const override {
    const auto& s = static_cast<const SameAsTerm&>(t);
    bool proven = true;
    for (const ChainPair& p : s.pairs) {
      Walk w1 = follow(b.id(), p.left, kb);
      if (!w1.complete(p.left)) {
        if (sink) {
          sink->post_dependency(DepKind::Consistent, w1.at, b.id(), "same-as");
        }
        proven = false;
        continue;
      }
      Walk w2 = follow(b.id(), p.right, kb);
      if (!w2.complete(p.right)) {
        if (sink) {
          sink->post_dependency(DepKind::Consistent, w2.at, b.id(), "same-as");
        }
        proven = false;
        continue;
      }
      if (w1.at != w2.at) {
        throw InconsistentError(
            b.id(), "attribute chains reach distinct individuals '" + w1.at +
                        "' and '" + w2.at + "'");
      }
    }
    return proven;
  }

  bool consistent_w_filling(const TermData& t, const IndividualView& b,
                            const std::string& role, const std::string&,
                            const AboxContext& kb,
                            HookSink* sink) const override {
    const auto& s = static_cast<const SameAsTerm&>(t);
    if (!s.mentions_attribute(role)) return true;
    return consistent_w_asserting(t, b, kb, sink);
  }

  void infer_from_asserting(const TermData& t, const IndividualView& b,
                            const AboxContext& kb,
                            HookSink& sink) const override {
    const auto& s = static_cast<const SameAsTerm&>(t);
    for (const ChainPair& p : s.pairs) {
      Walk w1 = follow(b.id(), p.left, kb);
      Walk w2 = follow(b.id(), p.right, kb);
      infer_pair(p.left, w1, p.right, w2, b, sink);
      infer_pair(p.right, w2, p.left, w1, b, sink);
    }
  }

  void infer_from_filling(const TermData& t, const IndividualView& b,
                          const std::string& role, const std::string&,
                          const AboxContext& kb, HookSink& sink) const override {
    const auto& s = static_cast<const SameAsTerm&>(t);
    if (!s.mentions_attribute(role)) return;
    infer_from_asserting(t, b, kb, sink);
  }

  void redo_infer(const TermData& t, const IndividualView& b,
                  const AboxContext& kb, HookSink& sink) const override {
    infer_from_asserting(t, b, kb, sink);
  }

 private:
  // same-as([f1..fn], [f1..fn]) asserts the chain is defined: at-least(1, f1)
  // and, for longer chains, all(f1, same-as(rest, rest)).
  void post_definedness(const std::vector<std::string>& chain,
                        NormalizeContext& ctx, ImplicationQueue& todo) const {
    auto bounds = std::make_shared<BoundsTerm>();
    bounds->bound_role = chain.front();
    bounds->lower = 1;
    todo.post({std::string(kBoundsTag), std::move(bounds)});
    if (chain.size() > 1) {
      std::vector<std::string> rest(chain.begin() + 1, chain.end());
      NormalizedConcept sub = ctx.kernel.normalize(
          Description::same_as(rest, rest), ctx.lookup, ctx.budget);
      auto all = std::make_shared<AllTerm>();
      all->bound_role = chain.front();
      all->restriction = std::move(sub);
      todo.post({std::string(kAllTag), std::move(all)});
    }
  }

  // If the first chain is fully evaluated and the second is blocked with
  // exactly one attribute remaining, the blocked end gains the endpoint as
  // filler.  Blocked walks through other individuals leave an Infer
  // dependency so the attempt is repeated when they change.
  void infer_pair(const std::vector<std::string>& c1, const Walk& w1,
                  const std::vector<std::string>& c2, const Walk& w2,
                  const IndividualView& b, HookSink& sink) const {
    if (!w1.complete(c1)) {
      if (w1.at != b.id()) {
        sink.post_dependency(DepKind::Infer, w1.at, b.id(), "same-as");
      }
      return;
    }
    if (w2.complete(c2)) return;
    if (c2.size() - w2.next == 1) {
      sink.post_update({InternalUpdate::Kind::Fill, w2.at, c2[w2.next], w1.at,
                        nullptr});
    } else if (w2.at != b.id()) {
      sink.post_dependency(DepKind::Infer, w2.at, b.id(), "same-as");
    }
  }
};

}  // namespace

std::unique_ptr<ConstructorHooks> sameas_hooks() {
  return std::make_unique<SameAsHooks>();
}

}  // namespace dlkb
