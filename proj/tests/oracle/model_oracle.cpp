#include "oracle/model_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace dlkb::oracle {

namespace {

struct Vocab {
  std::vector<std::string> roles;
  std::vector<std::string> names;
  std::vector<std::string> individuals;

  int index(const std::vector<std::string>& v, const std::string& s) const {
    return static_cast<int>(
        std::find(v.begin(), v.end(), s) - v.begin());
  }
};

void add_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

void collect(const Description& d, Vocab& voc) {
  if (d.get_if<ThingRef>() || d.get_if<NothingRef>()) return;
  if (const NameRef* n = d.get_if<NameRef>()) {
    add_unique(voc.names, n->name);
    return;
  }
  if (const And* a = d.get_if<And>()) {
    for (const Description& c : a->args) collect(c, voc);
    return;
  }
  if (const All* a = d.get_if<All>()) {
    add_unique(voc.roles, a->role);
    collect(a->restriction.front(), voc);
    return;
  }
  if (const Some* s = d.get_if<Some>()) {
    add_unique(voc.roles, s->role);
    collect(s->restriction.front(), voc);
    return;
  }
  if (const AtLeast* a = d.get_if<AtLeast>()) {
    add_unique(voc.roles, a->role);
    return;
  }
  if (const AtMost* a = d.get_if<AtMost>()) {
    add_unique(voc.roles, a->role);
    return;
  }
  if (const FillsRef* f = d.get_if<FillsRef>()) {
    add_unique(voc.roles, f->role);
    add_unique(voc.individuals, f->filler);
    return;
  }
  if (const OneOf* o = d.get_if<OneOf>()) {
    for (const std::string& m : o->members) add_unique(voc.individuals, m);
    return;
  }
  throw std::invalid_argument("outside the finite fragment: " +
                              render_description(d));
}

// One candidate interpretation: per-element successor masks for every role
// and an extent mask for every concept name.
struct Interp {
  int n = 0;
  const Vocab* voc = nullptr;
  const std::uint32_t* cells = nullptr;  // roles*n successor masks, then names

  std::uint32_t succ(int role, int elem) const {
    return cells[role * n + elem];
  }
  std::uint32_t ext(int name) const {
    return cells[static_cast<int>(voc->roles.size()) * n + name];
  }
};

std::uint32_t eval(const Description& d, const Interp& it) {
  const std::uint32_t full = it.n == 32 ? ~0u : ((1u << it.n) - 1);
  if (d.get_if<ThingRef>()) return full;
  if (d.get_if<NothingRef>()) return 0;
  if (const NameRef* nm = d.get_if<NameRef>()) {
    return it.ext(it.voc->index(it.voc->names, nm->name));
  }
  if (const And* a = d.get_if<And>()) {
    std::uint32_t m = full;
    for (const Description& c : a->args) m &= eval(c, it);
    return m;
  }
  if (const All* a = d.get_if<All>()) {
    std::uint32_t cm = eval(a->restriction.front(), it);
    int r = it.voc->index(it.voc->roles, a->role);
    std::uint32_t m = 0;
    for (int e = 0; e < it.n; ++e) {
      if ((it.succ(r, e) & ~cm) == 0) m |= (1u << e);
    }
    return m;
  }
  if (const Some* s = d.get_if<Some>()) {
    std::uint32_t cm = eval(s->restriction.front(), it);
    int r = it.voc->index(it.voc->roles, s->role);
    std::uint32_t m = 0;
    for (int e = 0; e < it.n; ++e) {
      if ((it.succ(r, e) & cm) != 0) m |= (1u << e);
    }
    return m;
  }
  if (const AtLeast* a = d.get_if<AtLeast>()) {
    int r = it.voc->index(it.voc->roles, a->role);
    std::uint32_t m = 0;
    for (int e = 0; e < it.n; ++e) {
      if (std::popcount(it.succ(r, e)) >= static_cast<int>(a->count)) {
        m |= (1u << e);
      }
    }
    return m;
  }
  if (const AtMost* a = d.get_if<AtMost>()) {
    int r = it.voc->index(it.voc->roles, a->role);
    std::uint32_t m = 0;
    for (int e = 0; e < it.n; ++e) {
      if (std::popcount(it.succ(r, e)) <= static_cast<int>(a->count)) {
        m |= (1u << e);
      }
    }
    return m;
  }
  if (const FillsRef* f = d.get_if<FillsRef>()) {
    int r = it.voc->index(it.voc->roles, f->role);
    int b = it.voc->index(it.voc->individuals, f->filler);
    std::uint32_t m = 0;
    for (int e = 0; e < it.n; ++e) {
      if (it.succ(r, e) & (1u << b)) m |= (1u << e);
    }
    return m;
  }
  if (const OneOf* o = d.get_if<OneOf>()) {
    std::uint32_t m = 0;
    for (const std::string& b : o->members) {
      m |= (1u << it.voc->index(it.voc->individuals, b));
    }
    return m;
  }
  throw std::invalid_argument("outside the finite fragment: " +
                              render_description(d));
}

std::string render_interp(const Interp& it) {
  std::string out = "domain size " + std::to_string(it.n);
  for (std::size_t r = 0; r < it.voc->roles.size(); ++r) {
    out += "; " + it.voc->roles[r] + ":";
    for (int e = 0; e < it.n; ++e) {
      std::uint32_t s = it.succ(static_cast<int>(r), e);
      if (!s) continue;
      out += " " + std::to_string(e) + "->{";
      for (int f = 0; f < it.n; ++f) {
        if (s & (1u << f)) out += std::to_string(f) + ",";
      }
      out += "}";
    }
  }
  for (std::size_t nm = 0; nm < it.voc->names.size(); ++nm) {
    out += "; " + it.voc->names[nm] + "=" +
           std::to_string(it.ext(static_cast<int>(nm)));
  }
  return out;
}

}  // namespace

std::optional<Countermodel> refute_subsumption(const Description& hi,
                                               const Description& low,
                                               const ModelParams& params) {
  Vocab voc;
  collect(hi, voc);
  collect(low, voc);

  const int k = static_cast<int>(voc.individuals.size());
  const int roles = static_cast<int>(voc.roles.size());
  const int names = static_cast<int>(voc.names.size());
  long long budget = params.max_interpretations;

  for (int n = std::max(1, k); n <= k + params.max_anonymous; ++n) {
    const int cell_count = roles * n + names;
    // 2^(n * roles * n + n * names) interpretations at this size.
    const long long bits =
        static_cast<long long>(n) * roles * n + static_cast<long long>(n) * names;
    if (bits >= 62) break;
    const long long total = 1LL << bits;
    if (total > budget) break;
    budget -= total;

    std::vector<std::uint32_t> cells(std::max(cell_count, 1), 0);
    Interp it{n, &voc, cells.data()};
    const std::uint32_t limit = (n == 32 ? ~0u : (1u << n));
    while (true) {
      std::uint32_t low_mask = eval(low, it);
      if (low_mask) {
        std::uint32_t miss = low_mask & ~eval(hi, it);
        if (miss) {
          return Countermodel{n, std::countr_zero(miss), render_interp(it)};
        }
      }
      // odometer
      int i = 0;
      for (; i < cell_count; ++i) {
        if (++cells[i] < limit) break;
        cells[i] = 0;
      }
      if (i == cell_count) break;
    }
  }
  return std::nullopt;
}

}  // namespace dlkb::oracle
