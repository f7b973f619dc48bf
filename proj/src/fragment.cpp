#include "eliahou/fragment.hpp"

#include <algorithm>

namespace eliahou {

std::optional<Binomial> as_binomial(const GeneratorRecord& r, const TermOrder& order) {
  if (r.level() != 0 || r.value.size() != 1 || !r.value.begin()->first.is_ring()) return std::nullopt;
  const Polynomial& p = r.value.begin()->second;
  if (p.size() != 2) return std::nullopt;
  auto a = p.terms().begin();
  auto b = std::next(a);
  if (order.greater(b->first, a->first)) std::swap(a, b);
  if (a->second != 1) return std::nullopt;
  return Binomial{a->first, b->first};
}

std::vector<std::size_t> ResolutionFragment::ranks() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_level) + 2, 0);
  out[0] = 1;
  for (const auto& g : generators) {
    if (g.level() >= 0 && g.level() <= max_level) ++out[g.level() + 1];
  }
  return out;
}

std::vector<const GeneratorRecord*> ResolutionFragment::level(int j) const {
  std::vector<const GeneratorRecord*> out;
  for (const auto& g : generators)
    if (g.level() == j) out.push_back(&g);
  return out;
}

ModuleElement apply_values(const Field& k, const GeneratorLookup& lookup, const ModuleElement& v,
                           std::vector<GeneratorId>* missing) {
  ModuleElement out;
  for (const auto& [id, p] : v) {
    const GeneratorRecord* rec = lookup(id);
    if (!rec) {
      if (missing) missing->push_back(id);
      continue;
    }
    for (const auto& [target, q] : rec->value) {
      Polynomial& slot = out[target];
      slot.add_scaled(k, p.times(k, q), 1, Monomial::unit(q.terms().begin()->first.nvars()));
      if (slot.is_zero()) out.erase(target);
    }
  }
  return out;
}

FragmentReport verify_fragment(const Semigroup& s, const Field& k, const TermOrder& order,
                               const ResolutionFragment& fragment, const BettiFunction& betti) {
  FragmentReport report;
  report.ranks = fragment.ranks();
  auto fail = [&](const std::string& what) { report.violations.push_back(what); };

  std::map<GeneratorId, const GeneratorRecord*> by_id;
  for (const auto& g : fragment.generators) {
    if (!by_id.emplace(g.id, &g).second) fail(g.id.to_string() + ": listed twice");
  }
  const GeneratorLookup lookup = [&](const GeneratorId& id) -> const GeneratorRecord* {
    auto it = by_id.find(id);
    return it == by_id.end() ? nullptr : it->second;
  };

  std::map<std::pair<int, SDegree>, std::size_t> counts;
  for (const auto& g : fragment.generators) {
    ++report.checked_generators;
    ++counts[{g.level(), g.degree()}];
    const std::string name = g.id.to_string();
    if (is_zero(g.value)) {
      fail(name + ": zero value");
      continue;
    }
    if (g.level() == 0) {
      auto b = as_binomial(g, order);
      const Polynomial& p = g.value.begin()->second;
      if (!b || g.value.size() != 1 || b->to_polynomial(k) != p) {
        fail(name + ": value is not of the form x^a - x^b");
        continue;
      }
      if (s.degree_of(b->lead) != g.degree() || s.degree_of(b->trail) != g.degree()) fail(name + ": not homogeneous of its degree");
      if (p.has_constant_term()) fail(name + ": constant term");
      continue;
    }
    bool complete = true;
    for (const auto& [id, p] : g.value) {
      if (id.level != g.level() - 1 || !lookup(id)) {
        fail(name + ": refers to " + id.to_string() + ", which is not a level-" + std::to_string(g.level() - 1) +
             " generator of the fragment");
        complete = false;
        continue;
      }
      if (p.has_constant_term()) fail(name + ": constant coefficient on " + id.to_string());
      for (const auto& [x, c] : p.terms()) {
        if (s.degree_of(x) + id.degree != g.degree()) {
          fail(name + ": term " + x.to_string() + " on " + id.to_string() + " is not of degree " + degree_to_string(g.degree()));
        }
      }
    }
    if (complete && !is_zero(apply_values(k, lookup, g.value))) fail(name + ": composition with the previous map is nonzero");
  }
  for (const auto& [key, n] : counts) {
    const std::size_t bound = betti(key.second, key.first);
    if (n > bound) {
      fail(std::to_string(n) + " level-" + std::to_string(key.first) + " generators at " + degree_to_string(key.second) +
           " exceed the Betti number " + std::to_string(bound));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace eliahou
