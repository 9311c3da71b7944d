#include "spa/presentation.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "spa/error.hpp"

namespace spa {

bool is_unit(const Polynomial& f) { return f.size() == 1 && f.lead().mono.is_one(); }

namespace {

ModuleOrderPtr restricted_order(const FreeModule& L, const std::vector<std::size_t>& kept) {
  const ModuleOrderPtr& order = L.order();
  if (order->kind() != ModuleOrder::Kind::Schreyer) return order;
  std::vector<ModuleMonomial> leads;
  for (std::size_t k : kept) leads.push_back(order->leads().at(k));
  return ModuleOrder::schreyer(order->base(), std::move(leads));
}

}  // namespace

ModuleElement MinimizedPresentation::embed(const ModuleElement& x) const {
  std::vector<ModuleTerm> terms;
  for (const ModuleTerm& t : x) terms.push_back(ModuleTerm{t.coef, t.mono, kept.at(t.index)});
  return ambient.from_terms(std::move(terms));
}

MinimizedPresentation minimize_presentation(const Presentation& P) {
  const FreeModule& L = P.ambient;
  struct Live {
    std::size_t id;
    ModuleElement rel;
  };
  std::vector<Live> live;
  for (std::size_t i = 0; i < P.relations.size(); ++i) {
    L.check(P.relations[i]);
    if (!L.is_homogeneous(P.relations[i]))
      throw HomogeneityError("relation " + std::to_string(i + 1) + " is not homogeneous");
    if (!P.relations[i].is_zero()) live.push_back({i, P.relations[i]});
  }

  std::vector<bool> removed(L.rank(), false);
  std::vector<Elimination> log;
  std::size_t dropped = 0;
  for (;;) {
    std::optional<std::size_t> pivot_pos;
    std::size_t pivot_component = 0;
    Polynomial unit;
    for (std::size_t p = 0; p < live.size() && !pivot_pos; ++p) {
      const auto comps = L.components(live[p].rel);
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (is_unit(comps[i])) {
          pivot_pos = p;
          pivot_component = i;
          unit = comps[i];
          break;
        }
    }
    if (!pivot_pos) break;

    const Live pivot = live[*pivot_pos];
    const Coefficient inv = unit.lead().coef.inverse();
    Elimination step{pivot.id, pivot_component, unit.lead().coef, {}, {}};
    std::vector<Live> next;
    for (std::size_t p = 0; p < live.size(); ++p) {
      if (p == *pivot_pos) continue;
      const Polynomial entry = L.component(live[p].rel, pivot_component);
      if (entry.is_zero()) {
        next.push_back(live[p]);
        continue;
      }
      step.substituted.push_back(live[p].id);
      ModuleElement r = L.sub(live[p].rel, L.scale(inv, L.multiply(entry, pivot.rel)));
      if (r.is_zero()) {
        step.vanished.push_back(live[p].id);
        ++dropped;
      } else {
        next.push_back({live[p].id, std::move(r)});
      }
    }
    removed[pivot_component] = true;
    log.push_back(std::move(step));
    live = std::move(next);
  }

  std::vector<std::size_t> kept;
  std::vector<std::size_t> position(L.rank(), 0);
  std::vector<Degree> shifts;
  for (std::size_t k = 0; k < L.rank(); ++k)
    if (!removed[k]) {
      position[k] = kept.size();
      kept.push_back(k);
      shifts.push_back(L.shift(k));
    }
  FreeModule module(L.algebra_ptr(), std::move(shifts), restricted_order(L, kept));

  std::vector<ModuleElement> relations;
  std::vector<std::size_t> ids;
  for (const Live& r : live) {
    std::vector<ModuleTerm> terms;
    for (const ModuleTerm& t : r.rel) {
      if (removed[t.index]) throw std::logic_error("eliminated basis vector survived");
      terms.push_back(ModuleTerm{t.coef, t.mono, position[t.index]});
    }
    relations.push_back(module.from_terms(std::move(terms)));
    ids.push_back(r.id);
  }
  return MinimizedPresentation{L,         std::move(kept), std::move(module), std::move(relations),
                               std::move(ids), std::move(log), dropped};
}

}  // namespace spa
