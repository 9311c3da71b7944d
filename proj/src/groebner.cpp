#include "spa/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "spa/error.hpp"

namespace spa {

namespace {

// (degree, sequence, i, j); the sequence number makes the queue FIFO within a degree.
using PairKey = std::tuple<Degree, std::size_t, std::size_t, std::size_t>;

class Engine {
 public:
  Engine(const FreeModule& L, std::size_t input_count, std::optional<Degree> bound, bool track)
      : L_(L),
        omega_(L.algebra_ptr(), std::vector<Degree>(input_count, 0)),
        bound_(bound),
        track_(track) {}

  bool tracking() const { return track_; }

  std::vector<ModuleElement> G;
  std::vector<ModuleElement> V;
  std::vector<PairTrace> traces;

  bool has_pairs() const { return !queue_.empty(); }
  Degree next_pair_degree() const { return std::get<0>(queue_.top()); }

  void add(ModuleElement g, ModuleElement v) {
    G.push_back(std::move(g));
    V.push_back(std::move(v));
    const std::size_t t = G.size() - 1;
    const ModuleTerm& lt = G[t].lead();
    for (std::size_t i = 0; i < t; ++i) {
      const ModuleTerm& li = G[i].lead();
      if (li.index != lt.index) continue;
      const Degree d = L_.algebra().degree(li.mono.lcm(lt.mono)) + L_.shift(lt.index);
      if (bound_ && d > *bound_) continue;
      queue_.emplace(d, seq_++, i, t);
    }
  }

  void process_next_pair() {
    const auto [deg, seq, i, j] = queue_.top();
    queue_.pop();
    auto s = L_.s_polynomial_parts(G[i], G[j]);
    if (!s) throw std::logic_error("queued pair has different leading components");
    DivisionResult div = L_.divide(s->value, G);

    PairTrace trace{i, j, s->left_coef, s->left_mono, s->right_coef, s->right_mono, {}};
    ModuleElement v;
    if (track_)
      v = omega_.sub(omega_.multiply_term(s->left_coef, s->left_mono, V[i]),
                     omega_.multiply_term(s->right_coef, s->right_mono, V[j]));
    for (std::size_t k = 0; k < div.quotients.size(); ++k) {
      if (div.quotients[k].is_zero()) continue;
      if (track_) v = omega_.sub(v, omega_.multiply(div.quotients[k], V[k]));
      trace.representation.emplace_back(k, std::move(div.quotients[k]));
    }
    if (!div.remainder.is_zero()) {
      const Coefficient lc = div.remainder.lead().coef;
      trace.representation.emplace_back(G.size(), L_.algebra().constant(lc));
      traces.push_back(std::move(trace));
      add_monic(std::move(div.remainder), std::move(v));
    } else {
      traces.push_back(std::move(trace));
    }
  }

  /// Reduces input `position` against G; true if it contributed a new element.
  bool process_input(const ModuleElement& x, std::size_t position) {
    DivisionResult div = L_.divide(x, G);
    if (div.remainder.is_zero()) return false;
    ModuleElement v;
    if (track_) {
      v = omega_.basis(position);
      for (std::size_t k = 0; k < div.quotients.size(); ++k)
        if (!div.quotients[k].is_zero()) v = omega_.sub(v, omega_.multiply(div.quotients[k], V[k]));
    }
    add_monic(std::move(div.remainder), std::move(v));
    return true;
  }

  /// New remainders are stored monic; keeps rational coefficients from growing.
  void add_monic(ModuleElement g, ModuleElement v) {
    const Coefficient inv = g.lead().coef.inverse();
    add(L_.scale(inv, g), omega_.scale(inv, v));
  }

 private:
  const FreeModule& L_;
  FreeModule omega_;
  std::optional<Degree> bound_;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> queue_;
  std::size_t seq_ = 0;
  bool track_;
};

std::vector<ModuleElement> reduced_basis(const FreeModule& L, const std::vector<ModuleElement>& raw) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const ModuleMonomial lk = raw[k].lead().monomial();
    bool redundant = false;
    for (std::size_t l = 0; l < raw.size() && !redundant; ++l) {
      if (l == k) continue;
      const ModuleMonomial ll = raw[l].lead().monomial();
      if (FreeModule::divides(ll, lk) && (ll != lk || l < k)) redundant = true;
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<ModuleElement> out;
  out.reserve(keep.size());
  for (std::size_t k : keep) {
    std::vector<ModuleElement> others;
    for (std::size_t l : keep)
      if (l != k) others.push_back(raw[l]);
    ModuleElement r = L.reduce(raw[k], others);
    out.push_back(L.scale(r.lead().coef.inverse(), r));
  }
  return out;
}

void require_homogeneous(const FreeModule& L, std::span<const ModuleElement> inputs) {
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!L.is_homogeneous(inputs[i]))
      throw HomogeneityError("input " + std::to_string(i + 1) + " is not homogeneous");
}

// Fills in everything derived from the engine state once the loop is over.
GroebnerRun finish(const FreeModule& L, Engine& engine, std::vector<ModuleElement> generators,
                   std::vector<std::size_t> generator_indices,
                   const std::vector<std::size_t>& position_to_generator) {
  FreeModule generator_module = L.induced(generators);
  FreeModule basis_module = L.induced(engine.G);

  std::vector<ModuleElement> v_rows;
  std::vector<ModuleElement> u_rows;
  if (!engine.tracking()) engine.V.clear();
  v_rows.reserve(engine.V.size());
  for (const ModuleElement& row : engine.V) {
    std::vector<ModuleTerm> terms;
    for (const ModuleTerm& t : row) {
      const std::size_t g = position_to_generator.at(t.index);
      if (g == static_cast<std::size_t>(-1))
        throw std::logic_error("basis element depends on a discarded input");
      terms.push_back(ModuleTerm{t.coef, t.mono, g});
    }
    v_rows.push_back(generator_module.from_terms(std::move(terms)));
  }

  u_rows.reserve(generators.size());
  for (const ModuleElement& x : engine.tracking() ? generators : std::vector<ModuleElement>{}) {
    DivisionResult div = L.divide(x, engine.G);
    if (!div.remainder.is_zero()) throw std::logic_error("generator does not reduce to zero");
    u_rows.push_back(basis_module.from_components(div.quotients));
  }

  GroebnerRun run{L,
                  reduced_basis(L, engine.G),
                  std::move(engine.G),
                  std::move(engine.traces),
                  std::move(generators),
                  std::move(generator_indices),
                  std::move(generator_module),
                  std::move(basis_module),
                  std::move(v_rows),
                  std::move(u_rows),
                  std::nullopt,
                  false,
                  engine.tracking()};
  return run;
}

GroebnerRun graded(const FreeModule& L, std::span<const ModuleElement> inputs,
                   std::optional<Degree> bound, bool early_stop, Transitions transitions) {
  for (const ModuleElement& x : inputs) L.check(x);
  require_homogeneous(L, inputs);

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return L.degree(inputs[a]) < L.degree(inputs[b]);
  });
  const Degree top = order.empty() ? 0 : L.degree(inputs[order.back()]);

  Engine engine(L, inputs.size(), bound, transitions == Transitions::Track);
  std::vector<ModuleElement> generators;
  std::vector<std::size_t> generator_indices;
  std::vector<std::size_t> position_to_generator(inputs.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  bool stopped = false;
  for (;;) {
    const bool input_left = next < order.size() && (!bound || L.degree(inputs[order[next]]) <= *bound);
    if (!engine.has_pairs() && !input_left) break;
    Degree n = 0;
    if (engine.has_pairs() && input_left)
      n = std::min(engine.next_pair_degree(), L.degree(inputs[order[next]]));
    else
      n = engine.has_pairs() ? engine.next_pair_degree() : L.degree(inputs[order[next]]);
    if (early_stop && !input_left && n > top) {
      stopped = true;
      break;
    }
    while (engine.has_pairs() && engine.next_pair_degree() == n) engine.process_next_pair();
    while (next < order.size() && L.degree(inputs[order[next]]) == n) {
      const std::size_t pos = order[next++];
      if (engine.process_input(inputs[pos], pos)) {
        position_to_generator[pos] = generators.size();
        generators.push_back(inputs[pos]);
        generator_indices.push_back(pos);
      }
    }
  }
  GroebnerRun run = finish(L, engine, std::move(generators), std::move(generator_indices),
                           position_to_generator);
  run.truncation = bound;
  run.early_stopped = stopped;
  return run;
}

}  // namespace

bool is_groebner(const FreeModule& L, std::span<const ModuleElement> G) {
  for (const ModuleElement& g : G) {
    if (g.is_zero()) return false;
    L.check(g);
  }
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto s = L.s_polynomial_parts(G[i], G[j]);
      if (s && !L.reduce(s->value, G).is_zero()) return false;
    }
  return true;
}

GroebnerRun buchberger(const FreeModule& L, std::span<const ModuleElement> inputs,
                       Transitions transitions) {
  for (const ModuleElement& x : inputs) L.check(x);
  Engine engine(L, inputs.size(), std::nullopt, transitions == Transitions::Track);
  FreeModule omega(L.algebra_ptr(), std::vector<Degree>(inputs.size(), 0));
  std::vector<ModuleElement> generators;
  std::vector<std::size_t> generator_indices;
  std::vector<std::size_t> position_to_generator(inputs.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) continue;
    position_to_generator[i] = generators.size();
    generators.push_back(inputs[i]);
    generator_indices.push_back(i);
    engine.add(inputs[i], omega.basis(i));
  }
  while (engine.has_pairs()) engine.process_next_pair();
  return finish(L, engine, std::move(generators), std::move(generator_indices),
                position_to_generator);
}

GroebnerRun truncated_buchberger(const FreeModule& L, std::span<const ModuleElement> inputs,
                                 Degree bound, Transitions transitions) {
  return graded(L, inputs, bound, false, transitions);
}

GroebnerRun min_gens_gb(const FreeModule& L, std::span<const ModuleElement> inputs,
                        bool early_stop, Transitions transitions) {
  return graded(L, inputs, std::nullopt, early_stop, transitions);
}

bool contains(const FreeModule& L, std::span<const ModuleElement> gens, const ModuleElement& x) {
  L.check(x);
  if (x.is_zero()) return true;
  std::vector<ModuleElement> nonzero;
  for (const ModuleElement& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return false;
  const bool graded_data =
      L.is_homogeneous(x) &&
      std::all_of(nonzero.begin(), nonzero.end(),
                  [&](const ModuleElement& g) { return L.is_homogeneous(g); });
  if (graded_data) {
    const GroebnerRun run = truncated_buchberger(L, nonzero, L.degree(x), Transitions::Skip);
    return L.reduce(x, run.raw).is_zero();
  }
  const GroebnerRun run = buchberger(L, nonzero, Transitions::Skip);
  return L.reduce(x, run.raw).is_zero();
}

}  // namespace spa
