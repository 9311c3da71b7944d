#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spa/freemod.hpp"

namespace spa {

/// Record of one processed S-pair (first < second, raw basis indices):
/// S(g_first, g_second) = sum_k representation[k] * g_k, LM(f_k g_k) <= LM(S).
struct PairTrace {
  std::size_t first = 0;
  std::size_t second = 0;
  Coefficient left_coef;
  Monomial left_mono;
  Coefficient right_coef;
  Monomial right_mono;
  std::vector<std::pair<std::size_t, Polynomial>> representation;
};

/// Whether a run records the transition rows U and V. Pair traces are
/// always kept.
enum class Transitions { Track, Skip };

/// Everything a Gröbner engine produced.
///
/// `raw` is the basis in discovery order; `basis` is its reduced form
/// (minimal, tail-reduced, monic), kept in the same relative order.
/// `generators` are the input elements the transition rows refer to: all
/// nonzero inputs for the full engine, the minimal generators for the
/// graded engine. `v_rows[k]` writes raw[k] over generator_module and
/// `u_rows[u]` writes generators[u] over basis_module.
struct GroebnerRun {
  FreeModule module;
  std::vector<ModuleElement> basis;
  std::vector<ModuleElement> raw;
  std::vector<PairTrace> traces;
  std::vector<ModuleElement> generators;
  std::vector<std::size_t> generator_indices;
  FreeModule generator_module;
  FreeModule basis_module;
  std::vector<ModuleElement> v_rows;
  std::vector<ModuleElement> u_rows;
  std::optional<Degree> truncation;
  bool early_stopped = false;
  /// False when the run skipped U and V; v_rows and u_rows are then empty.
  bool transitions = true;

  /// Every same-component pair of `raw` has a trace.
  bool complete() const { return !truncation && !early_stopped; }
};

/// Every same-component S-polynomial reduces to zero.
bool is_groebner(const FreeModule& L, std::span<const ModuleElement> G);

/// Full left Gröbner basis of the submodule generated by `inputs`.
/// Zero inputs are dropped.
GroebnerRun buchberger(const FreeModule& L, std::span<const ModuleElement> inputs,
                       Transitions transitions = Transitions::Track);

/// Degree-by-degree engine keeping only S-pairs and inputs of degree <= bound.
/// Throws HomogeneityError on inhomogeneous input.
GroebnerRun truncated_buchberger(const FreeModule& L, std::span<const ModuleElement> inputs,
                                 Degree bound, Transitions transitions = Transitions::Track);

/// Minimal homogeneous generators of the submodule and a homogeneous left
/// Gröbner basis for it. With `early_stop` the run halts once every input
/// degree has been processed, leaving a truncated basis.
GroebnerRun min_gens_gb(const FreeModule& L, std::span<const ModuleElement> inputs,
                        bool early_stop = false, Transitions transitions = Transitions::Track);

/// Submodule membership. Homogeneous data goes through a truncated basis
/// bounded by deg(x).
bool contains(const FreeModule& L, std::span<const ModuleElement> gens, const ModuleElement& x);

}  // namespace spa
