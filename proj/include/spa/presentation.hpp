#pragma once

#include <cstddef>
#include <vector>

#include "spa/freemod.hpp"

namespace spa {

/// M = ambient / (submodule generated by relations).
struct Presentation {
  FreeModule ambient;
  std::vector<ModuleElement> relations;
};

/// One pivot: relation `relation` had a unit entry in component `component`.
/// Every other surviving relation was rewritten as
/// v - (1/unit) * entry * v_pivot; those that became zero are in `vanished`.
/// All indices refer to the original presentation, 0-based.
struct Elimination {
  std::size_t relation = 0;
  std::size_t component = 0;
  Coefficient unit;
  std::vector<std::size_t> substituted;
  std::vector<std::size_t> vanished;
};

struct MinimizedPresentation {
  FreeModule ambient;
  /// Surviving basis vectors of the ambient module, ascending.
  std::vector<std::size_t> kept;
  /// The free module on the kept basis vectors.
  FreeModule module;
  /// Relations in `module` coordinates.
  std::vector<ModuleElement> relations;
  /// Original index of each surviving relation.
  std::vector<std::size_t> relation_ids;
  std::vector<Elimination> log;
  /// Relations that became zero during substitution.
  std::size_t dropped = 0;

  /// Maps an element of `module` back into `ambient`.
  ModuleElement embed(const ModuleElement& x) const;
};

/// Repeatedly eliminates a basis vector whose coefficient in some relation
/// is a nonzero constant. Pivot: lowest relation, then lowest component.
/// Zero input relations are ignored. Throws HomogeneityError.
MinimizedPresentation minimize_presentation(const Presentation& P);

/// Nonzero constant polynomial.
bool is_unit(const Polynomial& f);

}  // namespace spa
