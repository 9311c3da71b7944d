#pragma once

#include <cstddef>
#include <vector>

#include "spa/presentation.hpp"

namespace spa {

/// Free module L_i with the images phi_i(e_k) in L_{i-1}. Step 0 has no images.
struct ResolutionStep {
  FreeModule module;
  std::vector<ModuleElement> images;
};

struct Resolution {
  MinimizedPresentation presentation;
  std::vector<ResolutionStep> steps;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct BettiRow {
  std::size_t rank = 0;
  /// Ascending.
  std::vector<Degree> shifts;

  friend bool operator==(const BettiRow&, const BettiRow&) = default;
};

using BettiTable = std::vector<BettiRow>;

/// Minimal graded free resolution of ambient / relations. Throws
/// HomogeneityError on inhomogeneous relations and IterationOverrun if the
/// length would exceed the number of algebra generators.
Resolution minimal_free_resolution(const Presentation& P);

BettiTable betti(const Resolution& R);

/// Recomputes every structural claim of R independently and reports each
/// failure instead of throwing.
ValidationReport verify_resolution(const Resolution& R);

}  // namespace spa
