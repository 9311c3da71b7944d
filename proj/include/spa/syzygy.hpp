#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spa/groebner.hpp"

namespace spa {

struct SyzygyGenerator {
  enum class Origin { Schreyer, Transported, Diagonal };

  ModuleElement element;
  Origin origin = Origin::Schreyer;
  /// Pair (first, second) for Schreyer and Transported rows; `first` is the
  /// row index for Diagonal rows.
  std::size_t first = 0;
  std::size_t second = 0;
};

const char* origin_name(SyzygyGenerator::Origin origin);

/// The generators s_ij of the syzygies of run.raw, one per same-component
/// pair, living in run.basis_module. Throws MissingTrace when the run was
/// truncated or stopped early.
std::vector<SyzygyGenerator> schreyer_syzygies(const GroebnerRun& run);

/// Same generators for a bare Gröbner basis; representations are recomputed
/// by division. Result lives in L.induced(G).
std::vector<SyzygyGenerator> schreyer_syzygies_from_basis(const FreeModule& L,
                                                          std::span<const ModuleElement> G);

/// Generators of the syzygies of run.generators in run.generator_module:
/// the Schreyer generators pushed through V, then the nonzero rows of U V - E.
std::vector<SyzygyGenerator> syzygies_of_generators(const GroebnerRun& run);

/// Matrix form. `schreyer` rows live over the t basis elements, v_rows are
/// t rows over `generator_module`, u_rows are rank(generator_module) rows
/// over t columns. Throws ShapeError on inconsistent shapes.
std::vector<SyzygyGenerator> syzygies_of_generators(const FreeModule& generator_module,
                                                    std::span<const SyzygyGenerator> schreyer,
                                                    std::span<const ModuleElement> v_rows,
                                                    std::span<const ModuleElement> u_rows);

}  // namespace spa
