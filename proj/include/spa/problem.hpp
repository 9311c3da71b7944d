#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spa/freemod.hpp"

namespace spa {

/// A parsed `.spa` file: algebra, ambient module, element list and task options.
struct Problem {
  AlgebraPtr algebra;
  FreeModule module;
  std::vector<ModuleElement> elements;
  std::optional<Degree> truncate;
  bool early_stop = false;
  /// Outcome of the grading check; graded commands refuse to run when it failed.
  ValidationReport graded;
};

/// Parses and validates a problem. Throws ParseError carrying line and column.
///
///   field QQ;                      # or GF(p)
///   gens x:1 y:1;                  # weight defaults to 1
///   rel y*x = 2*x*y;               # later generator first on the left
///   order deglex x<y;              # or degrevlex; full list, smallest first
///   module rank 2 shifts [0,1] order TOP;
///   elems [x^2, 0] [x*y + y^2, 0];
///   truncate 3;
///   early_stop;
Problem parse_problem(std::string_view text);

/// Canonical text of a problem; parse_problem(render_problem(p)) reproduces p.
std::string render_problem(const Problem& p);

/// Structural equality of algebras, modules, elements and options.
bool same_problem(const Problem& a, const Problem& b);

}  // namespace spa
