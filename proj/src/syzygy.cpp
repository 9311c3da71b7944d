#include "spa/syzygy.hpp"

#include <string>

#include "spa/error.hpp"

namespace spa {

namespace {

ModuleElement pair_generator(const FreeModule& target, const PairTrace& trace) {
  std::vector<ModuleTerm> terms;
  for (const auto& [k, f] : trace.representation)
    for (const Term& t : f) terms.push_back(ModuleTerm{t.coef, t.mono, k});
  terms.push_back(ModuleTerm{-trace.left_coef, trace.left_mono, trace.first});
  terms.push_back(ModuleTerm{trace.right_coef, trace.right_mono, trace.second});
  return target.from_terms(std::move(terms));
}

void check_row_width(const ModuleElement& row, std::size_t width, const char* what) {
  for (const ModuleTerm& t : row)
    if (t.index >= width)
      throw ShapeError(std::string(what) + " refers to column " + std::to_string(t.index + 1) +
                       " of " + std::to_string(width));
}

}  // namespace

const char* origin_name(SyzygyGenerator::Origin origin) {
  switch (origin) {
    case SyzygyGenerator::Origin::Schreyer: return "schreyer";
    case SyzygyGenerator::Origin::Transported: return "transported";
    case SyzygyGenerator::Origin::Diagonal: return "diagonal";
  }
  return "unknown";
}

std::vector<SyzygyGenerator> schreyer_syzygies(const GroebnerRun& run) {
  if (!run.complete())
    throw MissingTrace("the Gröbner run was truncated or stopped early; pair traces are incomplete");
  std::size_t pairs = 0;
  for (std::size_t j = 0; j < run.raw.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (run.raw[i].lead().index == run.raw[j].lead().index) ++pairs;
  if (pairs != run.traces.size())
    throw MissingTrace("expected " + std::to_string(pairs) + " pair traces, found " +
                       std::to_string(run.traces.size()));
  std::vector<SyzygyGenerator> out;
  out.reserve(run.traces.size());
  for (const PairTrace& trace : run.traces)
    out.push_back({pair_generator(run.basis_module, trace), SyzygyGenerator::Origin::Schreyer,
                   trace.first, trace.second});
  return out;
}

std::vector<SyzygyGenerator> schreyer_syzygies_from_basis(const FreeModule& L,
                                                          std::span<const ModuleElement> G) {
  const FreeModule target = L.induced(G);
  std::vector<SyzygyGenerator> out;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto s = L.s_polynomial_parts(G[i], G[j]);
      if (!s) continue;
      DivisionResult div = L.divide(s->value, G);
      if (!div.remainder.is_zero())
        throw Error("basis is not a Gröbner basis: S-polynomial of " + std::to_string(i + 1) +
                    " and " + std::to_string(j + 1) + " has a nonzero remainder");
      PairTrace trace{i, j, s->left_coef, s->left_mono, s->right_coef, s->right_mono, {}};
      for (std::size_t k = 0; k < div.quotients.size(); ++k)
        if (!div.quotients[k].is_zero())
          trace.representation.emplace_back(k, std::move(div.quotients[k]));
      out.push_back({pair_generator(target, trace), SyzygyGenerator::Origin::Schreyer, i, j});
    }
  return out;
}

std::vector<SyzygyGenerator> syzygies_of_generators(const FreeModule& generator_module,
                                                    std::span<const SyzygyGenerator> schreyer,
                                                    std::span<const ModuleElement> v_rows,
                                                    std::span<const ModuleElement> u_rows) {
  const std::size_t t = v_rows.size();
  const std::size_t m = generator_module.rank();
  if (u_rows.size() != m)
    throw ShapeError("U has " + std::to_string(u_rows.size()) + " rows, expected " +
                     std::to_string(m));
  for (const ModuleElement& row : v_rows) check_row_width(row, m, "V row");
  for (const ModuleElement& row : u_rows) check_row_width(row, t, "U row");
  for (const SyzygyGenerator& s : schreyer) check_row_width(s.element, t, "Schreyer row");

  std::vector<SyzygyGenerator> out;
  for (const SyzygyGenerator& s : schreyer) {
    ModuleElement row = generator_module.combine(s.element, v_rows);
    if (!row.is_zero())
      out.push_back({std::move(row), SyzygyGenerator::Origin::Transported, s.first, s.second});
  }
  for (std::size_t u = 0; u < m; ++u) {
    ModuleElement row =
        generator_module.sub(generator_module.combine(u_rows[u], v_rows), generator_module.basis(u));
    if (!row.is_zero()) out.push_back({std::move(row), SyzygyGenerator::Origin::Diagonal, u, 0});
  }
  return out;
}

std::vector<SyzygyGenerator> syzygies_of_generators(const GroebnerRun& run) {
  if (!run.transitions) throw MissingTrace("the Gröbner run did not record transition rows");
  const std::vector<SyzygyGenerator> schreyer = schreyer_syzygies(run);
  return syzygies_of_generators(run.generator_module, schreyer, run.v_rows, run.u_rows);
}

}  // namespace spa
