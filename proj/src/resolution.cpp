#include "spa/resolution.hpp"

#include <algorithm>
#include <string>

#include "spa/error.hpp"
#include "spa/groebner.hpp"
#include "spa/syzygy.hpp"

namespace spa {

Resolution minimal_free_resolution(const Presentation& P) {
  MinimizedPresentation mp = minimize_presentation(P);
  const std::size_t n = P.ambient.algebra().num_gens();
  std::vector<ResolutionStep> steps;
  steps.push_back({mp.module, {}});
  std::vector<ModuleElement> relations = mp.relations;
  for (;;) {
    const FreeModule& previous = steps.back().module;
    GroebnerRun run = min_gens_gb(previous, relations);
    if (run.generators.empty()) break;
    if (steps.size() > n)
      throw IterationOverrun("resolution length exceeds " + std::to_string(n) +
                             ", the number of algebra generators");
    std::vector<ModuleElement> next;
    for (SyzygyGenerator& s : syzygies_of_generators(run)) next.push_back(std::move(s.element));
    steps.push_back({run.generator_module, run.generators});
    relations = std::move(next);
  }
  return Resolution{std::move(mp), std::move(steps)};
}

BettiTable betti(const Resolution& R) {
  BettiTable table;
  for (const ResolutionStep& step : R.steps) {
    BettiRow row{step.module.rank(), step.module.shifts()};
    std::sort(row.shifts.begin(), row.shifts.end());
    table.push_back(std::move(row));
  }
  return table;
}

namespace {

// Rebuilds `row` inside `target`, which must share the index range.
ModuleElement transplant(const FreeModule& target, const ModuleElement& row) {
  return target.from_terms(std::vector<ModuleTerm>(row.begin(), row.end()));
}

}  // namespace

ValidationReport verify_resolution(const Resolution& R) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  if (R.steps.empty()) {
    fail("resolution has no steps");
    return report;
  }
  const SolvableAlgebra& A = R.steps.front().module.algebra();
  if (R.length() > A.num_gens())
    fail("length " + std::to_string(R.length()) + " exceeds " + std::to_string(A.num_gens()));

  for (std::size_t i = 1; i < R.steps.size(); ++i) {
    const FreeModule& src = R.steps[i].module;
    const FreeModule& dst = R.steps[i - 1].module;
    const auto& images = R.steps[i].images;
    const std::string tag = "map " + std::to_string(i);
    if (images.size() != src.rank()) {
      fail(tag + ": " + std::to_string(images.size()) + " images for rank " +
           std::to_string(src.rank()));
      continue;
    }
    for (std::size_t q = 0; q < images.size(); ++q) {
      try {
        dst.check(images[q]);
      } catch (const Error& e) {
        fail(tag + " column " + std::to_string(q + 1) + ": " + e.what());
        continue;
      }
      if (images[q].is_zero()) fail(tag + " column " + std::to_string(q + 1) + " is zero");
      const auto entries = dst.components(images[q]);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        for (const Term& t : entries[k]) {
          if (t.mono.is_one()) {
            fail(tag + " entry (" + std::to_string(k + 1) + "," + std::to_string(q + 1) +
                 ") has a constant term");
            break;
          }
          if (A.degree(t.mono) + dst.shift(k) != src.shift(q)) {
            fail(tag + " entry (" + std::to_string(k + 1) + "," + std::to_string(q + 1) +
                 ") is not of degree " + std::to_string(src.shift(q) - dst.shift(k)));
            break;
          }
        }
      }
    }
  }
  if (!report.valid()) return report;

  for (std::size_t i = 2; i < R.steps.size(); ++i) {
    const FreeModule& target = R.steps[i - 2].module;
    for (std::size_t q = 0; q < R.steps[i].images.size(); ++q) {
      try {
        if (!target.combine(R.steps[i].images[q], R.steps[i - 1].images).is_zero())
          fail("maps " + std::to_string(i - 1) + " and " + std::to_string(i) +
               " do not compose to zero on column " + std::to_string(q + 1));
      } catch (const Error& e) {
        fail("maps " + std::to_string(i - 1) + " and " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  if (!report.valid()) return report;

  // The first map must generate the presentation's relations.
  const FreeModule& L0 = R.steps.front().module;
  const std::vector<ModuleElement> none;
  const auto& first = R.steps.size() > 1 ? R.steps[1].images : none;
  for (std::size_t k = 0; k < R.presentation.relations.size(); ++k)
    if (!contains(L0, first, R.presentation.relations[k]))
      fail("relation " + std::to_string(k + 1) + " is not in the image of map 1");
  for (std::size_t q = 0; q < first.size(); ++q)
    if (!contains(L0, R.presentation.relations, first[q]))
      fail("map 1 column " + std::to_string(q + 1) + " is not a relation");

  // Kernel of each map is covered by the next one.
  for (std::size_t i = 1; i < R.steps.size(); ++i) {
    const FreeModule& src = R.steps[i].module;
    const FreeModule& dst = R.steps[i - 1].module;
    const GroebnerRun run = buchberger(dst, R.steps[i].images);
    if (run.generators.size() != R.steps[i].images.size()) continue;  // zero column, reported above
    const auto& next = i + 1 < R.steps.size() ? R.steps[i + 1].images : none;
    std::size_t uncovered = 0;
    for (const SyzygyGenerator& s : syzygies_of_generators(run)) {
      const ModuleElement row = transplant(src, s.element);
      if (!contains(src, next, row)) ++uncovered;
    }
    if (uncovered)
      fail("kernel of map " + std::to_string(i) + ": " + std::to_string(uncovered) +
           " syzygies are not generated by map " + std::to_string(i + 1));
  }
  return report;
}

}  // namespace spa
