// Acceptance run: one PASS/FAIL line per criterion, with timings.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "spa/groebner.hpp"
#include "spa/presentation.hpp"
#include "spa/resolution.hpp"
#include "spa/syzygy.hpp"

using namespace spa;
using fx::Q;

namespace {

struct Instance {
  AlgebraPtr algebra;
  std::vector<ModuleElement> inputs;
};

struct Family {
  std::string name;
  std::vector<Instance> instances;
};

/// 200 homogeneous inputs per algebra: 1 to 3 generators of degree 1 to 4.
std::vector<Family> corpus() {
  const Coefficient two = Q(2), half = Q(1, 2);
  std::vector<AlgebraPtr> quantum;
  for (int mask = 0; mask < 8; ++mask)
    quantum.push_back(fx::quantum3(mask & 1 ? two : half, mask & 2 ? two : half, mask & 4 ? two : half));
  const std::vector<std::pair<std::string, std::function<AlgebraPtr(int)>>> makers = {
      {"K[x,y,z]", [c = fx::commutative(3)](int) { return c; }},
      {"quantum 3-space", [quantum](int t) { return quantum[t % 8]; }},
      {"M_q(2), q=2", [m = fx::mq2(2)](int) { return m; }},
  };
  std::vector<Family> out;
  for (const auto& [name, make] : makers) {
    std::mt19937 rng(1);
    Family fam{name, {}};
    for (int t = 0; t < 200; ++t) {
      const AlgebraPtr A = make(t);
      const FreeModule L(A, {0});
      std::uniform_int_distribution<int> deg(1, 4), count(1, 3);
      Instance inst{A, {}};
      for (int k = count(rng); k > 0; --k) inst.inputs.push_back(L.embed(fx::random_homogeneous(*A, deg(rng), rng), 0));
      fam.instances.push_back(std::move(inst));
    }
    out.push_back(std::move(fam));
  }
  return out;
}

class Criterion {
 public:
  Criterion(int number, std::string what, double budget)
      : number_(number), what_(std::move(what)), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    if (failures_++ < 5) notes_.push_back(why);
  }
  void check(bool ok, const std::string& why) {
    ++checks_;
    if (!ok) fail(why);
  }

  bool finish() {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const bool in_time = budget_ <= 0 || secs < budget_;
    const bool ok = failures_ == 0 && in_time;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s";
    if (budget_ > 0) time << " of " << budget_ << " s";
    std::cout << "criterion " << number_ << ": " << (ok ? "PASS" : "FAIL") << "  " << what_ << " (" << checks_
              << " checks, " << failures_ << " failures, " << time.str() << ")\n";
    for (const auto& n : notes_) std::cout << "    " << n << '\n';
    if (!in_time) std::cout << "    over the time budget\n";
    std::cout.flush();
    return ok;
  }

 private:
  int number_;
  std::string what_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

std::string where(const Family& fam, std::size_t t) { return fam.name + " #" + std::to_string(t); }

bool reduces_to_zero(const FreeModule& L, const ModuleElement& x, std::span<const ModuleElement> G) {
  return L.reduce(x, G).is_zero();
}

bool criterion1(const std::vector<Family>& families) {
  Criterion c(1, "Buchberger criterion and input reduction on 3 x 200 random inputs", 60);
  for (const Family& fam : families)
    for (std::size_t t = 0; t < fam.instances.size(); ++t) {
      const Instance& inst = fam.instances[t];
      const FreeModule L(inst.algebra, {0});
      const GroebnerRun run = buchberger(L, inst.inputs, Transitions::Skip);
      c.check(is_groebner(L, run.basis), where(fam, t) + ": basis fails the S-polynomial test");
      for (const auto& u : inst.inputs)
        c.check(reduces_to_zero(L, u, run.basis), where(fam, t) + ": an input does not reduce to zero");
    }
  return c.finish();
}

bool criterion2(const std::vector<Family>& families) {
  Criterion c(2, "truncated and full bases agree on membership up to the truncation degree", 60);
  std::mt19937 rng(2);
  for (const Family& fam : families)
    for (std::size_t t = 0; t < fam.instances.size(); ++t) {
      const Instance& inst = fam.instances[t];
      const SolvableAlgebra& A = *inst.algebra;
      const FreeModule L(inst.algebra, {0});
      const GroebnerRun full = buchberger(L, inst.inputs, Transitions::Skip);
      Degree top = 0;
      for (const auto& u : inst.inputs) top = std::max(top, L.degree(u));
      for (Degree n0 = 0; n0 <= top + 2; ++n0) {
        const GroebnerRun cut = truncated_buchberger(L, inst.inputs, n0, Transitions::Skip);
        // one random element and one member in each degree 1..n0
        for (Degree d = 1; d <= n0; ++d) {
          std::vector<ModuleElement> tests = {L.embed(fx::random_homogeneous(A, d, rng, 2), 0)};
          ModuleElement member;
          for (const auto& u : inst.inputs)
            if (L.degree(u) <= d)
              member = L.add(member, L.multiply(L.degree(u) == d ? A.constant(fx::small_coef(A.field(), rng))
                                                                 : fx::random_homogeneous(A, d - L.degree(u), rng, 2),
                                                u));
          if (!member.is_zero()) tests.push_back(member);
          for (const auto& x : tests)
            c.check(reduces_to_zero(L, x, full.basis) == reduces_to_zero(L, x, cut.basis),
                    where(fam, t) + ": membership disagrees at n0 = " + std::to_string(n0));
        }
      }
    }
  return c.finish();
}

bool criterion3(const std::vector<Family>& families) {
  Criterion c(3, "minimal generators are sufficient and irredundant; monomial counts match", 30);
  for (const Family& fam : families)
    for (std::size_t t = 0; t < fam.instances.size(); ++t) {
      const Instance& inst = fam.instances[t];
      const FreeModule L(inst.algebra, {0});
      const GroebnerRun run = min_gens_gb(L, inst.inputs, false, Transitions::Skip);
      std::vector<bool> used(inst.inputs.size(), false);
      for (std::size_t k : run.generator_indices) used[k] = true;
      for (std::size_t k = 0; k < inst.inputs.size(); ++k)
        if (!used[k])
          c.check(contains(L, run.generators, inst.inputs[k]), where(fam, t) + ": a discarded input is not generated");
      for (std::size_t k = 0; k < run.generators.size(); ++k) {
        std::vector<ModuleElement> others = run.generators;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
        c.check(!contains(L, others, run.generators[k]), where(fam, t) + ": a kept generator is redundant");
      }
    }
  std::mt19937 rng(3);
  const auto A = fx::commutative(3);
  const FreeModule L(A, {0});
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> count(1, 6), deg(1, 3);
    std::vector<oracle::Exps> monos;
    std::vector<ModuleElement> inputs;
    for (int k = count(rng); k > 0; --k) {
      const auto all = fx::monomials_of_degree(*A, deg(rng));
      const Monomial m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      monos.push_back(fx::exps(m));
      inputs.push_back(L.embed(A->term(A->field().one(), m), 0));
    }
    const GroebnerRun run = min_gens_gb(L, inputs, false, Transitions::Skip);
    c.check(run.generators.size() == oracle::monomial_min_gens(monos),
            "monomial instance " + std::to_string(t) + ": generator count differs from the oracle");
  }
  return c.finish();
}

bool criterion4() {
  Criterion c(4, "planted unit entries are eliminated; output relations lie in the relation module", 10);
  std::mt19937 rng(4);
  const std::vector<AlgebraPtr> algebras = {fx::commutative(3), fx::quantum3(Q(2), Q(1, 2), Q(2)), fx::mq2(2)};
  for (int t = 0; t < 50; ++t) {
    const AlgebraPtr& A = algebras[t % algebras.size()];
    const fx::Planted planted = fx::planted_presentation(A, rng);
    const Presentation& P = planted.presentation;
    const MinimizedPresentation mp = minimize_presentation(P);
    const std::string tag = "presentation " + std::to_string(t);
    c.check(mp.kept.size() == P.ambient.rank() - planted.pivots, tag + ": kept rank is not s minus the pivots");
    for (const auto& r : mp.relations) {
      bool unit = false;
      for (const Polynomial& f : mp.module.components(r)) unit = unit || is_unit(f);
      c.check(!unit, tag + ": a unit entry survived");
      c.check(contains(P.ambient, P.relations, mp.embed(r)), tag + ": an output relation is not in N");
    }
  }
  return c.finish();
}

bool criterion5() {
  Criterion c(5, "Schreyer leading monomials, exact annihilation, Schreyer set is a Gröbner basis", 30);
  std::mt19937 rng(5);
  const std::vector<AlgebraPtr> algebras = {fx::commutative(3), fx::quantum3(Q(2), Q(1, 2), Q(2)), fx::mq2(2)};
  for (const AlgebraPtr& A : algebras) {
    for (int t = 0; t < 60; ++t) {
      const FreeModule L(A, {0, 1}, t % 2 ? ModuleOrder::pot() : ModuleOrder::top());
      std::vector<ModuleElement> inputs;
      std::uniform_int_distribution<int> count(1, 3), deg(1, 3);
      for (int k = count(rng); k > 0; --k) inputs.push_back(fx::random_element(L, deg(rng), rng, 2));
      const GroebnerRun run = buchberger(L, inputs);
      const std::string tag = A->render(A->variable(0)) + " algebra, instance " + std::to_string(t);
      const auto S = schreyer_syzygies(run);
      std::vector<ModuleElement> elems;
      for (const auto& s : S) {
        const ModuleMonomial a = run.raw[s.first].lead().monomial(), b = run.raw[s.second].lead().monomial();
        const ModuleMonomial expect{b.mono.cofactor_in(a.mono.lcm(b.mono)), s.second};
        c.check(!s.element.is_zero() && s.element.lead().monomial() == expect, tag + ": Schreyer lead law fails");
        c.check(run.basis_module.combine(s.element, run.raw).is_zero(), tag + ": Schreyer row does not annihilate");
        elems.push_back(s.element);
      }
      c.check(is_groebner(run.basis_module, elems), tag + ": Schreyer set is not a Gröbner basis");
      for (const auto& row : syzygies_of_generators(run))
        c.check(run.generator_module.combine(row.element, run.generators).is_zero(),
                tag + ": syzygy does not annihilate the inputs");
    }
  }
  return c.finish();
}

bool criterion6() {
  Criterion c(6, "Koszul, quantum plane and 30 monomial resolutions match and verify", 120);
  auto cyclic = [](const AlgebraPtr& A, std::vector<Monomial> gens) {
    const FreeModule L(A, {0});
    std::vector<ModuleElement> rels;
    for (const Monomial& m : gens) rels.push_back(L.embed(A->term(A->field().one(), m), 0));
    return Presentation{L, rels};
  };
  auto verify = [&](const Resolution& R, const std::string& tag) {
    const ValidationReport report = verify_resolution(R);
    c.check(report.valid(), tag + ": " + (report.valid() ? "" : report.failures.front()));
    c.check(R.length() <= R.steps.front().module.algebra().num_gens(), tag + ": length exceeds n");
  };
  {
    const auto A = fx::commutative(3);
    const Resolution R = minimal_free_resolution(
        cyclic(A, {Monomial({1, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1})}));
    const BettiTable expect = {{1, {0}}, {3, {1, 1, 1}}, {3, {2, 2, 2}}, {1, {3}}};
    c.check(betti(R) == expect && R.length() == 3, "Koszul: Betti table differs from (1,3,3,1)");
    verify(R, "Koszul");
  }
  {
    const auto A = fx::quantum_plane(Q(2));
    const Resolution R = minimal_free_resolution(cyclic(A, {Monomial({1, 0}), Monomial({0, 1})}));
    const BettiTable expect = {{1, {0}}, {2, {1, 1}}, {1, {2}}};
    c.check(betti(R) == expect && R.length() == 2, "quantum plane: Betti table differs from (1,2,1)");
    verify(R, "quantum plane");
  }
  std::mt19937 rng(6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto A = fx::commutative(n);
    std::uniform_int_distribution<int> count(1, 5), deg(1, 3);
    std::vector<Monomial> gens;
    std::vector<oracle::Exps> exps;
    for (int k = count(rng); k > 0; --k) {
      const auto all = fx::monomials_of_degree(*A, deg(rng));
      gens.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
      exps.push_back(fx::exps(gens.back()));
    }
    const Resolution R = minimal_free_resolution(cyclic(A, gens));
    const auto expect = oracle::monomial_betti(n, exps);
    const BettiTable table = betti(R);
    bool same = table.size() == expect.size();
    for (std::size_t i = 0; same && i < table.size(); ++i) {
      std::map<unsigned, std::size_t> got;
      for (Degree s : table[i].shifts) ++got[static_cast<unsigned>(s)];
      same = got == expect[i];
    }
    const std::string tag = "monomial instance " + std::to_string(t);
    c.check(same, tag + ": Betti table differs from the oracle");
    verify(R, tag);
  }
  return c.finish();
}

std::pair<int, std::string> run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  return {pclose(pipe), out};
}

bool criterion7() {
  Criterion c(7, "resolve --json is byte-identical across runs on every fixture", 0);
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(SPA_FIXTURES))
    if (entry.path().extension() == ".spa") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    const std::string command = std::string("'") + SPA_CLI + "' resolve --json '" + file.string() + "' 2>&1";
    const auto first = run_command(command);
    const auto second = run_command(command);
    c.check(first == second, file.filename().string() + ": outputs differ");
    c.check(first.first != -1, file.filename().string() + ": could not run the command line tool");
  }
  c.check(!files.empty(), "no fixtures found");
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<Family> families = corpus();
  bool ok = true;
  ok &= criterion1(families);
  ok &= criterion2(families);
  ok &= criterion3(families);
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6();
  ok &= criterion7();
  return ok ? 0 : 1;
}
