#include "spa/report.hpp"

#include <sstream>

namespace spa {

namespace {

const char* order_name(const FreeModule& L) {
  switch (L.order()->kind()) {
    case ModuleOrder::Kind::TOP: return "TOP";
    case ModuleOrder::Kind::POT: return "POT";
    case ModuleOrder::Kind::Schreyer: return "Schreyer";
  }
  return "?";
}

Json elements_json(const FreeModule& L, const std::vector<ModuleElement>& xs) {
  Json out = Json::array();
  for (const ModuleElement& x : xs) out.push_back(element_json(L, x));
  return out;
}

Json degrees_json(const FreeModule& L, const std::vector<ModuleElement>& xs) {
  Json out = Json::array();
  for (const ModuleElement& x : xs) out.push_back(L.degree(x));
  return out;
}

Json one_based(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(x + 1);
  return out;
}

std::string shifts_text(const std::vector<Degree>& shifts) {
  std::string out = "[";
  for (std::size_t k = 0; k < shifts.size(); ++k) out += (k ? ", " : "") + std::to_string(shifts[k]);
  return out + "]";
}

std::string indices_text(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + std::to_string(xs[k] + 1);
  return out.empty() ? "-" : out;
}

// Syzygy row widened from nonzero-input columns to all input columns.
ModuleElement widen(const FreeModule& wide, const GroebnerRun& run, const ModuleElement& row) {
  std::vector<ModuleTerm> terms;
  for (const ModuleTerm& t : row)
    terms.push_back(ModuleTerm{t.coef, t.mono, run.generator_indices.at(t.index)});
  return wide.from_terms(std::move(terms));
}

FreeModule input_module(const Problem& p) {
  std::vector<Degree> shifts;
  for (const ModuleElement& x : p.elements) shifts.push_back(x.is_zero() ? 0 : p.module.degree(x));
  return FreeModule(p.algebra, std::move(shifts));
}

}  // namespace

Json element_json(const FreeModule& L, const ModuleElement& x) {
  Json out = Json::array();
  for (const Polynomial& f : L.components(x)) out.push_back(L.algebra().render(f));
  return out;
}

Json check_json(const Problem& p) {
  const SolvableAlgebra& A = *p.algebra;
  Json j;
  j["format"] = 1;
  j["command"] = "check";
  j["field"] = A.field().name();
  Json gens = Json::array();
  for (std::size_t k = 0; k < A.num_gens(); ++k)
    gens.push_back(Json{{"name", A.names()[k]}, {"weight", A.weights()[k]}});
  j["generators"] = gens;
  j["commutative"] = A.is_commutative();
  j["solvable"] = true;
  j["graded"] = p.graded.valid();
  j["graded_failures"] = p.graded.failures;
  j["module"] = Json{{"rank", p.module.rank()}, {"shifts", p.module.shifts()}, {"order", order_name(p.module)}};
  j["elements"] = elements_json(p.module, p.elements);
  Json hom = Json::array();
  for (const ModuleElement& x : p.elements) hom.push_back(p.module.is_homogeneous(x));
  j["homogeneous"] = hom;
  return j;
}

Json gb_json(const Problem& p, const GroebnerRun& run) {
  Json j;
  j["format"] = 1;
  j["command"] = "gb";
  j["truncate"] = run.truncation ? Json(*run.truncation) : Json(nullptr);
  j["basis"] = elements_json(p.module, run.basis);
  j["degrees"] = degrees_json(p.module, run.basis);
  j["raw_size"] = run.raw.size();
  return j;
}

Json mingens_json(const Problem& p, const GroebnerRun& run, bool early_stop) {
  Json j;
  j["format"] = 1;
  j["command"] = "mingens";
  j["early_stop"] = early_stop;
  j["early_stopped"] = run.early_stopped;
  j["generators"] = one_based(run.generator_indices);
  j["elements"] = elements_json(p.module, run.generators);
  j["basis"] = elements_json(p.module, run.basis);
  j["degrees"] = degrees_json(p.module, run.basis);
  return j;
}

Json minpres_json(const MinimizedPresentation& mp) {
  Json j;
  j["format"] = 1;
  j["command"] = "minpres";
  j["kept"] = one_based(mp.kept);
  j["shifts"] = mp.module.shifts();
  j["relations"] = elements_json(mp.module, mp.relations);
  j["relation_ids"] = one_based(mp.relation_ids);
  Json log = Json::array();
  for (const Elimination& e : mp.log)
    log.push_back(Json{{"relation", e.relation + 1},
                       {"component", e.component + 1},
                       {"unit", e.unit.to_string()},
                       {"substituted", one_based(e.substituted)},
                       {"vanished", one_based(e.vanished)}});
  j["eliminations"] = log;
  j["dropped"] = mp.dropped;
  return j;
}

Json syz_json(const Problem& p, const GroebnerRun& run, const std::vector<SyzygyGenerator>& rows) {
  const FreeModule wide = input_module(p);
  Json j;
  j["format"] = 1;
  j["command"] = "syz";
  j["inputs"] = p.elements.size();
  Json out = Json::array();
  for (const SyzygyGenerator& s : rows) {
    Json r;
    r["origin"] = origin_name(s.origin);
    if (s.origin == SyzygyGenerator::Origin::Diagonal)
      r["row"] = run.generator_indices.at(s.first) + 1;
    else
      r["pair"] = Json::array({s.first + 1, s.second + 1});
    r["syzygy"] = element_json(wide, widen(wide, run, s.element));
    out.push_back(r);
  }
  j["syzygies"] = out;
  return j;
}

Json resolve_json(const Resolution& R, const ValidationReport* verified) {
  Json j;
  j["format"] = 1;
  j["command"] = "resolve";
  Json steps = Json::array();
  for (std::size_t i = 0; i < R.steps.size(); ++i) {
    const ResolutionStep& s = R.steps[i];
    Json matrix = Json::array();
    if (i > 0)
      for (const ModuleElement& x : s.images) matrix.push_back(element_json(R.steps[i - 1].module, x));
    steps.push_back(Json{{"rank", s.module.rank()}, {"shifts", s.module.shifts()}, {"matrix", matrix}});
  }
  j["steps"] = steps;
  Json table = Json::array();
  for (const BettiRow& row : betti(R)) table.push_back(Json{{"rank", row.rank}, {"shifts", row.shifts}});
  j["betti"] = table;
  j["length"] = R.length();
  j["presentation"] = Json{{"kept", one_based(R.presentation.kept)},
                           {"relations", elements_json(R.presentation.module, R.presentation.relations)}};
  if (verified) j["verify"] = Json{{"ok", verified->valid()}, {"failures", verified->failures}};
  return j;
}

std::string check_text(const Problem& p) {
  const SolvableAlgebra& A = *p.algebra;
  std::ostringstream os;
  os << "field " << A.field().name() << ", " << A.num_gens() << " generators";
  os << (A.is_commutative() ? ", commutative\n" : "\n");
  os << "solvable: ok\n";
  if (p.graded.valid()) {
    os << "graded: ok\n";
  } else {
    os << "graded: no\n";
    for (const std::string& f : p.graded.failures) os << "  " << f << '\n';
  }
  os << "module: rank " << p.module.rank() << ", shifts " << shifts_text(p.module.shifts())
     << ", order " << order_name(p.module) << '\n';
  std::size_t hom = 0;
  for (const ModuleElement& x : p.elements) hom += p.module.is_homogeneous(x);
  os << "elements: " << p.elements.size() << " (" << hom << " homogeneous)\n";
  return os.str();
}

std::string gb_text(const Problem& p, const GroebnerRun& run) {
  std::ostringstream os;
  for (const ModuleElement& g : run.basis) os << p.module.render(g) << '\n';
  return os.str();
}

std::string mingens_text(const Problem& p, const GroebnerRun& run) {
  std::ostringstream os;
  os << "minimal generators: " << indices_text(run.generator_indices) << '\n';
  for (const ModuleElement& g : run.generators) os << "  " << p.module.render(g) << '\n';
  os << "basis" << (run.early_stopped ? " (truncated)" : "") << ":\n";
  for (const ModuleElement& g : run.basis) os << "  " << p.module.render(g) << '\n';
  return os.str();
}

std::string minpres_text(const MinimizedPresentation& mp) {
  std::ostringstream os;
  os << "kept: " << indices_text(mp.kept) << '\n';
  os << "shifts: " << shifts_text(mp.module.shifts()) << '\n';
  os << "relations:\n";
  for (const ModuleElement& r : mp.relations) os << "  " << mp.module.render(r) << '\n';
  for (const Elimination& e : mp.log)
    os << "eliminated e" << e.component + 1 << " by relation " << e.relation + 1 << ", dropped "
       << e.vanished.size() << '\n';
  return os.str();
}

std::string syz_text(const Problem& p, const GroebnerRun& run,
                     const std::vector<SyzygyGenerator>& rows) {
  const FreeModule wide = input_module(p);
  std::ostringstream os;
  for (const SyzygyGenerator& s : rows) {
    os << wide.render(widen(wide, run, s.element)) << "  # " << origin_name(s.origin);
    if (s.origin == SyzygyGenerator::Origin::Diagonal)
      os << ' ' << run.generator_indices.at(s.first) + 1;
    else
      os << ' ' << s.first + 1 << ',' << s.second + 1;
    os << '\n';
  }
  return os.str();
}

std::string betti_text(const BettiTable& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.size(); ++i)
    os << i << ": " << table[i].rank << "  " << shifts_text(table[i].shifts) << '\n';
  return os.str();
}

std::string resolve_text(const Resolution& R) {
  std::ostringstream os;
  for (std::size_t i = 0; i < R.steps.size(); ++i) {
    const ResolutionStep& s = R.steps[i];
    os << "L" << i << ": rank " << s.module.rank() << ", shifts " << shifts_text(s.module.shifts())
       << '\n';
    if (i > 0)
      for (const ModuleElement& x : s.images) os << "  " << R.steps[i - 1].module.render(x) << '\n';
  }
  os << "length " << R.length() << '\n';
  return os.str();
}

}  // namespace spa
