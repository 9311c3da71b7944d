#include "spa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "spa/error.hpp"
#include "spa/report.hpp"

namespace spa {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void require_graded(const Problem& p, const char* command) {
  if (!p.graded.valid())
    throw Error(std::string(command) + " needs a graded algebra: " + p.graded.failures.front());
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Gröbner bases, syzygies and minimal free resolutions over solvable polynomial algebras",
               "spa"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::optional<long long> truncate;
  bool early_stop = false, betti_only = false, verify = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "problem file, or - for stdin")->required();
    sub->add_flag("--json", json, "machine-readable output");
  };
  CLI::App* check = app.add_subcommand("check", "parse and validate a problem");
  add_common(check);
  CLI::App* gb = app.add_subcommand("gb", "left Gröbner basis of the elements");
  add_common(gb);
  gb->add_option("--truncate", truncate, "only degrees up to N (homogeneous input)")
      ->check(CLI::NonNegativeNumber);
  CLI::App* mingens = app.add_subcommand("mingens", "minimal homogeneous generators");
  add_common(mingens);
  mingens->add_flag("--early-stop", early_stop, "stop after the largest input degree");
  CLI::App* minpres = app.add_subcommand("minpres", "minimize the presentation module/elements");
  add_common(minpres);
  CLI::App* syz = app.add_subcommand("syz", "generators of the syzygies of the elements");
  add_common(syz);
  CLI::App* resolve = app.add_subcommand("resolve", "minimal graded free resolution of module/elements");
  add_common(resolve);
  resolve->add_flag("--betti", betti_only, "print only the Betti table");
  resolve->add_flag("--verify", verify, "check the resolution independently");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Problem p = parse_problem(read_input(file, in));
    if (check->parsed()) {
      if (json)
        emit(out, check_json(p));
      else
        out << check_text(p);
    } else if (gb->parsed()) {
      if (!truncate && p.truncate) truncate = *p.truncate;
      GroebnerRun run = [&] {
        if (!truncate) return buchberger(p.module, p.elements, Transitions::Skip);
        require_graded(p, "gb --truncate");
        return truncated_buchberger(p.module, p.elements, static_cast<Degree>(*truncate),
                                    Transitions::Skip);
      }();
      if (json)
        emit(out, gb_json(p, run));
      else
        out << gb_text(p, run);
    } else if (mingens->parsed()) {
      require_graded(p, "mingens");
      const bool stop = early_stop || p.early_stop;
      GroebnerRun run = min_gens_gb(p.module, p.elements, stop, Transitions::Skip);
      if (json)
        emit(out, mingens_json(p, run, stop));
      else
        out << mingens_text(p, run);
    } else if (minpres->parsed()) {
      require_graded(p, "minpres");
      MinimizedPresentation mp = minimize_presentation(Presentation{p.module, p.elements});
      if (json)
        emit(out, minpres_json(mp));
      else
        out << minpres_text(mp);
    } else if (syz->parsed()) {
      GroebnerRun run = buchberger(p.module, p.elements);
      const std::vector<SyzygyGenerator> rows = syzygies_of_generators(run);
      if (json)
        emit(out, syz_json(p, run, rows));
      else
        out << syz_text(p, run, rows);
    } else if (resolve->parsed()) {
      require_graded(p, "resolve");
      const Resolution R = minimal_free_resolution(Presentation{p.module, p.elements});
      std::optional<ValidationReport> report;
      if (verify) report = verify_resolution(R);
      if (json) {
        emit(out, resolve_json(R, report ? &*report : nullptr));
      } else {
        out << (betti_only ? betti_text(betti(R)) : resolve_text(R));
        if (report) {
          if (report->valid()) out << "verify: ok\n";
          for (const std::string& f : report->failures) out << "verify: " << f << '\n';
        }
      }
      if (report && !report->valid()) return 1;
    }
  } catch (const UsageError& e) {
    err << "spa: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << (file == "-" ? "<stdin>" : file) << ':' << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "spa: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spa
