// pdedim: dimensional invariants (functional dimension p and functional rank
// sigma) of linear PDE symbol systems, via prolongations, Spencer cohomology,
// Hilbert polynomials, Cartan's test and closed forms for generalized complete
// intersections.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pdedim/analyze.hpp"
#include "pdedim/presets.hpp"

namespace {

struct CommonFlags {
  std::optional<int> max_degree;
  std::uint64_t seed = 0;
  int flag_samples = 3;
  long long limit_basis = 200000;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--max-degree", f.max_degree,
                  "top jet degree for the Hilbert window (default 2*r_max+n+4)");
  cmd->add_option("--seed", f.seed, "seed for generic flags (default 0)");
  cmd->add_option("--flag-samples", f.flag_samples, "flags sampled per character "
                  "computation (default 3)");
  cmd->add_option("--limit-basis", f.limit_basis,
                  "refuse ambient bases larger than this (default 200000)");
  cmd->add_option("--out", f.out, "write the report to this path instead of stdout");
  cmd->add_option("--format", f.format, "json (canonical) or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const std::string& s, const std::string& out) {
  if (out.empty()) {
    std::cout << s << "\n";
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file " + out);
    os << s << "\n";
  }
}

int run_analysis(const std::string& name, const pdedim::SymbolicSystem& sys,
                 const CommonFlags& f) {
  pdedim::AnalyzeOptions opts;
  opts.max_degree = f.max_degree;
  opts.seed = f.seed;
  opts.flag_samples = f.flag_samples;
  opts.limit_basis = f.limit_basis;
  pdedim::AnalysisReport rep = pdedim::analyze(sys, opts, name);
  if (f.format == "json")
    emit(pdedim::report_to_json(rep, pdedim::system_to_json(name, sys)).dump(2), f.out);
  else
    emit(pdedim::report_to_text(rep), f.out);
  if (!rep.ok()) {
    for (const pdedim::CrossCheck& c : rep.cross_checks)
      if (!c.pass)
        std::cerr << "cross-check failed: " << c.name << " (" << c.detail << ")\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimensional invariants of the formal solution space of a linear "
               "PDE system, from its symbol"};
  app.require_subcommand(1);

  // analyze FILE
  std::string file;
  CommonFlags af;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze a system file");
  analyze_cmd->add_option("file", file, "pdedim/v1 JSON system file")->required();
  add_common(analyze_cmd, af);

  // preset NAME [--param n=4] [--emit|--run]
  std::string preset_name;
  std::vector<std::string> preset_params;
  bool emit_only = false, run_flag = false;
  CommonFlags pf;
  CLI::App* preset_cmd = app.add_subcommand("preset", "built-in example systems");
  preset_cmd->add_option("name", preset_name, "preset name")->required();
  preset_cmd->add_option("--param", preset_params, "preset parameter, e.g. n=4");
  preset_cmd->add_flag("--emit", emit_only, "print the system in input format");
  preset_cmd->add_flag("--run", run_flag, "run the full analysis (default)");
  add_common(preset_cmd, pf);

  // gci --n --m --orders 2,2 [--d 1]
  int gn = 0, gm = 0, gd = 1;
  std::string gorders;
  CLI::App* gci_cmd = app.add_subcommand("gci", "closed-form (p, sigma) for a "
                                         "generalized complete intersection");
  gci_cmd->add_option("--n", gn, "independent variables")->required();
  gci_cmd->add_option("--m", gm, "dependent variables")->required();
  gci_cmd->add_option("--orders", gorders, "comma-separated equation orders")->required();
  gci_cmd->add_option("--d", gd, "characteristic sheaf fiber dimension (default 1)");

  // lemma-check --n N --m M --k K [--sweep]
  int ln = 1, lm = 1, lk = 1;
  bool sweep = false;
  CLI::App* lemma_cmd = app.add_subcommand("lemma-check", "verify the combinatorial "
                                           "rank identity");
  lemma_cmd->add_option("--n", ln, "independent variables");
  lemma_cmd->add_option("--m", lm, "dependent variables");
  lemma_cmd->add_option("--k", lk, "order");
  lemma_cmd->add_flag("--sweep", sweep, "sweep n,m in 1..4 and k in 1..3");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      std::ifstream is(file);
      if (!is) {
        std::cerr << "error: cannot open " << file << "\n";
        return 2;
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(is);
      } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return 2;
      }
      pdedim::ParsedSystem ps = pdedim::parse_system(j, af.limit_basis);
      return run_analysis(ps.name, ps.system, af);
    }
    if (*preset_cmd) {
      std::map<std::string, int> params;
      for (const std::string& s : preset_params) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
          throw pdedim::ParseError("bad --param '" + s + "', expected key=value");
        params[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
      }
      pdedim::Preset p = pdedim::make_preset(preset_name, params, pf.limit_basis);
      if (emit_only && !run_flag) {
        emit(pdedim::system_to_json(p.name, p.system).dump(2), pf.out);
        return 0;
      }
      return run_analysis(p.name, p.system, pf);
    }
    if (*gci_cmd) {
      pdedim::GciProfile prof;
      prof.n = gn;
      prof.m = gm;
      prof.d = gd;
      std::stringstream ss(gorders);
      std::string tok;
      while (std::getline(ss, tok, ',')) prof.orders.push_back(std::stoi(tok));
      prof.r = static_cast<int>(prof.orders.size());
      nlohmann::json j{{"n", gn}, {"m", gm}, {"orders", prof.orders}, {"d", gd},
                       {"p", pdedim::gci_dimension(prof)},
                       {"sigma", pdedim::gci_rank(prof)}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*lemma_cmd) {
      bool all = true;
      if (sweep) {
        for (int m = 1; m <= 4; ++m)
          for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 3; ++k) {
              bool ok = pdedim::lemma_check(n, m, k);
              all = all && ok;
              std::cout << "n=" << n << " m=" << m << " k=" << k << ": "
                        << (ok ? "ok" : "MISMATCH") << "\n";
            }
      } else {
        all = pdedim::lemma_check(ln, lm, lk);
        std::cout << "n=" << ln << " m=" << lm << " k=" << lk << ": "
                  << (all ? "ok" : "MISMATCH") << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const pdedim::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const pdedim::UnknownPreset& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const pdedim::ConditionViolated& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
