// Command-line front end: every verification as a subcommand, reports as
// text or JSON lines.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbm/distributions/blowup.hpp"
#include "cbm/errors.hpp"
#include "cbm/io/formats.hpp"
#include "cbm/io/report.hpp"
#include "cbm/multiplier/fourier_algebra.hpp"
#include "cbm/schur/schur.hpp"
#include "cbm/verify/claims.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitUsage = 64;

struct Flags {
  bool json = false;
  bool timing = false;
  bool serial = false;
  std::uint64_t seed = 7;
  int grid = 0;
  double window = 0.0;
};

cbm::SuiteOptions suite_options(const Flags& f) {
  cbm::SuiteOptions o;
  o.seed = f.seed;
  if (f.grid > 0) o.grid = f.grid;
  if (f.window > 0.0) o.window = f.window;
  o.exec = f.serial ? cbm::Execution::Serial : cbm::Execution::Parallel;
  return o;
}

int emit(const std::vector<cbm::Report>& reports, const Flags& f) {
  bool failed = false;
  for (const auto& r : reports) {
    if (f.json) {
      cbm::write_json_line(std::cout, r, f.timing);
    } else {
      std::cout << cbm::summary_line(r);
      if (f.timing) std::cout << "  (" << r.runtime_ms << " ms)";
      std::cout << '\n';
      for (const auto& note : r.notes) std::cout << "    " << note << '\n';
    }
    std::cout.flush();
    failed = failed || r.verdict == cbm::Verdict::Fail;
  }
  return failed ? kExitFail : 0;
}

cbm::Report schur_report(const std::string& path, double tol) {
  const cbm::ComplexMatrix a = cbm::io::read_matrix(path);
  cbm::SchurOptions so;
  so.tol = tol;
  const cbm::SchurResult res = cbm::schur_norm(a, so);
  const cbm::Report cert = cbm::verify_certificate(a, res.certificate);
  cbm::Report r;
  r.claim_id = "schur-norm";
  r.inputs["matrix"] = path;
  r.inputs["tol"] = tol;
  r.add("norm", res.norm);
  r.add("certified_lower", res.lower);
  r.tolerance = tol;
  r.tolerance_kind = "absolute";
  r.verdict = cert.verdict;
  r.notes = cert.notes;
  return r;
}

cbm::Report m0a_report(const std::string& path, int sets, int set_size, int word_length, std::uint64_t seed) {
  const cbm::MultiplierSpec spec = cbm::io::multiplier_spec_from_json(cbm::io::read_json_file(path));
  cbm::SampledMultiplier sm;
  sm.group = spec.group;
  sm.phi = cbm::make_multiplier(spec);
  sm.sets = cbm::random_word_sets(spec.group, sets, set_size, word_length, seed);
  const cbm::MultiplierBound b = cbm::m0a_lower_bound(sm);
  cbm::Report r;
  r.claim_id = "m0a-bound";
  r.inputs["spec"] = cbm::io::multiplier_spec_to_json(spec);
  r.inputs["sets"] = sets;
  r.inputs["set_size"] = set_size;
  r.inputs["word_length"] = word_length;
  r.inputs["seed"] = seed;
  r.add("lower_bound", b.lower_bound);
  for (std::size_t k = 0; k < b.per_set.size(); ++k) r.add("set[" + std::to_string(k) + "]", b.per_set[k]);
  r.tolerance = 1e-6;
  r.tolerance_kind = "absolute";
  r.notes.push_back("maximum over the sampled sets: a lower bound, not the multiplier norm");
  r.verdict = cbm::Verdict::Pass;
  return r;
}

int blowup_command(double rmax, int steps, const std::string& out, const Flags& f) {
  if (!(rmax > 1.0) || steps < 1) throw cbm::ConfigurationError("blowup: need --rmax > 1 and --steps >= 1");
  std::vector<double> rs;
  for (int k = 1; k <= steps; ++k) rs.push_back(std::pow(rmax, static_cast<double>(k) / steps));
  const std::vector<cbm::BlowupPoint> curve = cbm::blowup_curve(rs);
  if (out.empty() || out == "-") {
    cbm::io::write_blowup_csv(std::cout, curve);
  } else {
    std::ofstream file(out);
    if (!file) throw cbm::ConfigurationError("cannot write " + out);
    cbm::io::write_blowup_csv(file, curve);
  }
  cbm::Report r;
  r.claim_id = "blowup";
  r.inputs["rmax"] = rmax;
  r.inputs["steps"] = steps;
  r.verdict = cbm::Verdict::Pass;
  for (std::size_t k = 1; k < curve.size(); ++k) r.require(curve[k].bound > curve[k - 1].bound, "monotone");
  r.add("bound_at_rmax", curve.back().bound);
  r.add("asinh_reference", cbm::blowup_reference(rmax));
  if (f.json) return emit({r}, f);
  return r.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for singular integrals and Schur multipliers on nilpotent groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags");
  Flags f;
  app.add_flag("--json", f.json, "Reports as JSON lines on stdout");
  app.add_flag("--timing", f.timing, "Include runtime_ms in reports");
  app.add_flag("--serial", f.serial, "Use the serial reference kernels");
  app.add_option("--seed", f.seed, "Random seed");
  app.add_option("--grid", f.grid, "Effective resolution of the 2D principal-value quadrature");
  app.add_option("--window", f.window, "Half-width / damping window override");

  std::string claim;
  auto* verify = app.add_subcommand("verify", "Run one claim check");
  std::vector<std::string> ids;
  for (const auto& c : cbm::claims()) ids.push_back(c.id);
  verify->add_option("claim", claim, "Claim id")->required()->check(CLI::IsMember(ids));

  std::string matrix_path;
  double tol = 1e-6;
  auto* schur = app.add_subcommand("schur-norm", "Schur multiplier norm of a matrix file");
  schur->add_option("--matrix", matrix_path, "JSON or CSV matrix")->required();
  schur->add_option("--tol", tol, "Tolerance (>= 1e-6)");

  std::string spec_path;
  int sets = 10, set_size = 8, word_length = 6;
  auto* m0a = app.add_subcommand("m0a-bound", "Finite-set lower bound for a multiplier");
  m0a->add_option("--spec", spec_path, "Multiplier spec JSON")->required();
  m0a->add_option("--sets", sets, "Number of sample sets");
  m0a->add_option("--set-size", set_size, "Elements per set");
  m0a->add_option("--word-length", word_length, "Maximum word length");

  double rmax = 1000.0;
  int steps = 20;
  std::string out;
  auto* blowup = app.add_subcommand("blowup", "Lower-bound curve of the plateau family as CSV");
  blowup->add_option("--rmax", rmax, "Largest plateau radius");
  blowup->add_option("--steps", steps, "Number of radii (geometric up to rmax)");
  blowup->add_option("--out", out, "CSV path (stdout when omitted)");

  bool all = false;
  auto* suite = app.add_subcommand("suite", "Run every claim in id order");
  suite->add_flag("--all", all, "Run all claims")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    const cbm::SuiteOptions options = suite_options(f);
    if (*verify) return emit({cbm::run_claim(claim, options)}, f);
    if (*suite) {
      // Stream reports as each claim finishes; the order is fixed by id.
      bool failed = false;
      for (const auto& c : cbm::claims()) failed = emit({cbm::run_claim(c.id, options)}, f) != 0 || failed;
      return failed ? kExitFail : 0;
    }
    if (*schur) return emit({schur_report(matrix_path, tol)}, f);
    if (*m0a) return emit({m0a_report(spec_path, sets, set_size, word_length, f.seed)}, f);
    if (*blowup) return blowup_command(rmax, steps, out, f);
  } catch (const cbm::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitConvergence;
  } catch (const cbm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitUsage;
}
