// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (0 when all pass).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cbm/distributions/fubini.hpp"
#include "cbm/errors.hpp"
#include "cbm/schur/schur.hpp"
#include "cbm/verify/claims.hpp"
#include "../support/oracles.hpp"

using namespace cbm;
namespace cs = cbm::claim_settings;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void line(int criterion, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what << " | " << detail << '\n';
  std::cout.flush();
  if (!ok) ++failures;
}

// Runs a criterion body; an exception counts as a failure with its message.
void criterion(int id, const std::string& what, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  detail.precision(6);
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  line(id, ok, what, detail.str());
}

std::string key(const std::string& name, double v) {
  std::ostringstream os;
  os << name << '[' << v << ']';
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cbm_acceptance <path to cbm executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  SuiteOptions o;  // seed 7, default grids, serial reference kernels
  const double pi2 = pi * pi;

  criterion(1, "fubini defect = pi^2 within 2% at 2048^2, < 60 s per bump", [&](std::ostringstream& d) {
    bool ok = true;
    for (double sigma : cs::kFubiniSigmas) {
      FubiniOptions fo;
      fo.half_width = fubini_half_width(sigma, o);
      fo.grid = 2048;
      fo.exclusion = fubini_exclusion(fo.half_width, fo.grid);
      const double s2 = 2.0 * sigma * sigma;
      const auto t0 = std::chrono::steady_clock::now();
      const FubiniResult r =
          fubini_defect([&](double y, double z) { return std::complex<double>(std::exp(-(y * y + z * z) / s2)); }, fo);
      const double secs = seconds_since(t0);
      const double rel = std::abs(r.defect - pi2) / pi2;
      ok = ok && rel <= 0.02 && secs < 60.0;
      d << "sigma " << sigma << ": defect " << r.defect << " rel " << rel << " in " << secs << " s; ";
    }
    const Report rep = run_claim("lemma-b", o);
    d << "claim " << to_string(rep.verdict);
    return ok && rep.pass();
  });

  criterion(2, "Bessel transform: closed form 2%, zero region < 0.05, order swap < 1e-3", [&](std::ostringstream& d) {
    const Report r = run_claim("lemma-c", o);
    bool ok = r.pass();
    double worst_rel = 0.0, worst_swap = 0.0, worst_zero = 0.0;
    for (double u : cs::kBesselU) {
      worst_rel = std::max(worst_rel, r.value(key("relative_error", u)));
      worst_swap = std::max(worst_swap, r.value(key("order_swap", u)));
    }
    for (const auto& [t, u] : cs::kBesselZeroRegion) {
      std::ostringstream k;
      k << '[' << t << ',' << u << ']';
      worst_zero = std::max(worst_zero, r.value("zero_region" + k.str()));
      worst_swap = std::max(worst_swap, r.value("order_swap" + k.str()));
    }
    ok = ok && worst_rel <= 0.02 && worst_zero < 0.05 && worst_swap < 1e-3;
    d << "max rel " << worst_rel << ", max zero-region " << worst_zero << ", max swap " << worst_swap
      << ", normalization " << r.value("normalization");
    return ok;
  });

  criterion(3, "conjugation identities < 1e-12 on 1000 points, < 1 s", [&](std::ostringstream& d) {
    const Report a = run_claim("lemma-a", o);
    const Report f = run_claim("lemma-f", o);
    const double ra = a.value("conjugation_residual");
    const double rf = f.value("conjugation_residual");
    d << "heis3 " << ra << " (" << a.runtime_ms << " ms), dix4 " << rf << " (" << f.runtime_ms << " ms)";
    return a.pass() && f.pass() && ra < 1e-12 && rf < 1e-12 && a.runtime_ms < 1000 && f.runtime_ms < 1000;
  });

  Report kd, kg;
  criterion(4, "commutator kernels exact on 10^4 points (SL3 and SP2)", [&](std::ostringstream& d) {
    kd = run_claim("lemma-d", o);
    kg = run_claim("lemma-g", o);
    const double r3 = kd.value("commutator_residual");
    const double r2 = kg.value("commutator_residual");
    d << "SL3 " << r3 << ", SP2 " << r2 << " over " << kd.inputs["kernel_samples"] << " and "
      << kg.inputs["samples"] << " samples";
    return r3 < 1e-12 && r2 < 1e-12 && kd.inputs["kernel_samples"] == 10000 && kg.inputs["samples"] == 10000;
  });

  criterion(5, "Nystroem norms: K <= 1.02 pi, k/(2 pi^3) <= 1.05, refinement drift <= 1%", [&](std::ostringstream& d) {
    const double nk = kd.value("norm_majorant"), nk2 = kd.value("norm_majorant_refined");
    const double ns = kd.value("norm_kernel_scaled"), ns2 = kd.value("norm_kernel_scaled_refined");
    const double drift = std::max(std::abs(nk2 - nk) / nk, std::abs(ns2 - ns) / ns);
    d << "K " << nk << " -> " << nk2 << ", k/(2pi^3) " << ns << " -> " << ns2 << ", drift " << drift;
    return nk <= pi * 1.02 && ns <= 1.05 && drift <= 0.01;
  });

  criterion(6, "pairing bound |D| <= 2 pi^3 ||phi||_A (5%), swap < 1e-3, < 10 min", [&](std::ostringstream& d) {
    bool ok = kd.pass();
    double worst_ratio = 0.0, worst_swap = 0.0;
    for (int c = 0; c < cs::kPairingCases; ++c) {
      const std::string i = "[" + std::to_string(c) + "]";
      const double ratio = kd.value("pairing_abs" + i) / (2.0 * pi * pi2 * kd.value("a_norm_upper" + i));
      worst_ratio = std::max(worst_ratio, ratio);
      worst_swap = std::max(worst_swap, kd.value("pairing_swap" + i));
    }
    ok = ok && worst_ratio <= 1.05 && worst_swap < 1e-3 && kd.runtime_ms < 600000;
    d << cs::kPairingCases << " cases on " << cs::kConvolutionPoints << "^3 grids: max |D|/bound " << worst_ratio
      << ", max swap " << worst_swap << ", claim runtime " << kd.runtime_ms / 1000.0 << " s";
    return ok;
  });

  criterion(7, "invariant identity |2D - pi^2 int| <= 5% for 3 symmetrized bumps", [&](std::ostringstream& d) {
    const Report r = run_claim("lemma-e", o);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, r.value("relative_residual[" + std::to_string(i) + "]"));
    d << "max relative residual " << worst;
    return r.pass() && worst <= 0.05;
  });

  criterion(8, "blowup curve matches asinh(R/2)/pi within 2% and increases", [&](std::ostringstream& d) {
    const Report r = run_claim("theorem-1", o);
    bool ok = r.pass();
    double prev = -1.0;
    for (double R : cs::kBlowupR) {
      const double b = r.value(key("bound", R));
      const double ref = std::asinh(R / 2.0) / pi;
      ok = ok && std::abs(b - ref) <= 0.02 * ref && b > prev;
      prev = b;
      d << "R " << R << ": " << b << " vs " << ref << "; ";
    }
    return ok;
  });

  criterion(9, "Schur engine: PSD rule, brute-force oracle within 1e-3, certificates verify", [&](std::ostringstream& d) {
    const Report r = run_claim("schur", o);
    oracle::Rng rng(o.seed);
    double worst = 0.0;
    bool certs = true;
    for (int k = 0; k < 25; ++k) {
      const int n = k < 20 ? 2 : 3;
      const ComplexMatrix a = oracle::random_matrix(rng, n, n);
      const SchurResult s = schur_norm(a);
      worst = std::max(worst, std::abs(s.norm - oracle::schur_norm_dual(a)));
      certs = certs && verify_certificate(a, s.certificate).pass();
    }
    d << "PSD max error " << r.value("psd_max_error") << ", certificates " << r.value("certificates_verified")
      << "/50, oracle max gap " << worst << " on 20 2x2 + 5 3x3";
    return r.pass() && r.value("psd_max_error") <= 1e-6 && worst <= 1e-3 && certs;
  });

  criterion(10, "Herz-Schur sampler: bound 1 +- 1e-6 on 10 sets, monotone in 100 trials", [&](std::ostringstream& d) {
    const Report r = run_claim("herz-schur", o);
    d << "max deviation " << r.value("max_deviation_from_one") << ", max drop " << r.value("max_drop_under_enlargement");
    return r.pass();
  });

  criterion(11, "lattice: induction formula on 100 cases, induced norm on 50 with 1e-3 slack", [&](std::ostringstream& d) {
    const Report f = run_claim("formula-p20", o);
    const Report n = run_claim("lemma-2-1", o);
    d << "formula max difference " << f.value("max_difference") << ", induced - lattice max "
      << n.value("max_induced_minus_lattice") << ", tail " << n.value("max_tail_bound") << ", inconclusive "
      << n.value("inconclusive_cases");
    return f.pass() && n.pass();
  });

  criterion(12, "two runs of suite --all --seed 7 --json are byte-identical", [&](std::ostringstream& d) {
    const std::string cmd = cli + " suite --all --seed 7 --json";
    const Captured a = capture(cmd);
    const Captured b = capture(cmd);
    int lines = 0;
    for (char c : a.out) lines += c == '\n';
    d << lines << " lines, " << a.out.size() << " bytes, exit codes " << a.code << "/" << b.code;
    return a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures;
}
