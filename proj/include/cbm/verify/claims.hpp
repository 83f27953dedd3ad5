#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbm/io/report.hpp"
#include "cbm/numerics/execution.hpp"

namespace cbm {

struct SuiteOptions {
  std::uint64_t seed = 7;
  // Effective resolution of the two-dimensional PV quadrature (lemma-b).
  std::optional<int> grid;
  // Half-width of the lemma-b bumps' box and damping window of lemma-c.
  std::optional<double> window;
  Execution exec = Execution::Serial;
};

using ClaimRunner = std::function<Report(const SuiteOptions&)>;

struct Claim {
  std::string id;
  std::string summary;
  ClaimRunner run;
};

// Every claim, sorted by id.
const std::vector<Claim>& claims();
// Throws ConfigurationError for an unknown id. Fills runtime_ms.
Report run_claim(const std::string& id, const SuiteOptions& options);
// All claims in id order.
std::vector<Report> run_suite(const SuiteOptions& options);

// Individual runners, for callers that want one check without the table.
Report claim_conjugation_heis3(const SuiteOptions& o);      // lemma-a
Report claim_fubini_defect(const SuiteOptions& o);          // lemma-b
Report claim_bessel_transform(const SuiteOptions& o);       // lemma-c
Report claim_kernel_bounds(const SuiteOptions& o);          // lemma-d
Report claim_invariant_identity(const SuiteOptions& o);     // lemma-e
Report claim_conjugation_dix4(const SuiteOptions& o);       // lemma-f
Report claim_dix4_kernel(const SuiteOptions& o);            // lemma-g
Report claim_induction_formula(const SuiteOptions& o);      // formula-p20
Report claim_induced_norm(const SuiteOptions& o);           // lemma-2-1
Report claim_schur_engine(const SuiteOptions& o);           // schur
Report claim_herz_schur(const SuiteOptions& o);             // herz-schur
Report claim_blowup(const SuiteOptions& o);                 // theorem-1

// Settings shared by the claim runner and the acceptance tests.
namespace claim_settings {
inline constexpr double kFubiniSigmas[] = {0.5, 1.0, 2.0};
inline constexpr double kBesselU[] = {0.5, 1.0, 2.0, 5.0};
struct TU {
  double t, u;
};
inline constexpr TU kBesselZeroRegion[] = {{2.0, 0.5}, {3.0, 1.0}, {-2.0, 1.0}, {4.0, 0.0}};
inline constexpr double kNystromHalfWidth = 50.0;
inline constexpr double kNystromCutoff = 1e-12;
inline constexpr std::size_t kNystromPoints = 2048;
inline constexpr int kConvolutionPoints = 16;
inline constexpr double kConvolutionHalfWidth = 1.6;
inline constexpr int kPairingCases = 5;
inline constexpr double kBlowupR[] = {10.0, 100.0, 1000.0};
}  // namespace claim_settings

// Lemma-b default half-width for a bump of spread sigma, and the exclusion
// raised to 4 grid spacings when the grid is coarse.
double fubini_half_width(double sigma, const SuiteOptions& o);
double fubini_exclusion(double half_width, int grid);

}  // namespace cbm
