#pragma once

#include <vector>

namespace cbm {

// Lower bound (1/4 pi) int phi_R(x)^2 / sqrt(1 + x^2/4) dx for the plateau
// phi_R = 1 on |x| <= R with a C^2 shoulder of width 1 (shoulder = false:
// sharp indicator).
struct BlowupPoint {
  double r;
  double bound;
};
std::vector<BlowupPoint> blowup_curve(const std::vector<double>& r_values, bool shoulder = true);
// asinh(R/2) / pi, the sharp-indicator value.
double blowup_reference(double r);
// 1 - (6u^5 - 15u^4 + 10u^3) on [0, 1]: 1 at 0, 0 at 1, C^2 at both ends.
double plateau_shoulder(double u);

}  // namespace cbm
