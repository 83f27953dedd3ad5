#include "cbm/io/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "cbm/errors.hpp"

namespace cbm {

void Report::require(bool ok, const std::string& what) {
  if (ok) return;
  notes.push_back("violated: " + what);
  verdict = Verdict::Fail;
}

double Report::value(const std::string& name) const {
  for (const auto& [k, v] : computed) {
    if (k == name) return v;
  }
  throw DomainError("Report: no computed value named " + name);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

namespace {

// JSON has no NaN/inf; emit them as strings.
nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim_id;
  j["inputs"] = r.inputs;
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.computed) computed[k] = number(v);
  j["computed"] = computed;
  nlohmann::ordered_json reference = nlohmann::ordered_json::object();
  for (const auto& ref : r.reference) {
    reference[ref.name] = {{"value", number(ref.value)}, {"provenance", ref.provenance}};
  }
  j["reference"] = reference;
  j["tolerance"] = number(r.tolerance);
  j["tolerance_kind"] = r.tolerance_kind;
  j["pass"] = r.pass();
  j["status"] = to_string(r.verdict);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

void write_json_line(std::ostream& os, const Report& r, bool with_timing) {
  os << to_json(r, with_timing).dump() << '\n';
}

std::string summary_line(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(14) << r.claim_id << ' ' << std::setw(12) << to_string(r.verdict);
  os << std::setprecision(8);
  bool first = true;
  for (const auto& [k, v] : r.computed) {
    os << (first ? "" : ", ") << k << '=' << v;
    first = false;
  }
  for (const auto& note : r.notes) os << " [" << note << ']';
  return os.str();
}

}  // namespace cbm
