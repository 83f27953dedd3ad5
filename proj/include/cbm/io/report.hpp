#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cbm {

enum class Verdict { Pass, Fail, Inconclusive };

struct ReferenceValue {
  std::string name;
  double value;
  // Where the reference comes from: "analytic", "oracle", "bound", ...
  std::string provenance;
};

// Outcome of one verification. `tolerance_kind` says how `tolerance` is
// applied: "absolute", "relative", "upper-bound" or "exact".
struct Report {
  std::string claim_id;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, double>> computed;
  std::vector<ReferenceValue> reference;
  double tolerance = 0.0;
  std::string tolerance_kind = "absolute";
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> notes;
  std::int64_t runtime_ms = 0;

  bool pass() const { return verdict == Verdict::Pass; }
  void add(std::string name, double value) { computed.emplace_back(std::move(name), value); }
  void ref(std::string name, double value, std::string provenance) {
    reference.push_back({std::move(name), value, std::move(provenance)});
  }
  // Folds a sub-check into the verdict: any failure makes the report fail.
  void require(bool ok, const std::string& what);
  double value(const std::string& name) const;
};

const char* to_string(Verdict v);

// One JSON object; runtime_ms only when with_timing is set so that repeated
// runs produce identical bytes.
nlohmann::ordered_json to_json(const Report& r, bool with_timing = false);
void write_json_line(std::ostream& os, const Report& r, bool with_timing = false);
// Human-readable single line.
std::string summary_line(const Report& r);

}  // namespace cbm
