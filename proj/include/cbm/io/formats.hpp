#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbm/distributions/blowup.hpp"
#include "cbm/lattice/lattice_function.hpp"
#include "cbm/multiplier/fourier_algebra.hpp"
#include "cbm/numerics/grid_function.hpp"
#include "cbm/numerics/linalg.hpp"

namespace cbm::io {

// Matrices: {"rows": n, "cols": m, "re": [...], "im": [...]} row-major, "im"
// optional. CSV: one row per line, entries like 1, -2.5, 1+2j, 0.5-1e-3j.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_csv(std::istream& in);
std::complex<double> parse_complex(const std::string& text);
// Dispatches on the extension: .csv is CSV, anything else JSON.
ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& m);

// Grid functions. Both layouts share the header {dim, origin, spacing,
// shape} (lists of length dim).
//  - JSON: the header plus "re" and "im" arrays, row-major.
//  - Binary: the header as one JSON line, then size() pairs of little-endian
//    IEEE doubles (re, im).
// Doubles are written with enough digits to round-trip, so both layouts
// reproduce every bit.
nlohmann::json grid_to_json(const GridFunction& g);
GridFunction grid_from_json(const nlohmann::json& j);
void write_grid_binary(std::ostream& out, const GridFunction& g);
GridFunction read_grid_binary(std::istream& in);
void write_grid(const std::string& path, const GridFunction& g);  // .json or binary
GridFunction read_grid(const std::string& path);

// Lattice functions: {"support": [[n], ...] or [[n1, n2], ...], "re": [...], "im": [...]}.
nlohmann::json lattice_to_json(const LatticeFunction& phi);
LatticeFunction lattice_from_json(const nlohmann::json& j);

// Multiplier specs: {"group": "Z", "kind": "gaussian", "sigma": 1.0}.
MultiplierSpec multiplier_spec_from_json(const nlohmann::json& j);
nlohmann::json multiplier_spec_to_json(const MultiplierSpec& s);

// "R,lower_bound" followed by one line per point.
void write_blowup_csv(std::ostream& out, const std::vector<BlowupPoint>& points);

nlohmann::json read_json_file(const std::string& path);

}  // namespace cbm::io
