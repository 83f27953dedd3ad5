#include "cbm/io/formats.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cbm/errors.hpp"

namespace cbm::io {

namespace {

static_assert(std::endian::native == std::endian::little, "binary grid layout assumes a little-endian host");

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
std::vector<T> list(const nlohmann::json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n) {
    throw ConfigurationError(std::string("expected \"") + key + "\" as a list of " + std::to_string(n));
  }
  return j[key].get<std::vector<T>>();
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(path + ": " + e.what());
  }
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols")) {
    throw ConfigurationError("matrix JSON needs rows, cols, re");
  }
  const long rows = j["rows"].get<long>();
  const long cols = j["cols"].get<long>();
  if (rows <= 0 || cols <= 0) throw ConfigurationError("matrix JSON: rows and cols must be positive");
  const std::size_t n = static_cast<std::size_t>(rows * cols);
  const auto re = list<double>(j, "re", n);
  const auto im = j.contains("im") ? list<double>(j, "im", n) : std::vector<double>(n, 0.0);
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) m(r, c) = {re[r * cols + c], im[r * cols + c]};
  }
  return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  std::vector<double> re, im;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ConfigurationError("empty matrix entry");
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  const char* begin = s.c_str();
  char* end = nullptr;
  const double first = std::strtod(begin, &end);
  if (end == begin) throw ConfigurationError("bad matrix entry: " + text);
  std::string rest = trim(end);
  if (rest.empty()) return {first, 0.0};
  if (rest == "j" || rest == "i") return {0.0, first};
  // rest is "+bj" or "-bj"
  const char* b2 = rest.c_str();
  const double second = std::strtod(b2, &end);
  if (end == b2 || (std::string(end) != "j" && std::string(end) != "i")) {
    throw ConfigurationError("bad matrix entry: " + text);
  }
  return {first, second};
}

ComplexMatrix matrix_from_csv(std::istream& in) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::complex<double>> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_complex(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw ConfigurationError("ragged CSV matrix");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigurationError("empty CSV matrix");
  ComplexMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix read_matrix(const std::string& path) {
  if (ends_with(path, ".csv")) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open " + path);
    return matrix_from_csv(in);
  }
  return matrix_from_json(read_json_file(path));
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write " + path);
  if (ends_with(path, ".csv")) {
    out << std::setprecision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const auto z = m(r, c);
        out << (c ? "," : "") << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+")
            << std::fabs(z.imag()) << 'j';
      }
      out << '\n';
    }
    return;
  }
  out << matrix_to_json(m).dump() << '\n';
}

namespace {

nlohmann::json grid_header(const GridFunction& g) {
  const int d = g.dim();
  std::vector<double> origin(g.origin().begin(), g.origin().begin() + d);
  std::vector<double> spacing(g.spacing().begin(), g.spacing().begin() + d);
  std::vector<std::size_t> shape(g.shape().begin(), g.shape().begin() + d);
  return {{"dim", d}, {"origin", origin}, {"spacing", spacing}, {"shape", shape}};
}

GridFunction grid_geometry(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ConfigurationError("grid header needs dim");
  const int d = j["dim"].get<int>();
  if (d < 1 || d > 3) throw ConfigurationError("grid dim must be 1, 2 or 3");
  try {
    return GridFunction(list<double>(j, "origin", d), list<double>(j, "spacing", d),
                        list<std::size_t>(j, "shape", d));
  } catch (const DomainError& e) {
    throw ConfigurationError(std::string("grid header: ") + e.what());
  }
}

}  // namespace

nlohmann::json grid_to_json(const GridFunction& g) {
  nlohmann::json j = grid_header(g);
  std::vector<double> re, im;
  re.reserve(g.size());
  im.reserve(g.size());
  for (const auto& v : g.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

GridFunction grid_from_json(const nlohmann::json& j) {
  GridFunction g = grid_geometry(j);
  const auto re = list<double>(j, "re", g.size());
  const auto im = j.contains("im") ? list<double>(j, "im", g.size()) : std::vector<double>(g.size(), 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) g[n] = {re[n], im[n]};
  return g;
}

void write_grid_binary(std::ostream& out, const GridFunction& g) {
  out << grid_header(g).dump() << '\n';
  std::vector<double> raw(2 * g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    raw[2 * i] = g.values()[i].real();
    raw[2 * i + 1] = g.values()[i].imag();
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * sizeof(double)));
}

GridFunction read_grid_binary(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigurationError("binary grid: missing header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("binary grid header: ") + e.what());
  }
  GridFunction g = grid_geometry(header);
  std::vector<double> raw(2 * g.size());
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(raw.size() * sizeof(double))) {
    throw ConfigurationError("binary grid: truncated payload");
  }
  for (std::size_t i = 0; i < g.size(); ++i) g.values()[i] = {raw[2 * i], raw[2 * i + 1]};
  return g;
}

void write_grid(const std::string& path, const GridFunction& g) {
  if (ends_with(path, ".json")) {
    std::ofstream out(path);
    if (!out) throw ConfigurationError("cannot write " + path);
    out << grid_to_json(g).dump() << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigurationError("cannot write " + path);
  write_grid_binary(out, g);
}

GridFunction read_grid(const std::string& path) {
  if (ends_with(path, ".json")) return grid_from_json(read_json_file(path));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot open " + path);
  return read_grid_binary(in);
}

nlohmann::json lattice_to_json(const LatticeFunction& phi) {
  nlohmann::json support = nlohmann::json::array();
  std::vector<double> re, im;
  for (std::size_t k = 0; k < phi.support.size(); ++k) {
    const auto& n = phi.support[k];
    support.push_back(phi.dim == 2 ? nlohmann::json{n[0], n[1]} : nlohmann::json{n[0]});
    re.push_back(phi.values[k].real());
    im.push_back(phi.values[k].imag());
  }
  return {{"support", support}, {"re", re}, {"im", im}};
}

LatticeFunction lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array()) {
    throw ConfigurationError("lattice JSON needs a support list");
  }
  const auto& support = j["support"];
  const std::size_t n = support.size();
  const auto re = list<double>(j, "re", n);
  const auto im = j.contains("im") ? list<double>(j, "im", n) : std::vector<double>(n, 0.0);
  LatticeFunction phi;
  phi.dim = n == 0 ? 1 : static_cast<int>(support[0].size());
  if (phi.dim != 1 && phi.dim != 2) throw ConfigurationError("lattice JSON: points need 1 or 2 coordinates");
  for (std::size_t k = 0; k < n; ++k) {
    if (support[k].size() != static_cast<std::size_t>(phi.dim)) {
      throw ConfigurationError("lattice JSON: mixed point dimensions");
    }
    phi.push({support[k][0].get<long>(), phi.dim == 2 ? support[k][1].get<long>() : 0L}, {re[k], im[k]});
  }
  return phi;
}

MultiplierSpec multiplier_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigurationError("multiplier spec must be a JSON object");
  MultiplierSpec s;
  try {
    if (j.contains("group")) s.group = group_from_string(j["group"].get<std::string>());
    if (j.contains("kind")) s.kind = j["kind"].get<std::string>();
    if (j.contains("sigma")) s.sigma = j["sigma"].get<double>();
    make_multiplier(s);  // rejects unknown kinds and bad sigma
  } catch (const DomainError& e) {
    throw ConfigurationError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("multiplier spec: ") + e.what());
  }
  return s;
}

nlohmann::json multiplier_spec_to_json(const MultiplierSpec& s) {
  return {{"group", to_string(s.group)}, {"kind", s.kind}, {"sigma", s.sigma}};
}

void write_blowup_csv(std::ostream& out, const std::vector<BlowupPoint>& points) {
  out << "R,lower_bound\n" << std::setprecision(12);
  for (const auto& p : points) out << p.r << ',' << p.bound << '\n';
}

}  // namespace cbm::io
