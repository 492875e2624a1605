#include "nls2d/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nls2d {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const auto piece = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!piece.empty()) out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Real parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  Real x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw std::invalid_argument("config: '" + key + "' expects a number, got '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + v + "'");
  return x;
}

std::string_view to_string(Study s) { return s == Study::evolve ? "evolve" : "convergence"; }

Study parse_study(const std::string& v) {
  if (v == "evolve") return Study::evolve;
  if (v == "convergence") return Study::convergence;
  throw std::invalid_argument("config: unknown study '" + v + "'");
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt(xs[i]);
  }
  return out;
}

std::string serialize_impl(const RunConfig& c, bool with_output_dir) {
  std::ostringstream os;
  os << "preset_name: " << c.preset_name << "\n";
  os << "study: " << to_string(c.study) << "\n";
  os << "kappa: " << c.kappa << "\n";
  os << "x0: " << format_real(c.x0) << "\n";
  os << "n_inner: " << c.n_inner << "\n";
  os << "n_outer: " << c.n_outer << "\n";
  os << "m: " << c.m << "\n";
  os << "l_y: " << format_real(c.l_y) << "\n";
  os << "t_end: " << format_real(c.t_end) << "\n";
  os << "n_t: " << c.n_t << "\n";
  os << "convergence_nt: " << join(c.convergence_nt, [](int n) { return std::to_string(n); }) << "\n";
  os << "initial_kind: " << to_string(c.initial.kind) << "\n";
  os << "initial_t0: " << format_real(c.initial.t0) << "\n";
  os << "initial_c_re: " << format_real(c.initial.c.real()) << "\n";
  os << "initial_c_im: " << format_real(c.initial.c.imag()) << "\n";
  os << "initial_x_c: " << format_real(c.initial.x_c) << "\n";
  os << "initial_sigma: " << format_real(c.initial.sigma) << "\n";
  os << "lambda: " << format_real(c.lambda) << "\n";
  os << "energy_mode: " << to_string(c.energy_mode) << "\n";
  os << "diagnostic_cadence: " << c.diagnostic_cadence << "\n";
  os << "snapshot_times: " << join(c.snapshot_times, [](Real t) { return format_real(t); }) << "\n";
  if (with_output_dir) os << "output_dir: " << c.output_dir << "\n";
  return os.str();
}

}  // namespace

std::string format_real(Real value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid config: " + msg); };
  if (kappa != 1 && kappa != -1) fail("kappa must be +1 or -1");
  if (!(x0 > 0)) fail("x0 must be positive");
  if (n_inner < 2) fail("n_inner must be >= 2");
  if (n_outer < 3 || n_outer % 2 == 0) fail("n_outer must be odd and >= 3");
  if (m < 2 || m % 2 != 0) fail("m must be even and >= 2");
  if (!(l_y > 0)) fail("l_y must be positive");
  if (!(t_end > initial.t0)) fail("t_end must exceed initial_t0");
  if (n_t < 1) fail("n_t must be >= 1");
  if (diagnostic_cadence < 1) fail("diagnostic_cadence must be >= 1");
  if (!(lambda >= 0)) fail("lambda must be non-negative");
  if (study == Study::convergence) {
    if (convergence_nt.size() < 2) fail("convergence study needs at least two n_t values");
    for (int n : convergence_nt)
      if (n < 1) fail("convergence_nt entries must be >= 1");
    if (initial.kind != InitialKind::peregrine) fail("convergence study needs peregrine initial data");
  }
  for (Real t : snapshot_times)
    if (t < initial.t0 || t > t_end) fail("snapshot time " + format_real(t) + " outside [t0, t_end]");
  try {
    initial.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string serialize(const RunConfig& config) { return serialize_impl(config, true); }

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(t.substr(0, colon));
    const std::string v = trim(t.substr(colon + 1));
    if (key == "preset_name") c.preset_name = v;
    else if (key == "study") c.study = parse_study(v);
    else if (key == "kappa") c.kappa = parse_int(key, v);
    else if (key == "x0") c.x0 = parse_real(key, v);
    else if (key == "n_inner") c.n_inner = parse_int(key, v);
    else if (key == "n_outer") c.n_outer = parse_int(key, v);
    else if (key == "m") c.m = parse_int(key, v);
    else if (key == "l_y") c.l_y = parse_real(key, v);
    else if (key == "t_end") c.t_end = parse_real(key, v);
    else if (key == "n_t") c.n_t = parse_int(key, v);
    else if (key == "convergence_nt") {
      c.convergence_nt.clear();
      for (const auto& p : split(v, ',')) c.convergence_nt.push_back(parse_int(key, p));
    } else if (key == "initial_kind") c.initial.kind = parse_initial_kind(v);
    else if (key == "initial_t0") c.initial.t0 = parse_real(key, v);
    else if (key == "initial_c_re") c.initial.c.real(parse_real(key, v));
    else if (key == "initial_c_im") c.initial.c.imag(parse_real(key, v));
    else if (key == "initial_x_c") c.initial.x_c = parse_real(key, v);
    else if (key == "initial_sigma") c.initial.sigma = parse_real(key, v);
    else if (key == "lambda") c.lambda = parse_real(key, v);
    else if (key == "energy_mode") c.energy_mode = parse_energy_mode(v);
    else if (key == "diagnostic_cadence") c.diagnostic_cadence = parse_int(key, v);
    else if (key == "snapshot_times") {
      c.snapshot_times.clear();
      for (const auto& p : split(v, ',')) c.snapshot_times.push_back(parse_real(key, p));
    } else if (key == "output_dir") c.output_dir = v;
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::uint64_t config_hash(const RunConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_impl(config, false)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash_hex(const RunConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(config)));
  return buf;
}

std::vector<RunConfig> presets() {
  std::vector<RunConfig> out;

  RunConfig conv;
  conv.preset_name = "convergence";
  conv.study = Study::convergence;
  conv.n_inner = 80;
  conv.n_outer = 75;
  conv.m = 2;  // y-constant data
  conv.l_y = 1;
  conv.t_end = 1;
  conv.n_t = 1500;
  conv.convergence_nt = {100, 200, 400, 800, 1500};
  conv.snapshot_times = {0, 1};
  out.push_back(conv);

  auto two_d = [](std::string name, int kappa) {
    RunConfig c;
    c.preset_name = std::move(name);
    c.kappa = kappa;
    c.snapshot_times = {0, 0.5};
    return c;
  };

  for (int kappa : {1, -1}) {
    const std::string family = kappa == 1 ? "elliptic" : "hyperbolic";
    for (Real xc : {0.0, -1.0}) {
      for (Real amp : {0.1, -0.1}) {
        RunConfig c = two_d(family + "-gauss-" + (xc == 0 ? "0" : "m1") + (amp > 0 ? "-plus" : "-minus"), kappa);
        c.initial.kind = InitialKind::gaussian_perturbed;
        c.initial.c = Complex(amp, 0);
        c.initial.x_c = xc;
        out.push_back(c);
      }
    }
    if (kappa == 1) {
      RunConfig low = two_d("elliptic-mod-0.9", 1);
      low.initial.kind = InitialKind::modulated;
      low.initial.sigma = 0.9;
      out.push_back(low);
      RunConfig high = two_d("elliptic-mod-1.1", 1);
      high.initial.kind = InitialKind::modulated;
      high.initial.sigma = 1.1;
      high.snapshot_times = {0, 0.134, 0.268, 0.4};
      out.push_back(high);
    }
  }
  return out;
}

std::optional<RunConfig> find_preset(std::string_view name) {
  for (auto& p : presets())
    if (p.preset_name == name) return p;
  return std::nullopt;
}

}  // namespace nls2d
