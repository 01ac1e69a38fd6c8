// ratsurf command-line tool. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratsurf/ratsurf.h"

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Failure of a library call or of the configuration; mapped to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ratsurf_status s, const std::string& what) {
  if (s != RATSURF_OK)
    throw ConfigError(what + ": " + ratsurf_status_name(s) + ": " + ratsurf_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ratsurf_string_free(s);
  return out;
}

struct ParamsDeleter {
  void operator()(ratsurf_params* p) const { ratsurf_params_destroy(p); }
};
using ParamsPtr = std::unique_ptr<ratsurf_params, ParamsDeleter>;

struct Options {
  std::optional<int> n, k, c_j, m;
  std::string c_sign;
  std::vector<std::string> a;
  std::string delta;
  std::string params_file;
  std::string out_dir;
  std::string format;
  std::optional<double> tol;
  std::optional<std::size_t> steps;
  std::string seeds_file;
  std::string tamper;
  double arclength = 20.0;
  double spacing = 1e-2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::pair<double, double> parse_complex(const std::string& text, const std::string& what) {
  try {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("malformed " + what + " '" + text + "'");
  }
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw ConfigError("--c-sign must be + or -");
}

// Parameter file first, then flags on top. Without a file, (n, k) come from flags or default to
// the phase-portrait preset.
ParamsPtr build_params(const Options& o) {
  ratsurf_params* raw = nullptr;
  if (!o.params_file.empty()) {
    check(ratsurf_params_from_json(read_file(o.params_file).c_str(), &raw), "parameter file");
  } else if (o.n || o.k) {
    if (!o.n || !o.k) throw ConfigError("--n and --k must be given together");
    check(ratsurf_params_create(*o.n, *o.k, &raw), "parameters");
  } else {
    check(ratsurf_params_figure1(&raw), "parameters");
  }
  ParamsPtr p(raw);
  if (!o.params_file.empty() && (o.n || o.k)) {
    int n = 0, k = 0;
    check(ratsurf_params_get_nk(p.get(), &n, &k), "parameters");
    check(ratsurf_params_set_nk(p.get(), o.n.value_or(n), o.k.value_or(k)), "parameters");
  }
  if (o.c_j || !o.c_sign.empty())
    check(ratsurf_params_set_c_symbolic(p.get(), o.c_j.value_or(1), o.c_sign.empty() ? 1 : parse_sign(o.c_sign)), "--c-j");
  for (const auto& entry : o.a) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw ConfigError("--a expects idx=re[,im], got '" + entry + "'");
    int idx = 0;
    try {
      idx = std::stoi(entry.substr(0, eq));
    } catch (const std::exception&) {
      throw ConfigError("--a index must be an integer");
    }
    const auto [re, im] = parse_complex(entry.substr(eq + 1), "--a value");
    check(ratsurf_params_set_a(p.get(), idx, re, im), "--a");
  }
  if (!o.delta.empty()) {
    const auto [re, im] = parse_complex(o.delta, "--delta");
    check(ratsurf_params_set_delta(p.get(), re, im), "--delta");
  }
  check(ratsurf_params_validate(p.get()), "parameters");
  return p;
}

std::pair<int, int> lattice_nk(const Options& o) {
  if (!o.params_file.empty()) {
    ParamsPtr p = build_params(o);
    int n = 0, k = 0;
    check(ratsurf_params_get_nk(p.get(), &n, &k), "parameters");
    return {n, k};
  }
  if (!o.n || !o.k) throw ConfigError("--n and --k are required");
  return {*o.n, *o.k};
}

ratsurf_suite_options suite_options(const Options& o) {
  ratsurf_suite_options so;
  ratsurf_suite_options_default(&so);
  if (o.tol) {
    if (!(*o.tol > 0)) throw ConfigError("--tol must be positive");
    so.transition_tol = so.parabolic_tol = so.fixed_point_tol = *o.tol;
  }
  if (o.m) so.degree_terms = *o.m;
  if (!o.tamper.empty()) {
    const auto comma = o.tamper.find(',');
    try {
      so.tamper_s = std::stoi(o.tamper.substr(0, comma));
      so.tamper_j = std::stoi(o.tamper.substr(comma + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tamper-center expects s,j");
    }
  }
  return so;
}

// Writes to <out>/<name> when --out is set, otherwise to stdout.
void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out_dir.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  const auto path = std::filesystem::path(o.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  std::cerr << "wrote " << path.string() << '\n';
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string verdict_text(const json& doc) {
  std::ostringstream os;
  for (const auto& suite : doc.at("suites")) {
    os << "[" << suite.at("suite").get<std::string>() << "] " << suite.at("status").get<std::string>() << '\n';
    for (const auto& c : suite.at("checks")) {
      std::string status = c.at("status").get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << "  " << status;
      os << std::string(7 - status.size(), ' ') << c.at("id").get<std::string>();
      // Non-finite residuals are serialized as null.
      const auto number = [](const json& v) { return v.is_number() ? sig(v.get<double>(), 3) : std::string("inf"); };
      if (c.at("status") != "report" && c.at("bound").is_number() && c.at("bound").get<double>() > 0)
        os << "  residual " << number(c.at("residual")) << " <= " << number(c.at("bound"));
      if (c.contains("detail")) os << "  (" << c.at("detail").get<std::string>() << ")";
      os << '\n';
    }
  }
  os << "overall: " << doc.at("status").get<std::string>() << '\n';
  return os.str();
}

int run_suite(const Options& o, const char* suite, const std::string& file, const ratsurf_params* p) {
  const ratsurf_suite_options so = suite_options(o);
  char* out = nullptr;
  int passed = 0;
  check(ratsurf_run_suite(suite, p, &so, &out, &passed), suite);
  const std::string doc = take(out);
  if (o.format == "json") {
    emit(o, file + ".json", doc);
  } else {
    if (!o.out_dir.empty()) emit(o, file + ".json", doc);
    std::cout << verdict_text(json::parse(doc));
  }
  return passed ? kPass : kFail;
}

int cmd_spectrum(const Options& o) {
  const auto [n, k] = lattice_nk(o);
  char* raw = nullptr;
  check(ratsurf_spectrum_json(n, k, &raw), "spectrum");
  const std::string doc = take(raw);
  if (o.format == "json") {
    emit(o, "spectrum.json", doc);
    return kPass;
  }
  const json j = json::parse(doc);
  std::ostringstream os;
  os << "chi_{" << n << "," << k << "}(x) = " << j["chi_text"].get<std::string>() << '\n';
  os << "lambda = " << fixed(j["lambda"].get<double>(), 12) << '\n';
  os << "entropy = " << fixed(j["entropy"].get<double>(), 12) << '\n';
  os << "char_poly(f_*) = " << j["char_poly_text"].get<std::string>() << '\n';
  os << "char_poly / chi = " << j["cofactor_text"].get<std::string>() << '\n';
  os << "cyclotomic factors:";
  for (const auto& c : j["cyclotomic"]) os << " Phi_" << c["order"].get<unsigned>() << "^" << c["multiplicity"].get<unsigned>();
  os << '\n';
  emit(o, "spectrum.txt", os.str());
  return kPass;
}

int cmd_cn(const Options& o) {
  if (!o.n) throw ConfigError("--n is required");
  char* raw = nullptr;
  check(ratsurf_admissible_c_json(*o.n, &raw), "cn");
  const std::string doc = take(raw);
  if (o.format == "json") {
    emit(o, "cn.json", doc);
    return kPass;
  }
  const json j = json::parse(doc);
  std::string line;
  for (const auto& m : j["admissible"]) line += (line.empty() ? "" : ", ") + sig(m["value"].get<double>(), 12);
  emit(o, "cn.txt", line + '\n');
  return kPass;
}

int cmd_degrees(const Options& o) {
  const auto [n, k] = lattice_nk(o);
  char* raw = nullptr;
  check(ratsurf_degrees_json(n, k, o.m.value_or(40), &raw), "degrees");
  const std::string doc = take(raw);
  if (o.format == "json") {
    emit(o, "degrees.json", doc);
    return kPass;
  }
  const json j = json::parse(doc);
  std::ostringstream os;
  os << "d =";
  const auto& d = j["degrees"];
  for (std::size_t i = 0; i + 1 < d.size(); ++i) os << (i ? ", " : " ") << d[i].get<std::string>();
  os << '\n' << "ratio d_{m+1}/d_m = " << fixed(j["ratio"].get<double>(), 12) << '\n';
  os << "lambda = " << fixed(j["lambda"].get<double>(), 12) << '\n';
  os << "recurrence " << (j["recurrence_holds"].get<bool>() ? "holds" : "fails") << '\n';
  emit(o, "degrees.txt", os.str());
  return j["recurrence_holds"].get<bool>() ? kPass : kFail;
}

int cmd_weyl(const Options& o) {
  const auto [n, k] = lattice_nk(o);
  char* raw = nullptr;
  check(ratsurf_weyl_json(n, k, &raw), "weyl");
  const std::string doc = take(raw);
  ParamsPtr p;
  {
    ratsurf_params* tmp = nullptr;
    check(ratsurf_params_create(n, k, &tmp), "parameters");
    p.reset(tmp);
  }
  if (o.format == "json") {
    emit(o, "weyl.json", doc);
    char* out = nullptr;
    int passed = 0;
    const ratsurf_suite_options so = suite_options(o);
    check(ratsurf_run_suite("factorization", p.get(), &so, &out, &passed), "factorization");
    ratsurf_string_free(out);
    return passed ? kPass : kFail;
  }
  if (!o.out_dir.empty()) emit(o, "weyl.json", doc);
  return run_suite(o, "factorization", "factorization", p.get());
}

int cmd_fixed_points(const Options& o) {
  ParamsPtr p = build_params(o);
  char* raw = nullptr;
  check(ratsurf_fixed_points_json(p.get(), &raw), "fixed-points");
  const std::string doc = take(raw);
  if (o.format == "json") {
    emit(o, "fixed_points.json", doc);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "zeta_re,zeta_im,trace_re,trace_im,type,residual\n";
    for (const auto& r : json::parse(doc))
      os << sig(r["zeta"][0].get<double>(), 15) << ',' << sig(r["zeta"][1].get<double>(), 15) << ','
         << sig(r["trace"][0].get<double>(), 15) << ',' << sig(r["trace"][1].get<double>(), 15) << ','
         << r["type"].get<std::string>() << ',' << sig(r["residual"].get<double>(), 3) << '\n';
    emit(o, "fixed_points.csv", os.str());
  } else {
    std::ostringstream os;
    const json arr = json::parse(doc);
    int real = 0;
    for (const auto& r : arr) {
      const std::string type = r["type"].get<std::string>();
      if (type != "complex") ++real;
      os << "zeta = " << sig(r["zeta"][0].get<double>(), 12) << (r["zeta"][1].get<double>() < 0 ? " - " : " + ")
         << sig(std::abs(r["zeta"][1].get<double>()), 12) << "i  trace = " << sig(r["trace"][0].get<double>(), 12)
         << (r["trace"][1].get<double>() < 0 ? " - " : " + ") << sig(std::abs(r["trace"][1].get<double>()), 12) << "i  "
         << type << '\n';
    }
    os << arr.size() << " fixed points, " << real << " real\n";
    emit(o, "fixed_points.txt", os.str());
  }
  const ratsurf_suite_options so = suite_options(o);
  char* out = nullptr;
  int passed = 0;
  check(ratsurf_run_suite("fixed_points", p.get(), &so, &out, &passed), "fixed-points");
  ratsurf_string_free(out);
  return passed ? kPass : kFail;
}

std::vector<double> read_seeds(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> xy;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      for (const auto& pt : json::parse(text)) {
        xy.push_back(pt.at(0).get<double>());
        xy.push_back(pt.at(1).get<double>());
      }
    } catch (const json::exception& e) {
      throw ConfigError("seeds file: " + std::string(e.what()));
    }
    return xy;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    double x = 0, y = 0;
    if (!(ls >> x >> y)) throw ConfigError("seeds file: malformed line '" + line + "'");
    xy.push_back(x);
    xy.push_back(y);
  }
  return xy;
}

int cmd_orbit(const Options& o) {
  ParamsPtr p = build_params(o);
  std::vector<double> seeds;
  if (!o.seeds_file.empty()) seeds = read_seeds(o.seeds_file);
  const bool json_out = o.format == "json";
  char* raw = nullptr;
  check(ratsurf_orbits(p.get(), seeds.data(), seeds.size() / 2, o.steps.value_or(1000),
                       json_out ? RATSURF_FORMAT_JSON : RATSURF_FORMAT_CSV, &raw),
        "orbit");
  emit(o, json_out ? "orbits.json" : "orbits.csv", take(raw));
  return kPass;
}

int cmd_unstable(const Options& o) {
  ParamsPtr p = build_params(o);
  ratsurf_manifold_options mo;
  ratsurf_manifold_options_default(&mo);
  mo.arclength = o.arclength;
  mo.spacing = o.spacing;
  const bool json_out = o.format == "json";
  char* raw = nullptr;
  check(ratsurf_unstable_manifolds(p.get(), &mo, json_out ? RATSURF_FORMAT_JSON : RATSURF_FORMAT_CSV, &raw), "unstable");
  emit(o, json_out ? "manifolds.json" : "manifolds.csv", take(raw));
  return kPass;
}

int cmd_charts(const Options& o) {
  ParamsPtr p = build_params(o);
  if (!o.out_dir.empty()) {
    const ratsurf_suite_options so = suite_options(o);
    char* raw = nullptr;
    check(ratsurf_chart_records_json(p.get(), &so, &raw), "charts");
    emit(o, "chart_records.json", take(raw));
  }
  return run_suite(o, "chart", "charts", p.get());
}

int cmd_parabolic(const Options& o) {
  ParamsPtr p = build_params(o);
  if (!o.out_dir.empty()) {
    const ratsurf_suite_options so = suite_options(o);
    char* raw = nullptr;
    check(ratsurf_parabolic_records_json(p.get(), &so, &raw), "parabolic");
    emit(o, "parabolic_records.json", take(raw));
  }
  return run_suite(o, "parabolic", "parabolic", p.get());
}

int cmd_verify(const Options& o) {
  ParamsPtr p = build_params(o);
  return run_suite(o, "verify", "verify", p.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birational surface automorphisms: lattice, chart and dynamics checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ratsurf_version()));
  Options o;

  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Period of the orbit at infinity")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "Pole order (even)")->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--out", o.out_dir, "Write results into this directory");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')));
  };
  auto add_map = [&](CLI::App* sub) {
    add_nk(sub);
    sub->add_option("--c-j", o.c_j, "c = sign * 2cos(j pi / n)");
    sub->add_option("--c-sign", o.c_sign, "Sign of c (+ or -)");
    sub->add_option("--a", o.a, "Coefficient a_l as l=re[,im]; repeatable");
    sub->add_option("--delta", o.delta, "Jacobian determinant delta as re[,im]");
    sub->add_option("--params", o.params_file, "Parameter JSON file; flags override its values")->check(CLI::ExistingFile);
    sub->add_option("--tol", o.tol, "Override the main numeric tolerance");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial, dynamical degree, entropy");
  add_nk(spectrum);
  spectrum->add_option("--params", o.params_file, "Parameter JSON file")->check(CLI::ExistingFile);
  add_common(spectrum, "text,json");

  auto* cn = app.add_subcommand("cn", "Admissible values of c for period n");
  cn->add_option("--n", o.n, "Period")->required();
  add_common(cn, "text,json");

  auto* verify = app.add_subcommand("verify", "Lattice, chart, factorization and parabolic suites");
  add_map(verify);
  add_common(verify, "text,json");
  verify->add_option("--tamper-center", o.tamper, "Test hook: perturb center s,j");

  auto* fixed = app.add_subcommand("fixed-points", "Finite fixed points and multipliers");
  add_map(fixed);
  add_common(fixed, "text,json,csv");

  auto* orbit = app.add_subcommand("orbit", "Forward orbits of seed points");
  add_map(orbit);
  add_common(orbit, "csv,json");
  orbit->add_option("--steps", o.steps, "Number of iterations (default 1000)");
  orbit->add_option("--seeds", o.seeds_file, "Seed file: JSON [[x,y],...] or one 'x y' per line")->check(CLI::ExistingFile);

  auto* unstable = app.add_subcommand("unstable", "Unstable and stable manifolds of real saddles");
  add_map(unstable);
  add_common(unstable, "csv,json");
  unstable->add_option("--arclength", o.arclength, "Arclength per branch");
  unstable->add_option("--spacing", o.spacing, "Maximum distance between consecutive points");

  auto* charts = app.add_subcommand("charts", "Fiber transition maps, closed form vs numeric");
  add_map(charts);
  add_common(charts, "text,json");
  charts->add_option("--tamper-center", o.tamper, "Test hook: perturb center s,j");

  auto* parabolic = app.add_subcommand("parabolic", "Parabolic curves at infinity");
  add_map(parabolic);
  add_common(parabolic, "text,json");

  auto* weyl = app.add_subcommand("weyl", "Reflection factorizations of the lattice action");
  add_nk(weyl);
  weyl->add_option("--params", o.params_file, "Parameter JSON file")->check(CLI::ExistingFile);
  add_common(weyl, "text,json");

  auto* degrees = app.add_subcommand("degrees", "Degree sequence of the iterates");
  add_nk(degrees);
  degrees->add_option("--params", o.params_file, "Parameter JSON file")->check(CLI::ExistingFile);
  degrees->add_option("--m", o.m, "Last index m (default 40)")->check(CLI::PositiveNumber);
  add_common(degrees, "text,json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (cn->parsed()) return cmd_cn(o);
    if (verify->parsed()) return cmd_verify(o);
    if (fixed->parsed()) return cmd_fixed_points(o);
    if (orbit->parsed()) return cmd_orbit(o);
    if (unstable->parsed()) return cmd_unstable(o);
    if (charts->parsed()) return cmd_charts(o);
    if (parabolic->parsed()) return cmd_parabolic(o);
    if (weyl->parsed()) return cmd_weyl(o);
    if (degrees->parsed()) return cmd_degrees(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
