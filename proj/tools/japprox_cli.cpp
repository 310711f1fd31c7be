// japprox: construct polynomials whose filled-in Julia sets approximate a
// compact planar set from above, plus the diagnostics around that pipeline.
//
// Subcommands: nodes | lebesgue | approximate | rates | render.
// Exit codes: 0 ok, 2 config error, 3 precondition failure, 4 certification
// failure.  Errors are machine-readable JSON on stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "japprox/dynamics.hpp"
#include "japprox/errors.hpp"
#include "japprox/geometry.hpp"
#include "japprox/green.hpp"
#include "japprox/io.hpp"
#include "japprox/lagrange.hpp"
#include "japprox/metrics.hpp"
#include "japprox/nodes.hpp"

namespace {

using namespace japprox;

struct RunConfig {
  std::string set_path;
  std::string config_path;
  std::string out_path;        // empty = stdout ("julia.pgm" for render)
  std::string render_path;     // approximate: optional PGM of K(P_n)
  std::string green_csv_path;  // render: optional Green-value grid
  std::string coeffs_json;     // render: explicit polynomial, ascending
  std::string window_spec;     // "x0,x1,y0,y1", empty = auto
  std::string n_list_spec;
  int n = 0;
  double c_target = 2.0;
  bool fekete = false;
  double eps = 0.0;
  double s = 0.0;
  double split = 0.5;
  bool no_adaptive_split = false;
  int iteration_cap = 1000;
  int max_n = 4096;
  int resolution = 512;
  int mesh = 0; // 0 = module default
  int samples = 1000;
  std::uint64_t seed = 1;
  double slack = 0.05;
  double holder_A = 0.0;
  double holder_alpha = 0.0;
  double margin = 1.1;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, key + " expects an integer, got \"" + v + "\"");
  }
}

double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, key + " expects a number, got \"" + v + "\"");
  }
}

bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(ErrorCode::InvalidInput, key + " expects true/false, got \"" + v + "\"");
}

/// `key = value` lines, # comments.  Applied after flag parsing: the config
/// file wins, so a checked-in config reproduces a run regardless of the
/// command line around it.
void apply_config_file(RunConfig& rc) {
  if (rc.config_path.empty()) return;
  std::istringstream in(read_file(rc.config_path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::InvalidInput, rc.config_path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "set") rc.set_path = val;
    else if (key == "out") rc.out_path = val;
    else if (key == "render") rc.render_path = val;
    else if (key == "green-csv") rc.green_csv_path = val;
    else if (key == "coeffs") rc.coeffs_json = val;
    else if (key == "window") rc.window_spec = val;
    else if (key == "n-list") rc.n_list_spec = val;
    else if (key == "n") rc.n = to_int(val, key);
    else if (key == "c-target") rc.c_target = to_double(val, key);
    else if (key == "fekete") rc.fekete = to_bool(val, key);
    else if (key == "eps") rc.eps = to_double(val, key);
    else if (key == "s") rc.s = to_double(val, key);
    else if (key == "split") rc.split = to_double(val, key);
    else if (key == "no-adaptive-split") rc.no_adaptive_split = to_bool(val, key);
    else if (key == "iteration-cap") rc.iteration_cap = to_int(val, key);
    else if (key == "max-n") rc.max_n = to_int(val, key);
    else if (key == "resolution") rc.resolution = to_int(val, key);
    else if (key == "mesh") rc.mesh = to_int(val, key);
    else if (key == "samples") rc.samples = to_int(val, key);
    else if (key == "seed") rc.seed = static_cast<std::uint64_t>(
                 std::strtoull(val.c_str(), nullptr, 10));
    else if (key == "slack") rc.slack = to_double(val, key);
    else if (key == "holder-A") rc.holder_A = to_double(val, key);
    else if (key == "holder-alpha") rc.holder_alpha = to_double(val, key);
    else if (key == "margin") rc.margin = to_double(val, key);
    else
      fail(ErrorCode::InvalidInput, rc.config_path + ":" + std::to_string(lineno) +
                                        ": unknown config key \"" + key + "\"");
  }
}

std::vector<int> parse_n_list(const std::string& spec, const char* fallback) {
  std::string text = spec.empty() ? fallback : spec;
  std::vector<int> ns;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    int n = to_int(tok, "n-list");
    if (n < 1)
      fail(ErrorCode::InvalidInput,
           "n must be at least 1 (a degree-n interpolant needs n+1 >= 2 nodes)");
    ns.push_back(n);
  }
  if (ns.empty()) fail(ErrorCode::InvalidInput, "n-list is empty");
  return ns;
}

PlanarSet require_set(const RunConfig& rc) {
  if (rc.set_path.empty())
    fail(ErrorCode::InvalidInput, "--set FILE is required");
  return load_set_file(rc.set_path);
}

void check_positive(const RunConfig& rc) {
  if (rc.iteration_cap < 1 || rc.resolution < 1 || rc.samples < 1 ||
      rc.max_n < 1 || rc.c_target <= 0.0 || rc.margin <= 0.0 ||
      rc.mesh < 0 || rc.slack < 0.0 || rc.split <= 0.0 || rc.split >= 1.0)
    fail(ErrorCode::InvalidInput, "numeric parameters must be positive "
                                  "(and 0 < split < 1)");
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out_path.empty())
    std::cout << text;
  else
    write_file(rc.out_path, text);
}

BuildOptions build_options(const RunConfig& rc) {
  BuildOptions opt;
  opt.n = rc.n;
  opt.C_target = rc.c_target;
  opt.fekete = rc.fekete;
  opt.split = rc.split;
  opt.adaptive_split = !rc.no_adaptive_split;
  opt.iteration_cap = rc.iteration_cap;
  opt.max_n = rc.max_n;
  opt.mesh_size = rc.mesh;
  return opt;
}

void run_nodes(const RunConfig& rc) {
  PlanarSet set = require_set(rc);
  if (rc.n < 1)
    fail(ErrorCode::InvalidInput,
         "n must be at least 1 (a degree-n interpolant needs n+1 >= 2 nodes)");
  GreenModel green = green_for(set);
  BoundaryMesh mesh_store;
  const BoundaryMesh* over = nullptr;
  if (rc.mesh > 0) {
    mesh_store = boundary_sample(set, rc.mesh);
    over = &mesh_store;
  }
  NodeArray nodes = rc.fekete
                        ? discrete_fekete(set, rc.n, over)
                        : pseudo_leja(set, green, rc.n, rc.c_target, over);
  emit(rc, nodes_csv(nodes, green));
}

void run_lebesgue(const RunConfig& rc) {
  PlanarSet set = require_set(rc);
  std::vector<int> ns = parse_n_list(rc.n_list_spec, "8,16,32,64");
  GreenModel green = green_for(set);
  BoundaryMesh mesh = boundary_sample(set, rc.mesh > 0 ? rc.mesh : 2048);
  double cap = green.capacity();
  std::vector<LebesgueDiagnostic> rows;
  for (int n : ns) {
    NodeArray nodes = rc.fekete ? discrete_fekete(set, n)
                                : pseudo_leja(set, green, n, rc.c_target);
    LagrangeSystem sys = deltas(nodes);
    rows.push_back(lebesgue_diagnostic(sys, mesh, cap));
  }
  emit(rc, lebesgue_csv(rows));
}

JuliaApprox build_from_config(const RunConfig& rc, const PlanarSet& set,
                              const GreenModel& green) {
  BuildOptions opt = build_options(rc);
  if (rc.eps > 0.0) return approximate_eps(set, green, rc.eps, opt);
  if (rc.s > 0.0) return build_with_shift(set, green, rc.s, opt);
  if (rc.n >= 1)
    return build_rate_n(set, green, holder_fit(green, set), rc.n, opt);
  fail(ErrorCode::InvalidInput,
       "choose a target: --eps EPS, --s RATE, or --n DEGREE");
}

void run_approximate(const RunConfig& rc) {
  PlanarSet set = require_set(rc);
  GreenModel green = green_for(set);
  JuliaApprox ja = build_from_config(rc, set, green);
  Certificate cert = certify_inclusions(ja, set, rc.samples, rc.seed);
  if (!rc.render_path.empty()) {
    Raster r = filled_julia_raster(ja.P, ja.default_window(rc.margin),
                                   rc.resolution, ja.iteration_cap,
                                   ja.trap_radius);
    write_pgm(rc.render_path, r);
  }
  emit(rc, approx_json(ja, cert));
  if (!cert.pass()) {
    std::string bad;
    for (const CertCheck* c : {&cert.set_bounded, &cert.one_step,
                               &cert.level_escapes})
      if (!c->pass()) bad += (bad.empty() ? "" : ", ") + c->name;
    fail(ErrorCode::CertificationFailed, "certificate checks failed: " + bad);
  }
}

void run_rates(const RunConfig& rc) {
  PlanarSet set = require_set(rc);
  std::vector<int> ns = parse_n_list(rc.n_list_spec, "16,32,64,128");
  RateTableOptions opt;
  opt.resolution = rc.resolution;
  opt.iteration_cap = rc.iteration_cap;
  opt.samples = rc.samples;
  opt.seed = rc.seed;
  opt.slack = rc.slack;
  opt.build = build_options(rc);
  if (rc.holder_A > 0.0 || rc.holder_alpha > 0.0) {
    if (rc.holder_A <= 0.0 || rc.holder_alpha <= 0.0 || rc.holder_alpha > 1.0)
      fail(ErrorCode::InvalidInput,
           "synthetic Hoelder override needs --holder-A > 0 and "
           "--holder-alpha in (0, 1]");
    opt.holder_override = HolderData{rc.holder_A, rc.holder_alpha};
  }
  emit(rc, rate_table_csv(gamma_rate_table(set, ns, opt)));
}

Window parse_window(const std::string& spec) {
  std::vector<double> v;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(to_double(trim(tok), "window"));
  if (v.size() != 4 || v[1] <= v[0] || v[3] <= v[2])
    fail(ErrorCode::InvalidInput,
         "window expects x0,x1,y0,y1 with x0 < x1 and y0 < y1");
  return Window{v[0], v[1], v[2], v[3]};
}

/// The raster must see every escape decision: a window missing part of the
/// escape disk |z| <= esc would label truncated exterior pixels as interior.
Window cover_escape_disk(Window win, double esc) {
  Window grown = win;
  if (grown.x0 > -esc) grown.x0 = -esc;
  if (grown.x1 < esc) grown.x1 = esc;
  if (grown.y0 > -esc) grown.y0 = -esc;
  if (grown.y1 < esc) grown.y1 = esc;
  if (grown.x0 != win.x0 || grown.x1 != win.x1 || grown.y0 != win.y0 ||
      grown.y1 != win.y1)
    std::cerr << "warning: window expanded to cover the escape disk |z| <= "
              << format_double(esc) << "\n";
  return grown;
}

std::vector<Complex> parse_coeffs(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("coeffs is not JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    fail(ErrorCode::InvalidInput, "coeffs expects a JSON array, ascending powers");
  std::vector<Complex> cs;
  for (const nlohmann::json& c : j) {
    if (c.is_number())
      cs.emplace_back(c.get<double>(), 0.0);
    else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number())
      cs.emplace_back(c[0].get<double>(), c[1].get<double>());
    else
      fail(ErrorCode::InvalidInput, "each coefficient is a number or [re, im]");
  }
  return cs;
}

void run_render(const RunConfig& rc) {
  std::string out = rc.out_path.empty() ? "julia.pgm" : rc.out_path;
  Raster raster;
  GreenModel model = GreenModel::disk(Complex(0.0), 1.0); // replaced below
  if (!rc.coeffs_json.empty()) {
    ScaledPoly P{ComplexPoly(parse_coeffs(rc.coeffs_json)), 0.0};
    if (P.degree() < 2)
      fail(ErrorCode::InvalidInput,
           "need degree >= 2 for a compact filled Julia set");
    double esc = escape_radius(P).effective();
    Window win = rc.window_spec.empty()
                     ? Window{-rc.margin * esc, rc.margin * esc,
                              -rc.margin * esc, rc.margin * esc}
                     : cover_escape_disk(parse_window(rc.window_spec), esc);
    raster = filled_julia_raster(P, win, rc.resolution, rc.iteration_cap);
    model = GreenModel::dynamical(P, rc.iteration_cap);
  } else {
    PlanarSet set = require_set(rc);
    GreenModel green = green_for(set);
    JuliaApprox ja = build_from_config(rc, set, green);
    Window win = rc.window_spec.empty()
                     ? ja.default_window(rc.margin)
                     : cover_escape_disk(parse_window(rc.window_spec),
                                         ja.escape_threshold);
    raster = filled_julia_raster(ja.P, win, rc.resolution, ja.iteration_cap,
                                 ja.trap_radius);
    model = ja.julia_green();
  }
  write_pgm(out, raster);
  if (!rc.green_csv_path.empty())
    write_file(rc.green_csv_path, green_grid_csv(model, raster));
}

} // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  CLI::App app{"japprox: polynomials whose filled-in Julia sets approximate a "
               "compact planar set from above"};
  app.require_subcommand(1);

  auto add_common = [&rc](CLI::App* c) {
    c->add_option("--set", rc.set_path, "set descriptor JSON file");
    c->add_option("--config", rc.config_path,
                  "key=value file; entries override flags");
    c->add_option("--out", rc.out_path, "output path (default: stdout)");
    c->add_option("--seed", rc.seed, "seed for certificate sample placement")
        ->capture_default_str();
  };

  CLI::App* nodes = app.add_subcommand(
      "nodes", "node array CSV with Edrei / separation diagnostics");
  add_common(nodes);
  nodes->add_option("--n", rc.n, "degree parameter: emits n+1 nodes")
      ->default_str("16");
  nodes->add_option("--c-target", rc.c_target, "pseudo-Leja Edrei target C")
      ->capture_default_str();
  nodes->add_flag("--fekete", rc.fekete, "discrete Fekete nodes instead");
  nodes->add_option("--mesh", rc.mesh, "boundary mesh size (0 = auto)")
      ->capture_default_str();

  CLI::App* leb = app.add_subcommand(
      "lebesgue", "Lebesgue-constant equivalence diagnostics over an n-list");
  add_common(leb);
  leb->add_option("--n-list", rc.n_list_spec, "comma list of degrees")
      ->default_str("8,16,32,64");
  leb->add_option("--c-target", rc.c_target, "pseudo-Leja Edrei target C")
      ->capture_default_str();
  leb->add_flag("--fekete", rc.fekete, "discrete Fekete nodes instead");
  leb->add_option("--mesh", rc.mesh, "evaluation mesh size (0 = 2048)")
      ->capture_default_str();

  CLI::App* approx = app.add_subcommand(
      "approximate", "build P_n, certify E <= K(P_n) <= E_s, emit JSON");
  add_common(approx);
  approx->add_option("--eps", rc.eps, "Hausdorff target: K(P) within eps of E")
      ->capture_default_str();
  approx->add_option("--s", rc.s, "explicit rate target (0 = derive)")
      ->capture_default_str();
  approx->add_option("--n", rc.n, "degree parameter (0 = smallest passing)")
      ->capture_default_str();
  approx->add_option("--c-target", rc.c_target, "pseudo-Leja Edrei target C")
      ->capture_default_str();
  approx->add_flag("--fekete", rc.fekete, "discrete Fekete nodes instead");
  approx->add_option("--split", rc.split, "level fraction s'/s when 0 is not interior")
      ->capture_default_str();
  approx->add_flag("--no-adaptive-split", rc.no_adaptive_split,
                   "keep --split fixed instead of minimizing s' + s");
  approx->add_option("--iteration-cap", rc.iteration_cap, "orbit iteration cap")
      ->capture_default_str();
  approx->add_option("--max-n", rc.max_n, "auto-n search ceiling")
      ->capture_default_str();
  approx->add_option("--samples", rc.samples, "certificate sample count")
      ->capture_default_str();
  approx->add_option("--mesh", rc.mesh, "node-selection mesh size (0 = auto)")
      ->capture_default_str();
  approx->add_option("--render", rc.render_path, "also write a PGM raster here");
  approx->add_option("--resolution", rc.resolution, "raster resolution")
      ->capture_default_str();
  approx->add_option("--margin", rc.margin, "raster window / escape radius")
      ->capture_default_str();

  CLI::App* rates = app.add_subcommand(
      "rates", "Gamma / chi rate table against the corollary bounds");
  add_common(rates);
  rates->add_option("--n-list", rc.n_list_spec, "comma list of degrees")
      ->default_str("16,32,64,128");
  rates->add_option("--resolution", rc.resolution, "raster resolution")
      ->capture_default_str();
  rates->add_option("--iteration-cap", rc.iteration_cap, "orbit iteration cap")
      ->capture_default_str();
  rates->add_option("--samples", rc.samples, "certificate sample count")
      ->capture_default_str();
  rates->add_option("--slack", rc.slack, "relative allowance on the pass gates")
      ->capture_default_str();
  rates->add_option("--c-target", rc.c_target, "pseudo-Leja Edrei target C")
      ->capture_default_str();
  rates->add_flag("--fekete", rc.fekete, "discrete Fekete nodes instead");
  rates->add_option("--split", rc.split, "level fraction s'/s when 0 is not interior")
      ->capture_default_str();
  rates->add_option("--holder-A", rc.holder_A,
                    "synthetic Hoelder constant A (with --holder-alpha)")
      ->capture_default_str();
  rates->add_option("--holder-alpha", rc.holder_alpha,
                    "synthetic Hoelder exponent in (0, 1]")
      ->capture_default_str();

  CLI::App* render = app.add_subcommand(
      "render", "P5 raster of a filled Julia set (boundary band = J(P))");
  add_common(render);
  render->add_option("--coeffs", rc.coeffs_json,
                     "render this polynomial: JSON coefficients, ascending "
                     "(numbers or [re,im]); otherwise build P_n from --set");
  render->add_option("--n", rc.n, "degree parameter when building from --set")
      ->default_str("32");
  render->add_option("--eps", rc.eps, "Hausdorff target when building")
      ->capture_default_str();
  render->add_option("--s", rc.s, "explicit rate target when building")
      ->capture_default_str();
  render->add_option("--c-target", rc.c_target, "pseudo-Leja Edrei target C")
      ->capture_default_str();
  render->add_flag("--fekete", rc.fekete, "discrete Fekete nodes instead");
  render->add_option("--split", rc.split, "level fraction s'/s when 0 is not interior")
      ->capture_default_str();
  render->add_option("--resolution", rc.resolution, "raster resolution")
      ->capture_default_str();
  render->add_option("--window", rc.window_spec,
                     "x0,x1,y0,y1 (auto-expands to cover the escape disk)");
  render->add_option("--iteration-cap", rc.iteration_cap, "orbit iteration cap")
      ->capture_default_str();
  render->add_option("--margin", rc.margin, "auto window / escape radius")
      ->capture_default_str();
  render->add_option("--green-csv", rc.green_csv_path,
                     "also write x,y,green over the pixel grid here");
  render->get_option("--out")->description("output PGM path (default: julia.pgm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
    std::cerr << error_json(ErrorCode::InvalidInput, e.what());
    return 2;
  }

  if (nodes->parsed() && nodes->count("--n") == 0) rc.n = 16;
  if (render->parsed() && render->count("--n") == 0) rc.n = 32;

  try {
    apply_config_file(rc);
    check_positive(rc);
    if (nodes->parsed()) run_nodes(rc);
    else if (leb->parsed()) run_lebesgue(rc);
    else if (approx->parsed()) run_approximate(rc);
    else if (rates->parsed()) run_rates(rc);
    else if (render->parsed()) run_render(rc);
  } catch (const Error& e) {
    std::cerr << error_json(e.code(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << error_json(ErrorCode::Internal, e.what());
    return 3;
  }
  return 0;
}
