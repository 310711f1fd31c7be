#include "japprox/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace japprox {

namespace {

using nlohmann::json;

Complex parse_xy(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::InvalidInput, std::string(what) + " must be a [x, y] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json xy(Complex z) { return json::array({z.real(), z.imag()}); }

json xy_list(const std::vector<Complex>& v) {
  json a = json::array();
  for (Complex z : v) a.push_back(xy(z));
  return a;
}

const char* provenance_name(NodeProvenance p) {
  switch (p) {
    case NodeProvenance::CircleLeja: return "circle-leja";
    case NodeProvenance::PseudoLeja: return "pseudo-leja";
    case NodeProvenance::ConformalImage: return "conformal-image";
    case NodeProvenance::DiscreteFekete: return "discrete-fekete";
  }
  return "unknown";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

PlanarSet parse_set_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("set descriptor is not JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
      fail(ErrorCode::InvalidInput, "set descriptor needs a \"type\" string");
    std::string type = j["type"].get<std::string>();
    if (type == "disk") {
      if (!j.contains("center") || !j.contains("radius") || !j["radius"].is_number())
        fail(ErrorCode::InvalidInput, "disk needs \"center\" and numeric \"radius\"");
      return PlanarSet::disk(parse_xy(j["center"], "disk center"),
                             j["radius"].get<double>());
    }
    if (type == "segment") {
      if (!j.contains("a") || !j.contains("b"))
        fail(ErrorCode::InvalidInput, "segment needs endpoints \"a\" and \"b\"");
      return PlanarSet::segment(parse_xy(j["a"], "segment endpoint"),
                                parse_xy(j["b"], "segment endpoint"));
    }
    if (type == "polygon") {
      if (!j.contains("vertices") || !j["vertices"].is_array())
        fail(ErrorCode::InvalidInput, "polygon needs a \"vertices\" array");
      std::vector<Complex> vs;
      for (const json& v : j["vertices"]) vs.push_back(parse_xy(v, "polygon vertex"));
      return PlanarSet::polygon(std::move(vs));
    }
    if (type == "union_disks") {
      if (!j.contains("disks") || !j["disks"].is_array())
        fail(ErrorCode::InvalidInput, "union_disks needs a \"disks\" array");
      std::vector<Disk> ds;
      for (const json& d : j["disks"]) {
        if (!d.is_object() || !d.contains("center") || !d.contains("radius") ||
            !d["radius"].is_number())
          fail(ErrorCode::InvalidInput, "each disk needs \"center\" and \"radius\"");
        ds.push_back(Disk{parse_xy(d["center"], "disk center"), d["radius"].get<double>()});
      }
      return PlanarSet::union_of_disks(std::move(ds));
    }
    if (type == "poly_preimage") {
      if (!j.contains("coeffs") || !j["coeffs"].is_array())
        fail(ErrorCode::InvalidInput,
             "poly_preimage needs ascending \"coeffs\" [[re,im],...]");
      std::vector<Complex> cs;
      for (const json& c : j["coeffs"]) cs.push_back(parse_xy(c, "coefficient"));
      return PlanarSet::poly_preimage(ComplexPoly(std::move(cs)));
    }
    fail(ErrorCode::InvalidInput, "unknown set type \"" + type + "\"");
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed set descriptor: ") + e.what());
  }
}

PlanarSet load_set_file(const std::string& path) {
  return parse_set_json(read_file(path));
}

std::string set_to_json(const PlanarSet& set) {
  json j;
  if (const auto* d = set.get_if<Disk>()) {
    j = {{"type", "disk"}, {"center", xy(d->center)}, {"radius", d->radius}};
  } else if (const auto* s = set.get_if<Segment>()) {
    j = {{"type", "segment"}, {"a", xy(s->a)}, {"b", xy(s->b)}};
  } else if (const auto* p = set.get_if<SimplePolygon>()) {
    j = {{"type", "polygon"}, {"vertices", xy_list(p->vertices)}};
  } else if (const auto* u = set.get_if<UnionOfDisks>()) {
    json ds = json::array();
    for (const Disk& d : u->disks)
      ds.push_back({{"center", xy(d.center)}, {"radius", d.radius}});
    j = {{"type", "union_disks"}, {"disks", ds}};
  } else if (const auto* pp = set.get_if<PolyPreimage>()) {
    j = {{"type", "poly_preimage"}, {"coeffs", xy_list(pp->p.coeffs())}};
  }
  return j.dump();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string nodes_csv(const NodeArray& nodes, const GreenModel& green) {
  std::string rho_viol, rho_margin;
  try {
    RhoSeparation rs = separation_rho(nodes, green, nodes.n());
    rho_viol = std::to_string(rs.violations);
    rho_margin = format_double(rs.min_margin);
  } catch (const Error&) {
    // Fekete arrays carry no Edrei record; the columns stay empty.
  }
  std::ostringstream out;
  out << "k,node_re,node_im,edrei_C_k,markov_M_k,sigma_k,"
         "sigma_bound_log,sigma_bound_simple,sigma_ok,"
         "rho_violations,rho_min_margin\n";
  for (int k = 0; k <= nodes.n(); ++k) {
    out << k << ',' << format_double(nodes.points[k].real()) << ','
        << format_double(nodes.points[k].imag()) << ',';
    if (k >= 1 && k <= static_cast<int>(nodes.edrei.size()))
      out << format_double(nodes.edrei[k - 1]);
    out << ',';
    if (k >= 1 && k <= static_cast<int>(nodes.markov.size()))
      out << format_double(nodes.markov[k - 1]);
    out << ',';
    if (k >= 1 && (nodes.provenance == NodeProvenance::PseudoLeja ||
                   nodes.provenance == NodeProvenance::CircleLeja)) {
      SeparationSigma ss = separation_sigma(nodes, k);
      out << format_double(ss.sigma) << ',' << format_double(ss.bound_log) << ','
          << format_double(ss.bound_simple) << ',' << (ss.ok ? "true" : "false");
    } else {
      out << ",,,";
    }
    out << ',' << rho_viol << ',' << rho_margin << '\n';
  }
  return out.str();
}

std::string lebesgue_csv(const std::vector<LebesgueDiagnostic>& rows) {
  std::ostringstream out;
  out << "n,lebesgue_const,lebesgue_root,min_delta_root_over_cap,"
         "max_delta_root_over_cap,norm_Ln_root\n";
  for (const LebesgueDiagnostic& d : rows)
    out << d.n << ',' << format_double(d.lebesgue_const) << ','
        << format_double(d.lebesgue_root) << ','
        << format_double(d.min_delta_root_over_cap) << ','
        << format_double(d.max_delta_root_over_cap) << ','
        << format_double(d.norm_Ln_root) << '\n';
  return out.str();
}

std::string rate_table_csv(const std::vector<MetricReport>& rows) {
  std::ostringstream out;
  out << "n,s_n,gamma_measured,gamma_bound,chi_measured,chi_bound,"
         "chi_nested,pass,note\n";
  for (const MetricReport& r : rows) {
    out << r.n << ',' << format_double(r.s_n) << ',' << format_double(r.gamma)
        << ',' << format_double(r.gamma_bound) << ',' << format_double(r.chi)
        << ',';
    if (r.chi_bound) out << format_double(*r.chi_bound);
    out << ',' << (r.chi_nested ? "true" : "false") << ','
        << (r.pass ? "true" : "false") << ',' << csv_quote(r.note) << '\n';
  }
  return out.str();
}

std::string green_grid_csv(const GreenModel& m, const Raster& raster) {
  std::ostringstream out;
  out << "x,y,green\n";
  for (int row = 0; row < raster.height; ++row)
    for (int col = 0; col < raster.width; ++col) {
      Complex c = raster.center(row, col);
      out << format_double(c.real()) << ',' << format_double(c.imag()) << ','
          << format_double(m.eval(c)) << '\n';
    }
  return out.str();
}

namespace {

json check_json(const CertCheck& c) {
  constexpr std::size_t kMaxListed = 64;
  json fails = json::array();
  for (std::size_t i = 0; i < c.failures.size() && i < kMaxListed; ++i)
    fails.push_back(xy(c.failures[i]));
  return {{"name", c.name},
          {"samples", c.samples},
          {"failure_count", c.failures.size()},
          {"failures", fails},
          {"pass", c.pass()}};
}

} // namespace

std::string approx_json(const JuliaApprox& ja, const Certificate& cert) {
  json j;
  j["n"] = ja.n;
  j["degree"] = ja.P.degree();
  j["s"] = ja.s;
  if (ja.eps > 0.0) j["eps"] = ja.eps;
  j["s_prime"] = ja.s_prime;
  j["certified_rate"] = ja.s_prime + ja.s;
  j["translation"] = xy(ja.translation);
  if (ja.s_prime > 0.0)
    j["note"] = "nodes on the E_{s'} level curve, s' = " + format_double(ja.s_prime);

  const ConditionReport& c = ja.conditions;
  j["conditions"] = {{"omega", c.omega},
                     {"B_n", c.Bn},
                     {"B_n_working", c.Bn_working},
                     {"log_norm_Q", c.log_norm_Q},
                     {"lhs3", c.lhs3},
                     {"rhs3", c.rhs3},
                     {"lhs4", c.lhs4},
                     {"rhs4", c.rhs4},
                     {"c1", c.c1},
                     {"c2", c.c2},
                     {"c3", c.c3},
                     {"c4", c.c4}};

  j["polynomial"] = {{"lead_phase", xy(ja.P.lead_phase)},
                     {"lead_log", ja.P.lead_log},
                     {"roots", xy_list(ja.P.roots)},
                     {"coeffs", xy_list(ja.P_coeffs.base.coeffs())},
                     {"log_scale", ja.P_coeffs.log_scale}};

  j["trap_radius"] = ja.trap_radius;
  j["escape_threshold"] = ja.escape_threshold;
  j["iteration_cap"] = ja.iteration_cap;
  j["capacity"] = ja.julia_green().capacity();
  j["nodes"] = {{"provenance", provenance_name(ja.sys.nodes.provenance)},
                {"count", ja.sys.nodes.points.size()}};
  j["certificate"] = {{"pass", cert.pass()},
                      {"iteration_cap", cert.cap},
                      {"checks", json::array({check_json(cert.set_bounded),
                                              check_json(cert.one_step),
                                              check_json(cert.level_escapes)})}};
  return j.dump(2) + "\n";
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::PreconditionNotMet: return "precondition-not-met";
    case ErrorCode::MeshFailure: return "mesh-failure";
    case ErrorCode::EdreiViolation: return "edrei-violation";
    case ErrorCode::DegenerateNodes: return "degenerate-nodes";
    case ErrorCode::FitFailure: return "fit-failure";
    case ErrorCode::NotContinuum: return "not-continuum";
    case ErrorCode::CertificationFailed: return "certification-failed";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) {
  if (code == ErrorCode::InvalidInput) return 2;
  if (code == ErrorCode::CertificationFailed) return 4;
  return 3;
}

std::string error_json(ErrorCode code, const std::string& message) {
  json j = {{"error", error_code_name(code)}, {"message", message}};
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::InvalidInput, "short write to " + path);
}

void write_pgm(const std::string& path, const Raster& raster) {
  std::ostringstream head;
  head << "P5\n" << raster.width << " " << raster.height << "\n255\n";
  std::string bytes = head.str();
  bytes.append(reinterpret_cast<const char*>(raster.pix.data()), raster.pix.size());
  write_file(path, bytes);
}

} // namespace japprox
