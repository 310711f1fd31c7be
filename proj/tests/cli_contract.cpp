// End-to-end checks of the command-line contract: exit codes, output shapes,
// pinned example values, and byte determinism.  argv[1] is the binary path.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>
#include <vector>

namespace {

int failures = 0;

void check(bool ok, const std::string& name, const std::string& detail = "") {
  if (ok) {
    std::cout << "ok: " << name << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string g_bin;
std::string g_dir;

RunResult run(const std::string& args) {
  std::string out_path = g_dir + "/stdout.txt";
  std::string err_path = g_dir + "/stderr.txt";
  std::string cmd =
      g_bin + " " + args + " >" + out_path + " 2>" + err_path;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// value of the first "key": <number> occurrence in a JSON dump
double json_number(const std::string& text, const std::string& key,
                   bool* found = nullptr) {
  std::string pat = "\"" + key + "\":";
  std::size_t p = text.find(pat);
  if (found) *found = p != std::string::npos;
  if (p == std::string::npos) return 0.0;
  return std::atof(text.c_str() + p + pat.size());
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (quoted) {
      if (c == '"') quoted = false;
      else cur += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <japprox binary>\n";
    return 2;
  }
  g_bin = argv[1];
  g_dir = "cli_contract_tmp";
  ::mkdir(g_dir.c_str(), 0755);

  std::string disk = g_dir + "/disk.json";
  std::string seg = g_dir + "/seg.json";
  std::string offset = g_dir + "/offset.json";
  std::string bowtie = g_dir + "/bowtie.json";
  spit(disk, R"({"type":"disk","center":[0,0],"radius":1})");
  spit(seg, R"({"type":"segment","a":[-1,0],"b":[1,0]})");
  spit(offset, R"({"type":"disk","center":[3,0],"radius":1})");
  spit(bowtie,
       R"({"type":"polygon","vertices":[[0,0],[1,1],[1,0],[0,1]]})");

  // --- nodes: row count, realized Edrei constants, determinism ---------------
  {
    RunResult a = run("nodes --set " + disk + " --n 16");
    check(a.exit_code == 0, "nodes exits 0");
    check(count_lines(a.out) == 18, "nodes emits header + 17 rows",
          std::to_string(count_lines(a.out)));
    std::istringstream lines(a.out);
    std::string line;
    std::getline(lines, line);
    check(csv_fields(line)[0] == "k" && csv_fields(line).size() == 11,
          "nodes header starts with k and has 11 columns");
    bool edrei_ok = true;
    std::getline(lines, line); // k = 0 carries no Edrei constant
    while (std::getline(lines, line)) {
      std::vector<std::string> f = csv_fields(line);
      if (f.size() < 4 || f[3].empty() || std::atof(f[3].c_str()) > 2.0 * 1.1)
        edrei_ok = false;
    }
    check(edrei_ok, "every realized C_k stays within the target");

    RunResult b = run("nodes --set " + disk + " --n 16");
    check(a.out == b.out, "nodes reruns byte-identical");

    std::string out_file = g_dir + "/nodes.csv";
    RunResult c = run("nodes --set " + disk + " --n 16 --out " + out_file);
    check(c.exit_code == 0 && slurp(out_file) == a.out,
          "--out writes the same bytes as stdout");
  }

  // --- invalid polygon: exit 2 with machine-readable stderr ------------------
  {
    RunResult r = run("nodes --set " + bowtie + " --n 4");
    check(r.exit_code == 2, "self-intersecting polygon exits 2",
          std::to_string(r.exit_code));
    check(contains(r.err, "polygon not simple"), "error names the failure");
    check(contains(r.err, "invalid-input"), "error carries the code");
  }

  // --- lebesgue: pinned Fekete value, validation ------------------------------
  {
    RunResult r = run("lebesgue --set " + seg + " --n-list 2 --fekete");
    check(r.exit_code == 0, "lebesgue exits 0");
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    check(header == "n,lebesgue_const,lebesgue_root,min_delta_root_over_cap,"
                    "max_delta_root_over_cap,norm_Ln_root",
          "lebesgue header is pinned");
    double lam = std::atof(csv_fields(row)[1].c_str());
    check(std::abs(lam - 1.25) < 1e-5,
          "Fekete triple on the segment has Lebesgue constant 1.25",
          std::to_string(lam));

    RunResult bad = run("lebesgue --set " + disk + " --n-list 0");
    check(bad.exit_code == 2, "n = 0 is rejected as a config error",
          std::to_string(bad.exit_code));
  }

  // --- approximate: disk eps target, certificate, determinism ----------------
  {
    RunResult r = run("approximate --set " + disk +
                      " --eps 0.5 --samples 300 --resolution 128");
    check(r.exit_code == 0, "approximate disk exits 0",
          std::to_string(r.exit_code) + " " + r.err);
    check(contains(r.out, "\"pass\": true"), "certificate passes");
    check(json_number(r.out, "eps") == 0.5, "eps echoed");
    double n = json_number(r.out, "n");
    double degree = json_number(r.out, "degree");
    check(n >= 1 && degree == n + 1, "degree n+1 echoed");
    bool found = false;
    json_number(r.out, "trap_radius", &found);
    check(found, "trap radius reported");

    RunResult again = run("approximate --set " + disk +
                          " --eps 0.5 --samples 300 --resolution 128");
    check(r.out == again.out, "approximate reruns byte-identical");
  }

  // --- approximate: segment goes through the level-curve path ----------------
  {
    RunResult r = run("approximate --set " + seg +
                      " --n 24 --samples 200 --resolution 96");
    check(r.exit_code == 0, "approximate segment exits 0",
          std::to_string(r.exit_code) + " " + r.err);
    check(contains(r.out, "level curve"), "segment notes the level curve");
    check(json_number(r.out, "s_prime") > 0.0, "s' recorded positive");
  }

  // --- approximate: offset disk is translated back ----------------------------
  {
    RunResult r = run("approximate --set " + offset +
                      " --n 12 --samples 200 --resolution 96");
    check(r.exit_code == 0, "approximate offset disk exits 0",
          std::to_string(r.exit_code) + " " + r.err);
    std::size_t p = r.out.find("\"translation\"");
    check(p != std::string::npos &&
              contains(r.out.substr(p, 60), "3.0"),
          "translation vector reported");
  }

  // --- config file overrides flags -------------------------------------------
  {
    std::string cfg = g_dir + "/override.cfg";
    spit(cfg, "# contract check\nn = 8\n");
    RunResult r = run("nodes --set " + disk + " --n 4 --config " + cfg);
    check(r.exit_code == 0 && count_lines(r.out) == 10,
          "config file overrides the --n flag",
          std::to_string(count_lines(r.out)));

    spit(cfg, "unknown_key = 1\n");
    RunResult bad = run("nodes --set " + disk + " --config " + cfg);
    check(bad.exit_code == 2, "unknown config key exits 2");
  }

  // --- rates ------------------------------------------------------------------
  {
    RunResult r = run("rates --set " + disk +
                      " --n-list 16 --resolution 96 --samples 60");
    check(r.exit_code == 0, "rates exits 0",
          std::to_string(r.exit_code) + " " + r.err);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    check(header == "n,s_n,gamma_measured,gamma_bound,chi_measured,chi_bound,"
                    "chi_nested,pass,note",
          "rates header is pinned");
    check(contains(row, ",true,"), "disk row passes");
  }

  // --- render: window expansion, raster shape, area --------------------------
  {
    std::string pgm = g_dir + "/julia.pgm";
    std::string gcsv = g_dir + "/green.csv";
    RunResult r = run("render --coeffs [0,0,1] --window -1.5,1.5,-1.5,1.5"
                      " --resolution 128 --out " + pgm +
                      " --green-csv " + gcsv);
    check(r.exit_code == 0, "render exits 0",
          std::to_string(r.exit_code) + " " + r.err);
    check(contains(r.err, "window expanded"), "expansion warned on stderr");
    std::string bytes = slurp(pgm);
    std::string want_header = "P5\n128 128\n255\n";
    check(bytes.size() == want_header.size() + 128 * 128 &&
              bytes.compare(0, want_header.size(), want_header) == 0,
          "PGM header and payload sized for 128x128");
    long bounded = 0; // white interior plus the gray band marking J(P)
    for (std::size_t i = want_header.size(); i < bytes.size(); ++i)
      if (static_cast<unsigned char>(bytes[i]) >= 128) ++bounded;
    double pix = 4.0 / 128.0; // window expanded to cover |z| <= 2
    double area = bounded * pix * pix;
    check(std::abs(area - M_PI) < 0.03 * M_PI,
          "filled set of z^2 has area pi", std::to_string(area));

    std::string green = slurp(gcsv);
    check(count_lines(green) == 128 * 128 + 1 &&
              green.compare(0, 10, "x,y,green\n") == 0,
          "green CSV covers every pixel center");
  }

  if (failures == 0) std::cout << "all contract checks passed\n";
  return failures == 0 ? 0 : 1;
}
