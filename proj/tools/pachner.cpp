// Copyright 2026 The Pachner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pachner/canonical.hpp"
#include "pachner/certificate.hpp"
#include "pachner/classify.hpp"
#include "pachner/errors.hpp"
#include "pachner/flag_path.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"
#include "pachner/stacked_path.hpp"
#include "pachner/tree_shape.hpp"

using namespace pachner;

namespace {

constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kVerification = 4;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_sink(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

SphereClass class_arg(const std::string& s) {
  try {
    return parse_class(s);
  } catch (const ParseError&) {
    throw UsageFailure("unknown class '" + s + "'");
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Triangulation sphere_arg(const std::string& s) { return Triangulation::parse(trim(s)); }

nlohmann::json classify_json(const Triangulation& t) {
  nlohmann::json j;
  j["signature"] = signature(t).text;
  j["n"] = t.vertex_count();
  j["flag"] = is_flag(t);
  j["stacked"] = is_stacked(t);
  j["stacked0"] = is_stacked0(t);
  j["hamiltonian"] = is_hamiltonian(t);
  j["gamma"] = is_gamma(t);
  j["a_n"] = is_an(t);
  j["primitive_components"] = primitive_signatures(t).size();
  j["degrees"] = t.degree_sequence();
  return j;
}

void check_n(int n, const ExploreOptions& opt) {
  if (n < 4) throw UsageFailure("--n must be at least 4");
  if (n > opt.max_n)
    throw UsageFailure("--n " + std::to_string(n) + " exceeds the size cap " +
                       std::to_string(opt.max_n) + " (set PACHNER_MAX_N)");
}

std::string table_row(int n, std::size_t count, const ComponentReport& r) {
  std::string row = std::to_string(n) + " " + std::to_string(count) + " " +
                    std::to_string(r.component_sizes.size()) + " ";
  for (std::size_t i = 0; i < r.component_sizes.size(); ++i) {
    if (i) row += ",";
    row += std::to_string(r.component_sizes[i]);
  }
  return row + "\n";
}

void emit_certificate(const Certificate& c, bool verify, const std::string& out) {
  if (verify) {
    const auto rep = verify_certificate(c, default_predicates());
    if (!rep.ok) throw VerifyFailure("certificate failed: " + rep.reason);
    std::cerr << "verified " << c.moves.size() << " flips\n";
  }
  write_sink(out, to_json(c).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip graphs of triangulated 2-spheres"};
  app.require_subcommand(1);
  ExploreOptions opt;
  opt.max_n = size_cap_from_env();
  app.add_option("--threads", opt.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  int n = 0;
  std::string cls = "all", json_out, dot_out, out, sig, file, cert_file, klee_sig;
  bool verify = false;

  auto* gen = app.add_subcommand("gen", "List the spheres of a class");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--class", cls, "all|flag|stacked|hamiltonian|stacked0");
  gen->add_option("--out", out, "Output file");

  auto* comp = app.add_subcommand("components", "Components of a level graph");
  comp->add_option("--n", n, "Vertex count")->required();
  comp->add_option("--class", cls, "Sphere class");
  comp->add_option("--json", json_out, "JSON output file");

  auto* cla = app.add_subcommand("classify", "Class memberships of spheres");
  auto* sig_opt = cla->add_option("--sig", sig, "Sphere text");
  auto* file_opt = cla->add_option("--file", file, "File of spheres, one per line");
  sig_opt->excludes(file_opt);
  cla->require_option(1);

  auto* fg = app.add_subcommand("flip-graph", "DOT export of a level graph");
  fg->add_option("--n", n, "Vertex count")->required();
  fg->add_option("--class", cls, "Sphere class");
  fg->add_option("--dot", dot_out, "DOT output file");

  auto* pf = app.add_subcommand("path-flag", "Flag-preserving flips to A_n");
  pf->add_option("--from", sig, "Sphere text")->required();
  pf->add_flag("--verify", verify, "Replay the certificate");
  pf->add_option("--out", out, "Certificate file");

  auto* ps = app.add_subcommand("path-stacked", "Stacked-preserving flips to the boundary of Delta_n");
  ps->add_option("--from", sig, "Sphere text")->required();
  ps->add_flag("--verify", verify, "Replay the certificate");
  ps->add_option("--out", out, "Certificate file");

  auto* ver = app.add_subcommand("verify", "Replay a certificate");
  ver->add_option("--cert", cert_file, "Certificate JSON file")->required();

  auto* sp = app.add_subcommand("special", "Named spheres");
  int g_n = 0, a_n = 0, d_n = 0, iso_m = 0;
  auto* o1 = sp->add_option("--gamma", g_n, "Double cone on N vertices");
  auto* o2 = sp->add_option("--an", a_n, "A_N");
  auto* o3 = sp->add_option("--delta", d_n, "Boundary of Delta_N");
  auto* o4 = sp->add_option("--klee", klee_sig, "Stellar subdivision of every triangle");
  auto* o5 = sp->add_option("--isolated", iso_m, "Isolated stacked spheres from M-node trees");
  for (auto* a : {o1, o2, o3, o4, o5})
    for (auto* b : {o1, o2, o3, o4, o5})
      if (a != b) a->excludes(b);
  sp->require_option(1);

  auto* tab = app.add_subcommand("table", "Stacked sphere counts and component sizes");
  int max_n = 0;
  tab->add_option("--max-n", max_n, "Largest n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*gen) {
      check_n(n, opt);
      const SphereClass c = class_arg(cls);
      write_sink(out, enumeration_text(n, c, enumerate_class(n, c, opt)));
    } else if (*comp) {
      check_n(n, opt);
      const SphereClass c = class_arg(cls);
      const auto rep = components(build_level_graph(n, c, opt));
      if (json_out.empty())
        std::cout << to_json(rep).dump(2) << "\n";
      else
        export_json(rep, json_out);
    } else if (*cla) {
      if (!sig.empty()) {
        std::cout << classify_json(sphere_arg(sig)).dump() << "\n";
      } else {
        std::istringstream in(read_file(file));
        std::string line;
        while (std::getline(in, line)) {
          line = trim(line);
          if (line.empty() || line[0] == '#') continue;
          std::cout << classify_json(sphere_arg(line)).dump() << "\n";
        }
      }
    } else if (*fg) {
      check_n(n, opt);
      const auto g = build_level_graph(n, class_arg(cls), opt);
      write_sink(dot_out, to_dot(g));
    } else if (*pf) {
      emit_certificate(to_canonical_an(sphere_arg(sig)), verify, out);
    } else if (*ps) {
      emit_certificate(stacked_canonical_path(sphere_arg(sig)), verify, out);
    } else if (*ver) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(cert_file));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate is not JSON: ") + e.what());
      }
      const auto rep = verify_certificate(certificate_from_json(j), default_predicates());
      if (!rep.ok) throw VerifyFailure(rep.reason);
      std::cout << "ok\n";
    } else if (*sp) {
      if (*o1) std::cout << signature(gamma(g_n)).text << "\n";
      if (*o2) std::cout << signature(a_sphere(a_n)).text << "\n";
      if (*o3) std::cout << signature(delta_sphere(d_n)).text << "\n";
      if (*o4) std::cout << signature(klee(sphere_arg(klee_sig))).text << "\n";
      if (*o5) {
        if (iso_m < 1) throw UsageFailure("--isolated needs M >= 1");
        for (const auto& h : enumerate_deg4_trees(iso_m))
          std::cout << signature(build_isolated_sphere(h)).text << "\n";
      }
    } else if (*tab) {
      check_n(max_n, opt);
      const auto levels = enumerate_stacked_levels(max_n, opt);
      for (int k = 4; k <= max_n; ++k) {
        const auto g = build_level_graph(k, SphereClass::Stacked, levels[k], opt);
        std::cout << table_row(k, levels[k].size(), components(g)) << std::flush;
      }
    }
  } catch (const UsageFailure& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const BadSize& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimit& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const VerifyFailure& e) {
    std::cerr << "verification: " << e.what() << "\n";
    return kVerification;
  } catch (const ReplayError& e) {
    std::cerr << "verification: " << e.what() << "\n";
    return kVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return 0;
}
