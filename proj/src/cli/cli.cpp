// Copyright 2026 The planturan Authors
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

#include "planturan/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "planturan/construct.hpp"
#include "planturan/discharge.hpp"
#include "planturan/error.hpp"
#include "planturan/fixtures.hpp"
#include "planturan/io.hpp"
#include "planturan/search.hpp"
#include "planturan/theta.hpp"

#ifndef PLANTURAN_VERSION
#define PLANTURAN_VERSION "0.0.0"
#endif
#ifndef PLANTURAN_BUILD_ID
#define PLANTURAN_BUILD_ID "unknown"
#endif

namespace planturan::cli {
namespace {

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family;
  std::string variant;
  std::string input;
  std::string output;
  std::string tk;
  std::string format = "json";
  std::optional<int> k, levels, n;
  int jobs = 0;
  std::optional<int> budget;
  bool sweep = false;
  int random = 0;
  uint64_t seed = 1;
};

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  f << bytes;
}

PlanarEmbedding load_embedding(const std::string& path) {
  if (path.size() > 8 && path.substr(path.size() - 8) == ".graphml") return from_graphml(read_text_file(path));
  return embedding_of(read_graph_file(path));
}

Json face_histogram(const PlanarEmbedding& g) {
  std::map<int, int> sizes;
  for (const Face& f : g.faces()) ++sizes[f.size()];
  Json j = Json::object();
  for (auto [s, c] : sizes) j[std::to_string(s)] = c;
  return j;
}

Json names_of(const Graph& g, const std::vector<int>& vs) {
  Json j = Json::array();
  for (int v : vs) j.push_back(g.name(v));
  return j;
}

Json witness_json(const Graph& g, const ThetaWitness& w) {
  return {{"cycle", names_of(g, w.cycle)},
          {"chord", {g.name(w.chord.first), g.name(w.chord.second)}},
          {"variant", w.variant}};
}

int cmd_build(const Config& c, std::ostream& out) {
  static const std::vector<std::string> families = {"extremal", "counterexample13", "fig7", "fig8a",
                                                    "fig8b",    "fig8c",            "pentagonal"};
  if (std::find(families.begin(), families.end(), c.family) == families.end()) {
    throw UsageError("unknown build family '" + c.family + "'");
  }
  if (c.family != "extremal" && (c.k || !c.tk.empty())) throw UsageError("--k/--tk apply to --family extremal only");
  if (c.family != "pentagonal" && c.levels) throw UsageError("--levels applies to --family pentagonal only");
  PlanarEmbedding g;
  Json summary{{"family", c.family}};
  if (c.family == "extremal") {
    TkInstance t;
    if (!c.tk.empty()) {
      t = parse_tk(Json::parse(read_text_file(c.tk)));
    } else {
      if (c.k.value_or(15) != 15) {
        throw UsageError("no built-in T_k for k=" + std::to_string(*c.k) + "; supply one with --tk");
      }
      t = builtin_T15();
    }
    if (c.k && *c.k != t.k()) throw UsageError("--k disagrees with the supplied T_k");
    ConstructionTrace tr;
    g = build_extremal(t, &tr);
    summary["trace"] = {{"k", tr.k},
                        {"subdivision_count", tr.subdivision_count},
                        {"holder_count", tr.holder_count},
                        {"snowflake_count", tr.snowflake_count},
                        {"n", tr.n},
                        {"e", tr.e},
                        {"identities_hold", tr.identities_hold()}};
  } else if (c.family == "counterexample13") {
    g = builtin_counterexample_13();
  } else if (c.family == "pentagonal") {
    const int levels = c.levels.value_or(1);
    if (levels < 1) throw UsageError("--levels must be at least 1");
    PentagonalStats st;
    g = build_theta61_pentagonal(levels, &st);
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", static_cast<double>(st.e) / st.n);
    summary["levels"] = levels;
    summary["k5_count"] = st.k5_count;
    summary["e_over_n"] = Rational(st.e, st.n).str();
    summary["e_over_n_decimal"] = ratio;
    summary["reference_slope"] = "45/17";
  } else {
    g = builtin_small_structures().at(c.family);
  }
  summary["n"] = g.num_vertices();
  summary["e"] = g.num_edges();
  summary["faces"] = face_histogram(g);
  const std::string doc = dump_json(embedding_to_json(g));
  if (c.output.empty() || c.output == "-") {
    out << doc;
  } else {
    write_output(c.output, doc, out);
    out << dump_json(summary);
  }
  return kOk;
}

int cmd_check(const Config& c, std::ostream& out) {
  Family f = Family::parse(c.family);
  if (!c.variant.empty()) {
    if (f.kind != Family::Kind::kTheta || f.k != 6 || f.variant) throw UsageError("--variant needs --family theta6");
    if (c.variant == "sym") {
      f.variant = 3;
    } else if (c.variant == "asym") {
      f.variant = 2;
    } else {
      throw UsageError("--variant must be sym or asym");
    }
  }
  const Graph g = read_graph_file(c.input).graph;
  Json j{{"family", f.name()}, {"n", g.num_vertices()}, {"e", g.num_edges()}};
  if (f.kind == Family::Kind::kCycle) {
    auto cyc = find_cycle(g, f.k);
    j["free"] = !cyc.has_value();
    if (cyc) j["witness"] = {{"cycle", names_of(g, *cyc)}};
  } else {
    auto w = find_theta(g, f.k, f.variant);
    j["free"] = !w.has_value();
    if (w) j["witness"] = witness_json(g, *w);
  }
  out << dump_json(j);
  return j["free"].get<bool>() ? kOk : kPropertyFails;
}

int cmd_decompose(const Config& c, std::ostream& out) {
  const PlanarEmbedding g = load_embedding(c.input);
  out << dump_json(decomposition_to_json(g, decompose(g)));
  return kOk;
}

int cmd_audit(const Config& c, std::ostream& out) {
  const PlanarEmbedding g = load_embedding(c.input);
  try {
    ChargeReport r = audit(g);
    out << dump_json(charge_report_to_json(g, decompose(g), r));
    return r.passed() ? kOk : kPropertyFails;
  } catch (const HypothesisViolated& e) {
    out << dump_json({{"hypothesis", "violated"}, {"reason", reason_name(e.reason())}});
  } catch (const ThetaFound& e) {
    out << dump_json({{"hypothesis", "violated"}, {"reason", "thetaFound"}, {"witness", witness_json(g.graph(), e.witness())}});
  } catch (const SharedBadBlock& e) {
    out << dump_json({{"error", "SharedBadBlock"},
                      {"bad_block", e.bad_block()},
                      {"claimed_by", {e.first(), e.second()}}});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnknownBlockShape) throw;
    out << dump_json({{"error", "UnknownBlockShape"}, {"message", e.what()}});
  }
  return kPropertyFails;
}

int cmd_search(const Config& c, std::ostream& out) {
  const Family f = Family::parse(c.family);
  SearchOptions opts;
  opts.jobs = c.jobs;
  if (c.budget) opts.budget = std::chrono::seconds(*c.budget);
  const SearchCertificate cert = ex_planar(*c.n, f, opts);
  if (!c.output.empty()) write_output(c.output, dump_json(certificate_to_json(cert)), out);
  Json s{{"n", cert.n}, {"family", f.name()}, {"scope", "connected"}, {"max_edges", cert.max_edges}};
  s["witnesses"] = Json::array();
  for (const auto& w : cert.witnesses) s["witnesses"].push_back(code_to_hex(canonical_code(w)));
  if (auto two = cert.max_edges_2_connected()) {
    s["max_edges_2_connected"] = *two;
  } else {
    s["max_edges_2_connected"] = nullptr;
  }
  bool ok = true;
  s["bounds"] = Json::array();
  if (f.kind == Family::Kind::kTheta && f.k == 6 && !f.variant) {
    for (const auto& row : check_bound_table({cert}).rows) {
      ok = ok && row.ok();
      s["bounds"].push_back({{"name", row.name},
                             {"scope", row.scope},
                             {"bound", row.bound},
                             {"observed", row.observed},
                             {"ok", row.ok()},
                             {"witness", row.witness}});
    }
    s["degree_two_claims"] = Json::array();
    for (const auto& row : verify_degree_two_claims(cert.n, c.jobs)) {
      ok = ok && row.violations == 0;
      s["degree_two_claims"].push_back({{"hypothesis", row.hypothesis},
                                        {"matching", row.matching},
                                        {"violations", row.violations},
                                        {"witness", row.witness}});
    }
  }
  s["bounds_ok"] = ok;
  if (c.sweep) {
    SweepOptions so;
    so.random_samples = c.random;
    so.seed = c.seed;
    so.jobs = c.jobs;
    const SweepReport r = sweep(cert.n, f, so);
    s["sweep"] = sweep_to_json(r);
    ok = ok && r.ok();
  }
  out << dump_json(s);
  return ok ? kOk : kPropertyFails;
}

int cmd_verify(const Config& c, std::ostream& out) {
  Json cert;
  try {
    cert = Json::parse(read_text_file(c.input));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  VerifyReport r = verify_certificate(cert, c.jobs);
  out << dump_json({{"ok", r.ok}, {"problems", r.problems}});
  return r.ok ? kOk : kPropertyFails;
}

int cmd_export(const Config& c, std::ostream& out) {
  const PlanarEmbedding g = load_embedding(c.input);
  write_output(c.output, export_graph(g, c.format), out);
  return kOk;
}

}  // namespace

std::string version_string() {
  Json j{{"name", "planturan"}, {"version", PLANTURAN_VERSION}, {"build", PLANTURAN_BUILD_ID}};
  j["fixtures"] = Json::object();
  for (const auto& name : fixture_names()) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(fixture(name))));
    j["fixtures"][name] = std::string("fnv1a64:") + hex;
  }
  return dump_json(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar Turan toolkit for Theta graphs", "planturan"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print build identifier and fixture checksums");
  Config c;

  auto* build = app.add_subcommand("build", "Build a named construction");
  build->add_option("--family", c.family, "extremal|counterexample13|fig7|fig8a|fig8b|fig8c|pentagonal")->required();
  build->add_option("--k", c.k, "Order of the triangulation T_k (extremal)");
  build->add_option("--tk", c.tk, "T_k instance file with special_edges (extremal)")->check(CLI::ExistingFile);
  build->add_option("--levels", c.levels, "Nesting depth (pentagonal)");
  build->add_option("-o,--output", c.output, "Output graph file");

  auto* check = app.add_subcommand("check", "Search a graph for a forbidden subgraph");
  check->add_option("--family", c.family, "theta6, theta6-sym, c6, theta7, ...")->required();
  check->add_option("--variant", c.variant, "sym or asym (theta6 only)");
  check->add_option("graph", c.input, "Graph file")->required()->check(CLI::ExistingFile);

  auto* decomp = app.add_subcommand("decompose", "Triangular-block decomposition");
  decomp->add_option("graph", c.input, "Graph file")->required()->check(CLI::ExistingFile);

  auto* aud = app.add_subcommand("audit", "Exact discharging audit");
  aud->add_option("graph", c.input, "Graph file")->required()->check(CLI::ExistingFile);

  auto* search = app.add_subcommand("search", "Exhaustive extremal search for small n");
  search->add_option("--n", c.n, "Number of vertices (1..8)")->required();
  search->add_option("--family", c.family, "Forbidden family")->required();
  search->add_option("--jobs", c.jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  search->add_option("--budget", c.budget, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
  search->add_option("-o,--output", c.output, "Certificate file");
  search->add_flag("--sweep", c.sweep, "Audit hosts, block sizes and detector oracle over the enumeration");
  search->add_option("--random", c.random, "Extra random graphs for the detector oracle (with --sweep)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--seed", c.seed, "Seed for --random");

  auto* verify = app.add_subcommand("verify", "Re-check a search certificate");
  verify->add_option("certificate", c.input, "Certificate file")->required()->check(CLI::ExistingFile);
  verify->add_option("--jobs", c.jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);

  auto* exp = app.add_subcommand("export", "Convert a graph to json, dot or graphml");
  exp->add_option("graph", c.input, "Graph file")->required()->check(CLI::ExistingFile);
  exp->add_option("--format", c.format, "json|dot|graphml");
  exp->add_option("-o,--output", c.output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "planturan: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (version) {
      out << version_string();
      return kOk;
    }
    if (build->parsed()) return cmd_build(c, out);
    if (check->parsed()) return cmd_check(c, out);
    if (decomp->parsed()) return cmd_decompose(c, out);
    if (aud->parsed()) return cmd_audit(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (exp->parsed()) return cmd_export(c, out);
    err << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "planturan: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "planturan: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "planturan: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace planturan::cli
