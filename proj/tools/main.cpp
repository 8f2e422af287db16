// lietor-cli: construction pipelines, property sweeps, and table export
// for twisted multiloop algebras, Lie tori, and their level-zero modules.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage/config error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lietor/config.hpp"
#include "lietor/verify.hpp"

using namespace lietor;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
  std::vector<std::string> configs;
  long window = -1;
  std::string phi;
  long seed = -1;
  std::string out_dir;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, int nconfigs = 1) {
  cmd->add_option("-c,--config", opts.configs, "session config JSON file")
      ->required()
      ->expected(nconfigs);
  cmd->add_option("--window", opts.window, "override the degree window bound");
  cmd->add_option("--phi", opts.phi, "override cocycle parameters, e.g. \"1,0\"");
  cmd->add_option("--seed", opts.seed, "override the sweep seed");
  cmd->add_option("--out", opts.out_dir, "output directory for JSON/TSV artifacts");
  cmd->add_flag("--timings", opts.timings,
                "record real elapsed_ms in reports (breaks byte-reproducibility)");
}

SessionConfig load_with_overrides(const std::string& path, const CommonOpts& opts) {
  SessionConfig cfg = load_session_config(path);
  if (opts.window > 0) cfg.window = opts.window;
  if (opts.seed >= 0) cfg.seed = (unsigned)opts.seed;
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.timings) cfg.timings = true;
  if (!opts.phi.empty()) {
    auto comma = opts.phi.find(',');
    require(comma != std::string::npos, Errc::ConfigError, "--phi expects \"a,b\"");
    cfg.phi_a = parse_cyc(opts.phi.substr(0, comma), cfg.conductor);
    cfg.phi_b = parse_cyc(opts.phi.substr(comma + 1), cfg.conductor);
  }
  return cfg;
}

SweepConfig sweep_config(const SessionConfig& cfg) {
  SweepConfig sc;
  sc.window = cfg.window;
  sc.phi_a = cfg.phi_a;
  sc.phi_b = cfg.phi_b;
  sc.samples = cfg.samples;
  sc.seed = cfg.seed;
  sc.timings = cfg.timings;
  return sc;
}

void write_file(const SessionConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out_dir.empty()) return;
  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / name, std::ios::binary);
  out << content;
}

int report_and_exit(const SessionConfig& cfg, const SweepReport& rep, const std::string& file) {
  for (const auto& c : rep.checks) {
    std::cout << (c.status == "pass" ? "PASS " : "FAIL ") << c.check << "\n";
    for (const auto& w : c.witnesses) std::cout << "      witness: " << w << "\n";
  }
  write_file(cfg, file, rep.to_json());
  return rep.pass() ? 0 : 1;
}

std::string weight_str(const WeightLabel& mu) {
  std::string out;
  for (size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + rat_str(mu[i]);
  return out;
}

int cmd_algebra_info(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  AlgebraPtr g = make_algebra(cfg);
  std::cout << g->roots().name() << ": dim " << g->dim() << ", " << g->npos()
            << " positive roots\n";
  DecPtr dec = make_dec(cfg);
  std::cout << "grading group of order " << dec->group.size() << ", eigenspace dims:";
  for (const auto& [cls, d] : dec->dims) {
    std::cout << " " << d;
  }
  std::cout << "\nrefined basis legend (class | weight | element):\n";
  nlohmann::ordered_json legend = nlohmann::json::array();
  for (size_t p = 0; p < dec->basis.size(); ++p) {
    const auto& be = dec->basis[p];
    std::string vec;
    for (size_t t = 0; t < be.vec.size(); ++t) {
      if (be.vec[t].is_zero()) continue;
      if (!vec.empty()) vec += " + ";
      vec += "(" + be.vec[t].str() + ")*" + g->basis_name((int)t);
    }
    Degree cls(std::vector<long>(be.kbar.begin(), be.kbar.end()));
    std::cout << "  x" << p + 1 << "  " << cls.str() << "  (" << weight_str(be.weight) << ")  "
              << vec << "\n";
    legend.push_back({{"name", "x" + std::to_string(p + 1)},
                      {"class", be.kbar},
                      {"weight", weight_str(be.weight)},
                      {"element", vec}});
  }
  write_file(cfg, "algebra.json", g->to_json());
  write_file(cfg, "basis.json", legend.dump(2));
  return 0;
}

int cmd_algebra_check(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  ToroidalAlgebra tor(dec, cfg.phi_a, cfg.phi_b);
  SweepReport rep = sweep_jacobi(tor, sweep_config(cfg));
  return report_and_exit(cfg, rep, "algebra_check.json");
}

int cmd_torus_check(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  SweepReport rep = sweep_lietorus(*dec, sweep_config(cfg));
  return report_and_exit(cfg, rep, "torus_check.json");
}

int cmd_module_build(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  RealizedModule m = make_module(cfg, dec);
  nlohmann::ordered_json j;
  j["dim_v1"] = m.v1().dim;
  j["dim_v2"] = m.v2().dim;
  j["components"] = nlohmann::json::array();
  for (size_t nu = 0; nu < m.v2().carrier.size(); ++nu) {
    std::string pt;
    for (size_t i = 0; i < m.v2().points[nu].size(); ++i)
      pt += (i ? "," : "") + m.v2().points[nu][i].str();
    j["components"].push_back({{"carrier", m.v2().orbit[m.v2().carrier[nu]]},
                               {"point", pt},
                               {"target", m.v2().orbit[m.v2().target[nu]]}});
  }
  j["graded_dims"] = nlohmann::json::array();
  for (const auto& [cls, vecs] : m.v2().graded)
    j["graded_dims"].push_back({{"class", cls}, {"dim", vecs.size()}});
  std::cout << "built V(psi, c, lambda, beta): dim V1 = " << m.v1().dim
            << ", dim V2 = " << m.v2().dim << "\n";
  for (const auto& [cls, vecs] : m.v2().graded) {
    Degree d(std::vector<long>(cls.begin(), cls.end()));
    std::cout << "  dim V2_" << d.str() << " = " << vecs.size() << "\n";
  }
  write_file(cfg, "module.json", j.dump(2));
  return 0;
}

int cmd_module_weights(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  RealizedModule m = make_module(cfg, dec);
  auto table = m.weight_table();
  std::string tsv = "# conductor " + std::to_string(dec->conductor) + "\n";
  tsv += "k\tweight\tdim\n";
  nlohmann::ordered_json rows = nlohmann::json::array();
  for (const auto& row : table) {
    tsv += row.k.str() + "\t" + weight_str(row.mu) + "\t" + std::to_string(row.dim) + "\n";
    rows.push_back({{"k", row.k.k}, {"weight", weight_str(row.mu)}, {"dim", row.dim}});
  }
  std::cout << tsv;
  write_file(cfg, "weights.tsv", tsv);
  write_file(cfg, "weights.json", rows.dump(2));
  return 0;
}

int cmd_module_hws(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  RealizedModule m = make_module(cfg, dec);
  auto hws = m.highest_weight_space();
  long maxm = *std::max_element(cfg.m.begin(), cfg.m.end());
  nlohmann::ordered_json j;
  j["exact"] = cfg.window >= maxm;
  j["blocks"] = nlohmann::json::array();
  for (const auto& blk : hws) {
    std::cout << "V+ at degree " << blk.k.str() << ": dim " << blk.dim << "\n";
    j["blocks"].push_back({{"k", blk.k.k}, {"dim", blk.dim}});
  }
  if (cfg.window < maxm)
    std::cout << "note: window < max m_i, kernels may be supersets near the boundary\n";
  write_file(cfg, "hws.json", j.dump(2));
  return 0;
}

int cmd_module_check(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  DecPtr dec = make_dec(cfg);
  RealizedModule m = make_module(cfg, dec);
  SweepReport rep = sweep_module(m, sweep_config(cfg));
  return report_and_exit(cfg, rep, "module_check.json");
}

int cmd_iso_check(const CommonOpts& opts) {
  SessionConfig c1 = load_with_overrides(opts.configs[0], opts);
  SessionConfig c2 = load_with_overrides(opts.configs[1], opts);
  require(c1.type == c2.type && c1.rank == c2.rank && c1.m == c2.m &&
              c1.automorphisms_json == c2.automorphisms_json,
          Errc::IncompatibleGradings, "the two configs describe different gradings");
  DecPtr dec = make_dec(c1);
  IsoVerdict v = iso_check(*dec, make_quadruple(c1), make_quadruple(c2));
  std::cout << "verdict: " << (v.isomorphic ? "isomorphic" : "not isomorphic") << " ("
            << v.certificate << ")\n";
  nlohmann::ordered_json j;
  j["isomorphic"] = v.isomorphic;
  j["certificate"] = v.certificate;
  write_file(c1, "iso.json", j.dump(2));
  return 0;
}

int cmd_intertwine(const CommonOpts& opts) {
  SessionConfig cfg = load_with_overrides(opts.configs[0], opts);
  require(cfg.pair.has_value(), Errc::ConfigError, "config has no 'pair' section");
  DecPtr dec = make_dec(cfg);
  const auto& p = *cfg.pair;
  EvalModule m1 = build_evaluation(dec, p.lambda, p.a);
  EvalModule m2 = build_evaluation(dec, p.mu, p.b);
  DegreeWindow w{cfg.window, dec->group.n()};
  auto T = find_intertwiner(m1, m2, w, cfg.seed);
  auto verdict = evaluation_isomorphic(*dec, p.lambda, p.a, p.mu, p.b);
  std::cout << "intertwiner: " << (T.has_value() ? "found" : "none") << "\n";
  std::cout << "predicate:   " << (verdict.isomorphic ? "isomorphic" : "not isomorphic") << " ("
            << verdict.reason << ")\n";
  nlohmann::ordered_json j;
  j["intertwiner_found"] = T.has_value();
  j["predicate"] = verdict.isomorphic;
  j["reason"] = verdict.reason;
  if (T.has_value()) {
    auto rows = nlohmann::json::array();
    for (const auto& r : *T) {
      auto row = nlohmann::json::array();
      for (const auto& v : r) row.push_back(v.str());
      rows.push_back(std::move(row));
    }
    j["T"] = std::move(rows);
  }
  write_file(cfg, "intertwiner.json", j.dump(2));
  if (T.has_value() != verdict.isomorphic) {
    std::cout << "MISMATCH between the solver and the predicate\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in twisted toroidal Lie algebras and their modules"};
  app.require_subcommand(1);

  CommonOpts o_ainfo, o_acheck, o_torus, o_mbuild, o_mweights, o_mhws, o_mcheck, o_iso,
      o_inter;

  CLI::App* algebra = app.add_subcommand("algebra", "algebra construction and invariants");
  algebra->require_subcommand(1);
  add_common(algebra->add_subcommand("info", "dimensions, roots, refined basis legend"),
             o_ainfo);
  add_common(algebra->add_subcommand("check", "antisymmetry and Jacobi sweep"), o_acheck);

  CLI::App* torus = app.add_subcommand("torus", "Lie torus gate");
  torus->require_subcommand(1);
  add_common(torus->add_subcommand("check", "conditions (1), (M), LT3, LT4"), o_torus);

  CLI::App* module = app.add_subcommand("module", "level-zero module pipelines");
  module->require_subcommand(1);
  add_common(module->add_subcommand("build", "construct V(psi,c,lambda,beta)"), o_mbuild);
  add_common(module->add_subcommand("weights", "weight table as TSV/JSON"), o_mweights);
  add_common(module->add_subcommand("hws", "highest weight space per degree"), o_mhws);
  add_common(module->add_subcommand("check", "module-axiom and invariant sweep"), o_mcheck);

  CLI::App* iso = app.add_subcommand("iso", "isomorphism classes");
  iso->require_subcommand(1);
  add_common(iso->add_subcommand("check", "compare two parameter quadruples"), o_iso, 2);

  add_common(app.add_subcommand("intertwine", "solve for an evaluation-module intertwiner"),
             o_inter);

  CLI11_PARSE(app, argc, argv);

  try {
    if (algebra->got_subcommand("info")) return cmd_algebra_info(o_ainfo);
    if (algebra->got_subcommand("check")) return cmd_algebra_check(o_acheck);
    if (torus->got_subcommand("check")) return cmd_torus_check(o_torus);
    if (module->got_subcommand("build")) return cmd_module_build(o_mbuild);
    if (module->got_subcommand("weights")) return cmd_module_weights(o_mweights);
    if (module->got_subcommand("hws")) return cmd_module_hws(o_mhws);
    if (module->got_subcommand("check")) return cmd_module_check(o_mcheck);
    if (iso->got_subcommand("check")) return cmd_iso_check(o_iso);
    if (app.got_subcommand("intertwine")) return cmd_intertwine(o_inter);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
