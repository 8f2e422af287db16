#include "lietor/config.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>

#include "lietor/error.hpp"

namespace lietor {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  raise(Errc::ConfigError, "field '" + field + "': " + why);
}

long get_long(const json& j, const std::string& field, long dflt, bool required = false) {
  if (!j.contains(field)) {
    if (required) bad(field, "missing");
    return dflt;
  }
  if (!j[field].is_number_integer()) bad(field, "expected an integer");
  return j[field].get<long>();
}

Cyc get_cyc(const json& v, const std::string& field, long conductor) {
  try {
    if (v.is_number_integer()) return Cyc(v.get<long>());
    if (v.is_string()) return parse_cyc(v.get<std::string>(), conductor);
  } catch (const Error& e) {
    bad(field, e.what());
  }
  bad(field, "expected a scalar literal string or integer");
}

std::vector<Cyc> get_cyc_vec(const json& v, const std::string& field, long conductor,
                             size_t want) {
  if (!v.is_array()) bad(field, "expected an array of scalars");
  std::vector<Cyc> out;
  for (const auto& e : v) out.push_back(get_cyc(e, field, conductor));
  if (want && out.size() != want)
    bad(field, "expected " + std::to_string(want) + " entries, got " +
                   std::to_string(out.size()));
  return out;
}

WeightVec get_weight(const json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array of non-negative integers");
  WeightVec out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(field, "expected integers");
    out.push_back(e.get<long>());
  }
  return out;
}

}  // namespace

SessionConfig parse_session_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(Errc::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  SessionConfig cfg;
  if (!j.contains("algebra") || !j["algebra"].is_object()) bad("algebra", "missing object");
  {
    const auto& a = j["algebra"];
    if (!a.contains("type") || !a["type"].is_string() || a["type"].get<std::string>().size() != 1)
      bad("algebra.type", "expected a single letter A..G");
    cfg.type = a["type"].get<std::string>()[0];
    cfg.rank = (int)get_long(a, "rank", 0, true);
  }
  if (!j.contains("m") || !j["m"].is_array() || j["m"].empty())
    bad("m", "expected a non-empty array of positive integers");
  for (const auto& e : j["m"]) {
    if (!e.is_number_integer() || e.get<long>() < 1) bad("m", "orders must be positive");
    cfg.m.push_back(e.get<long>());
  }
  cfg.conductor = get_long(j, "conductor", 1);
  if (cfg.conductor < 1) bad("conductor", "must be positive");
  for (long v : cfg.m) cfg.conductor = std::lcm(cfg.conductor, v);

  if (!j.contains("automorphisms") || !j["automorphisms"].is_array() ||
      j["automorphisms"].size() != cfg.m.size())
    bad("automorphisms", "expected one composed spec per entry of m");
  cfg.automorphisms_json = j["automorphisms"].dump();

  if (j.contains("phi")) {
    auto p = get_cyc_vec(j["phi"], "phi", cfg.conductor, 2);
    cfg.phi_a = p[0];
    cfg.phi_b = p[1];
  }
  cfg.window = get_long(j, "window", 2);
  if (cfg.window < 1) bad("window", "must be >= 1");
  cfg.seed = (unsigned)get_long(j, "seed", 1);
  cfg.samples = get_long(j, "samples", 100);
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("timings")) cfg.timings = j["timings"].get<bool>();

  if (j.contains("module")) {
    const auto& m = j["module"];
    SessionConfig::ModuleSpec ms;
    if (m.contains("psi")) ms.psi = get_weight(m["psi"], "module.psi");
    if (m.contains("c")) ms.c = get_cyc(m["c"], "module.c", cfg.conductor);
    if (!m.contains("lambda")) bad("module.lambda", "missing");
    ms.lambda = get_weight(m["lambda"], "module.lambda");
    bool lambda_zero = true;
    for (long v : ms.lambda) lambda_zero = lambda_zero && v == 0;
    if (lambda_zero)
      raise(Errc::ZeroLambda, "module.lambda: lambda in P_g^+ \\ {0} required");
    if (m.contains("beta"))
      ms.beta = get_cyc_vec(m["beta"], "module.beta", cfg.conductor, cfg.m.size());
    if (m.contains("multiplicities")) {
      for (const auto& e : m["multiplicities"]) {
        if (!e.is_number_integer() || e.get<long>() < 0)
          bad("module.multiplicities", "expected non-negative integers");
        ms.multiplicities.push_back((int)e.get<long>());
      }
    }
    if (m.contains("base_point"))
      ms.base_point = get_cyc_vec(m["base_point"], "module.base_point", cfg.conductor,
                                  cfg.m.size());
    if (m.contains("points") && !(m["points"].is_string() && m["points"] == "auto")) {
      if (!m["points"].is_array()) bad("module.points", "expected \"auto\" or an array");
      for (const auto& e : m["points"])
        ms.points.push_back(get_cyc_vec(e, "module.points", cfg.conductor, cfg.m.size()));
    }
    cfg.module = std::move(ms);
  }

  if (j.contains("pair")) {
    const auto& p = j["pair"];
    SessionConfig::PairSpec ps;
    ps.lambda = get_weight(p.at("lambda"), "pair.lambda");
    ps.mu = get_weight(p.at("mu"), "pair.mu");
    ps.a = get_cyc_vec(p.at("a"), "pair.a", cfg.conductor, cfg.m.size());
    ps.b = get_cyc_vec(p.at("b"), "pair.b", cfg.conductor, cfg.m.size());
    cfg.pair = std::move(ps);
  }
  return cfg;
}

SessionConfig load_session_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ConfigError, "cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_session_config_text(text);
}

AlgebraPtr make_algebra(const SessionConfig& cfg) {
  return std::make_shared<ChevalleyAlgebra>(build_root_system(cfg.type, cfg.rank));
}

std::vector<FiniteOrderAut> make_automorphisms(const SessionConfig& cfg, AlgebraPtr g) {
  json specs = json::parse(cfg.automorphisms_json);
  std::vector<FiniteOrderAut> out;
  for (const auto& spec : specs) {
    if (!spec.is_object()) bad("automorphisms", "entries must be objects");
    std::optional<FiniteOrderAut> aut;
    auto push = [&](FiniteOrderAut a) {
      if (!aut) {
        aut = std::move(a);
      } else {
        // left-to-right: diagram applies first, then character, then matrix
        aut = compose(a, *aut);
      }
    };
    if (spec.contains("diagram")) {
      std::vector<int> pi;
      for (const auto& e : spec["diagram"]) {
        if (!e.is_number_integer()) bad("automorphisms.diagram", "expected 1-based indices");
        pi.push_back((int)e.get<long>() - 1);
      }
      push(make_diagram_aut(g, pi));
    }
    if (spec.contains("character")) {
      std::vector<Cyc> chi(g->rank(), Cyc(1));
      for (const auto& [key, val] : spec["character"].items()) {
        if (key.rfind("alpha_", 0) != 0) bad("automorphisms.character", "keys are alpha_<i>");
        int idx = std::stoi(key.substr(6)) - 1;
        if (idx < 0 || idx >= g->rank()) bad("automorphisms.character", "index out of range");
        chi[idx] = get_cyc(val, "automorphisms.character", cfg.conductor);
      }
      push(make_torus_aut(g, chi));
    }
    if (spec.contains("matrix")) {
      Mat<Cyc> m;
      for (const auto& row : spec["matrix"]) {
        Vec<Cyc> r;
        for (const auto& e : row) r.push_back(get_cyc(e, "automorphisms.matrix", cfg.conductor));
        m.push_back(std::move(r));
      }
      push(make_matrix_aut(g, std::move(m)));
    }
    if (!aut) push(make_diagram_aut(g, [&] {
      std::vector<int> id(g->rank());
      std::iota(id.begin(), id.end(), 0);
      return id;
    }()));
    out.push_back(std::move(*aut));
  }
  return out;
}

DecPtr make_dec(const SessionConfig& cfg) {
  AlgebraPtr g = make_algebra(cfg);
  return eigenspace_decompose(g, make_automorphisms(cfg, g), cfg.m);
}

RealizedModule make_module(const SessionConfig& cfg, DecPtr dec) {
  require(cfg.module.has_value(), Errc::ConfigError, "config has no 'module' section");
  const auto& ms = *cfg.module;
  std::vector<Cyc> beta = ms.beta;
  if (beta.empty()) beta.assign(cfg.m.size(), Cyc(0));
  DegreeWindow w{cfg.window, (int)cfg.m.size()};
  return build_realized(dec, ms.psi, ms.c, ms.lambda, beta, w, ms.multiplicities,
                        ms.base_point, ms.points);
}

Quadruple make_quadruple(const SessionConfig& cfg) {
  require(cfg.module.has_value(), Errc::ConfigError, "config has no 'module' section");
  const auto& ms = *cfg.module;
  std::vector<Cyc> beta = ms.beta;
  if (beta.empty()) beta.assign(cfg.m.size(), Cyc(0));
  return Quadruple{ms.psi, ms.c, ms.lambda, beta};
}

}  // namespace lietor
