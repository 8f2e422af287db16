#pragma once

#include <optional>
#include <string>

#include "lietor/iso.hpp"
#include "lietor/realized.hpp"

namespace lietor {

// One JSON config drives a whole session: the algebra, the automorphism
// tuple, the cocycle, the window, and (optionally) a module quadruple.
// A single "conductor" field governs the scalar field: bare "z" literals
// default to it, and it is raised to lcm(conductor, m_1, ..., m_n).
struct SessionConfig {
  long conductor = 1;
  char type = 'A';
  int rank = 1;
  std::vector<long> m;
  // composed automorphism specs, one per variable (raw JSON kept as text)
  std::string automorphisms_json;
  Cyc phi_a = Cyc(0), phi_b = Cyc(0);
  long window = 2;
  unsigned seed = 1;
  long samples = 100;
  bool timings = false;
  std::string out_dir;

  struct ModuleSpec {
    WeightVec psi;
    Cyc c = Cyc(0);
    WeightVec lambda;
    std::vector<Cyc> beta;
    std::vector<int> multiplicities;            // empty = all ones
    std::vector<Cyc> base_point;                // empty = all ones
    std::vector<std::vector<Cyc>> points;       // empty = "auto"
  };
  std::optional<ModuleSpec> module;

  struct PairSpec {
    WeightVec lambda;
    std::vector<Cyc> a;
    WeightVec mu;
    std::vector<Cyc> b;
  };
  std::optional<PairSpec> pair;
};

SessionConfig parse_session_config_text(const std::string& json_text);
SessionConfig load_session_config(const std::string& path);

AlgebraPtr make_algebra(const SessionConfig& cfg);
std::vector<FiniteOrderAut> make_automorphisms(const SessionConfig& cfg, AlgebraPtr g);
DecPtr make_dec(const SessionConfig& cfg);
RealizedModule make_module(const SessionConfig& cfg, DecPtr dec);
Quadruple make_quadruple(const SessionConfig& cfg);

}  // namespace lietor
