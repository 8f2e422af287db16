#pragma once

#include "lietor/realized.hpp"

namespace lietor {

struct SweepConfig {
  long window = 2;
  Cyc phi_a = Cyc(0), phi_b = Cyc(0);
  long samples = 100;           // integrability samples
  unsigned seed = 1;            // drives every sampled subset
  int parallelism = 1;
  long exhaustive_cap = 1000000;  // sample above this many triples
  bool timings = false;         // real elapsed_ms in reports (breaks byte-reproducibility)
};

struct SweepReport {
  struct Check {
    std::string check;
    std::string status;  // "pass" | "fail"
    std::vector<std::string> witnesses;
    long elapsed_ms = 0;
  };
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status != "pass") return false;
    return true;
  }
  std::string to_json() const;  // stable field order; deterministic given the config
};

// Antisymmetry and Jacobi on all admissible window basis triples of the
// toroidal algebra (pairwise and triple degree sums inside the window).
SweepReport sweep_jacobi(const ToroidalAlgebra& tor, const SweepConfig& cfg);

// The Lie torus gate plus window centre triviality, as a report.
SweepReport sweep_lietorus(const EigenspaceDecomposition& dec, const SweepConfig& cfg);

// Module-axiom sweep over all window generator pairs and spanning
// vectors, the level-zero check, Weyl invariance of the weight table and
// seeded integrability samples.
SweepReport sweep_module(const RealizedModule& m, const SweepConfig& cfg);

// tau^_0 module-axiom sweep for L(beta, V1): derivation pairs plus the
// loop generators of the h0-centralizer (acting as zero).
SweepReport sweep_lbeta(const LBetaModule& m, const ToroidalAlgebra& tor,
                        const SweepConfig& cfg);

}  // namespace lietor
