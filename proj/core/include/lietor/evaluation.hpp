#pragma once

#include "lietor/toroidal.hpp"

namespace lietor {

// Evaluation module ev_a V(lambda) over the multiloop algebra:
// (x t^k) . v = a^k (x . v) for x in g_kbar.
struct EvalModule {
  DecPtr dec;
  WeightVec lambda;
  std::vector<Cyc> a;
  int dim = 0;
  std::vector<Mat<Cyc>> rho;  // matrix of each refined basis element (untwisted)

  // a^k for an integer degree vector
  Cyc point_power(const Degree& k) const;
  // action matrix of (refined basis p) tensor t^k
  Mat<Cyc> act(int p, const Degree& k) const;
};

// NotInField if some a_i = 0.
EvalModule build_evaluation(DecPtr dec, const WeightVec& lambda, const std::vector<Cyc>& a);

// Same carrier, action precomposed with the automorphism.
EvalModule twist_module(const EvalModule& m, const FiniteOrderAut& phi);

// Exact intertwiner solve on the window: invertible T with
// T rho(x t^k) = rho'(x t^k) T for all refined x and k in W, or nullopt.
std::optional<Mat<Cyc>> find_intertwiner(const EvalModule& m1, const EvalModule& m2,
                                         const DegreeWindow& w, unsigned seed = 1);

// The isomorphism predicate for evaluation modules: a(m) = b(m) and
// mu = lambda ∘ gamma for the outer part of the ratio character.
struct EvalIsoVerdict {
  bool isomorphic;
  std::string reason;
};
EvalIsoVerdict evaluation_isomorphic(const EigenspaceDecomposition& dec, const WeightVec& lambda,
                                     const std::vector<Cyc>& a, const WeightVec& mu,
                                     const std::vector<Cyc>& b);

// Matrix of a refined basis element in a plain irrep (Chevalley-coord
// expansion through the irrep's action matrices).
Mat<Cyc> refined_action(const EigenspaceDecomposition& dec, const Irrep& rep, int p);

}  // namespace lietor
