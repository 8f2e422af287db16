#pragma once

#include "lietor/grading.hpp"

namespace lietor {

// Parameter quadruple of a realized module.
struct Quadruple {
  WeightVec psi;
  Cyc c;
  WeightVec lambda;
  std::vector<Cyc> beta;
};

// V(psi,c,lambda,beta) ≅ V(psi',c',lambda',beta') iff psi = psi', c = c',
// lambda' lies in the Ghat-orbit of lambda, and beta - beta' is integral.
struct IsoVerdict {
  bool isomorphic;
  std::string certificate;  // names the failing clause, or the matching one
};

IsoVerdict iso_check(const EigenspaceDecomposition& dec, const Quadruple& q,
                     const Quadruple& qp);

}  // namespace lietor
