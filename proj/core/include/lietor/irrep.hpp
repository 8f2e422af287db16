#pragma once

#include <map>
#include <memory>

#include "lietor/chevalley.hpp"

namespace lietor {

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;

// Finite-dimensional irreducible highest-weight module V(lambda), with
// exact action matrices for every Chevalley basis element of g. Basis
// vectors are grouped by weight; index 0 is the highest weight vector.
struct Irrep {
  AlgebraPtr g;
  WeightVec lambda;
  int dim = 0;
  std::vector<WeightVec> weight_of;           // omega-coords per basis vector
  std::map<WeightVec, int> weight_dims;
  std::map<WeightVec, Mat<Rat>> gram;         // contravariant Gram per weight
  std::vector<Mat<Rat>> act;                  // per Chevalley basis index

  Mat<Rat> action_of(const Vec<Rat>& x) const;
  std::string to_json() const;
};

// Builds V(lambda) by generating monomials in the simple lowering
// operators and quotienting by the radical of the contravariant form at
// each weight. NonDominantWeight unless lambda is dominant integral.
Irrep build_irrep(AlgebraPtr g, const WeightVec& lambda);

}  // namespace lietor
