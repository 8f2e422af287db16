#pragma once

#include "lietor/irrep.hpp"

namespace lietor {

// Finite-dimensional irreducible gl_n module V(c, psi): the sl_n irrep
// of highest weight psi extended so the identity matrix acts by c.
struct GlnModule {
  int n = 1;
  WeightVec psi;
  Cyc c;
  int dim = 1;
  std::vector<Mat<Cyc>> eij;  // action of E_{ij} at index i*n + j

  const Mat<Cyc>& e(int i, int j) const { return eij[i * n + j]; }
};

GlnModule build_gln_module(int n, const WeightVec& psi, const Cyc& c);

}  // namespace lietor
