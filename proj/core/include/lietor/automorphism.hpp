#pragma once

#include <map>

#include "lietor/irrep.hpp"

namespace lietor {

// Finite-order automorphism of a Chevalley algebra, stored as its matrix
// on the Chevalley basis. Constructors validate bracket preservation
// exactly on all basis pairs.
struct FiniteOrderAut {
  AlgebraPtr g;
  Mat<Cyc> sigma;
  long order = 1;

  Vec<Cyc> apply(const Vec<Cyc>& x) const { return mat_vec(sigma, x); }
};

// e_i -> e_{pi(i)}, f_i -> f_{pi(i)}, h_i -> h_{pi(i)} for a Dynkin
// diagram symmetry pi (0-based). NotADiagramSymmetry otherwise.
FiniteOrderAut make_diagram_aut(AlgebraPtr g, const std::vector<int>& pi);

// Identity on h, scaling by chi(alpha) on each root space, where chi is
// a character of the root lattice given by root-of-unity values on the
// simple roots. NotRootOfUnity if a value has infinite order.
FiniteOrderAut make_torus_aut(AlgebraPtr g, const std::vector<Cyc>& chi_simple);

// Ingests an arbitrary matrix; validates invertibility, bracket
// preservation and finite order.
FiniteOrderAut make_matrix_aut(AlgebraPtr g, Mat<Cyc> m);

// Composition a after b.
FiniteOrderAut compose(const FiniteOrderAut& a, const FiniteOrderAut& b);

bool is_bracket_preserving(const ChevalleyAlgebra& g, const Mat<Cyc>& m);
bool preserves_form(const ChevalleyAlgebra& g, const Mat<Cyc>& m);

// Smallest p >= 1 with m^p = 1; 0 if none up to the cap.
long matrix_order(const Mat<Cyc>& m, long cap);

// The outer part of an automorphism that preserves the Cartan
// subalgebra: the residual simple-root permutation after correcting the
// induced root-lattice map by a Weyl group element. CartanNotPreserved
// when h is not stable (or the lattice action is not rational).
std::vector<int> outer_part(const FiniteOrderAut& aut);

// The '∘' action on dominant weights induced by a diagram automorphism:
// (lambda ∘ gamma)_i = lambda_{gamma(i)}.
WeightVec act_on_weight(const std::vector<int>& gamma, const WeightVec& lambda);

}  // namespace lietor
