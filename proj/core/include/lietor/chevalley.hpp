#pragma once

#include <string>
#include <vector>

#include "lietor/root_system.hpp"

namespace lietor {

// Sparse vector over the Chevalley basis: (basis index, coefficient).
using SparseRat = std::vector<std::pair<int, Rat>>;

// Finite-dimensional simple Lie algebra in a Chevalley basis.
// Basis order: e_alpha for the positive roots (in root order), then
// f_alpha, then h_1..h_l. Structure constants are integers; the invariant
// form is normalized so (theta|theta) = 2 for the highest root theta.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank; }
  int npos() const { return rs_.npos(); }
  int dim() const { return 2 * npos() + rank(); }

  int e_index(int root_idx) const { return root_idx; }
  int f_index(int root_idx) const { return npos() + root_idx; }
  int h_index(int i) const { return 2 * npos() + i; }

  // [basis_i, basis_j] as a sparse vector.
  const SparseRat& bracket_basis(int i, int j) const { return table_[i][j]; }
  Vec<Rat> bracket(const Vec<Rat>& x, const Vec<Rat>& y) const;

  // Invariant symmetric associative form with (theta|theta)=2.
  const Rat& form_basis(int i, int j) const { return form_[i][j]; }
  Rat form(const Vec<Rat>& x, const Vec<Rat>& y) const;

  // ad(x) as a dim x dim matrix.
  Mat<Rat> ad(const Vec<Rat>& x) const;

  // Structure constant N_{alpha,beta} for signed roots (by positive index
  // and sign); 0 when alpha+beta is not a root.
  Rat n_constant(int ai, bool aneg, int bi, bool bneg) const;

  // Coroot alpha^vee of a (possibly formal, e.g. doubled) root expressed
  // in the h_i coordinates: alpha^vee = sum_i c_i h_i.
  Vec<Rat> coroot_h(const RootVec& alpha) const;

  std::string basis_name(int i) const;

  std::string to_json() const;

 private:
  void compute_constants();
  void build_table();
  void build_form();
  Rat npos_pair(int a, int b) const;  // positive-pair table with antisymmetry
  Rat n_constant_signed(const RootVec& vx, const RootVec& vy, bool xn, bool yn) const;

  RootSystem rs_;
  // n_[a][b] for positive root indices a<b with root sum; stored dense.
  std::vector<std::vector<long>> n_;
  std::vector<std::vector<SparseRat>> table_;
  std::vector<std::vector<Rat>> form_;
};

// Spec entry point: valid type/rank pair -> algebra (UnsupportedType otherwise).
ChevalleyAlgebra build_simple(char type, int rank);

}  // namespace lietor
