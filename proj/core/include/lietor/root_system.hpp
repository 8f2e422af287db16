#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lietor/matrix.hpp"
#include "lietor/rat.hpp"

namespace lietor {

// Integer vector in the simple-root basis.
using RootVec = std::vector<long>;
// Integer vector in the fundamental-weight basis.
using WeightVec = std::vector<long>;

// Irreducible reduced finite root system of one of the types A..G.
// Conventions: cartan[i][j] = <alpha_j, alpha_i^vee>, i.e. row i is the
// pairing against the i-th simple coroot; d[i] = (alpha_i,alpha_i)/2 with
// the invariant form normalized so long roots have squared length 2.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<std::vector<long>> cartan;
  std::vector<Rat> d;
  std::vector<RootVec> positive;  // sorted by (height, lex); first `rank` are simple
  std::map<RootVec, int> index;   // positive root -> index
  std::vector<std::vector<Rat>> fundamental;  // omega_i in the alpha-basis

  int npos() const { return (int)positive.size(); }
  long height(const RootVec& r) const;
  bool is_positive_root(const RootVec& r) const { return index.count(r) > 0; }
  bool is_root(const RootVec& r) const;

  // (alpha_i, alpha_j) under the normalized invariant form.
  Rat ip_simple(int i, int j) const { return d[i] * Rat(cartan[i][j]); }
  Rat ip(const RootVec& a, const RootVec& b) const;
  Rat norm2(const RootVec& a) const { return ip(a, a); }
  bool is_long(const RootVec& a) const;
  bool is_short(const RootVec& a) const { return !is_long(a); }

  // <beta, alpha_i^vee> for beta in the alpha-basis.
  long pair_coroot(const RootVec& beta, int i) const;
  RootVec reflect_simple(const RootVec& beta, int i) const;

  // Inner product of a weight (omega-coords) with a root (alpha-coords).
  Rat ip_weight_root(const std::vector<Rat>& mu_omega, const RootVec& alpha) const;

  const RootVec& highest_root() const { return positive.back(); }

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

// Valid (type, rank) pairs only; aliases such as B1, C1, D2, D3 are
// rejected with UnsupportedType.
RootSystem build_root_system(char type, int rank);

// Internal-use variant that permits B1 (rank-1 system with its roots
// counted short), used for the extended root set of twisted gradings.
RootSystem build_root_system_allow_b1(char type, int rank);

// Delta^x union 2*Delta_sh^x for type B (zero excluded); Delta^x otherwise.
// Doubled roots are formal vectors, not members of the root system.
std::vector<RootVec> extended_roots(const RootSystem& rs);

bool is_dominant(const WeightVec& lambda);

// Weyl dimension formula, prod_{a>0} (lambda+rho, a)/(rho, a), exact.
Rat weyl_dimension(const RootSystem& rs, const WeightVec& lambda);

// alpha-basis coords of a weight given in omega-coords (rational).
std::vector<Rat> weight_to_alpha(const RootSystem& rs, const WeightVec& lambda);

// Identifies the abstract type of a Cartan matrix, up to simultaneous row
// and column permutation. Returns e.g. {'A', 2} or nullopt if it is not a
// Cartan matrix of an irreducible simple type.
std::optional<std::pair<char, int>> classify_cartan(const std::vector<std::vector<long>>& a);

}  // namespace lietor
