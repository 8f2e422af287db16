#pragma once

#include <memory>
#include <set>

#include "lietor/automorphism.hpp"

namespace lietor {

using ClassVec = std::vector<long>;  // element of G = Z^n / Gamma, reduced mod m
using WeightLabel = std::vector<Rat>;  // values of a weight on the h0 basis

// G = Z^n / (m_1 Z + ... + m_n Z) with the natural quotient map.
struct GradingGroup {
  std::vector<long> m;

  int n() const { return (int)m.size(); }
  long size() const {
    long s = 1;
    for (long v : m) s *= v;
    return s;
  }
  ClassVec reduce(const std::vector<long>& k) const {
    ClassVec out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i] = ((k[i] % m[i]) + m[i]) % m[i];
    return out;
  }
  ClassVec add(const ClassVec& a, const ClassVec& b) const {
    ClassVec out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i] = (a[i] + b[i]) % m[i];
    return out;
  }
  bool in_gamma(const std::vector<long>& k) const {
    for (size_t i = 0; i < m.size(); ++i)
      if (k[i] % m[i] != 0) return false;
    return true;
  }
  std::vector<ClassVec> elements() const;  // lex order, 0 first
};

// Verifies: pairwise commutativity, order(sigma_i) == m_i exactly, and
// |<sigma_1..sigma_n>| == prod m_i by enumeration.
GradingGroup validate_tuple(const std::vector<FiniteOrderAut>& sigma,
                            const std::vector<long>& m);

// The simultaneous eigenspace decomposition of g under a validated
// tuple, refined into h0-weight spaces, with bracket and form tables in
// the refined basis. Everything downstream (toroidal algebra, modules)
// works in these coordinates.
struct EigenspaceDecomposition {
  AlgebraPtr g;
  std::vector<FiniteOrderAut> sigma;
  GradingGroup group;
  long conductor = 1;      // lcm of the m_i
  std::vector<Cyc> xi;     // fixed primitive m_i-th roots of unity

  std::vector<Vec<Rat>> h0_basis;  // Chevalley coords, rational

  struct BasisElem {
    Vec<Cyc> vec;        // Chevalley coords
    ClassVec kbar;
    WeightLabel weight;  // h0-weight (rational values on h0_basis)
  };
  std::vector<BasisElem> basis;               // refined basis of g
  Mat<Cyc> basis_mat, basis_inv;              // columns = basis vectors
  std::map<ClassVec, std::vector<int>> by_class;
  std::map<std::pair<ClassVec, WeightLabel>, std::vector<int>> by_class_weight;
  std::map<ClassVec, int> dims;

  std::set<WeightLabel> delta;    // nonzero h0-weights on g
  std::set<WeightLabel> delta0;   // nonzero h0-weights on g_0

  // bracket and invariant form in refined coordinates
  std::vector<std::vector<std::vector<std::pair<int, Cyc>>>> btab;
  Mat<Cyc> ftab;

  int dim_class(const ClassVec& c) const {
    auto it = dims.find(c);
    return it == dims.end() ? 0 : it->second;
  }
  int dim_class_weight(const ClassVec& c, const WeightLabel& w) const {
    auto it = by_class_weight.find({c, w});
    return it == by_class_weight.end() ? 0 : (int)it->second.size();
  }
  Vec<Cyc> to_refined(const Vec<Cyc>& chevalley_coords) const {
    return mat_vec(basis_inv, chevalley_coords);
  }
  Vec<Cyc> to_chevalley(const Vec<Cyc>& refined_coords) const {
    return mat_vec(basis_mat, refined_coords);
  }
  // bracket of refined-coordinate vectors, in refined coordinates
  Vec<Cyc> bracket_refined(const Vec<Cyc>& x, const Vec<Cyc>& y) const;
  Cyc form_refined(const Vec<Cyc>& x, const Vec<Cyc>& y) const;

  // weight arithmetic and the invariant form on h0^*
  WeightLabel weight_add(const WeightLabel& a, const WeightLabel& b) const;
  WeightLabel weight_scale(const WeightLabel& a, const Rat& s) const;
  static bool weight_positive(const WeightLabel& w);  // lex sign
  Rat weight_ip(const WeightLabel& a, const WeightLabel& b) const;
  // t_alpha in h0 (Chevalley coords) with (t_alpha | h) = alpha(h)
  Vec<Rat> weight_rep(const WeightLabel& a) const;
  // coroot alpha^vee = 2 t_alpha / (alpha,alpha), Chevalley coords
  Vec<Rat> coroot_of_weight(const WeightLabel& a) const;

  // simple roots of Delta_0 with respect to lex positivity
  std::vector<WeightLabel> delta0_simple() const;
  // Cartan matrix of Delta_0 in the order returned by delta0_simple()
  std::vector<std::vector<long>> delta0_cartan() const;
};

using DecPtr = std::shared_ptr<const EigenspaceDecomposition>;

DecPtr eigenspace_decompose(AlgebraPtr g, const std::vector<FiniteOrderAut>& sigma,
                            const std::vector<long>& m);

// alpha_chi: scales g_kbar by chi(kbar). chi is given by its values on
// the n generators of G; NotAHomomorphism unless chi_i^{m_i} = 1.
FiniteOrderAut character_aut(const EigenspaceDecomposition& dec, const std::vector<Cyc>& chi);

// All characters of G as generator-value tuples, exponent-lex order,
// trivial character first.
std::vector<std::vector<Cyc>> all_characters(const EigenspaceDecomposition& dec);

// A subset of the given refined indices whose Lie closure spans the same
// subalgebra as the whole set. Checks that close under an algebra action
// only need its generators.
std::vector<int> lie_generating_subset(const EigenspaceDecomposition& dec,
                                       const std::vector<int>& indices);

// The Ghat-orbit of a dominant weight, deduplicated, lambda first.
std::vector<WeightVec> ghat_orbit(const EigenspaceDecomposition& dec, const WeightVec& lambda);
// The characters (generator-value tuples) realizing each orbit element,
// in the same order as ghat_orbit.
std::vector<std::vector<Cyc>> ghat_orbit_chars(const EigenspaceDecomposition& dec,
                                               const WeightVec& lambda);

struct LieTorusReport {
  struct Entry {
    std::string check;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Conditions (1), (2)/(M), LT3 and LT4 (window centre of the multiloop
// algebra) from the Lie torus definition. Failures are entries, not errors.
LieTorusReport check_lie_torus(const EigenspaceDecomposition& dec, long window = 2);

}  // namespace lietor
