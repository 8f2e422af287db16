#pragma once

#include "lietor/gln_module.hpp"
#include "lietor/graded_sum.hpp"

namespace lietor {

// Vector in a degree-graded module: nonzero components per Z^n-degree.
// Degrees are unbounded; windows only bound enumerations.
using ModVec = std::map<Degree, Vec<Cyc>>;

ModVec modvec_add(ModVec a, const ModVec& b);
ModVec modvec_scale(ModVec a, const Cyc& s);
bool modvec_is_zero(const ModVec& v);

// The level-zero module V(psi, c, lambda, beta) realized on
// ⊕_k V1 ⊗ V_{2,kbar} ⊗ t^k. At degree k the coordinate vector has
// length dim(V1) * dim(V_{2,kbar}), V1-major, over the graded basis
// stored in v2.graded.
class RealizedModule {
 public:
  RealizedModule(DecPtr dec, GlnModule v1, GradedLTModule v2, std::vector<Cyc> beta,
                 DegreeWindow window);

  const DecPtr& dec() const { return dec_; }
  const GlnModule& v1() const { return v1_; }
  const GradedLTModule& v2() const { return v2_; }
  const std::vector<Cyc>& beta() const { return beta_; }
  const DegreeWindow& window() const { return window_; }

  int fiber_dim(const Degree& k) const;  // dim V1 * dim V_{2,kbar}
  ModVec basis_vector(const Degree& k, int idx) const;
  std::vector<std::pair<Degree, int>> window_basis() const;

  // exact action of a toroidal element (t^r K_i act as zero)
  ModVec apply(const ToroidalElement& x, const ModVec& v) const;

  // weight table rows on the window: (degree, h0-weight, dimension);
  // the h~-weight of the row is (mu, level 0, delta_{k + beta})
  struct WeightRow {
    Degree k;
    WeightLabel mu;
    long dim;
  };
  std::vector<WeightRow> weight_table() const;

  // highest weight space per window degree: joint kernel of the positive
  // loop generators with degrees in the window
  struct HwsBlock {
    Degree k;
    long dim;
    std::vector<ModVec> basis;
  };
  std::vector<HwsBlock> highest_weight_space() const;

  // least m with x^m v = 0 per sampled (real-root generator, vector);
  // entries report failures when m exceeds the bound
  struct IntegrabilitySample {
    std::string generator;
    Degree gen_degree;
    Degree vec_degree;
    int vec_index;
    long exponent;  // -1 on failure
  };
  std::vector<IntegrabilitySample> check_integrable(long samples, unsigned seed,
                                                    long bound = -1) const;

  // test hook: shifts the derivation action on one degree (breaks the
  // module law; used by fault-injection tests and nothing else)
  void corrupt_beta_at(const Degree& k, const Cyc& shift) { corrupt_[k] = shift; }

 private:
  Mat<Cyc> loop_block(int p, const ClassVec& from) const;  // graded-coords block
  DecPtr dec_;
  GlnModule v1_;
  GradedLTModule v2_;
  std::vector<Cyc> beta_;
  DegreeWindow window_;
  // per refined p, per source class: matrix (dim V1*V2to x dim V1*V2from)
  std::map<std::pair<int, ClassVec>, Mat<Cyc>> loop_graded_;
  std::map<Degree, Cyc> corrupt_;
};

// Builds V(psi, c, lambda, beta) with S(lambda) = 1 defaults: multiplicity
// vector p (empty = all ones), base point (empty = all ones), explicit
// points optional.
RealizedModule build_realized(DecPtr dec, const WeightVec& psi, const Cyc& c,
                              const WeightVec& lambda, std::vector<Cyc> beta,
                              const DegreeWindow& window, std::vector<int> p = {},
                              std::vector<Cyc> base = {},
                              std::vector<std::vector<Cyc>> points = {});

// L(beta, V1) = V1 ⊗ A as a module over tau^_0 = L(g°, sigma) + D(m):
// D(u,r).(v ⊗ t^s) = (I(u,r).v) ⊗ t^{r+s} + (u, s+beta)(v ⊗ t^{r+s}),
// with I acting through pi and the gl_n module; loops act as zero.
class LBetaModule {
 public:
  LBetaModule(DecPtr dec, GlnModule v1, std::vector<Cyc> beta);

  const GlnModule& v1() const { return v1_; }
  ModVec apply(const ToroidalElement& x, const ModVec& v) const;
  ModVec basis_vector(const Degree& s, int idx) const;
  int fiber_dim() const { return v1_.dim; }

 private:
  DecPtr dec_;
  GlnModule v1_;
  std::vector<Cyc> beta_;
};

}  // namespace lietor
