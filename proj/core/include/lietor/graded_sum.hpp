#pragma once

#include "lietor/evaluation.hpp"

namespace lietor {

// G-graded-irreducible module V_2 = sum of twisted copies of the orbit
// irreps, with the grading recovered as simultaneous eigenspaces of
// explicitly constructed grading operators. Components carry the orbit
// weights with multiplicities p_i and evaluation points in U(m); after
// twisting, the components must hit every orbit weight exactly S(lambda)
// times, otherwise the module is not G-graded-irreducible.
struct GradedLTModule {
  DecPtr dec;
  WeightVec lambda;
  std::vector<WeightVec> orbit;
  std::vector<int> carrier;                 // per component: orbit index
  std::vector<std::vector<Cyc>> points;     // per component: a_nu in U(m)
  std::vector<int> target;                  // per component: orbit index after twist
  std::vector<Irrep> reps;                  // per orbit index
  std::vector<int> offset;                  // per component: block offset
  int dim = 0;

  std::vector<Mat<Cyc>> loop_act;           // per refined p: block action incl. a_nu^k
  std::vector<Mat<Cyc>> grading_ops;        // T_i per grading direction
  std::map<ClassVec, std::vector<Vec<Cyc>>> graded;  // basis of V_{2,kbar}
  // weight-refined graded pieces: basis of V_{2,kbar}(mu)
  std::map<ClassVec, std::map<WeightLabel, std::vector<Vec<Cyc>>>> weight_graded;

  int dim_class(const ClassVec& c) const {
    auto it = graded.find(c);
    return it == graded.end() ? 0 : (int)it->second.size();
  }
  // action of refined basis p tensored with t^k (class must match)
  Mat<Cyc> act(int p, const Degree& k) const;
};

// Evaluation points per component: p_i components carry V(lambda_i); the
// nu-th component is assigned the nu-th orbit weight as its target and
// the point is the character shift of `base` realizing that target
// (Cor 5.2 style, b = xi^d a). Requires sum p_i = |orbit| (S = 1).
std::vector<std::vector<Cyc>> choose_points(const EigenspaceDecomposition& dec,
                                            const WeightVec& lambda, const std::vector<int>& p,
                                            const std::vector<Cyc>& base);

// Builds the graded sum. `points` empty means choose_points(dec, ...).
// Throws ZeroLambda for lambda = 0, NotInField for points outside U(m),
// GradedIrreducibilityFailure when no compatible grading exists or the
// graded generation check fails.
GradedLTModule build_graded_sum(DecPtr dec, const WeightVec& lambda, std::vector<int> p,
                                std::vector<Cyc> base, std::vector<std::vector<Cyc>> points = {});

}  // namespace lietor
