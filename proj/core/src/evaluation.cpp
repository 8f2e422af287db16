#include "lietor/evaluation.hpp"

#include <random>

#include "lietor/error.hpp"

namespace lietor {

Mat<Cyc> refined_action(const EigenspaceDecomposition& dec, const Irrep& rep, int p) {
  Mat<Cyc> out = mat_zero<Cyc>(rep.dim, rep.dim);
  const Vec<Cyc>& chev = dec.basis[p].vec;
  for (size_t b = 0; b < chev.size(); ++b) {
    if (chev[b].is_zero()) continue;
    const Mat<Rat>& m = rep.act[b];
    for (int r = 0; r < rep.dim; ++r)
      for (int s = 0; s < rep.dim; ++s)
        if (!is_zero(m[r][s])) out[r][s] += chev[b] * Cyc(m[r][s]);
  }
  return out;
}

Cyc EvalModule::point_power(const Degree& k) const {
  Cyc out(1);
  for (size_t i = 0; i < a.size(); ++i) out *= a[i].pow(k[i]);
  return out;
}

Mat<Cyc> EvalModule::act(int p, const Degree& k) const {
  require(dec->basis[p].kbar == dec->group.reduce(k.k), Errc::ConfigError,
          "basis element is not in g_kbar for degree " + k.str());
  Cyc s = point_power(k);
  Mat<Cyc> out = rho[p];
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

EvalModule build_evaluation(DecPtr dec, const WeightVec& lambda, const std::vector<Cyc>& a) {
  require((int)a.size() == dec->group.n(), Errc::NotInField,
          "evaluation point has wrong length");
  for (const auto& ai : a)
    require(!ai.is_zero(), Errc::NotInField, "evaluation point must be nonzero");
  EvalModule out;
  out.dec = dec;
  out.lambda = lambda;
  out.a = a;
  Irrep rep = build_irrep(dec->g, lambda);
  out.dim = rep.dim;
  for (int p = 0; p < dec->g->dim(); ++p) out.rho.push_back(refined_action(*dec, rep, p));
  return out;
}

EvalModule twist_module(const EvalModule& m, const FiniteOrderAut& phi) {
  require(phi.g == m.dec->g, Errc::IncompatibleGradings, "automorphism of a different algebra");
  EvalModule out = m;
  // rho'(b_p) = rho(phi(b_p)); phi(b_p) expanded in the refined basis
  for (int p = 0; p < m.dec->g->dim(); ++p) {
    Vec<Cyc> img = m.dec->to_refined(phi.apply(m.dec->to_chevalley([&] {
      Vec<Cyc> unit((size_t)m.dec->g->dim(), Cyc(0));
      unit[p] = Cyc(1);
      return unit;
    }())));
    Mat<Cyc> acc = mat_zero<Cyc>(m.dim, m.dim);
    for (size_t q = 0; q < img.size(); ++q) {
      if (img[q].is_zero()) continue;
      for (int r = 0; r < m.dim; ++r)
        for (int s = 0; s < m.dim; ++s)
          if (!m.rho[q][r][s].is_zero()) acc[r][s] += img[q] * m.rho[q][r][s];
    }
    out.rho[p] = std::move(acc);
  }
  return out;
}

std::optional<Mat<Cyc>> find_intertwiner(const EvalModule& m1, const EvalModule& m2,
                                         const DegreeWindow& w, unsigned seed) {
  require(m1.dec == m2.dec, Errc::IncompatibleGradings, "modules over different algebras");
  const auto& dec = *m1.dec;
  int d1 = m1.dim, d2 = m2.dim, dg = dec.g->dim();
  // unknowns T (d2 x d1), equations T rho1(x t^k) - rho2(x t^k) T = 0
  std::vector<Mat<Cyc>> lhs1, lhs2;
  for (const Degree& k : w.all()) {
    ClassVec cls = dec.group.reduce(k.k);
    for (int p = 0; p < dg; ++p) {
      if (dec.basis[p].kbar != cls) continue;
      lhs1.push_back(m1.act(p, k));
      lhs2.push_back(m2.act(p, k));
    }
  }
  Mat<Cyc> sys = mat_zero<Cyc>(lhs1.size() * (size_t)(d2 * d1), (size_t)(d2 * d1));
  for (size_t e = 0; e < lhs1.size(); ++e) {
    const Mat<Cyc>& A = lhs1[e];  // d1 x d1
    const Mat<Cyc>& B = lhs2[e];  // d2 x d2
    for (int r = 0; r < d2; ++r) {
      for (int c = 0; c < d1; ++c) {
        size_t row = e * d2 * d1 + (size_t)r * d1 + c;
        // (T A)_{rc} = sum_t T_{rt} A_{tc};  (B T)_{rc} = sum_t B_{rt} T_{tc}
        for (int t = 0; t < d1; ++t)
          if (!A[t][c].is_zero()) sys[row][(size_t)r * d1 + t] += A[t][c];
        for (int t = 0; t < d2; ++t)
          if (!B[r][t].is_zero()) sys[row][(size_t)t * d1 + c] -= B[r][t];
      }
    }
  }
  auto ns = nullspace(sys);
  if (ns.empty() || d1 != d2) return std::nullopt;
  auto unflatten = [&](const Vec<Cyc>& v) {
    Mat<Cyc> t = mat_zero<Cyc>(d2, d1);
    for (int r = 0; r < d2; ++r)
      for (int c = 0; c < d1; ++c) t[r][c] = v[(size_t)r * d1 + c];
    return t;
  };
  for (const auto& v : ns) {
    Mat<Cyc> t = unflatten(v);
    if (mat_inverse(t).has_value()) return t;
  }
  // random combinations in case no single basis solution is invertible
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec<Cyc> v((size_t)(d1 * d2), Cyc(0));
    for (const auto& b : ns) {
      long coef = 1 + (long)(rng() % 7);
      for (size_t i = 0; i < v.size(); ++i) v[i] += Cyc(coef) * b[i];
    }
    Mat<Cyc> t = unflatten(v);
    if (mat_inverse(t).has_value()) return t;
  }
  return std::nullopt;
}

EvalIsoVerdict evaluation_isomorphic(const EigenspaceDecomposition& dec, const WeightVec& lambda,
                                     const std::vector<Cyc>& a, const WeightVec& mu,
                                     const std::vector<Cyc>& b) {
  for (int i = 0; i < dec.group.n(); ++i) {
    if (!(a[i].pow(dec.group.m[i]) == b[i].pow(dec.group.m[i])))
      return {false, "a(m) != b(m) at coordinate " + std::to_string(i + 1)};
  }
  // ratio character chi(kbar) = (a^k / b^k); outer part via its automorphism
  std::vector<Cyc> ratio;
  for (int i = 0; i < dec.group.n(); ++i) ratio.push_back(a[i] / b[i]);
  FiniteOrderAut om = character_aut(dec, ratio);
  WeightVec target = act_on_weight(outer_part(om), lambda);
  if (target != mu)
    return {false, "mu is not lambda ∘ gamma for the ratio character"};
  return {true, "a(m) = b(m) and mu = lambda ∘ gamma"};
}

}  // namespace lietor
