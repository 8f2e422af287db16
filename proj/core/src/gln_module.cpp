#include "lietor/gln_module.hpp"

#include "lietor/error.hpp"

namespace lietor {

GlnModule build_gln_module(int n, const WeightVec& psi, const Cyc& c) {
  require(n >= 1, Errc::ConfigError, "gl_n needs n >= 1");
  GlnModule out;
  out.n = n;
  out.psi = psi;
  out.c = c;
  if (n == 1) {
    require(psi.empty() || psi == WeightVec{},
            Errc::NonDominantWeight, "sl_1 admits only the empty weight");
    out.dim = 1;
    out.eij = {Mat<Cyc>{{c}}};
    return out;
  }
  auto g = std::make_shared<ChevalleyAlgebra>(build_root_system('A', n - 1));
  Irrep rep = build_irrep(g, psi);
  out.dim = rep.dim;
  out.eij.assign((size_t)n * n, mat_zero<Cyc>(rep.dim, rep.dim));
  const RootSystem& rs = g->roots();
  auto lift = [&](const Mat<Rat>& m) {
    Mat<Cyc> out_m = mat_zero<Cyc>(m.size(), m.size());
    for (size_t r = 0; r < m.size(); ++r)
      for (size_t s = 0; s < m.size(); ++s)
        if (!is_zero(m[r][s])) out_m[r][s] = Cyc(m[r][s]);
    return out_m;
  };
  // E_{i,i+1} and E_{i+1,i} from the simple generators
  for (int i = 0; i + 1 < n; ++i) {
    RootVec alpha(n - 1, 0);
    alpha[i] = 1;
    int ridx = rs.index.at(alpha);
    out.eij[i * n + (i + 1)] = lift(rep.act[g->e_index(ridx)]);
    out.eij[(i + 1) * n + i] = lift(rep.act[g->f_index(ridx)]);
  }
  // other off-diagonal entries by commutators: E_ij = [E_ik, E_kj]
  auto commut = [&](const Mat<Cyc>& a, const Mat<Cyc>& b) {
    Mat<Cyc> ab = mat_mul(a, b), ba = mat_mul(b, a);
    for (size_t r = 0; r < ab.size(); ++r)
      for (size_t s = 0; s < ab.size(); ++s) ab[r][s] -= ba[r][s];
    return ab;
  };
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      out.eij[i * n + j] = commut(out.e(i, i + 1), out.e(i + 1, j));
      out.eij[j * n + i] = commut(out.e(j, i + 1), out.e(i + 1, i));
    }
  }
  // E_ii = (c/n) Id + rho(E_ii - Id/n), the traceless part through the h_k
  for (int i = 0; i < n; ++i) {
    Mat<Cyc> m = mat_zero<Cyc>(rep.dim, rep.dim);
    Cyc diag = c / Cyc(n);
    for (int r = 0; r < rep.dim; ++r) m[r][r] = diag;
    // E_ii - Id/n = sum_k coef_k h_k with coef_k = [k >= i+1] - k/n (1-based k)
    for (int k = 1; k < n; ++k) {
      Rat coef = Rat(k >= i + 1 ? 1 : 0) - rat_of(k, n);
      if (is_zero(coef)) continue;
      const Mat<Rat>& hk = rep.act[g->h_index(k - 1)];
      for (int r = 0; r < rep.dim; ++r)
        for (int s = 0; s < rep.dim; ++s)
          if (!is_zero(hk[r][s])) m[r][s] += Cyc(coef * hk[r][s]);
    }
    out.eij[i * n + i] = std::move(m);
  }
  return out;
}

}  // namespace lietor
