#include "lietor/automorphism.hpp"

#include <numeric>

#include "lietor/error.hpp"

namespace lietor {

namespace {

// Bracket of Cyc vectors through the rational structure constants.
Vec<Cyc> bracket_cyc(const ChevalleyAlgebra& g, const Vec<Cyc>& x, const Vec<Cyc>& y) {
  Vec<Cyc> out(g.dim(), Cyc(0));
  for (int i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < g.dim(); ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [k, c] : g.bracket_basis(i, j)) out[k] += x[i] * y[j] * Cyc(c);
    }
  }
  return out;
}

long perm_order(const std::vector<int>& pi) {
  long ord = 1;
  std::vector<bool> seen(pi.size(), false);
  for (size_t i = 0; i < pi.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = (size_t)pi[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Mat<Cyc> columns_to_matrix(const std::vector<Vec<Cyc>>& img) {
  size_t d = img.size();
  Mat<Cyc> m = mat_zero<Cyc>(d, d);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < d; ++i) m[i][j] = img[j][i];
  return m;
}

}  // namespace

bool is_bracket_preserving(const ChevalleyAlgebra& g, const Mat<Cyc>& m) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Vec<Cyc> lhs(d, Cyc(0));
      for (const auto& [k, c] : g.bracket_basis(i, j)) {
        for (int r = 0; r < d; ++r) {
          if (m[r][k].is_zero()) continue;
          lhs[r] += m[r][k] * Cyc(c);
        }
      }
      Vec<Cyc> xi(d, Cyc(0)), xj(d, Cyc(0));
      for (int r = 0; r < d; ++r) {
        xi[r] = m[r][i];
        xj[r] = m[r][j];
      }
      Vec<Cyc> rhs = bracket_cyc(g, xi, xj);
      for (int r = 0; r < d; ++r)
        if (!(lhs[r] == rhs[r])) return false;
    }
  }
  return true;
}

bool preserves_form(const ChevalleyAlgebra& g, const Mat<Cyc>& m) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Cyc v(0);
      for (int r = 0; r < d; ++r) {
        if (m[r][i].is_zero()) continue;
        for (int s = 0; s < d; ++s) {
          if (m[s][j].is_zero() || is_zero(g.form_basis(r, s))) continue;
          v += m[r][i] * m[s][j] * Cyc(g.form_basis(r, s));
        }
      }
      if (!(v == Cyc(g.form_basis(i, j)))) return false;
    }
  }
  return true;
}

long matrix_order(const Mat<Cyc>& m, long cap) {
  Mat<Cyc> id = mat_identity<Cyc>(m.size());
  Mat<Cyc> acc = m;
  for (long k = 1; k <= cap; ++k) {
    if (mat_equal(acc, id)) return k;
    acc = mat_mul(acc, m);
  }
  return 0;
}

FiniteOrderAut make_diagram_aut(AlgebraPtr gp, const std::vector<int>& pi) {
  const ChevalleyAlgebra& g = *gp;
  const RootSystem& rs = g.roots();
  require((int)pi.size() == rs.rank, Errc::NotADiagramSymmetry, "permutation has wrong size");
  std::vector<bool> hit(rs.rank, false);
  for (int v : pi) {
    require(v >= 0 && v < rs.rank && !hit[v], Errc::NotADiagramSymmetry, "not a permutation");
    hit[v] = true;
  }
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      require(rs.cartan[pi[i]][pi[j]] == rs.cartan[i][j], Errc::NotADiagramSymmetry,
              "permutation does not preserve the Cartan matrix");

  int d = g.dim();
  std::vector<Vec<Cyc>> img(d, Vec<Cyc>(d, Cyc(0)));
  auto simple_root_index = [&](int i) {
    RootVec a(rs.rank, 0);
    a[i] = 1;
    return rs.index.at(a);
  };
  for (int i = 0; i < rs.rank; ++i) {
    img[g.h_index(i)][g.h_index(pi[i])] = Cyc(1);
    img[g.e_index(simple_root_index(i))][g.e_index(simple_root_index(pi[i]))] = Cyc(1);
    img[g.f_index(simple_root_index(i))][g.f_index(simple_root_index(pi[i]))] = Cyc(1);
  }
  // extend over composite roots by commutators, in height order
  for (int ridx = rs.rank; ridx < rs.npos(); ++ridx) {
    const RootVec& gamma = rs.positive[ridx];
    for (int i = 0; i < rs.rank; ++i) {
      if (gamma[i] == 0) continue;
      RootVec rest = gamma;
      rest[i] -= 1;
      auto it = rs.index.find(rest);
      if (it == rs.index.end()) continue;
      int s = simple_root_index(i), r = it->second;
      Cyc n(g.n_constant(s, false, r, false));
      Vec<Cyc> be = bracket_cyc(g, img[g.e_index(s)], img[g.e_index(r)]);
      Vec<Cyc> bf = bracket_cyc(g, img[g.f_index(s)], img[g.f_index(r)]);
      for (int t = 0; t < d; ++t) {
        img[g.e_index(ridx)][t] = be[t] / n;
        img[g.f_index(ridx)][t] = -(bf[t] / n);
      }
      break;
    }
  }
  FiniteOrderAut out{gp, columns_to_matrix(img), perm_order(pi)};
  require(is_bracket_preserving(g, out.sigma), Errc::Internal,
          "diagram automorphism extension failed bracket preservation");
  require(matrix_order(out.sigma, out.order) == out.order, Errc::Internal,
          "diagram automorphism has unexpected order");
  return out;
}

FiniteOrderAut make_torus_aut(AlgebraPtr gp, const std::vector<Cyc>& chi_simple) {
  const ChevalleyAlgebra& g = *gp;
  const RootSystem& rs = g.roots();
  require((int)chi_simple.size() == rs.rank, Errc::NotRootOfUnity,
          "need one character value per simple root");
  long ord = 1;
  for (const Cyc& c : chi_simple) {
    long t = c.torsion_order();
    require(t > 0, Errc::NotRootOfUnity, "character value " + c.str() + " is not a root of unity");
    ord = std::lcm(ord, t);
  }
  int d = g.dim();
  Mat<Cyc> m = mat_zero<Cyc>(d, d);
  for (int i = 0; i < rs.rank; ++i) m[g.h_index(i)][g.h_index(i)] = Cyc(1);
  for (int a = 0; a < rs.npos(); ++a) {
    Cyc v(1);
    for (int i = 0; i < rs.rank; ++i) {
      long c = rs.positive[a][i];
      if (c != 0) v *= chi_simple[i].pow(c);
    }
    m[g.e_index(a)][g.e_index(a)] = v;
    m[g.f_index(a)][g.f_index(a)] = v.inverse();
  }
  FiniteOrderAut out{gp, std::move(m), ord};
  return out;
}

FiniteOrderAut make_matrix_aut(AlgebraPtr gp, Mat<Cyc> m) {
  const ChevalleyAlgebra& g = *gp;
  require((int)m.size() == g.dim(), Errc::ConfigError, "automorphism matrix has wrong size");
  require(mat_inverse(m).has_value(), Errc::ConfigError, "matrix is singular");
  require(is_bracket_preserving(g, m), Errc::ConfigError,
          "matrix does not preserve the bracket");
  long ord = matrix_order(m, 5040);
  require(ord > 0, Errc::ConfigError, "matrix does not have small finite order");
  return FiniteOrderAut{gp, std::move(m), ord};
}

FiniteOrderAut compose(const FiniteOrderAut& a, const FiniteOrderAut& b) {
  require(a.g == b.g, Errc::IncompatibleGradings, "automorphisms of different algebras");
  Mat<Cyc> m = mat_mul(a.sigma, b.sigma);
  long ord = matrix_order(m, 24 * a.order * b.order);
  require(ord > 0, Errc::Internal, "composition order exceeded cap");
  return FiniteOrderAut{a.g, std::move(m), ord};
}

std::vector<int> outer_part(const FiniteOrderAut& aut) {
  const ChevalleyAlgebra& g = *aut.g;
  const RootSystem& rs = g.roots();
  int l = rs.rank, d = g.dim();
  // h must be stable and the induced action rational
  Mat<Rat> h = mat_zero<Rat>(l, l);
  for (int j = 0; j < l; ++j) {
    for (int r = 0; r < d; ++r) {
      const Cyc& v = aut.sigma[r][g.h_index(j)];
      if (v.is_zero()) continue;
      if (r < 2 * g.npos())
        raise(Errc::CartanNotPreserved, "image of " + g.basis_name(g.h_index(j)) +
                                            " leaves the Cartan subalgebra");
      require(v.is_rational(), Errc::CartanNotPreserved, "irrational action on the Cartan");
      h[r - 2 * g.npos()][j] = v.rational();
    }
  }
  auto hinv = mat_inverse(h);
  require(hinv.has_value(), Errc::CartanNotPreserved, "singular action on the Cartan");

  // value vector of a root: (alpha(h_1), ..., alpha(h_l))
  std::map<std::vector<Rat>, RootVec> by_values;
  auto values_of = [&](const RootVec& alpha) {
    std::vector<Rat> v(l);
    for (int i = 0; i < l; ++i) v[i] = Rat(rs.pair_coroot(alpha, i));
    return v;
  };
  for (const auto& r : rs.positive) {
    by_values[values_of(r)] = r;
    RootVec neg(r.size());
    for (size_t t = 0; t < r.size(); ++t) neg[t] = -r[t];
    by_values[values_of(neg)] = neg;
  }

  // phi^*(alpha) = alpha o phi^{-1}: new values = values^T * hinv
  auto push_root = [&](const RootVec& alpha) -> RootVec {
    std::vector<Rat> vals = values_of(alpha), out(l, Rat(0));
    for (int i = 0; i < l; ++i)
      for (int k = 0; k < l; ++k) out[i] += vals[k] * (*hinv)[k][i];
    auto it = by_values.find(out);
    require(it != by_values.end(), Errc::CartanNotPreserved,
            "induced lattice map does not permute the roots");
    return it->second;
  };

  std::vector<RootVec> base(l);
  for (int i = 0; i < l; ++i) {
    RootVec a(l, 0);
    a[i] = 1;
    base[i] = push_root(a);
  }
  // Weyl-correct: drive phi^*(rho) into the dominant chamber, tracked by
  // its coroot values; rho is dominant regular, so its image pins the
  // chamber of the image base
  std::vector<Rat> sval(l, Rat(0));
  for (int i = 0; i < l; ++i) {
    // <rho, h_k> = 1 for all k, so the image values are column sums of hinv
    for (int k = 0; k < l; ++k) sval[i] += (*hinv)[k][i];
  }
  for (long guard = 0; guard < 100000; ++guard) {
    int neg = -1;
    for (int i = 0; i < l; ++i) {
      if (sgn(sval[i]) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    // r_neg: values v_t -> v_t - v_neg * A[t][neg]
    Rat vneg = sval[neg];
    for (int t = 0; t < l; ++t) sval[t] -= vneg * Rat(rs.cartan[t][neg]);
    for (auto& b : base) b = rs.reflect_simple(b, neg);
  }
  std::vector<int> gamma(l, -1);
  for (int i = 0; i < l; ++i) {
    int found = -1;
    for (int j = 0; j < l; ++j) {
      RootVec a(l, 0);
      a[j] = 1;
      if (base[i] == a) found = j;
    }
    require(found >= 0, Errc::CartanNotPreserved, "Weyl correction did not reach the base");
    gamma[i] = found;
  }
  return gamma;
}

WeightVec act_on_weight(const std::vector<int>& gamma, const WeightVec& lambda) {
  WeightVec out(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) out[i] = lambda[gamma[i]];
  return out;
}

}  // namespace lietor
