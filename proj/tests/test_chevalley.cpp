#include <doctest.h>

#include "lietor/chevalley.hpp"
#include "oracles.hpp"

using namespace lietor;

namespace {

Vec<Rat> basis_vec(const ChevalleyAlgebra& g, int i) {
  Vec<Rat> v(g.dim(), Rat(0));
  v[i] = Rat(1);
  return v;
}

void check_jacobi_all(const ChevalleyAlgebra& g) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    Vec<Rat> ei = basis_vec(g, i);
    for (int j = i + 1; j < d; ++j) {
      Vec<Rat> ej = basis_vec(g, j);
      // antisymmetry on the pair
      Vec<Rat> bij = g.bracket(ei, ej), bji = g.bracket(ej, ei);
      for (int t = 0; t < d; ++t) CHECK(bij[t] == -bji[t]);
      for (int k = j + 1; k < d; ++k) {
        Vec<Rat> ek = basis_vec(g, k);
        Vec<Rat> s = g.bracket(ei, g.bracket(ej, ek));
        s = vec_add(std::move(s), g.bracket(ej, g.bracket(ek, ei)));
        s = vec_add(std::move(s), g.bracket(ek, g.bracket(ei, ej)));
        if (!vec_is_zero(s)) {
          FAIL("Jacobi fails on triple (" << g.basis_name(i) << ", " << g.basis_name(j) << ", "
                                          << g.basis_name(k) << ") in " << g.roots().name());
          return;
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("sl2 relations and dimensions") {
  ChevalleyAlgebra g = build_simple('A', 1);
  CHECK(g.dim() == 3);
  Vec<Rat> e = basis_vec(g, g.e_index(0)), f = basis_vec(g, g.f_index(0)),
           h = basis_vec(g, g.h_index(0));
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == vec_scale(e, Rat(2)));
  CHECK(g.bracket(h, f) == vec_scale(f, Rat(-2)));
}

TEST_CASE("dimensions match the classical counts") {
  CHECK(build_simple('A', 2).dim() == 8);
  CHECK(build_simple('A', 2).npos() == 3);
  CHECK(build_simple('D', 4).dim() == 28);
  CHECK(build_simple('D', 4).dim() == oracles::classical_dim('D', 4));
  CHECK(build_simple('G', 2).dim() == oracles::classical_dim('G', 2));
  CHECK_THROWS_AS(build_simple('B', 1), Error);
}

TEST_CASE("jacobi identity holds exactly on all basis triples") {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3},
                      {'D', 4}, {'G', 2}}) {
    check_jacobi_all(build_simple(t, r));
  }
}

TEST_CASE("invariant form") {
  ChevalleyAlgebra sl2 = build_simple('A', 1);
  Vec<Rat> e = basis_vec(sl2, sl2.e_index(0)), f = basis_vec(sl2, sl2.f_index(0)),
           h = basis_vec(sl2, sl2.h_index(0));
  CHECK(sl2.form(h, h) == Rat(2));
  CHECK(sl2.form(e, f) == Rat(1));
  CHECK(sl2.form(e, e) == Rat(0));

  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
    ChevalleyAlgebra g = build_simple(t, r);
    int d = g.dim();
    // symmetry + associativity ([x,y]|z) = (x|[y,z]) on basis triples
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        CHECK(g.form_basis(i, j) == g.form_basis(j, i));
        for (int k = 0; k < d; ++k) {
          Vec<Rat> xi = basis_vec(g, i), xj = basis_vec(g, j), xk = basis_vec(g, k);
          CHECK(g.form(g.bracket(xi, xj), xk) == g.form(xi, g.bracket(xj, xk)));
        }
      }
    }
    // (theta|theta) = 2 through the coroot: for the highest root theta,
    // the element h_theta pairs to (theta^vee, theta^vee) = 2 since theta is long
    Vec<Rat> ht(g.dim(), Rat(0));
    Vec<Rat> c = g.coroot_h(g.roots().highest_root());
    for (int i = 0; i < g.rank(); ++i) ht[g.h_index(i)] = c[i];
    CHECK(g.form(ht, ht) == Rat(2));
    // nondegeneracy: rank of the form matrix equals dim
    Mat<Rat> fm(d, Vec<Rat>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) fm[i][j] = g.form_basis(i, j);
    CHECK(mat_rank(fm) == (size_t)d);
  }
}

TEST_CASE("structure constants are integral") {
  for (auto [t, r] : {std::pair{'G', 2}, {'B', 3}, {'F', 4}}) {
    ChevalleyAlgebra g = build_simple(t, r);
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        for (const auto& [k, c] : g.bracket_basis(i, j)) {
          (void)k;
          CHECK(is_integer(c));
        }
  }
}
