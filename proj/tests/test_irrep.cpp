#include <doctest.h>

#include "lietor/irrep.hpp"
#include "oracles.hpp"

using namespace lietor;

namespace {

AlgebraPtr algebra(char t, int r) {
  return std::make_shared<ChevalleyAlgebra>(build_root_system(t, r));
}

// rho([x,y]) = [rho(x), rho(y)] on all Chevalley basis pairs.
void check_module_axiom(const Irrep& v) {
  const ChevalleyAlgebra& g = *v.g;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      Mat<Rat> lhs = mat_zero<Rat>(v.dim, v.dim);
      for (const auto& [k, c] : g.bracket_basis(i, j)) {
        for (int r = 0; r < v.dim; ++r)
          for (int s = 0; s < v.dim; ++s) lhs[r][s] += c * v.act[k][r][s];
      }
      Mat<Rat> rhs = mat_mul(v.act[i], v.act[j]);
      Mat<Rat> ji = mat_mul(v.act[j], v.act[i]);
      for (int r = 0; r < v.dim; ++r)
        for (int s = 0; s < v.dim; ++s) rhs[r][s] -= ji[r][s];
      if (!mat_equal(lhs, rhs)) {
        FAIL("module axiom fails on (" << g.basis_name(i) << ", " << g.basis_name(j) << ")");
        return;
      }
    }
  }
}

}  // namespace

TEST_CASE("sl2 fundamental module") {
  auto g = algebra('A', 1);
  Irrep v = build_irrep(g, {1});
  CHECK(v.dim == 2);
  REQUIRE(v.weight_dims.size() == 2);
  CHECK(v.weight_dims.at({1}) == 1);
  CHECK(v.weight_dims.at({-1}) == 1);
  check_module_axiom(v);
}

TEST_CASE("sl3 fundamental and adjoint") {
  auto g = algebra('A', 2);
  Irrep v3 = build_irrep(g, {1, 0});
  CHECK(v3.dim == 3);
  CHECK(Rat(v3.dim) == weyl_dimension(g->roots(), {1, 0}));
  check_module_axiom(v3);

  Irrep v8 = build_irrep(g, {1, 1});
  CHECK(v8.dim == 8);
  CHECK(v8.weight_dims.at({0, 0}) == 2);
  check_module_axiom(v8);

  // Freudenthal oracle agreement on every weight
  auto mult = oracles::freudenthal(g->roots(), {1, 1});
  Rat sum(0);
  for (const auto& [w, m] : mult) sum += m;
  CHECK(sum == Rat(8));
  for (const auto& [w, m] : mult) CHECK(Rat(v8.weight_dims.at(w)) == m);
}

TEST_CASE("contravariant pairing is nondegenerate at the top") {
  auto g = algebra('A', 2);
  Irrep v = build_irrep(g, {2, 0});
  CHECK(Rat(v.dim) == weyl_dimension(g->roots(), {2, 0}));
  const Mat<Rat>& top = v.gram.at(v.lambda);
  REQUIRE(top.size() == 1);
  CHECK(!is_zero(top[0][0]));
}

TEST_CASE("C2 five dimensional module") {
  auto g = algebra('C', 2);
  Irrep v = build_irrep(g, {0, 1});
  CHECK(v.dim == 5);
  CHECK(Rat(5) == weyl_dimension(g->roots(), {0, 1}));
  check_module_axiom(v);
}

TEST_CASE("weight multiplicities are Weyl symmetric") {
  auto g = algebra('A', 2);
  Irrep v = build_irrep(g, {2, 1});
  CHECK(Rat(v.dim) == weyl_dimension(g->roots(), {2, 1}));
  const RootSystem& rs = g->roots();
  for (const auto& [w, d] : v.weight_dims) {
    for (int i = 0; i < rs.rank; ++i) {
      // simple reflection in omega-coords: mu - mu_i * (column i of Cartan)
      WeightVec r = w;
      for (int t = 0; t < rs.rank; ++t) r[t] -= w[i] * rs.cartan[t][i];
      CHECK(v.weight_dims.at(r) == d);
    }
  }
  check_module_axiom(v);
}

TEST_CASE("non dominant weights are rejected") {
  auto g = algebra('A', 2);
  CHECK_THROWS_AS(build_irrep(g, {-1, 0}), Error);
  CHECK_THROWS_AS(build_irrep(g, {1}), Error);
}
