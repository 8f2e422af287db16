#include "lietor/grading.hpp"

#include <algorithm>
#include <sstream>

#include "lietor/error.hpp"

namespace lietor {

namespace {

std::string class_str(const ClassVec& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

std::string matrix_key(const Mat<Cyc>& m) {
  std::ostringstream os;
  for (const auto& row : m)
    for (const auto& v : row) os << v.str() << ";";
  return os.str();
}

// basis of the intersection of two spans (vectors in ambient coords)
std::vector<Vec<Cyc>> intersect_spans(const std::vector<Vec<Cyc>>& a,
                                      const std::vector<Vec<Cyc>>& b) {
  if (a.empty() || b.empty()) return {};
  size_t dim = a[0].size();
  Mat<Cyc> sys = mat_zero<Cyc>(dim, a.size() + b.size());
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < dim; ++i) sys[i][j] = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t i = 0; i < dim; ++i) sys[i][a.size() + j] = -b[j][i];
  std::vector<Vec<Cyc>> out;
  SpanBuilder<Cyc> sb;
  for (const auto& ns : nullspace(sys)) {
    Vec<Cyc> x(dim, Cyc(0));
    for (size_t j = 0; j < a.size(); ++j)
      for (size_t i = 0; i < dim; ++i) x[i] += ns[j] * a[j][i];
    if (!vec_is_zero(x) && sb.add(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<ClassVec> GradingGroup::elements() const {
  std::vector<ClassVec> out;
  ClassVec cur(m.size(), 0);
  while (true) {
    out.push_back(cur);
    int i = (int)m.size() - 1;
    while (i >= 0) {
      if (++cur[i] < m[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradingGroup validate_tuple(const std::vector<FiniteOrderAut>& sigma,
                            const std::vector<long>& m) {
  require(sigma.size() == m.size(), Errc::OrderMismatch,
          "tuple and order vector have different lengths");
  for (size_t i = 0; i < sigma.size(); ++i)
    require(m[i] >= 1, Errc::OrderMismatch, "orders must be positive");
  for (size_t i = 0; i < sigma.size(); ++i) {
    for (size_t j = i + 1; j < sigma.size(); ++j) {
      if (!mat_equal(mat_mul(sigma[i].sigma, sigma[j].sigma),
                     mat_mul(sigma[j].sigma, sigma[i].sigma)))
        raise(Errc::NonCommuting, "sigma_" + std::to_string(i + 1) + " and sigma_" +
                                      std::to_string(j + 1) + " do not commute");
    }
  }
  for (size_t i = 0; i < sigma.size(); ++i) {
    long ord = matrix_order(sigma[i].sigma, m[i]);
    if (ord != m[i])
      raise(Errc::OrderMismatch, "sigma_" + std::to_string(i + 1) + " has order " +
                                     std::to_string(ord > 0 ? ord : sigma[i].order) +
                                     ", declared m = " + std::to_string(m[i]));
  }
  // group order by closure
  GradingGroup grp{m};
  long want = grp.size();
  std::map<std::string, Mat<Cyc>> seen;
  std::vector<Mat<Cyc>> frontier;
  Mat<Cyc> id = mat_identity<Cyc>(sigma.empty() ? 0 : sigma[0].sigma.size());
  seen[matrix_key(id)] = id;
  frontier.push_back(id);
  while (!frontier.empty()) {
    require((long)seen.size() <= want, Errc::GroupOrderViolation,
            "generated group exceeds prod m_i = " + std::to_string(want));
    std::vector<Mat<Cyc>> next;
    for (const auto& cur : frontier) {
      for (const auto& s : sigma) {
        Mat<Cyc> prod = mat_mul(s.sigma, cur);
        std::string key = matrix_key(prod);
        if (seen.emplace(key, prod).second) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  if ((long)seen.size() != want)
    raise(Errc::GroupOrderViolation, "generated group has order " +
                                         std::to_string(seen.size()) + " != prod m_i = " +
                                         std::to_string(want));
  return grp;
}

Vec<Cyc> EigenspaceDecomposition::bracket_refined(const Vec<Cyc>& x, const Vec<Cyc>& y) const {
  Vec<Cyc> out((size_t)g->dim(), Cyc(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [k, c] : btab[i][j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Cyc EigenspaceDecomposition::form_refined(const Vec<Cyc>& x, const Vec<Cyc>& y) const {
  Cyc out(0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || ftab[i][j].is_zero()) continue;
      out += x[i] * y[j] * ftab[i][j];
    }
  }
  return out;
}

WeightLabel EigenspaceDecomposition::weight_add(const WeightLabel& a, const WeightLabel& b) const {
  WeightLabel out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

WeightLabel EigenspaceDecomposition::weight_scale(const WeightLabel& a, const Rat& s) const {
  WeightLabel out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool EigenspaceDecomposition::weight_positive(const WeightLabel& w) {
  for (const auto& v : w) {
    if (is_zero(v)) continue;
    return sgn(v) > 0;
  }
  return false;
}

Vec<Rat> EigenspaceDecomposition::weight_rep(const WeightLabel& a) const {
  size_t h = h0_basis.size();
  Mat<Rat> gram = mat_zero<Rat>(h, h);
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j) gram[i][j] = g->form(h0_basis[i], h0_basis[j]);
  auto x = solve(gram, a);
  require(x.has_value(), Errc::Internal, "form degenerate on h0");
  Vec<Rat> rep((size_t)g->dim(), Rat(0));
  for (size_t j = 0; j < h; ++j)
    for (size_t t = 0; t < rep.size(); ++t) rep[t] += (*x)[j] * h0_basis[j][t];
  return rep;
}

Rat EigenspaceDecomposition::weight_ip(const WeightLabel& a, const WeightLabel& b) const {
  Vec<Rat> tb = weight_rep(b);
  // a(t_b): expand t_b in the h0 basis again via its pairing values
  // easier: (a,b) = a(t_b) = sum_j x_j a(b_j) with t_b = sum x_j b_j
  size_t h = h0_basis.size();
  Mat<Rat> gram = mat_zero<Rat>(h, h);
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j) gram[i][j] = g->form(h0_basis[i], h0_basis[j]);
  auto x = solve(gram, b);
  require(x.has_value(), Errc::Internal, "form degenerate on h0");
  Rat out(0);
  for (size_t j = 0; j < h; ++j) out += (*x)[j] * a[j];
  return out;
}

Vec<Rat> EigenspaceDecomposition::coroot_of_weight(const WeightLabel& a) const {
  Rat n = weight_ip(a, a);
  require(!is_zero(n), Errc::NullRoot, "coroot of a null weight");
  Vec<Rat> rep = weight_rep(a);
  for (auto& v : rep) v = v * Rat(2) / n;
  return rep;
}

std::vector<WeightLabel> EigenspaceDecomposition::delta0_simple() const {
  std::vector<WeightLabel> pos;
  for (const auto& w : delta0)
    if (weight_positive(w)) pos.push_back(w);
  std::vector<WeightLabel> out;
  for (const auto& a : pos) {
    bool sum = false;
    for (const auto& b : pos) {
      for (const auto& c : pos) {
        if (weight_add(b, c) == a) sum = true;
        if (sum) break;
      }
      if (sum) break;
    }
    if (!sum) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<long>> EigenspaceDecomposition::delta0_cartan() const {
  auto simples = delta0_simple();
  size_t l = simples.size();
  std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < l; ++j) {
      Rat v = Rat(2) * weight_ip(simples[j], simples[i]) / weight_ip(simples[i], simples[i]);
      require(is_integer(v), Errc::Internal, "non-integral Cartan pairing on Delta_0");
      a[i][j] = to_long(v);
    }
  }
  return a;
}

DecPtr eigenspace_decompose(AlgebraPtr gp, const std::vector<FiniteOrderAut>& sigma,
                            const std::vector<long>& m) {
  const ChevalleyAlgebra& g = *gp;
  auto dec = std::make_shared<EigenspaceDecomposition>();
  dec->g = gp;
  dec->sigma = sigma;
  dec->group = validate_tuple(sigma, m);
  dec->conductor = 1;
  for (long v : m) dec->conductor = std::lcm(dec->conductor, v);
  for (size_t i = 0; i < m.size(); ++i)
    dec->xi.push_back(Cyc::root_of_unity(dec->conductor, dec->conductor / m[i]));

  int d = g.dim();
  int n = (int)m.size();

  // eigenspace bases per class
  std::map<ClassVec, std::vector<Vec<Cyc>>> raw;
  int total = 0;
  for (const auto& c : dec->group.elements()) {
    Mat<Cyc> sys = mat_zero<Cyc>((size_t)(n * d), (size_t)d);
    for (int i = 0; i < n; ++i) {
      Cyc ev = dec->xi[i].pow(c[i]);
      for (int r = 0; r < d; ++r) {
        for (int t = 0; t < d; ++t) sys[i * d + r][t] = sigma[i].sigma[r][t];
        sys[i * d + r][r] -= ev;
      }
    }
    auto ns = nullspace(sys);
    if (!ns.empty()) raw[c] = ns;
    total += (int)ns.size();
  }
  require(total == d, Errc::Internal, "eigenspace dimensions do not sum to dim g");

  // h0 = h intersect g_0
  std::vector<Vec<Cyc>> hspan;
  for (int i = 0; i < g.rank(); ++i) {
    Vec<Cyc> v((size_t)d, Cyc(0));
    v[g.h_index(i)] = Cyc(1);
    hspan.push_back(std::move(v));
  }
  ClassVec zero(n, 0);
  auto it0 = raw.find(zero);
  require(it0 != raw.end(), Errc::Internal, "g_0 is zero; no Cartan data available");
  std::vector<Vec<Cyc>> h0 = intersect_spans(it0->second, hspan);
  for (const auto& v : h0) {
    Vec<Rat> rv((size_t)d, Rat(0));
    for (int t = 0; t < d; ++t) {
      require(v[t].is_rational(), Errc::CartanNotPreserved,
              "h0 basis is not rational; tuple outside the supported family");
      rv[t] = v[t].rational();
    }
    dec->h0_basis.push_back(std::move(rv));
  }

  // candidate weights: restrictions of the roots of (g, h)
  const RootSystem& rs = g.roots();
  std::set<WeightLabel> candidates;
  {
    WeightLabel z(dec->h0_basis.size(), Rat(0));
    candidates.insert(z);
  }
  for (const auto& alpha : rs.positive) {
    for (int sign : {1, -1}) {
      WeightLabel w(dec->h0_basis.size(), Rat(0));
      for (size_t j = 0; j < dec->h0_basis.size(); ++j) {
        Rat v(0);
        for (int i = 0; i < rs.rank; ++i)
          v += dec->h0_basis[j][g.h_index(i)] * Rat(rs.pair_coroot(alpha, i));
        w[j] = Rat(sign) * v;
      }
      candidates.insert(w);
    }
  }

  // ad matrices of the h0 basis
  std::vector<Mat<Rat>> adh;
  for (const auto& b : dec->h0_basis) adh.push_back(g.ad(b));

  // refine each class by weight
  for (const auto& [cls, vecs] : raw) {
    int found = 0;
    for (const auto& w : candidates) {
      // rows: stacked (ad b_j - w_j) applied to span coordinates
      size_t k = vecs.size();
      Mat<Cyc> sys = mat_zero<Cyc>(dec->h0_basis.size() * (size_t)d, k);
      for (size_t j = 0; j < dec->h0_basis.size(); ++j) {
        for (size_t t = 0; t < k; ++t) {
          Vec<Cyc> img((size_t)d, Cyc(0));
          for (int r = 0; r < d; ++r) {
            for (int s = 0; s < d; ++s) {
              if (is_zero(adh[j][r][s]) || vecs[t][s].is_zero()) continue;
              img[r] += Cyc(adh[j][r][s]) * vecs[t][s];
            }
            img[r] -= Cyc(w[j]) * vecs[t][r];
          }
          for (int r = 0; r < d; ++r) sys[j * d + r][t] = img[r];
        }
      }
      auto ns = nullspace(sys);
      if (ns.empty()) continue;
      auto key = std::make_pair(cls, w);
      for (const auto& coeffs : ns) {
        Vec<Cyc> x((size_t)d, Cyc(0));
        for (size_t t = 0; t < k; ++t)
          for (int r = 0; r < d; ++r) x[r] += coeffs[t] * vecs[t][r];
        dec->by_class_weight[key].push_back((int)dec->basis.size());
        dec->by_class[cls].push_back((int)dec->basis.size());
        dec->basis.push_back({std::move(x), cls, w});
        ++found;
      }
      if (!vec_is_zero(w)) {
        dec->delta.insert(w);
        if (cls == zero) dec->delta0.insert(w);
      }
    }
    require(found == (int)vecs.size(), Errc::Internal,
            "weight refinement lost dimensions in class " + class_str(cls));
    dec->dims[cls] = found;
  }

  // Cartan check: g_0(0) must equal h0
  {
    auto itz = dec->by_class_weight.find({zero, WeightLabel(dec->h0_basis.size(), Rat(0))});
    size_t centralizer = itz == dec->by_class_weight.end() ? 0 : itz->second.size();
    require(centralizer == dec->h0_basis.size(), Errc::CartanNotPreserved,
            "h0 is not a Cartan subalgebra of g_0; tuple outside the supported family");
  }

  // change of basis and tables
  dec->basis_mat = mat_zero<Cyc>((size_t)d, (size_t)d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) dec->basis_mat[i][j] = dec->basis[j].vec[i];
  auto inv = mat_inverse(dec->basis_mat);
  require(inv.has_value(), Errc::Internal, "refined basis is singular");
  dec->basis_inv = std::move(*inv);

  dec->btab.assign(d, std::vector<std::vector<std::pair<int, Cyc>>>(d));
  dec->ftab = mat_zero<Cyc>(d, d);
  auto bracket_chev = [&](const Vec<Cyc>& x, const Vec<Cyc>& y) {
    Vec<Cyc> out((size_t)d, Cyc(0));
    for (int i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        for (const auto& [k, c] : g.bracket_basis(i, j)) out[k] += x[i] * y[j] * Cyc(c);
      }
    }
    return out;
  };
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      Vec<Cyc> br = bracket_chev(dec->basis[p].vec, dec->basis[q].vec);
      Vec<Cyc> rf = dec->to_refined(br);
      for (int t = 0; t < d; ++t)
        if (!rf[t].is_zero()) dec->btab[p][q].emplace_back(t, rf[t]);
      Cyc f(0);
      for (int i = 0; i < d; ++i) {
        if (dec->basis[p].vec[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
          if (dec->basis[q].vec[j].is_zero() || is_zero(g.form_basis(i, j))) continue;
          f += dec->basis[p].vec[i] * dec->basis[q].vec[j] * Cyc(g.form_basis(i, j));
        }
      }
      dec->ftab[p][q] = std::move(f);
    }
  }
  return dec;
}

FiniteOrderAut character_aut(const EigenspaceDecomposition& dec, const std::vector<Cyc>& chi) {
  require((int)chi.size() == dec.group.n(), Errc::NotAHomomorphism,
          "need one character value per grading generator");
  for (size_t i = 0; i < chi.size(); ++i) {
    require(chi[i].pow(dec.group.m[i]) == Cyc(1), Errc::NotAHomomorphism,
            "chi_" + std::to_string(i + 1) + " = " + chi[i].str() + " is not killed by m_" +
                std::to_string(i + 1));
  }
  int d = dec.g->dim();
  Mat<Cyc> diag = mat_zero<Cyc>(d, d);
  long order = 1;
  for (int p = 0; p < d; ++p) {
    Cyc v(1);
    for (size_t i = 0; i < chi.size(); ++i) v *= chi[i].pow(dec.basis[p].kbar[i]);
    diag[p][p] = v;
  }
  for (size_t i = 0; i < chi.size(); ++i) {
    long t = chi[i].torsion_order();
    if (t > 0) order = std::lcm(order, t);
  }
  Mat<Cyc> m = mat_mul(dec.basis_mat, mat_mul(diag, dec.basis_inv));
  return FiniteOrderAut{dec.g, std::move(m), order};
}

std::vector<std::vector<Cyc>> all_characters(const EigenspaceDecomposition& dec) {
  std::vector<std::vector<Cyc>> out;
  std::vector<long> exp(dec.group.n(), 0);
  while (true) {
    std::vector<Cyc> chi;
    for (int i = 0; i < dec.group.n(); ++i) chi.push_back(dec.xi[i].pow(exp[i]));
    out.push_back(std::move(chi));
    int i = dec.group.n() - 1;
    while (i >= 0) {
      if (++exp[i] < dec.group.m[i]) break;
      exp[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<WeightVec> ghat_orbit(const EigenspaceDecomposition& dec, const WeightVec& lambda) {
  require(is_dominant(lambda) && (int)lambda.size() == dec.g->rank(), Errc::NonDominantWeight,
          "orbit of a non-dominant weight");
  std::vector<WeightVec> out;
  for (const auto& chi : all_characters(dec)) {
    FiniteOrderAut a = character_aut(dec, chi);
    WeightVec mu = act_on_weight(outer_part(a), lambda);
    if (std::find(out.begin(), out.end(), mu) == out.end()) out.push_back(mu);
  }
  require(!out.empty() && out.front() == lambda, Errc::Internal,
          "trivial character did not fix lambda");
  return out;
}

std::vector<std::vector<Cyc>> ghat_orbit_chars(const EigenspaceDecomposition& dec,
                                               const WeightVec& lambda) {
  std::vector<WeightVec> orbit;
  std::vector<std::vector<Cyc>> chars;
  for (const auto& chi : all_characters(dec)) {
    FiniteOrderAut a = character_aut(dec, chi);
    WeightVec mu = act_on_weight(outer_part(a), lambda);
    if (std::find(orbit.begin(), orbit.end(), mu) == orbit.end()) {
      orbit.push_back(mu);
      chars.push_back(chi);
    }
  }
  return chars;
}

std::vector<int> lie_generating_subset(const EigenspaceDecomposition& dec,
                                       const std::vector<int>& indices) {
  int d = dec.g->dim();
  std::vector<int> gens;
  SpanBuilder<Cyc> closure;
  auto unit = [&](int p) {
    Vec<Cyc> v((size_t)d, Cyc(0));
    v[p] = Cyc(1);
    return v;
  };
  std::vector<Vec<Cyc>> members;
  for (int p : indices) {
    Vec<Cyc> v = unit(p);
    if (!closure.add(v)) continue;
    gens.push_back(p);
    members.push_back(v);
    // saturate the Lie closure of the current generators
    size_t frontier = members.size() - 1;
    while (frontier < members.size()) {
      size_t end = members.size();
      for (size_t t = frontier; t < end; ++t) {
        for (size_t s = 0; s < end; ++s) {
          Vec<Cyc> br = dec.bracket_refined(members[t], members[s]);
          if (!vec_is_zero(br) && closure.add(br)) members.push_back(std::move(br));
        }
      }
      frontier = end;
    }
  }
  return gens;
}

namespace {

// dim of the commutant of the g_0-action on a subspace with basis `w`
// (vectors in refined coordinates).
size_t commutant_dim(const EigenspaceDecomposition& dec, const std::vector<Vec<Cyc>>& w) {
  size_t wd = w.size();
  int d = dec.g->dim();
  ClassVec zero(dec.group.n(), 0);
  const std::vector<int> g0 = lie_generating_subset(dec, dec.by_class.at(zero));
  // action matrices of generators of g_0 on span(w); commuting with the
  // generators is commuting with everything they generate
  std::vector<Mat<Cyc>> mats;
  for (int p : g0) {
    Vec<Cyc> bp((size_t)d, Cyc(0));
    bp[p] = Cyc(1);
    Mat<Cyc> a = mat_zero<Cyc>(wd, wd);
    for (size_t t = 0; t < wd; ++t) {
      Vec<Cyc> img = dec.bracket_refined(bp, w[t]);
      auto coords = coords_in_span(w, img);
      require(coords.has_value(), Errc::Internal, "subspace not g_0-stable");
      for (size_t r = 0; r < wd; ++r) a[r][t] = (*coords)[r];
    }
    mats.push_back(std::move(a));
  }
  // solve [T, A] = 0 for all A
  Mat<Cyc> sys = mat_zero<Cyc>(mats.size() * wd * wd, wd * wd);
  for (size_t m = 0; m < mats.size(); ++m) {
    const Mat<Cyc>& a = mats[m];
    for (size_t i = 0; i < wd; ++i)
      for (size_t j = 0; j < wd; ++j) {
        size_t row = m * wd * wd + i * wd + j;
        // (TA - AT)_{ij} = sum_k T_{ik} A_{kj} - A_{ik} T_{kj}
        for (size_t k = 0; k < wd; ++k) {
          sys[row][i * wd + k] += a[k][j];
          sys[row][k * wd + j] -= a[i][k];
        }
      }
  }
  return nullspace(sys).size();
}

}  // namespace

LieTorusReport check_lie_torus(const EigenspaceDecomposition& dec, long window) {
  LieTorusReport rep;
  const ChevalleyAlgebra& g = *dec.g;
  int d = g.dim();
  int n = dec.group.n();
  ClassVec zero(n, 0);
  const WeightLabel wzero(dec.h0_basis.size(), Rat(0));

  // (1) g_0 is a finite-dimensional simple Lie algebra
  {
    bool pass = true;
    std::ostringstream detail;
    const auto& g0idx = dec.by_class.at(zero);
    size_t g0d = g0idx.size();
    if (g0d == 0 || dec.h0_basis.empty()) {
      pass = false;
      detail << "g_0 has dimension " << g0d;
    } else {
      // Killing form of g_0 on its own basis
      std::vector<Vec<Cyc>> g0vec;
      for (int p : g0idx) {
        Vec<Cyc> v((size_t)d, Cyc(0));
        v[p] = Cyc(1);
        g0vec.push_back(std::move(v));
      }
      std::vector<Mat<Cyc>> ad0;
      for (size_t t = 0; t < g0d; ++t) {
        Mat<Cyc> a = mat_zero<Cyc>(g0d, g0d);
        for (size_t s = 0; s < g0d; ++s) {
          Vec<Cyc> img = dec.bracket_refined(g0vec[t], g0vec[s]);
          auto coords = coords_in_span(g0vec, img);
          require(coords.has_value(), Errc::Internal, "g_0 not closed under bracket");
          for (size_t r = 0; r < g0d; ++r) a[r][s] = (*coords)[r];
        }
        ad0.push_back(std::move(a));
      }
      Mat<Cyc> killing = mat_zero<Cyc>(g0d, g0d);
      for (size_t i = 0; i < g0d; ++i)
        for (size_t j = 0; j < g0d; ++j) {
          Cyc tr(0);
          Mat<Cyc> prod = mat_mul(ad0[i], ad0[j]);
          for (size_t t = 0; t < g0d; ++t) tr += prod[t][t];
          killing[i][j] = std::move(tr);
        }
      if (mat_rank(killing) != g0d) {
        pass = false;
        detail << "Killing form of g_0 is degenerate (dim g_0 = " << g0d << ")";
      } else {
        auto cls = classify_cartan(dec.delta0_cartan());
        if (!cls.has_value()) {
          pass = false;
          detail << "Delta_0 is not an irreducible root system";
        } else {
          detail << "g_0 simple of type " << cls->first << cls->second << ", dim " << g0d;
        }
      }
    }
    rep.entries.push_back({"lie-torus (1): g_0 simple", pass, detail.str()});
  }

  // Delta_en of Delta_0 (doubles of short roots in the B cases)
  std::set<WeightLabel> delta_en = dec.delta0;
  {
    std::optional<std::pair<char, int>> cls;
    if (!dec.delta0_simple().empty()) cls = classify_cartan(dec.delta0_cartan());
    bool btype = cls.has_value() && (cls->first == 'B' || cls->second == 1);
    if (btype) {
      Rat minn;
      bool first = true;
      for (const auto& a : dec.delta0) {
        Rat nn = dec.weight_ip(a, a);
        if (first || nn < minn) {
          minn = nn;
          first = false;
        }
      }
      for (const auto& a : dec.delta0)
        if (dec.weight_ip(a, a) == minn) delta_en.insert(dec.weight_scale(a, Rat(2)));
    }
  }

  // (2) condition (M) on each nonzero class
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [cls, idxs] : dec.by_class) {
      if (cls == zero || idxs.empty()) continue;
      // trivial part U: joint kernel of the g_0 action
      const auto& g0idx = dec.by_class.at(zero);
      std::vector<Vec<Cyc>> kvecs;
      {
        size_t k = idxs.size();
        Mat<Cyc> sys = mat_zero<Cyc>(g0idx.size() * (size_t)d, k);
        for (size_t gi = 0; gi < g0idx.size(); ++gi) {
          Vec<Cyc> bp((size_t)d, Cyc(0));
          bp[g0idx[gi]] = Cyc(1);
          for (size_t t = 0; t < k; ++t) {
            Vec<Cyc> xt((size_t)d, Cyc(0));
            xt[idxs[t]] = Cyc(1);
            Vec<Cyc> img = dec.bracket_refined(bp, xt);
            for (int r = 0; r < d; ++r) sys[gi * d + r][t] = img[r];
          }
        }
        for (const auto& nsv : nullspace(sys)) {
          Vec<Cyc> x((size_t)d, Cyc(0));
          for (size_t t = 0; t < nsv.size(); ++t) x[idxs[t]] = nsv[t];
          kvecs.push_back(std::move(x));
        }
      }
      // W = [g_0, g_cls]
      std::vector<Vec<Cyc>> wvecs;
      {
        SpanBuilder<Cyc> sb;
        for (int p : dec.by_class.at(zero)) {
          Vec<Cyc> bp((size_t)d, Cyc(0));
          bp[p] = Cyc(1);
          for (int t : idxs) {
            Vec<Cyc> xt((size_t)d, Cyc(0));
            xt[t] = Cyc(1);
            Vec<Cyc> img = dec.bracket_refined(bp, xt);
            if (!vec_is_zero(img) && sb.add(img)) wvecs.push_back(img);
          }
        }
      }
      bool independent = true;
      {
        SpanBuilder<Cyc> sb;
        for (const auto& v : kvecs) independent = sb.add(v) && independent;
        for (const auto& v : wvecs) independent = sb.add(v) && independent;
      }
      if (!independent || kvecs.size() + wvecs.size() != idxs.size()) {
        pass = false;
        detail << class_str(cls) << ": U+W split fails, dims " << kvecs.size() << "+"
               << wvecs.size() << " vs " << idxs.size() << "; ";
        continue;
      }
      if (wvecs.empty()) continue;
      if (wvecs.size() == 1) {
        pass = false;
        detail << class_str(cls) << ": W has dimension 1; ";
        continue;
      }
      if (commutant_dim(dec, wvecs) != 1) {
        pass = false;
        detail << class_str(cls) << ": W is not irreducible; ";
        continue;
      }
      // weights of W inside Delta_en cup {0}
      for (const auto& wv : wvecs) {
        for (int t = 0; t < d; ++t) {
          if (wv[t].is_zero()) continue;
          const WeightLabel& wt = dec.basis[t].weight;
          if (wt != wzero && !delta_en.count(wt)) {
            pass = false;
            detail << class_str(cls) << ": weight outside Delta_en; ";
            break;
          }
        }
      }
    }
    if (pass) detail << "U/W split with condition (M) on every nonzero class";
    rep.entries.push_back({"lie-torus (2): condition (M)", pass, detail.str()});
  }

  // LT3: dim g_k(alpha) <= 1 for alpha != 0
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [key, idxs] : dec.by_class_weight) {
      if (key.second == wzero) continue;
      if (idxs.size() > 1) {
        pass = false;
        detail << "dim g_" << class_str(key.first) << "(alpha) = " << idxs.size() << "; ";
      }
    }
    if (pass) detail << "all nonzero-weight spaces have dimension <= 1";
    rep.entries.push_back({"LT3: weight spaces", pass, detail.str()});
  }

  // LT4: centre of the multiloop algebra on the window is zero
  {
    bool pass = true;
    std::ostringstream detail;
    // degrees k in [-w,w]^n; for x in g_kbar to be central it must kill
    // every g_lbar with l reachable in the window
    std::vector<std::vector<long>> degs;
    std::vector<long> cur(n, -window);
    while (true) {
      degs.push_back(cur);
      int i = n - 1;
      while (i >= 0) {
        if (++cur[i] <= window) break;
        cur[i] = -window;
        --i;
      }
      if (i < 0) break;
    }
    for (const auto& k : degs) {
      ClassVec kc = dec.group.reduce(k);
      auto itk = dec.by_class.find(kc);
      if (itk == dec.by_class.end() || itk->second.empty()) continue;
      std::set<ClassVec> avail;
      for (const auto& l : degs) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
          if (std::abs(k[i] + l[i]) > window) ok = false;
        if (ok) avail.insert(dec.group.reduce(l));
      }
      const auto& idxs = itk->second;
      std::vector<int> gens;
      for (const auto& lc : avail) {
        auto itl = dec.by_class.find(lc);
        if (itl == dec.by_class.end()) continue;
        gens.insert(gens.end(), itl->second.begin(), itl->second.end());
      }
      Mat<Cyc> sys = mat_zero<Cyc>(gens.size() * (size_t)d, idxs.size());
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Vec<Cyc> bp((size_t)d, Cyc(0));
        bp[gens[gi]] = Cyc(1);
        for (size_t t = 0; t < idxs.size(); ++t) {
          Vec<Cyc> xt((size_t)d, Cyc(0));
          xt[idxs[t]] = Cyc(1);
          Vec<Cyc> img = dec.bracket_refined(xt, bp);
          for (int r = 0; r < d; ++r) sys[gi * d + r][t] = img[r];
        }
      }
      size_t z = nullspace(sys).size();
      if (z > 0) {
        pass = false;
        detail << "central loop elements at degree " << class_str(dec.group.reduce(k)) << "; ";
        break;
      }
    }
    if (pass) detail << "window centre of the multiloop algebra is zero (w = " +
                            std::to_string(window) + ")";
    rep.entries.push_back({"LT4: centre of LT", pass, detail.str()});
  }

  return rep;
}

}  // namespace lietor
