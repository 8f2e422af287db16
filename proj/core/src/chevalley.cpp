#include "lietor/chevalley.hpp"

#include <json.hpp>
#include <sstream>

#include "lietor/error.hpp"

namespace lietor {

namespace {

RootVec vneg(const RootVec& a) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RootVec vadd(const RootVec& a, const RootVec& b) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool vzero(const RootVec& a) {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

bool vpos(const RootVec& a) {
  for (long c : a)
    if (c < 0) return false;
  return true;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  compute_constants();
  build_table();
  build_form();
}

// Length p of the descending alpha-string through beta: max i with
// beta - i*alpha a root.
static long string_down(const RootSystem& rs, const RootVec& alpha, const RootVec& beta) {
  long p = 0;
  RootVec cur = beta;
  while (true) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= alpha[i];
    if (vzero(cur) || !rs.is_root(cur)) break;
    ++p;
  }
  return p;
}

// Structure constants on pairs of positive roots, extraspecial-pair
// convention: process sums by increasing height, fix N = p+1 on the
// extraspecial pair, and derive the rest from the Jacobi quadruple
// identity. Constants for mixed-sign pairs follow from the cyclic
// relations; see n_constant().
void ChevalleyAlgebra::compute_constants() {
  int np = npos();
  n_.assign(np, std::vector<long>(np, 0));
  for (int g = rs_.rank; g < np; ++g) {
    const RootVec& gamma = rs_.positive[g];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < g; ++a) {
      RootVec rest = vadd(gamma, vneg(rs_.positive[a]));
      auto it = rs_.index.find(rest);
      if (it == rs_.index.end()) continue;
      int b = it->second;
      if (a < b) pairs.emplace_back(a, b);
    }
    require(!pairs.empty(), Errc::Internal, "no special pair for a non-simple root");
    auto [eps, eta] = pairs.front();
    long p = string_down(rs_, rs_.positive[eps], rs_.positive[eta]);
    n_[eps][eta] = p + 1;
    n_[eta][eps] = -(p + 1);
    Rat gnorm = rs_.norm2(gamma);
    for (size_t t = 1; t < pairs.size(); ++t) {
      auto [a, b] = pairs[t];
      const RootVec &va = rs_.positive[a], &vb = rs_.positive[b];
      const RootVec &ve = rs_.positive[eps], &vh = rs_.positive[eta];
      Rat term1(0), term2(0);
      RootVec d1 = vadd(vh, vneg(va));  // eta - alpha = beta - eps
      if (rs_.is_root(d1)) {
        term1 = n_constant_signed(vh, va, false, true) * n_constant_signed(ve, vb, false, true) /
                rs_.norm2(d1);
      }
      RootVec d2 = vadd(ve, vneg(va));  // eps - alpha
      if (rs_.is_root(d2)) {
        term2 = n_constant_signed(va, ve, true, false) * n_constant_signed(vh, vb, false, true) /
                rs_.norm2(d2);
      }
      Rat val = gnorm * (term1 + term2) / Rat(n_[eps][eta]);
      require(is_integer(val) && !is_zero(val), Errc::Internal,
              "non-integral structure constant");
      long expect = string_down(rs_, va, vb) + 1;
      require(val == Rat(expect) || val == Rat(-expect), Errc::Internal,
              "structure constant magnitude mismatch");
      n_[a][b] = to_long(val);
      n_[b][a] = -n_[a][b];
    }
  }
}

Rat ChevalleyAlgebra::npos_pair(int a, int b) const { return Rat(n_[a][b]); }

// N for signed roots x = (-1)^xn * vx, y = (-1)^yn * vy given by positive
// parts. Zero when the sum is not a root.
Rat ChevalleyAlgebra::n_constant_signed(const RootVec& vx, const RootVec& vy, bool xn,
                                        bool yn) const {
  RootVec x = xn ? vneg(vx) : vx;
  RootVec y = yn ? vneg(vy) : vy;
  RootVec s = vadd(x, y);
  if (vzero(s) || !rs_.is_root(s)) return Rat(0);
  if (!xn && !yn) return npos_pair(rs_.index.at(vx), rs_.index.at(vy));
  if (xn && yn) return -n_constant_signed(vx, vy, false, false);
  if (xn && !yn) return -n_constant_signed(vy, vx, false, true);
  // x positive, y negative
  if (vpos(s)) {
    // N_{x,y} = -(s,s)/(x,x) * N_{-y, s}
    return -(rs_.norm2(s) / rs_.norm2(x)) * n_constant_signed(vy, s, false, false);
  }
  RootVec ms = vneg(s);
  // N_{x,y} = (s,s)/(y,y) * N_{-s, x}
  return (rs_.norm2(s) / rs_.norm2(vy)) * n_constant_signed(ms, vx, false, false);
}

Rat ChevalleyAlgebra::n_constant(int ai, bool aneg, int bi, bool bneg) const {
  return n_constant_signed(rs_.positive[ai], rs_.positive[bi], aneg, bneg);
}

Vec<Rat> ChevalleyAlgebra::coroot_h(const RootVec& alpha) const {
  Rat n = rs_.norm2(alpha);
  require(!is_zero(n), Errc::NullRoot, "coroot of the zero vector");
  Vec<Rat> c(rs_.rank, Rat(0));
  for (int i = 0; i < rs_.rank; ++i) c[i] = Rat(2 * alpha[i]) * rs_.d[i] / n;
  return c;
}

void ChevalleyAlgebra::build_table() {
  int d = dim(), np = npos();
  table_.assign(d, std::vector<SparseRat>(d));
  auto set_pair = [&](int i, int j, SparseRat v) {
    SparseRat negv;
    for (auto& [k, c] : v) negv.emplace_back(k, -c);
    table_[i][j] = std::move(v);
    table_[j][i] = std::move(negv);
  };
  // root-root brackets
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < np; ++b) {
      for (bool an : {false, true}) {
        for (bool bn : {false, true}) {
          int i = an ? f_index(a) : e_index(a);
          int j = bn ? f_index(b) : e_index(b);
          if (i > j) continue;
          RootVec x = an ? vneg(rs_.positive[a]) : rs_.positive[a];
          RootVec y = bn ? vneg(rs_.positive[b]) : rs_.positive[b];
          RootVec s = vadd(x, y);
          SparseRat out;
          if (vzero(s)) {
            // [e_alpha, f_alpha] = h_alpha
            Vec<Rat> c = coroot_h(rs_.positive[a]);
            for (int k = 0; k < rs_.rank; ++k)
              if (!is_zero(c[k])) out.emplace_back(h_index(k), an ? -c[k] : c[k]);
          } else if (rs_.is_root(s)) {
            Rat nv = n_constant_signed(rs_.positive[a], rs_.positive[b], an, bn);
            int k = vpos(s) ? e_index(rs_.index.at(s)) : f_index(rs_.index.at(vneg(s)));
            if (!is_zero(nv)) out.emplace_back(k, nv);
          }
          set_pair(i, j, std::move(out));
        }
      }
    }
  }
  // h brackets
  for (int i = 0; i < rs_.rank; ++i) {
    for (int a = 0; a < np; ++a) {
      long pr = rs_.pair_coroot(rs_.positive[a], i);
      SparseRat oe, of;
      if (pr != 0) {
        oe.emplace_back(e_index(a), Rat(pr));
        of.emplace_back(f_index(a), Rat(-pr));
      }
      set_pair(h_index(i), e_index(a), std::move(oe));
      set_pair(h_index(i), f_index(a), std::move(of));
    }
    for (int j = i; j < rs_.rank; ++j) set_pair(h_index(i), h_index(j), {});
  }
}

void ChevalleyAlgebra::build_form() {
  int d = dim(), np = npos();
  form_.assign(d, std::vector<Rat>(d, Rat(0)));
  for (int a = 0; a < np; ++a) {
    Rat v = Rat(2) / rs_.norm2(rs_.positive[a]);
    form_[e_index(a)][f_index(a)] = v;
    form_[f_index(a)][e_index(a)] = v;
  }
  for (int i = 0; i < rs_.rank; ++i)
    for (int j = 0; j < rs_.rank; ++j) form_[h_index(i)][h_index(j)] = Rat(rs_.cartan[i][j]) / rs_.d[j];
}

Vec<Rat> ChevalleyAlgebra::bracket(const Vec<Rat>& x, const Vec<Rat>& y) const {
  Vec<Rat> out(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      for (const auto& [k, c] : table_[i][j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Rat ChevalleyAlgebra::form(const Vec<Rat>& x, const Vec<Rat>& y) const {
  Rat out(0);
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y[j]) || is_zero(form_[i][j])) continue;
      out += x[i] * form_[i][j] * y[j];
    }
  }
  return out;
}

Mat<Rat> ChevalleyAlgebra::ad(const Vec<Rat>& x) const {
  Mat<Rat> m = mat_zero<Rat>(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      for (const auto& [k, c] : table_[i][j]) m[k][j] += x[i] * c;
    }
  }
  return m;
}

std::string ChevalleyAlgebra::basis_name(int i) const {
  if (i < npos()) return "e" + std::to_string(i + 1);
  if (i < 2 * npos()) return "f" + std::to_string(i - npos() + 1);
  return "h" + std::to_string(i - 2 * npos() + 1);
}

std::string ChevalleyAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = rs_.name();
  j["dim"] = dim();
  j["positive_roots"] = nlohmann::json::array();
  for (const auto& r : rs_.positive) j["positive_roots"].push_back(r);
  j["basis"] = nlohmann::json::array();
  for (int i = 0; i < dim(); ++i) j["basis"].push_back(basis_name(i));
  auto triples = nlohmann::json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b)
      for (const auto& [k, c] : table_[a][b])
        triples.push_back({basis_name(a), basis_name(b), basis_name(k), rat_str(c)});
  j["brackets"] = std::move(triples);
  return j.dump(2);
}

ChevalleyAlgebra build_simple(char type, int rank) {
  return ChevalleyAlgebra(build_root_system(type, rank));
}

}  // namespace lietor
