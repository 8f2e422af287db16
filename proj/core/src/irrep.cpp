#include "lietor/irrep.hpp"

#include <json.hpp>

#include "lietor/error.hpp"

namespace lietor {

namespace {

// Monomial in the simple lowering operators, applied left to right:
// [i1,...,ik] stands for f_{i1} f_{i2} ... f_{ik} v_lambda.
using Mono = std::vector<int>;
using Combo = std::map<Mono, Rat>;

void combo_add(Combo& c, const Mono& m, const Rat& v) {
  if (is_zero(v)) return;
  auto [it, fresh] = c.emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (is_zero(it->second)) c.erase(it);
  }
}

struct Builder {
  const ChevalleyAlgebra& g;
  const RootSystem& rs;
  WeightVec lambda;
  std::map<std::pair<int, Mono>, Combo> memo_e;

  WeightVec weight_of(const Mono& m) const {
    WeightVec w = lambda;
    for (int j : m)
      for (int i = 0; i < rs.rank; ++i) w[i] -= rs.cartan[i][j];
    return w;
  }

  // e_i applied to a monomial, as a combination of monomials.
  const Combo& apply_e(int i, const Mono& m) {
    auto key = std::make_pair(i, m);
    auto it = memo_e.find(key);
    if (it != memo_e.end()) return it->second;
    Combo out;
    if (!m.empty()) {
      int j = m.front();
      Mono rest(m.begin() + 1, m.end());
      // e_i f_j = f_j e_i + delta_ij h_i
      for (const auto& [mono, c] : apply_e(i, rest)) {
        Mono pre;
        pre.reserve(mono.size() + 1);
        pre.push_back(j);
        pre.insert(pre.end(), mono.begin(), mono.end());
        combo_add(out, pre, c);
      }
      if (i == j) {
        WeightVec w = weight_of(rest);
        combo_add(out, rest, Rat(w[i]));
      }
    }
    return memo_e.emplace(key, std::move(out)).first->second;
  }

  // Contravariant pairing <m, m'> with <v,v> = 1, f_i adjoint to e_i.
  Rat pair(const Mono& a, const Mono& b) {
    if (a.empty()) {
      // coefficient of the empty monomial in b (b is a plain monomial here)
      return b.empty() ? Rat(1) : Rat(0);
    }
    Rat out(0);
    const Combo& eb = apply_e(a.front(), b);
    Mono rest(a.begin() + 1, a.end());
    for (const auto& [mono, c] : eb) out += c * pair(rest, mono);
    return out;
  }

  Rat pair_combo(const Mono& a, const Combo& b) {
    Rat out(0);
    for (const auto& [mono, c] : b) out += c * pair(a, mono);
    return out;
  }
};

}  // namespace

Mat<Rat> Irrep::action_of(const Vec<Rat>& x) const {
  Mat<Rat> m = mat_zero<Rat>(dim, dim);
  for (size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        if (is_zero(act[i][r][c])) continue;
        m[r][c] += x[i] * act[i][r][c];
      }
  }
  return m;
}

std::string Irrep::to_json() const {
  nlohmann::ordered_json j;
  j["lambda"] = lambda;
  j["dim"] = dim;
  auto wd = nlohmann::json::array();
  for (const auto& [w, d] : weight_dims) wd.push_back({{"weight", w}, {"dim", d}});
  j["weights"] = std::move(wd);
  auto mats = nlohmann::json::array();
  for (size_t b = 0; b < act.size(); ++b) {
    auto entries = nlohmann::json::array();
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (!is_zero(act[b][r][c])) entries.push_back({r, c, rat_str(act[b][r][c])});
    mats.push_back({{"basis", g->basis_name((int)b)}, {"entries", std::move(entries)}});
  }
  j["action"] = std::move(mats);
  return j.dump(2);
}

Irrep build_irrep(AlgebraPtr gp, const WeightVec& lambda) {
  const ChevalleyAlgebra& g = *gp;
  const RootSystem& rs = g.roots();
  require((int)lambda.size() == rs.rank, Errc::NonDominantWeight, "weight has wrong rank");
  require(is_dominant(lambda), Errc::NonDominantWeight, "weight is not dominant integral");

  Builder bld{g, rs, lambda, {}};

  // Per weight: chosen basis monomials and inverse Gram.
  struct WData {
    std::vector<Mono> basis;
    Mat<Rat> gram;
    Mat<Rat> gram_inv;
    int offset = 0;  // global index of first vector
  };
  std::map<WeightVec, WData> spaces;

  std::vector<WeightVec> level = {lambda};
  spaces[lambda] = {{Mono{}}, {{Rat(1)}}, {{Rat(1)}}, 0};
  int total = 1;

  while (!level.empty()) {
    // candidates on the next level, grouped by weight
    std::map<WeightVec, std::vector<Mono>> cands;
    for (const auto& w : level) {
      const WData& wd = spaces.at(w);
      for (int i = 0; i < rs.rank; ++i) {
        WeightVec w2 = w;
        for (int t = 0; t < rs.rank; ++t) w2[t] -= rs.cartan[t][i];
        for (const Mono& b : wd.basis) {
          Mono m;
          m.reserve(b.size() + 1);
          m.push_back(i);
          m.insert(m.end(), b.begin(), b.end());
          cands[w2].push_back(std::move(m));
        }
      }
    }
    std::vector<WeightVec> next;
    for (auto& [w, ms] : cands) {
      // Gram of all candidates at this weight
      size_t n = ms.size();
      Mat<Rat> gr = mat_zero<Rat>(n, n);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) gr[a][b] = gr[b][a] = bld.pair(ms[a], ms[b]);
      // greedy independent columns
      SpanBuilder<Rat> sb;
      std::vector<size_t> sel;
      for (size_t j = 0; j < n; ++j) {
        Vec<Rat> col(n);
        for (size_t a = 0; a < n; ++a) col[a] = gr[a][j];
        if (sb.add(col)) sel.push_back(j);
      }
      if (sel.empty()) continue;
      WData wd;
      for (size_t j : sel) wd.basis.push_back(ms[j]);
      size_t r = sel.size();
      wd.gram = mat_zero<Rat>(r, r);
      for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) wd.gram[a][b] = gr[sel[a]][sel[b]];
      auto inv = mat_inverse(wd.gram);
      require(inv.has_value(), Errc::Internal, "contravariant Gram not invertible on basis");
      wd.gram_inv = std::move(*inv);
      wd.offset = total;
      total += (int)r;
      spaces[w] = std::move(wd);
      next.push_back(w);
    }
    level = std::move(next);
  }

  Irrep out;
  out.g = gp;
  out.lambda = lambda;
  out.dim = total;
  out.weight_of.resize(total);
  for (const auto& [w, wd] : spaces) {
    out.weight_dims[w] = (int)wd.basis.size();
    out.gram[w] = wd.gram;
    for (size_t i = 0; i < wd.basis.size(); ++i) out.weight_of[wd.offset + i] = w;
  }

  // expansion of a monomial combination at a known weight in the basis there
  auto express = [&](const WeightVec& w, const Combo& c) -> Vec<Rat> {
    auto it = spaces.find(w);
    if (it == spaces.end()) return {};
    const WData& wd = it->second;
    Vec<Rat> rhs(wd.basis.size(), Rat(0));
    for (size_t a = 0; a < wd.basis.size(); ++a) rhs[a] = bld.pair_combo(wd.basis[a], c);
    return mat_vec(wd.gram_inv, rhs);
  };

  // action matrices for the simple generators
  out.act.assign(g.dim(), mat_zero<Rat>(total, total));
  for (int i = 0; i < rs.rank; ++i) {
    RootVec alpha(rs.rank, 0);
    alpha[i] = 1;
    int ridx = rs.index.at(alpha);
    int ei = g.e_index(ridx), fi = g.f_index(ridx), hi = g.h_index(i);
    for (const auto& [w, wd] : spaces) {
      for (size_t b = 0; b < wd.basis.size(); ++b) {
        int col = wd.offset + (int)b;
        // h_i
        out.act[hi][col][col] = Rat(w[i]);
        // f_i
        {
          WeightVec w2 = w;
          for (int t = 0; t < rs.rank; ++t) w2[t] -= rs.cartan[t][i];
          Mono m;
          m.push_back(i);
          m.insert(m.end(), wd.basis[b].begin(), wd.basis[b].end());
          Combo c;
          c[m] = Rat(1);
          Vec<Rat> x = express(w2, c);
          if (!x.empty()) {
            int off = spaces.at(w2).offset;
            for (size_t r = 0; r < x.size(); ++r) out.act[fi][off + (int)r][col] = x[r];
          }
        }
        // e_i
        {
          WeightVec w2 = w;
          for (int t = 0; t < rs.rank; ++t) w2[t] += rs.cartan[t][i];
          const Combo& c = bld.apply_e(i, wd.basis[b]);
          if (!c.empty()) {
            Vec<Rat> x = express(w2, c);
            if (!x.empty()) {
              int off = spaces.at(w2).offset;
              for (size_t r = 0; r < x.size(); ++r) out.act[ei][off + (int)r][col] = x[r];
            }
          }
        }
      }
    }
  }

  // composite root vectors by commutators, in height order
  for (int ridx = rs.rank; ridx < rs.npos(); ++ridx) {
    const RootVec& gamma = rs.positive[ridx];
    int s = -1, rest = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (gamma[i] == 0) continue;
      RootVec r = gamma;
      r[i] -= 1;
      auto it = rs.index.find(r);
      if (it != rs.index.end()) {
        RootVec alpha(rs.rank, 0);
        alpha[i] = 1;
        s = rs.index.at(alpha);
        rest = it->second;
        break;
      }
    }
    require(s >= 0, Errc::Internal, "no simple summand found for a composite root");
    Rat n = g.n_constant(s, false, rest, false);
    require(!is_zero(n), Errc::Internal, "vanishing structure constant in irrep lift");
    auto commut = [&](const Mat<Rat>& a, const Mat<Rat>& b) {
      Mat<Rat> ab = mat_mul(a, b), ba = mat_mul(b, a);
      for (int r = 0; r < total; ++r)
        for (int c = 0; c < total; ++c) ab[r][c] -= ba[r][c];
      return ab;
    };
    {
      Mat<Rat> m = commut(out.act[g.e_index(s)], out.act[g.e_index(rest)]);
      for (auto& row : m)
        for (auto& v : row) v /= n;
      out.act[g.e_index(ridx)] = std::move(m);
    }
    {
      // [f_s, f_rest] = -N_{s,rest} f_{s+rest}
      Mat<Rat> m = commut(out.act[g.f_index(s)], out.act[g.f_index(rest)]);
      for (auto& row : m)
        for (auto& v : row) v /= -n;
      out.act[g.f_index(ridx)] = std::move(m);
    }
  }

  return out;
}

}  // namespace lietor
