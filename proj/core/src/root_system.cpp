#include "lietor/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lietor/error.hpp"

namespace lietor {

namespace {

void set_edge(std::vector<std::vector<long>>& a, int i, int j, long aij, long aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

// cartan[i][j] = <alpha_j, alpha_i^vee>; d[i] = (alpha_i,alpha_i)/2 with
// long roots normalized to squared length 2.
void cartan_data(char type, int rank, std::vector<std::vector<long>>& a, std::vector<Rat>& d) {
  a.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  d.assign(rank, Rat(1));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) set_edge(a, i, i + 1, -1, -1);
  };
  switch (type) {
    case 'A':
      chain(rank);
      break;
    case 'B':
      chain(rank);
      // alpha_rank is short: (a_{l-1,l}, a_{l,l-1}) = (-1, -2)
      set_edge(a, rank - 2, rank - 1, -1, -2);
      d[rank - 1] = Rat(1, 2);
      break;
    case 'C':
      chain(rank);
      set_edge(a, rank - 2, rank - 1, -2, -1);
      for (int i = 0; i < rank - 1; ++i) d[i] = Rat(1, 2);
      break;
    case 'D':
      chain(rank - 1);
      set_edge(a, rank - 3, rank - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      set_edge(a, 0, 2, -1, -1);
      set_edge(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) set_edge(a, i, i + 1, -1, -1);
      break;
    case 'F':
      chain(rank);
      set_edge(a, 1, 2, -1, -2);
      d[2] = d[3] = Rat(1, 2);
      break;
    case 'G':
      set_edge(a, 0, 1, -1, -3);
      d[1] = Rat(1, 3);
      break;
    default:
      raise(Errc::UnsupportedType, std::string("unknown type '") + type + "'");
  }
}

void check_pair(char type, int rank, bool allow_b1) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2 || (allow_b1 && rank == 1); break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    raise(Errc::UnsupportedType, std::string(1, type) + std::to_string(rank) +
                                     " is not supported (low-rank aliases such as B1=A1, "
                                     "C1=A1, D3=A3 must be given by their A/D names)");
}

long classical_npos(char type, int rank) {
  switch (type) {
    case 'A': return (long)rank * (rank + 1) / 2;
    case 'B':
    case 'C': return (long)rank * rank;
    case 'D': return (long)rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

RootSystem build_impl(char type, int rank, bool allow_b1) {
  check_pair(type, rank, allow_b1);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  if (type == 'B' && rank == 1) {
    // A1 root data with the single root counted short.
    cartan_data('A', 1, rs.cartan, rs.d);
    rs.d[0] = Rat(1, 2);
  } else {
    cartan_data(type, rank, rs.cartan, rs.d);
  }

  // Roots as the reflection orbit of the simple roots.
  std::set<RootVec> all;
  std::vector<RootVec> queue;
  for (int i = 0; i < rank; ++i) {
    RootVec e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec r = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      RootVec s = rs.reflect_simple(r, i);
      if (all.insert(s).second) queue.push_back(s);
    }
  }
  for (const auto& r : all) {
    bool pos = true;
    for (long c : r)
      if (c < 0) pos = false;
    if (pos) rs.positive.push_back(r);
  }
  std::sort(rs.positive.begin(), rs.positive.end(), [&](const RootVec& x, const RootVec& y) {
    long hx = std::accumulate(x.begin(), x.end(), 0L);
    long hy = std::accumulate(y.begin(), y.end(), 0L);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  for (int i = 0; i < (int)rs.positive.size(); ++i) rs.index[rs.positive[i]] = i;

  long want = classical_npos(type == 'B' && rank == 1 ? 'A' : type, rank);
  require((long)rs.positive.size() == want, Errc::Internal,
          rs.name() + ": generated " + std::to_string(rs.positive.size()) +
              " positive roots, expected " + std::to_string(want));
  require(rs.norm2(rs.highest_root()) == ((type == 'B' && rank == 1) ? Rat(1) : Rat(2)),
          Errc::Internal, rs.name() + ": bad form normalization");

  // omega_i = sum_k (A^{-1})_{ki} alpha_k
  Mat<Rat> a = mat_zero<Rat>(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a[i][j] = Rat(rs.cartan[i][j]);
  auto inv = mat_inverse(a);
  require(inv.has_value(), Errc::Internal, "Cartan matrix is singular");
  rs.fundamental.assign(rank, std::vector<Rat>(rank, Rat(0)));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) rs.fundamental[i][k] = (*inv)[k][i];
  return rs;
}

}  // namespace

long RootSystem::height(const RootVec& r) const {
  return std::accumulate(r.begin(), r.end(), 0L);
}

bool RootSystem::is_root(const RootVec& r) const {
  if (index.count(r)) return true;
  RootVec neg(r.size());
  for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  return index.count(neg) > 0;
}

Rat RootSystem::ip(const RootVec& a, const RootVec& b) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(b[j]) * ip_simple(i, j);
    }
  }
  return s;
}

bool RootSystem::is_long(const RootVec& a) const { return norm2(a) == norm2(highest_root()); }

long RootSystem::pair_coroot(const RootVec& beta, int i) const {
  long s = 0;
  for (int j = 0; j < rank; ++j) s += cartan[i][j] * beta[j];
  return s;
}

RootVec RootSystem::reflect_simple(const RootVec& beta, int i) const {
  RootVec out = beta;
  out[i] -= pair_coroot(beta, i);
  return out;
}

Rat RootSystem::ip_weight_root(const std::vector<Rat>& mu_omega, const RootVec& alpha) const {
  // (omega_i, alpha_j) = delta_ij d_j
  Rat s(0);
  for (int j = 0; j < rank; ++j) {
    if (alpha[j] == 0) continue;
    s += mu_omega[j] * d[j] * Rat(alpha[j]);
  }
  return s;
}

RootSystem build_root_system(char type, int rank) { return build_impl(type, rank, false); }

RootSystem build_root_system_allow_b1(char type, int rank) { return build_impl(type, rank, true); }

std::vector<RootVec> extended_roots(const RootSystem& rs) {
  std::vector<RootVec> out;
  for (const auto& r : rs.positive) {
    RootVec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    out.push_back(r);
    out.push_back(neg);
  }
  if (rs.type == 'B') {
    for (const auto& r : rs.positive) {
      // B1 counts its single root length as short by convention
      if (rs.rank > 1 && !rs.is_short(r)) continue;
      RootVec dbl(r.size()), negdbl(r.size());
      for (size_t i = 0; i < r.size(); ++i) {
        dbl[i] = 2 * r[i];
        negdbl[i] = -2 * r[i];
      }
      out.push_back(dbl);
      out.push_back(negdbl);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dominant(const WeightVec& lambda) {
  for (long c : lambda)
    if (c < 0) return false;
  return true;
}

Rat weyl_dimension(const RootSystem& rs, const WeightVec& lambda) {
  require((int)lambda.size() == rs.rank, Errc::NonDominantWeight, "weight has wrong rank");
  require(is_dominant(lambda), Errc::NonDominantWeight, "weight is not dominant");
  Rat dim(1);
  std::vector<Rat> lam_rho(rs.rank), rho(rs.rank, Rat(1));
  for (int i = 0; i < rs.rank; ++i) lam_rho[i] = Rat(lambda[i] + 1);
  for (const auto& alpha : rs.positive) {
    dim *= rs.ip_weight_root(lam_rho, alpha) / rs.ip_weight_root(rho, alpha);
  }
  require(is_integer(dim), Errc::Internal, "Weyl dimension is not an integer");
  return dim;
}

std::vector<Rat> weight_to_alpha(const RootSystem& rs, const WeightVec& lambda) {
  std::vector<Rat> out(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i) {
    if (lambda[i] == 0) continue;
    for (int k = 0; k < rs.rank; ++k) out[k] += Rat(lambda[i]) * rs.fundamental[i][k];
  }
  return out;
}

std::optional<std::pair<char, int>> classify_cartan(const std::vector<std::vector<long>>& a) {
  int n = (int)a.size();
  if (n == 0) return std::nullopt;
  const std::vector<char> letters = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (char t : letters) {
    RootSystem ref;
    try {
      ref = build_impl(t, n, true);
    } catch (const Error&) {
      continue;
    }
    // try all relabelings (ranks here are small)
    std::vector<int> p = perm;
    std::sort(p.begin(), p.end());
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (ref.cartan[i][j] != a[p[i]][p[j]]) ok = false;
      if (ok) return std::make_pair(t, n);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

}  // namespace lietor
