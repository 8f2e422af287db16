#include "lietor/realized.hpp"

#include <random>

#include "lietor/error.hpp"

namespace lietor {

ModVec modvec_add(ModVec a, const ModVec& b) {
  for (const auto& [k, v] : b) {
    auto it = a.find(k);
    if (it == a.end()) {
      a.emplace(k, v);
      continue;
    }
    for (size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
    if (vec_is_zero(it->second)) a.erase(it);
  }
  return a;
}

ModVec modvec_scale(ModVec a, const Cyc& s) {
  if (s.is_zero()) return {};
  for (auto& [k, v] : a)
    for (auto& x : v) x *= s;
  return a;
}

bool modvec_is_zero(const ModVec& v) {
  for (const auto& [k, x] : v)
    if (!vec_is_zero(x)) return false;
  return true;
}

RealizedModule::RealizedModule(DecPtr dec, GlnModule v1, GradedLTModule v2,
                               std::vector<Cyc> beta, DegreeWindow window)
    : dec_(std::move(dec)), v1_(std::move(v1)), v2_(std::move(v2)), beta_(std::move(beta)),
      window_(window) {
  require((int)beta_.size() == dec_->group.n(), Errc::ConfigError, "beta has wrong length");
  // precompute the graded-coordinate blocks of every refined generator
  int dg = dec_->g->dim();
  for (int p = 0; p < dg; ++p) {
    for (const auto& [from, fvecs] : v2_.graded) {
      ClassVec to = dec_->group.add(from, dec_->basis[p].kbar);
      auto itto = v2_.graded.find(to);
      size_t dto = itto == v2_.graded.end() ? 0 : itto->second.size();
      Mat<Cyc> blk = mat_zero<Cyc>(dto, fvecs.size());
      for (size_t c = 0; c < fvecs.size(); ++c) {
        Vec<Cyc> img = mat_vec(v2_.loop_act[p], fvecs[c]);
        if (vec_is_zero(img)) continue;
        require(dto > 0, Errc::Internal, "graded action left the grading");
        auto coords = coords_in_span(itto->second, img);
        require(coords.has_value(), Errc::Internal, "graded action left the grading");
        for (size_t r = 0; r < dto; ++r) blk[r][c] = (*coords)[r];
      }
      loop_graded_[{p, from}] = std::move(blk);
    }
  }
}

int RealizedModule::fiber_dim(const Degree& k) const {
  return v1_.dim * v2_.dim_class(dec_->group.reduce(k.k));
}

ModVec RealizedModule::basis_vector(const Degree& k, int idx) const {
  int fd = fiber_dim(k);
  require(idx >= 0 && idx < fd, Errc::ConfigError, "basis index out of range");
  ModVec out;
  Vec<Cyc> v((size_t)fd, Cyc(0));
  v[idx] = Cyc(1);
  out[k] = std::move(v);
  return out;
}

std::vector<std::pair<Degree, int>> RealizedModule::window_basis() const {
  std::vector<std::pair<Degree, int>> out;
  for (const Degree& k : window_.all()) {
    int fd = fiber_dim(k);
    for (int i = 0; i < fd; ++i) out.emplace_back(k, i);
  }
  return out;
}

ModVec RealizedModule::apply(const ToroidalElement& x, const ModVec& v) const {
  ModVec out;
  // loop terms
  for (const auto& [l, coeffs] : x.loop) {
    for (const auto& [k, vec] : v) {
      ClassVec from = dec_->group.reduce(k.k);
      int d2from = v2_.dim_class(from);
      if (d2from == 0) continue;
      Degree kt = k + l;
      ClassVec to = dec_->group.add(from, dec_->group.reduce(l.k));
      int d2to = v2_.dim_class(to);
      if (d2to == 0) continue;
      Vec<Cyc> target((size_t)v1_.dim * d2to, Cyc(0));
      bool nonzero = false;
      for (size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p].is_zero()) continue;
        const Mat<Cyc>& blk = loop_graded_.at({(int)p, from});
        // acts on the V2 factor only, block-diagonal over V1 indices
        for (int i1 = 0; i1 < v1_.dim; ++i1) {
          for (int r = 0; r < d2to; ++r) {
            Cyc acc(0);
            for (int c = 0; c < d2from; ++c) {
              if (blk[r][c].is_zero()) continue;
              const Cyc& src = vec[(size_t)i1 * d2from + c];
              if (src.is_zero()) continue;
              acc += blk[r][c] * src;
            }
            if (!acc.is_zero()) {
              target[(size_t)i1 * d2to + r] += coeffs[p] * acc;
              nonzero = true;
            }
          }
        }
      }
      if (nonzero) out = modvec_add(std::move(out), ModVec{{kt, std::move(target)}});
    }
  }
  // derivation terms: t^r d_i = (k_i + beta_i) shift + gl part r_j E_{ji}
  for (const auto& [key, c] : x.deriv) {
    const auto& [r, i] = key;
    for (const auto& [k, vec] : v) {
      ClassVec cls = dec_->group.reduce(k.k);
      int d2 = v2_.dim_class(cls);
      if (d2 == 0) continue;
      Degree kt = k + r;
      Vec<Cyc> target(vec.size(), Cyc(0));
      Cyc scal = c * (Cyc(rat_of(k[i])) + beta_[i]);
      {
        auto itc = corrupt_.find(k);
        if (itc != corrupt_.end()) scal += c * itc->second;
      }
      bool nonzero = false;
      if (!scal.is_zero()) {
        for (size_t t = 0; t < vec.size(); ++t)
          if (!vec[t].is_zero()) {
            target[t] += scal * vec[t];
            nonzero = true;
          }
      }
      // sum_j r_j E_{ji} acting on the V1 factor
      for (int j = 0; j < dec_->group.n(); ++j) {
        if (r[j] == 0) continue;
        const Mat<Cyc>& eji = v1_.e(j, i);
        for (int r1 = 0; r1 < v1_.dim; ++r1) {
          for (int c1 = 0; c1 < v1_.dim; ++c1) {
            if (eji[r1][c1].is_zero()) continue;
            for (int t = 0; t < d2; ++t) {
              const Cyc& src = vec[(size_t)c1 * d2 + t];
              if (src.is_zero()) continue;
              target[(size_t)r1 * d2 + t] += c * Cyc(rat_of(r[j])) * eji[r1][c1] * src;
              nonzero = true;
            }
          }
        }
      }
      if (nonzero) out = modvec_add(std::move(out), ModVec{{kt, std::move(target)}});
    }
  }
  // central terms act as zero (level zero)
  return out;
}

std::vector<RealizedModule::WeightRow> RealizedModule::weight_table() const {
  std::vector<WeightRow> out;
  for (const Degree& k : window_.all()) {
    ClassVec cls = dec_->group.reduce(k.k);
    auto it = v2_.weight_graded.find(cls);
    if (it == v2_.weight_graded.end()) continue;
    for (const auto& [mu, vecs] : it->second) {
      out.push_back({k, mu, (long)v1_.dim * (long)vecs.size()});
    }
  }
  return out;
}

Mat<Cyc> RealizedModule::loop_block(int p, const ClassVec& from) const {
  return loop_graded_.at({p, from});
}

std::vector<RealizedModule::HwsBlock> RealizedModule::highest_weight_space() const {
  // positive loop generators: refined elements with lex-positive weight;
  // classes repeat with period m, so any window with w >= max m_i sees
  // every generator class and the kernel is exact
  std::vector<int> positive;
  for (int p = 0; p < dec_->g->dim(); ++p) {
    if (EigenspaceDecomposition::weight_positive(dec_->basis[p].weight)) positive.push_back(p);
  }
  std::vector<HwsBlock> out;
  for (const Degree& k : window_.all()) {
    ClassVec cls = dec_->group.reduce(k.k);
    int d2 = v2_.dim_class(cls);
    if (d2 == 0) {
      out.push_back({k, 0, {}});
      continue;
    }
    // kernel on the V2 factor; V1 is untouched by loops
    Mat<Cyc> sys = mat_zero<Cyc>(positive.size() * (size_t)v2_.dim, (size_t)d2);
    for (size_t gi = 0; gi < positive.size(); ++gi) {
      const auto& vecs = v2_.graded.at(cls);
      for (int c = 0; c < d2; ++c) {
        Vec<Cyc> img = mat_vec(v2_.loop_act[positive[gi]], vecs[c]);
        for (int r = 0; r < v2_.dim; ++r) sys[gi * v2_.dim + r][c] = img[r];
      }
    }
    auto ns = nullspace(sys);
    HwsBlock blk{k, (long)v1_.dim * (long)ns.size(), {}};
    for (const auto& w2 : ns) {
      for (int i1 = 0; i1 < v1_.dim; ++i1) {
        Vec<Cyc> fib((size_t)v1_.dim * d2, Cyc(0));
        for (int t = 0; t < d2; ++t) fib[(size_t)i1 * d2 + t] = w2[t];
        ModVec mv;
        mv[k] = std::move(fib);
        blk.basis.push_back(std::move(mv));
      }
    }
    out.push_back(std::move(blk));
  }
  return out;
}

std::vector<RealizedModule::IntegrabilitySample> RealizedModule::check_integrable(
    long samples, unsigned seed, long bound) const {
  if (bound < 0) bound = (long)v1_.dim * v2_.dim + 1;
  // real-root generators in the window
  struct Gen {
    int p;
    Degree k;
    std::string name;
  };
  std::vector<Gen> gens;
  for (const Degree& k : window_.all()) {
    ClassVec cls = dec_->group.reduce(k.k);
    for (int p = 0; p < dec_->g->dim(); ++p) {
      if (dec_->basis[p].kbar != cls) continue;
      if (!vec_is_zero(dec_->basis[p].weight))
        gens.push_back({p, k, "x" + std::to_string(p + 1) + "@" + k.str()});
    }
  }
  auto basis = window_basis();
  std::vector<IntegrabilitySample> out;
  std::mt19937_64 rng(seed);
  ToroidalAlgebra tor(dec_);
  for (long s = 0; s < samples; ++s) {
    const Gen& g = gens[rng() % gens.size()];
    auto [vk, vi] = basis[rng() % basis.size()];
    ModVec v = basis_vector(vk, vi);
    ToroidalElement x = tor.loop_basis(g.k, g.p);
    long m = -1;
    ModVec cur = v;
    for (long e = 1; e <= bound; ++e) {
      cur = apply(x, cur);
      if (modvec_is_zero(cur)) {
        m = e;
        break;
      }
    }
    out.push_back({g.name, g.k, vk, vi, m});
  }
  return out;
}

RealizedModule build_realized(DecPtr dec, const WeightVec& psi, const Cyc& c,
                              const WeightVec& lambda, std::vector<Cyc> beta,
                              const DegreeWindow& window, std::vector<int> p,
                              std::vector<Cyc> base, std::vector<std::vector<Cyc>> points) {
  GlnModule v1 = build_gln_module(dec->group.n(), psi, c);
  GradedLTModule v2 = build_graded_sum(dec, lambda, std::move(p), std::move(base),
                                       std::move(points));
  if (beta.empty()) beta.assign(dec->group.n(), Cyc(0));
  return RealizedModule(dec, std::move(v1), std::move(v2), std::move(beta), window);
}

LBetaModule::LBetaModule(DecPtr dec, GlnModule v1, std::vector<Cyc> beta)
    : dec_(std::move(dec)), v1_(std::move(v1)), beta_(std::move(beta)) {
  require((int)beta_.size() == dec_->group.n(), Errc::ConfigError, "beta has wrong length");
  require(v1_.n == dec_->group.n(), Errc::ConfigError, "V1 must be a gl_n module for n vars");
}

ModVec LBetaModule::basis_vector(const Degree& s, int idx) const {
  require(idx >= 0 && idx < v1_.dim, Errc::ConfigError, "basis index out of range");
  ModVec out;
  Vec<Cyc> v((size_t)v1_.dim, Cyc(0));
  v[idx] = Cyc(1);
  out[s] = std::move(v);
  return out;
}

ModVec LBetaModule::apply(const ToroidalElement& x, const ModVec& v) const {
  ModVec out;
  int n = dec_->group.n();
  // t^r d_i = D(e_i, r): (I(e_i,r).v) t^{r+s} + (e_i, s+beta) v t^{r+s},
  // I through pi: pi(I(e_i, r)) = sum_j r_j E_{ji}
  for (const auto& [key, c] : x.deriv) {
    const auto& [r, i] = key;
    for (const auto& [s, vec] : v) {
      Vec<Cyc> target(vec.size(), Cyc(0));
      bool nonzero = false;
      Cyc scal = c * (Cyc(rat_of(s[i])) + beta_[i]);
      if (!scal.is_zero()) {
        for (size_t t = 0; t < vec.size(); ++t)
          if (!vec[t].is_zero()) {
            target[t] += scal * vec[t];
            nonzero = true;
          }
      }
      for (int j = 0; j < n; ++j) {
        if (r[j] == 0) continue;
        const Mat<Cyc>& eji = v1_.e(j, i);
        for (int r1 = 0; r1 < v1_.dim; ++r1)
          for (int c1 = 0; c1 < v1_.dim; ++c1) {
            if (eji[r1][c1].is_zero() || vec[c1].is_zero()) continue;
            target[r1] += c * Cyc(rat_of(r[j])) * eji[r1][c1] * vec[c1];
            nonzero = true;
          }
      }
      if (nonzero) out = modvec_add(std::move(out), ModVec{{s + r, std::move(target)}});
    }
  }
  // loops of the h0-centralizer act as zero in this model; central terms too
  return out;
}

}  // namespace lietor
