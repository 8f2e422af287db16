#include "lietor/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <random>
#include <thread>

#include "lietor/error.hpp"

namespace lietor {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Timer {
  Clock::time_point t0 = Clock::now();
  bool enabled;
  explicit Timer(bool on) : enabled(on) {}
  long done() const { return enabled ? ms_since(t0) : 0; }
};

}  // namespace

std::string SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["check"] = c.check;
    e["status"] = c.status;
    e["witnesses"] = c.witnesses;
    e["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2);
}

SweepReport sweep_jacobi(const ToroidalAlgebra& tor, const SweepConfig& cfg) {
  SweepReport rep;
  DegreeWindow w{cfg.window, tor.n()};
  auto basis = tor.window_basis(w);
  size_t nb = basis.size();

  // pair bracket table for admissible pairs
  std::vector<std::vector<int>> ok(nb, std::vector<int>(nb, 0));
  std::map<std::pair<size_t, size_t>, ToroidalElement> pair_br;
  {
    Timer t(cfg.timings);
    std::vector<std::string> witnesses;
    for (size_t i = 0; i < nb; ++i) {
      for (size_t j = 0; j < nb; ++j) {
        if (!w.contains(basis[i].deg + basis[j].deg)) continue;
        ok[i][j] = 1;
        if (j < i) continue;
        ToroidalElement bij = tor.bracket(basis[i].elem, basis[j].elem);
        ToroidalElement bji = tor.bracket(basis[j].elem, basis[i].elem);
        if (!(bij + bji).is_zero() && witnesses.size() < 8) {
          witnesses.push_back("antisymmetry fails at (" + basis[i].name + ", " + basis[j].name +
                              ")");
        }
        pair_br[{i, j}] = std::move(bij);
        pair_br[{j, i}] = std::move(bji);
      }
    }
    rep.checks.push_back({"antisymmetry", witnesses.empty() ? "pass" : "fail", witnesses,
                          t.done()});
  }

  // admissible triples
  std::vector<std::array<size_t, 3>> triples;
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i; j < nb; ++j) {
      if (!ok[i][j]) continue;
      for (size_t k = j; k < nb; ++k) {
        if (!ok[j][k] || !ok[i][k]) continue;
        if (!w.contains(basis[i].deg + basis[j].deg + basis[k].deg)) continue;
        triples.push_back({i, j, k});
      }
    }
  bool sampled = (long)triples.size() > cfg.exhaustive_cap;
  if (sampled) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::array<size_t, 3>> keep;
    for (long t = 0; t < cfg.exhaustive_cap; ++t) keep.push_back(triples[rng() % triples.size()]);
    triples = std::move(keep);
  }

  Timer t(cfg.timings);
  int nthreads = std::max(1, cfg.parallelism);
  std::vector<std::vector<std::string>> wit(nthreads);
  auto run = [&](int tid) {
    for (size_t idx = tid; idx < triples.size(); idx += nthreads) {
      auto [i, j, k] = triples[idx];
      ToroidalElement s = tor.bracket(basis[i].elem, pair_br.at({j, k}));
      s = s + tor.bracket(basis[j].elem, pair_br.at({k, i}));
      s = s + tor.bracket(basis[k].elem, pair_br.at({i, j}));
      if (!s.is_zero() && wit[tid].size() < 8) {
        wit[tid].push_back("jacobi fails at (" + basis[i].name + ", " + basis[j].name + ", " +
                           basis[k].name + ")");
      }
    }
  };
  if (nthreads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(run, tid);
    for (auto& th : pool) th.join();
  }
  std::vector<std::string> witnesses;
  for (auto& v : wit) witnesses.insert(witnesses.end(), v.begin(), v.end());
  std::sort(witnesses.begin(), witnesses.end());
  std::string name = std::string("jacobi (") + (sampled ? "sampled " : "exhaustive, ") +
                     std::to_string(triples.size()) + " triples)";
  rep.checks.push_back({name, witnesses.empty() ? "pass" : "fail", witnesses, t.done()});
  return rep;
}

SweepReport sweep_lietorus(const EigenspaceDecomposition& dec, const SweepConfig& cfg) {
  SweepReport rep;
  Timer t(cfg.timings);
  LieTorusReport lt = check_lie_torus(dec, cfg.window);
  for (const auto& e : lt.entries) {
    std::vector<std::string> wit;
    if (!e.pass) wit.push_back(e.detail);
    rep.checks.push_back({e.check, e.pass ? "pass" : "fail", wit, t.done()});
  }
  return rep;
}

SweepReport sweep_module(const RealizedModule& m, const SweepConfig& cfg) {
  SweepReport rep;
  const auto& dec = *m.dec();
  ToroidalAlgebra tor(m.dec(), cfg.phi_a, cfg.phi_b);
  DegreeWindow w{cfg.window, tor.n()};
  auto gens = tor.window_basis(w);
  auto vecs = m.window_basis();

  // module axiom on all generator pairs and all spanning vectors
  {
    Timer t(cfg.timings);
    std::vector<std::string> wit;
    for (size_t i = 0; i < gens.size() && wit.size() < 8; ++i) {
      for (size_t j = i; j < gens.size() && wit.size() < 8; ++j) {
        ToroidalElement br = tor.bracket(gens[i].elem, gens[j].elem);
        for (const auto& [vk, vi] : vecs) {
          ModVec v = m.basis_vector(vk, vi);
          ModVec lhs = m.apply(br, v);
          ModVec rhs = modvec_add(m.apply(gens[i].elem, m.apply(gens[j].elem, v)),
                                  modvec_scale(m.apply(gens[j].elem, m.apply(gens[i].elem, v)),
                                               Cyc(-1)));
          if (!modvec_is_zero(modvec_add(lhs, modvec_scale(rhs, Cyc(-1))))) {
            wit.push_back("module axiom fails for (" + gens[i].name + ", " + gens[j].name +
                          ") on vector " + std::to_string(vi) + "@" + vk.str());
            break;
          }
        }
      }
    }
    rep.checks.push_back({"module axiom", wit.empty() ? "pass" : "fail", wit, t.done()});
  }

  // level zero: every t^r K_i acts as zero
  {
    Timer t(cfg.timings);
    std::vector<std::string> wit;
    for (const Degree& r : w.all()) {
      if (!tor.in_gamma(r)) continue;
      for (int i = 0; i < tor.n(); ++i) {
        // raw central element, bypassing the dA-reduction on purpose
        ToroidalElement k;
        k.central[{r, i}] = Cyc(1);
        for (const auto& [vk, vi] : vecs) {
          if (!modvec_is_zero(m.apply(k, m.basis_vector(vk, vi)))) {
            wit.push_back("t^" + r.str() + " K_" + std::to_string(i + 1) + " acts nonzero");
            break;
          }
        }
      }
    }
    rep.checks.push_back({"level zero", wit.empty() ? "pass" : "fail", wit, t.done()});
  }

  // Weyl invariance of the weight table
  {
    Timer t(cfg.timings);
    std::vector<std::string> wit;
    auto table = m.weight_table();
    std::map<std::pair<Degree, WeightLabel>, long> dims;
    for (const auto& row : table) dims[{row.k, row.mu}] = row.dim;
    for (const auto& alpha : dec.delta) {
      if (!EigenspaceDecomposition::weight_positive(alpha)) continue;
      Rat norm = dec.weight_ip(alpha, alpha);
      for (const Degree& s : w.all()) {
        // gamma = alpha + delta_s is a real root only when g_sbar(alpha) != 0
        if (dec.dim_class_weight(dec.group.reduce(s.k), alpha) == 0) continue;
        for (const auto& row : table) {
          if (row.dim == 0) continue;
          Rat pairing = Rat(2) * dec.weight_ip(row.mu, alpha) / norm;
          if (!is_integer(pairing)) {
            wit.push_back("non-integral coroot pairing at a table weight");
            continue;
          }
          long mval = to_long(pairing);
          if (mval == 0) continue;
          Degree kref = row.k;
          for (size_t i = 0; i < kref.k.size(); ++i) kref.k[i] -= mval * s.k[i];
          if (!w.contains(kref)) continue;  // reflected degree outside the window
          WeightLabel mur = row.mu;
          for (size_t i = 0; i < mur.size(); ++i) mur[i] -= Rat(mval) * alpha[i];
          auto it = dims.find({kref, mur});
          long got = it == dims.end() ? 0 : it->second;
          if (got != row.dim && wit.size() < 8) {
            wit.push_back("dim mismatch under r_gamma, gamma at degree " + s.str());
          }
        }
      }
    }
    rep.checks.push_back({"weyl invariance", wit.empty() ? "pass" : "fail", wit, t.done()});
  }

  // integrability samples
  {
    Timer t(cfg.timings);
    std::vector<std::string> wit;
    long bound = (long)m.v1().dim * m.v2().dim + 1;
    auto samples = m.check_integrable(cfg.samples, cfg.seed, bound);
    for (const auto& s : samples) {
      if (s.exponent < 0 && wit.size() < 8) {
        wit.push_back("no nilpotency within bound for " + s.generator + " on vector " +
                      std::to_string(s.vec_index) + "@" + s.vec_degree.str());
      }
    }
    rep.checks.push_back({"integrability (" + std::to_string(cfg.samples) + " samples, bound " +
                              std::to_string(bound) + ")",
                          wit.empty() ? "pass" : "fail", wit, t.done()});
  }

  return rep;
}

SweepReport sweep_lbeta(const LBetaModule& m, const ToroidalAlgebra& tor,
                        const SweepConfig& cfg) {
  SweepReport rep;
  DegreeWindow w{cfg.window, tor.n()};
  Timer t(cfg.timings);
  std::vector<std::string> wit;
  // generators of tau^_0 in the window: derivations and zero-weight loops
  std::vector<ToroidalAlgebra::BasisItem> gens;
  for (const auto& b : tor.window_basis(w)) {
    if (b.kind == ToroidalAlgebra::BasisItem::Deriv) gens.push_back(b);
    if (b.kind == ToroidalAlgebra::BasisItem::Loop &&
        vec_is_zero(tor.dec().basis[b.idx].weight))
      gens.push_back(b);
  }
  std::vector<Degree> degs = w.all();
  for (size_t i = 0; i < gens.size() && wit.size() < 8; ++i) {
    for (size_t j = i; j < gens.size() && wit.size() < 8; ++j) {
      ToroidalElement br = tor.bracket(gens[i].elem, gens[j].elem);
      for (const Degree& s : degs) {
        for (int vi = 0; vi < m.fiber_dim(); ++vi) {
          ModVec v = m.basis_vector(s, vi);
          ModVec lhs = m.apply(br, v);
          ModVec rhs = modvec_add(m.apply(gens[i].elem, m.apply(gens[j].elem, v)),
                                  modvec_scale(m.apply(gens[j].elem, m.apply(gens[i].elem, v)),
                                               Cyc(-1)));
          if (!modvec_is_zero(modvec_add(lhs, modvec_scale(rhs, Cyc(-1))))) {
            wit.push_back("tau^_0 axiom fails for (" + gens[i].name + ", " + gens[j].name +
                          ") at t^" + s.str());
            break;
          }
        }
      }
    }
  }
  rep.checks.push_back({"L(beta,V1) module axiom", wit.empty() ? "pass" : "fail", wit, t.done()});
  return rep;
}

}  // namespace lietor
