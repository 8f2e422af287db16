#include "lietor/graded_sum.hpp"

#include <algorithm>

#include "lietor/error.hpp"

namespace lietor {

namespace {

Cyc point_power(const std::vector<Cyc>& a, const std::vector<long>& k) {
  Cyc out(1);
  for (size_t i = 0; i < a.size(); ++i) out *= a[i].pow(k[i]);
  return out;
}

void check_in_um(const EigenspaceDecomposition& dec, const std::vector<Cyc>& a) {
  require((int)a.size() == dec.group.n(), Errc::NotInField, "point has wrong length");
  for (int i = 0; i < dec.group.n(); ++i) {
    require(!a[i].is_zero() && a[i].pow(dec.group.m[i]) == Cyc(1), Errc::NotInField,
            "point coordinate " + a[i].str() + " is not an m_" + std::to_string(i + 1) +
                "-th root of unity");
  }
}

// orbit index of ev_point V(orbit[c]) relative to ev_base, or -1
int target_of(const EigenspaceDecomposition& dec, const std::vector<WeightVec>& orbit, int c,
              const std::vector<Cyc>& point, const std::vector<Cyc>& base) {
  for (size_t j = 0; j < orbit.size(); ++j) {
    if (evaluation_isomorphic(dec, orbit[c], point, orbit[j], base).isomorphic) return (int)j;
  }
  return -1;
}

}  // namespace

Mat<Cyc> GradedLTModule::act(int p, const Degree& k) const {
  require(dec->basis[p].kbar == dec->group.reduce(k.k), Errc::ConfigError,
          "basis element is not in g_kbar for degree " + k.str());
  // a_nu^k depends only on kbar for points in U(m), but compute with k as given
  Mat<Cyc> out = mat_zero<Cyc>(dim, dim);
  for (size_t nu = 0; nu < carrier.size(); ++nu) {
    const Irrep& rep = reps[carrier[nu]];
    Mat<Cyc> blk = refined_action(*dec, rep, p);
    Cyc s = point_power(points[nu], k.k);
    for (int r = 0; r < rep.dim; ++r)
      for (int t = 0; t < rep.dim; ++t)
        if (!blk[r][t].is_zero()) out[offset[nu] + r][offset[nu] + t] = s * blk[r][t];
  }
  return out;
}

std::vector<std::vector<Cyc>> choose_points(const EigenspaceDecomposition& dec,
                                            const WeightVec& lambda, const std::vector<int>& p,
                                            const std::vector<Cyc>& base) {
  check_in_um(dec, base);
  auto orbit = ghat_orbit(dec, lambda);
  require(p.size() == orbit.size(), Errc::WeightNotInOrbit,
          "multiplicity vector length " + std::to_string(p.size()) + " != orbit size " +
              std::to_string(orbit.size()));
  long total = 0;
  for (int v : p) {
    require(v >= 0, Errc::ConfigError, "negative multiplicity");
    total += v;
  }
  require(total == (long)orbit.size(), Errc::ConfigError,
          "sum of multiplicities must be S(lambda) * |orbit| = " +
              std::to_string(orbit.size()) + " (S = 1)");
  // component list: p_i copies of carrier i, targets walk the orbit in order
  std::vector<int> carriers;
  for (size_t i = 0; i < p.size(); ++i)
    for (int t = 0; t < p[i]; ++t) carriers.push_back((int)i);
  std::vector<std::vector<Cyc>> out;
  auto chars = all_characters(dec);
  for (size_t nu = 0; nu < carriers.size(); ++nu) {
    int tgt = (int)nu;  // each orbit element exactly once
    bool found = false;
    for (const auto& chi : chars) {
      std::vector<Cyc> cand(base.size());
      for (size_t i = 0; i < base.size(); ++i) cand[i] = chi[i] * base[i];
      if (evaluation_isomorphic(dec, orbit[carriers[nu]], cand, orbit[tgt], base).isomorphic) {
        out.push_back(std::move(cand));
        found = true;
        break;
      }
    }
    require(found, Errc::WeightNotInOrbit,
            "no character shift realizes the requested target weight");
  }
  return out;
}

GradedLTModule build_graded_sum(DecPtr dec, const WeightVec& lambda, std::vector<int> p,
                                std::vector<Cyc> base, std::vector<std::vector<Cyc>> points) {
  bool zero = true;
  for (long v : lambda) zero = zero && v == 0;
  require(!zero, Errc::ZeroLambda, "lambda must be a nonzero dominant weight");

  GradedLTModule out;
  out.dec = dec;
  out.lambda = lambda;
  out.orbit = ghat_orbit(*dec, lambda);
  size_t l = out.orbit.size();
  if (base.empty()) base.assign(dec->group.n(), Cyc(1));
  if (p.empty()) p.assign(l, 1);
  if (points.empty()) points = choose_points(*dec, lambda, p, base);
  require(points.size() == l, Errc::ConfigError,
          "need exactly one evaluation point per component (S = 1)");
  for (const auto& pt : points) check_in_um(*dec, pt);

  for (size_t i = 0; i < p.size(); ++i)
    for (int t = 0; t < p[i]; ++t) out.carrier.push_back((int)i);
  require(out.carrier.size() == l, Errc::ConfigError, "multiplicities do not sum to the orbit");
  out.points = points;

  for (const auto& w : out.orbit) out.reps.push_back(build_irrep(dec->g, w));
  out.dim = 0;
  for (size_t nu = 0; nu < l; ++nu) {
    out.offset.push_back(out.dim);
    out.dim += out.reps[out.carrier[nu]].dim;
  }

  // targets: the twisted component ev_{a_nu} V(lambda_{c(nu)}) must cover
  // the orbit exactly once each
  std::vector<bool> hit(l, false);
  for (size_t nu = 0; nu < l; ++nu) {
    int t = target_of(*dec, out.orbit, out.carrier[nu], out.points[nu], base);
    require(t >= 0, Errc::Internal, "component target left the orbit");
    if (hit[t])
      raise(Errc::GradedIrreducibilityFailure,
            "two components twist to the same orbit weight; the sum has a proper graded "
            "submodule");
    hit[t] = true;
    out.target.push_back(t);
  }

  // loop action tables per refined basis element
  int dg = dec->g->dim();
  for (int q = 0; q < dg; ++q) {
    Degree rep_deg(std::vector<long>(dec->basis[q].kbar.begin(), dec->basis[q].kbar.end()));
    out.loop_act.push_back(out.act(q, rep_deg));
  }

  // grading operators: for each direction i, T rho(x,k) = xi_i^{k_i} rho(x,k) T,
  // block-structured along the component permutation induced by the twist
  for (int dir = 0; dir < dec->group.n(); ++dir) {
    std::vector<Cyc> u(dec->group.n(), Cyc(1));
    u[dir] = dec->xi[dir];
    // sigma(nu) = the component whose u-shifted point lands on nu's
    // target: the block R: V^(nu) -> V^(sigma nu) with the scale below
    // exists iff ev_{a_nu} V(c(nu)) and ev_{u a_{sigma nu}} V(c(sigma nu))
    // are isomorphic evaluation modules
    std::vector<int> shifted_target(l, -1);
    for (size_t mu = 0; mu < l; ++mu) {
      std::vector<Cyc> shifted(out.points[mu]);
      for (int i = 0; i < dec->group.n(); ++i) shifted[i] = shifted[i] * u[i];
      shifted_target[mu] = target_of(*dec, out.orbit, out.carrier[mu], shifted, base);
      require(shifted_target[mu] >= 0, Errc::Internal,
              "twisted component target left the orbit");
    }
    std::vector<int> perm(l, -1);
    for (size_t nu = 0; nu < l; ++nu) {
      int to = -1;
      for (size_t mu = 0; mu < l; ++mu)
        if (shifted_target[mu] == out.target[nu]) to = (int)mu;
      if (to < 0)
        raise(Errc::GradedIrreducibilityFailure, "no grading operator in direction " +
                                                     std::to_string(dir + 1));
      perm[nu] = to;
    }
    // Build each block R: V^{(nu)} -> V^{(to)} with
    //   R rho_nu(x,k) = xi^{k_dir} rho_{to}(x,k) R,
    // i.e. R rho^_src(q) = (sdst_q/ssrc_q) rho^_dst(q) R for every refined q.
    // R is pinned by sending the source highest weight vector to the
    // destination one and propagated along a generation tree; linear
    // dependencies give exact consistency checks, and any inconsistency
    // means no intertwiner exists for these points.
    Mat<Cyc> T = mat_zero<Cyc>(out.dim, out.dim);
    for (size_t nu = 0; nu < l; ++nu) {
      int to = perm[nu];
      const Irrep& rsrc = out.reps[out.carrier[nu]];
      const Irrep& rdst = out.reps[out.carrier[to]];
      require(rsrc.dim == rdst.dim, Errc::GradedIrreducibilityFailure,
              "grading blocks have mismatched dimensions");
      int bd = rsrc.dim;
      std::vector<Mat<Cyc>> src_act, dst_act;
      std::vector<Cyc> scale;
      for (int q = 0; q < dg; ++q) {
        Degree k(std::vector<long>(dec->basis[q].kbar.begin(), dec->basis[q].kbar.end()));
        Cyc ssrc = point_power(out.points[nu], k.k);
        Cyc sdst = point_power(out.points[to], k.k) * dec->xi[dir].pow(k[dir]);
        src_act.push_back(refined_action(*dec, rsrc, q));
        dst_act.push_back(refined_action(*dec, rdst, q));
        scale.push_back(sdst / ssrc);
      }
      SpanBuilder<Cyc> span;
      Mat<Cyc> blk = mat_zero<Cyc>(bd, bd);
      // (vector, image) pairs carried together: column t holds the image
      // of known basis vector t of the growing span
      std::vector<std::pair<Vec<Cyc>, Vec<Cyc>>> known;
      {
        Vec<Cyc> hw(bd, Cyc(0)), img(bd, Cyc(0));
        hw[0] = Cyc(1);
        img[0] = Cyc(1);
        span.add(hw);
        known.push_back({hw, img});
      }
      size_t frontier_start = 0;
      while (frontier_start < known.size() && (int)span.dim() < bd) {
        size_t frontier_end = known.size();
        for (size_t t = frontier_start; t < frontier_end; ++t) {
          for (int q = 0; q < dg; ++q) {
            Vec<Cyc> v = mat_vec(src_act[q], known[t].first);
            if (vec_is_zero(v)) continue;
            Vec<Cyc> img = vec_scale(mat_vec(dst_act[q], known[t].second), scale[q]);
            std::vector<Vec<Cyc>> basis;
            basis.reserve(known.size());
            for (const auto& kn : known) basis.push_back(kn.first);
            auto coords = coords_in_span(basis, v);
            if (coords.has_value()) {
              // consistency: the image must match the linear combination
              Vec<Cyc> expect(bd, Cyc(0));
              for (size_t c = 0; c < coords->size(); ++c)
                for (int r = 0; r < bd; ++r) expect[r] += (*coords)[c] * known[c].second[r];
              for (int r = 0; r < bd; ++r)
                if (!(expect[r] == img[r]))
                  raise(Errc::GradedIrreducibilityFailure,
                        "no grading-compatible intertwiner exists for these points");
            } else {
              span.add(v);
              known.push_back({std::move(v), std::move(img)});
            }
          }
        }
        frontier_start = frontier_end;
      }
      require((int)span.dim() == bd, Errc::Internal,
              "highest weight vector failed to generate its component");
      // assemble the block from the (vector, image) pairs
      Mat<Cyc> vmat = mat_zero<Cyc>(bd, bd), imat = mat_zero<Cyc>(bd, bd);
      for (int c = 0; c < bd; ++c)
        for (int r = 0; r < bd; ++r) {
          vmat[r][c] = known[c].first[r];
          imat[r][c] = known[c].second[r];
        }
      auto vinv = mat_inverse(vmat);
      require(vinv.has_value(), Errc::Internal, "generation basis is singular");
      blk = mat_mul(imat, *vinv);
      // the relation must now hold for every refined generator
      for (int q = 0; q < dg; ++q) {
        Mat<Cyc> lhs = mat_mul(blk, src_act[q]);
        Mat<Cyc> rhs = mat_mul(dst_act[q], blk);
        for (auto& row : rhs)
          for (auto& v : row) v *= scale[q];
        if (!mat_equal(lhs, rhs))
          raise(Errc::GradedIrreducibilityFailure,
                "no grading-compatible intertwiner exists for these points");
      }
      for (int r = 0; r < bd; ++r)
        for (int c = 0; c < bd; ++c) T[out.offset[to] + r][out.offset[nu] + c] = blk[r][c];
    }
    out.grading_ops.push_back(std::move(T));
  }

  // sanity: T_i^{m_i} = 1, commuting, then eigenspaces
  for (int dir = 0; dir < dec->group.n(); ++dir) {
    long ord = matrix_order(out.grading_ops[dir], dec->group.m[dir]);
    require(ord > 0 && dec->group.m[dir] % ord == 0, Errc::Internal,
            "grading operator order does not divide m_i");
  }
  for (size_t i = 0; i < out.grading_ops.size(); ++i)
    for (size_t j = i + 1; j < out.grading_ops.size(); ++j)
      require(mat_equal(mat_mul(out.grading_ops[i], out.grading_ops[j]),
                        mat_mul(out.grading_ops[j], out.grading_ops[i])),
              Errc::Internal, "grading operators do not commute");

  int total = 0;
  for (const auto& cls : dec->group.elements()) {
    Mat<Cyc> sys = mat_zero<Cyc>((size_t)dec->group.n() * out.dim, (size_t)out.dim);
    for (int dir = 0; dir < dec->group.n(); ++dir) {
      Cyc ev = dec->xi[dir].pow(cls[dir]);
      for (int r = 0; r < out.dim; ++r) {
        for (int c = 0; c < out.dim; ++c) sys[dir * out.dim + r][c] = out.grading_ops[dir][r][c];
        sys[dir * out.dim + r][r] -= ev;
      }
    }
    auto ns = nullspace(sys);
    if (!ns.empty()) out.graded[cls] = ns;
    total += (int)ns.size();
  }
  require(total == out.dim, Errc::Internal, "graded pieces do not sum to dim V2");

  // compatibility: loop_act[p] maps V_{2,kbar} into V_{2,kbar+class(p)}
  for (int q = 0; q < dg; ++q) {
    for (const auto& [cls, vecs] : out.graded) {
      ClassVec to = dec->group.add(cls, dec->basis[q].kbar);
      auto it = out.graded.find(to);
      for (const auto& v : vecs) {
        Vec<Cyc> img = mat_vec(out.loop_act[q], v);
        if (vec_is_zero(img)) continue;
        require(it != out.graded.end(), Errc::Internal, "graded action left the grading");
        require(coords_in_span(it->second, img).has_value(), Errc::Internal,
                "graded action left the grading");
      }
    }
  }

  // graded irreducibility by generation from every homogeneous basis vector
  for (const auto& [cls, vecs] : out.graded) {
    for (const auto& seed : vecs) {
      SpanBuilder<Cyc> sb;
      std::vector<Vec<Cyc>> frontier;
      if (sb.add(seed)) frontier.push_back(seed);
      while (!frontier.empty() && (int)sb.dim() < out.dim) {
        std::vector<Vec<Cyc>> next;
        for (const auto& v : frontier) {
          for (int q = 0; q < dg; ++q) {
            Vec<Cyc> img = mat_vec(out.loop_act[q], v);
            if (!vec_is_zero(img) && sb.add(img)) next.push_back(std::move(img));
          }
        }
        frontier = std::move(next);
      }
      if ((int)sb.dim() != out.dim)
        raise(Errc::GradedIrreducibilityFailure,
              "a homogeneous vector generates a proper graded submodule of dimension " +
                  std::to_string(sb.dim()));
    }
  }

  // weight refinement of each graded piece
  std::vector<Mat<Cyc>> h0act;
  for (const auto& hb : dec->h0_basis) {
    Vec<Cyc> hc(hb.size(), Cyc(0));
    for (size_t t = 0; t < hb.size(); ++t) hc[t] = Cyc(hb[t]);
    Vec<Cyc> refined = dec->to_refined(hc);
    Mat<Cyc> acc = mat_zero<Cyc>(out.dim, out.dim);
    for (int q = 0; q < dg; ++q) {
      if (refined[q].is_zero()) continue;
      for (int r = 0; r < out.dim; ++r)
        for (int c = 0; c < out.dim; ++c)
          if (!out.loop_act[q][r][c].is_zero()) acc[r][c] += refined[q] * out.loop_act[q][r][c];
    }
    h0act.push_back(std::move(acc));
  }
  std::set<WeightLabel> candidates;
  for (size_t nu = 0; nu < l; ++nu) {
    const Irrep& rep = out.reps[out.carrier[nu]];
    for (const auto& [w, dcount] : rep.weight_dims) {
      (void)dcount;
      WeightLabel lab(dec->h0_basis.size(), Rat(0));
      for (size_t j = 0; j < dec->h0_basis.size(); ++j) {
        Rat v(0);
        for (int i = 0; i < dec->g->rank(); ++i)
          v += dec->h0_basis[j][dec->g->h_index(i)] * Rat(w[i]);
        lab[j] = v;
      }
      candidates.insert(lab);
    }
  }
  for (const auto& [cls, vecs] : out.graded) {
    int found = 0;
    for (const auto& mu : candidates) {
      size_t k = vecs.size();
      Mat<Cyc> sys = mat_zero<Cyc>(dec->h0_basis.size() * (size_t)out.dim, k);
      for (size_t j = 0; j < dec->h0_basis.size(); ++j) {
        for (size_t t = 0; t < k; ++t) {
          Vec<Cyc> img = mat_vec(h0act[j], vecs[t]);
          for (int r = 0; r < out.dim; ++r)
            sys[j * out.dim + r][t] = img[r] - Cyc(mu[j]) * vecs[t][r];
        }
      }
      auto ns = nullspace(sys);
      if (ns.empty()) continue;
      for (const auto& coef : ns) {
        Vec<Cyc> x((size_t)out.dim, Cyc(0));
        for (size_t t = 0; t < k; ++t)
          for (int r = 0; r < out.dim; ++r) x[r] += coef[t] * vecs[t][r];
        out.weight_graded[cls][mu].push_back(std::move(x));
      }
      found += (int)ns.size();
    }
    require(found == (int)vecs.size(), Errc::Internal,
            "weight refinement of the graded pieces lost dimensions");
  }

  return out;
}

}  // namespace lietor
