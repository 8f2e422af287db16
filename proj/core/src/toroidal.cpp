#include "lietor/toroidal.hpp"

#include <algorithm>
#include <sstream>

#include "lietor/error.hpp"

namespace lietor {

std::string Degree::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << "]";
  return os.str();
}

std::vector<Degree> DegreeWindow::all() const {
  std::vector<Degree> out;
  std::vector<long> cur(n, -w);
  while (true) {
    out.push_back(Degree(cur));
    int i = n - 1;
    while (i >= 0) {
      if (++cur[i] <= w) break;
      cur[i] = -w;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

template <class K>
void add_term(std::map<K, Cyc>& m, const K& key, const Cyc& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_loop(std::map<Degree, Vec<Cyc>>& m, const Degree& k, const Vec<Cyc>& v) {
  if (vec_is_zero(v)) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, v);
    return;
  }
  for (size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
  if (vec_is_zero(it->second)) m.erase(it);
}

}  // namespace

ToroidalElement ToroidalElement::operator+(const ToroidalElement& o) const {
  ToroidalElement out = *this;
  for (const auto& [k, v] : o.loop) add_loop(out.loop, k, v);
  for (const auto& [k, v] : o.central) add_term(out.central, k, v);
  for (const auto& [k, v] : o.deriv) add_term(out.deriv, k, v);
  return out;
}

ToroidalElement ToroidalElement::operator*(const Cyc& s) const {
  ToroidalElement out;
  if (s.is_zero()) return out;
  for (const auto& [k, v] : loop) out.loop[k] = vec_scale(v, s);
  for (const auto& [k, v] : central) out.central[k] = v * s;
  for (const auto& [k, v] : deriv) out.deriv[k] = v * s;
  return out;
}

ToroidalElement ToroidalElement::operator-(const ToroidalElement& o) const {
  return *this + o * Cyc(-1);
}

bool ToroidalElement::operator==(const ToroidalElement& o) const {
  return (*this - o).is_zero();
}

bool ToroidalRoot::real() const {
  for (const auto& v : alpha)
    if (!is_zero(v)) return true;
  return false;
}

ToroidalAlgebra::ToroidalAlgebra(DecPtr dec, Cyc phi_a, Cyc phi_b)
    : dec_(std::move(dec)), phi_a_(std::move(phi_a)), phi_b_(std::move(phi_b)) {}

void ToroidalAlgebra::check_gamma(const Degree& r) const {
  require((int)r.size() == n(), Errc::DegreeNotInGamma, "degree has wrong length");
  require(in_gamma(r), Errc::DegreeNotInGamma,
          "degree " + r.str() + " is not in Gamma = sum m_i Z");
}

ToroidalElement ToroidalAlgebra::loop(const Degree& k, const Vec<Cyc>& refined) const {
  require((int)k.size() == n(), Errc::ConfigError, "degree has wrong length");
  ClassVec cls = dec_->group.reduce(k.k);
  for (size_t p = 0; p < refined.size(); ++p) {
    if (refined[p].is_zero()) continue;
    require(dec_->basis[p].kbar == cls, Errc::ConfigError,
            "loop coefficient at degree " + k.str() + " is not in g_kbar");
  }
  ToroidalElement out;
  add_loop(out.loop, k, refined);
  return out;
}

ToroidalElement ToroidalAlgebra::loop_chevalley(const Degree& k, const Vec<Cyc>& ch) const {
  return loop(k, dec_->to_refined(ch));
}

ToroidalElement ToroidalAlgebra::loop_basis(const Degree& k, int refined_idx) const {
  Vec<Cyc> v((size_t)dec_->g->dim(), Cyc(0));
  v[refined_idx] = Cyc(1);
  return loop(k, v);
}

ToroidalElement ToroidalAlgebra::central(const Degree& r, int i, const Cyc& c) const {
  check_gamma(r);
  ToroidalElement out;
  std::map<std::pair<Degree, int>, Cyc> raw;
  add_term(raw, {r, i}, c);
  out.central = reduce_central(raw);
  return out;
}

ToroidalElement ToroidalAlgebra::derivation(const Degree& r, int i, const Cyc& c) const {
  check_gamma(r);
  ToroidalElement out;
  add_term(out.deriv, {r, i}, c);
  return out;
}

ToroidalElement ToroidalAlgebra::D_element(const Vec<Cyc>& u, const Degree& r) const {
  check_gamma(r);
  ToroidalElement out;
  for (int i = 0; i < n(); ++i) add_term(out.deriv, {r, i}, u[i]);
  return out;
}

ToroidalElement ToroidalAlgebra::I_element(const Vec<Cyc>& u, const Degree& r) const {
  return D_element(u, r) - D_element(u, Degree(std::vector<long>(n(), 0)));
}

std::map<std::pair<Degree, int>, Cyc> ToroidalAlgebra::reduce_central(
    const std::map<std::pair<Degree, int>, Cyc>& raw) const {
  std::map<std::pair<Degree, int>, Cyc> out;
  for (const auto& [key, c] : raw) {
    const auto& [r, i] = key;
    check_gamma(r);
    if (r.is_zero()) {
      add_term(out, key, c);
      continue;
    }
    int j = -1;
    for (int t = 0; t < n(); ++t) {
      if (r[t] != 0) {
        j = t;
        break;
      }
    }
    if (i != j) {
      add_term(out, key, c);
      continue;
    }
    // t^r K_j = -(1/r_j) sum_{p != j} r_p t^r K_p
    for (int p = 0; p < n(); ++p) {
      if (p == j || r[p] == 0) continue;
      add_term(out, {r, p}, c * Cyc(rat_of(-r[p], r[j])));
    }
  }
  return out;
}

ToroidalElement ToroidalAlgebra::cocycle(const Degree& r, int i, const Degree& s, int j) const {
  check_gamma(r);
  check_gamma(s);
  // (a phi_1 + b phi_2)(t^r d_i, t^s d_j) with
  // phi_1 = -s_i r_j sum_p r_p t^{r+s} K_p, phi_2 = r_i s_j sum_p r_p t^{r+s} K_p
  Cyc factor = phi_a_ * Cyc(rat_of(-s[i] * r[j])) + phi_b_ * Cyc(rat_of(r[i] * s[j]));
  ToroidalElement out;
  if (factor.is_zero()) return out;
  std::map<std::pair<Degree, int>, Cyc> raw;
  Degree rs = r + s;
  for (int p = 0; p < n(); ++p) add_term(raw, {rs, p}, factor * Cyc(rat_of(r[p])));
  out.central = reduce_central(raw);
  return out;
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalElement& x, const ToroidalElement& y) const {
  ToroidalElement out;
  std::map<std::pair<Degree, int>, Cyc> raw_central;

  // loop x loop
  for (const auto& [k, u] : x.loop) {
    for (const auto& [l, v] : y.loop) {
      Vec<Cyc> br = dec_->bracket_refined(u, v);
      add_loop(out.loop, k + l, br);
      Cyc f = dec_->form_refined(u, v);
      if (!f.is_zero()) {
        Degree kl = k + l;
        require(in_gamma(kl), Errc::Internal, "form pairing outside Gamma");
        for (int i = 0; i < n(); ++i) add_term(raw_central, {kl, i}, f * Cyc(rat_of(k[i])));
      }
    }
  }
  // deriv x loop and loop x deriv: [t^r d_i, x t^k] = k_i x t^{r+k}
  auto dl = [&](const std::map<std::pair<Degree, int>, Cyc>& ds,
                const std::map<Degree, Vec<Cyc>>& ls, int sign) {
    for (const auto& [di, c] : ds) {
      const auto& [r, i] = di;
      for (const auto& [k, v] : ls) {
        Cyc coef = c * Cyc(rat_of(sign * k[i]));
        if (coef.is_zero()) continue;
        add_loop(out.loop, r + k, vec_scale(v, coef));
      }
    }
  };
  dl(x.deriv, y.loop, +1);
  dl(y.deriv, x.loop, -1);

  // deriv x central: [t^r d_i, t^s K_j] = s_i t^{r+s} K_j + delta_ij sum_p r_p t^{r+s} K_p
  auto dc = [&](const std::map<std::pair<Degree, int>, Cyc>& ds,
                const std::map<std::pair<Degree, int>, Cyc>& cs, int sign) {
    for (const auto& [di, c1] : ds) {
      const auto& [r, i] = di;
      for (const auto& [cj, c2] : cs) {
        const auto& [s, j] = cj;
        Cyc c = c1 * c2 * Cyc(sign);
        Degree rspd = r + s;
        add_term(raw_central, {rspd, j}, c * Cyc(rat_of(s[i])));
        if (i == j) {
          for (int p = 0; p < n(); ++p)
            add_term(raw_central, {rspd, p}, c * Cyc(rat_of(r[p])));
        }
      }
    }
  };
  dc(x.deriv, y.central, +1);
  dc(y.deriv, x.central, -1);

  // deriv x deriv
  for (const auto& [di, c1] : x.deriv) {
    const auto& [r, i] = di;
    for (const auto& [dj, c2] : y.deriv) {
      const auto& [s, j] = dj;
      Cyc c = c1 * c2;
      Degree rs = r + s;
      add_term(out.deriv, {rs, j}, c * Cyc(rat_of(s[i])));
      add_term(out.deriv, {rs, i}, c * Cyc(rat_of(-r[j])));
      ToroidalElement coc = cocycle(r, i, s, j);
      for (const auto& [key, v] : coc.central) add_term(raw_central, key, c * v);
    }
  }

  for (const auto& [key, v] : reduce_central(raw_central)) add_term(out.central, key, v);
  // re-reduce in case x or y carried raw central parts added above
  out.central = reduce_central(out.central);
  return out;
}

ToroidalElement ToroidalAlgebra::bracket_windowed(const ToroidalElement& x,
                                                  const ToroidalElement& y,
                                                  const DegreeWindow& w) const {
  ToroidalElement out = bracket(x, y);
  auto check = [&](const Degree& d) {
    require(w.contains(d), Errc::WindowOverflow,
            "bracket output degree " + d.str() + " leaves the window [-" +
                std::to_string(w.w) + "," + std::to_string(w.w) + "]^n");
  };
  for (const auto& [k, v] : out.loop) {
    (void)v;
    check(k);
  }
  for (const auto& [key, v] : out.central) {
    (void)v;
    check(key.first);
  }
  for (const auto& [key, v] : out.deriv) {
    (void)v;
    check(key.first);
  }
  return out;
}

std::vector<ToroidalElement> ToroidalAlgebra::root_space(const ToroidalRoot& gamma,
                                                         const DegreeWindow& w) const {
  require(w.contains(gamma.k), Errc::WindowOverflow,
          "root translate " + gamma.k.str() + " outside the window");
  std::vector<ToroidalElement> out;
  ClassVec cls = dec_->group.reduce(gamma.k.k);
  if (gamma.real()) {
    auto it = dec_->by_class_weight.find({cls, gamma.alpha});
    if (it != dec_->by_class_weight.end())
      for (int idx : it->second) out.push_back(loop_basis(gamma.k, idx));
    return out;
  }
  if (in_gamma(gamma.k)) {
    // h0 t^k + central + derivations at this degree
    for (const auto& h : dec_->h0_basis) {
      Vec<Cyc> ch(h.size(), Cyc(0));
      for (size_t t = 0; t < h.size(); ++t) ch[t] = Cyc(h[t]);
      out.push_back(loop_chevalley(gamma.k, ch));
    }
    int j = -1;
    for (int t = 0; t < n(); ++t) {
      if (gamma.k[t] != 0) {
        j = t;
        break;
      }
    }
    for (int i = 0; i < n(); ++i) {
      if (i == j) continue;  // dA relation removes the pivot direction
      out.push_back(central(gamma.k, i));
    }
    for (int i = 0; i < n(); ++i) out.push_back(derivation(gamma.k, i));
    return out;
  }
  auto it = dec_->by_class_weight.find({cls, gamma.alpha});
  if (it != dec_->by_class_weight.end())
    for (int idx : it->second) out.push_back(loop_basis(gamma.k, idx));
  return out;
}

ToroidalElement ToroidalAlgebra::coroot(const ToroidalRoot& gamma) const {
  require(gamma.real(), Errc::NullRoot, "coroot of a null root");
  Vec<Rat> cr = dec_->coroot_of_weight(gamma.alpha);
  Vec<Cyc> ch(cr.size(), Cyc(0));
  for (size_t t = 0; t < cr.size(); ++t) ch[t] = Cyc(cr[t]);
  Degree zero(std::vector<long>(n(), 0));
  ToroidalElement out = loop_chevalley(zero, ch);
  Rat norm = dec_->weight_ip(gamma.alpha, gamma.alpha);
  for (int i = 0; i < n(); ++i) {
    if (gamma.k[i] == 0) continue;
    out = out + central(zero, i, Cyc(Rat(2) * Rat(gamma.k[i]) / norm));
  }
  return out;
}

Cyc ToroidalAlgebra::eval_weight(const WeightFn& lam, const ToroidalElement& h) const {
  Cyc out(0);
  Degree zero(std::vector<long>(n(), 0));
  for (const auto& [k, v] : h.loop) {
    require(k == zero, Errc::ConfigError, "weight evaluated on a non-Cartan element");
    // express the loop part in the h0 basis
    Vec<Cyc> ch = dec_->to_chevalley(v);
    std::vector<Vec<Cyc>> h0;
    for (const auto& b : dec_->h0_basis) {
      Vec<Cyc> bc(b.size(), Cyc(0));
      for (size_t t = 0; t < b.size(); ++t) bc[t] = Cyc(b[t]);
      h0.push_back(std::move(bc));
    }
    auto coords = coords_in_span(h0, ch);
    require(coords.has_value(), Errc::ConfigError, "loop part is not in h0");
    for (size_t t = 0; t < coords->size(); ++t) out += (*coords)[t] * lam.h0_values[t];
  }
  for (const auto& [key, c] : h.central) {
    require(key.first == zero, Errc::ConfigError, "weight evaluated on t^r K_i with r != 0");
    out += c * lam.k_values[key.second];
  }
  for (const auto& [key, c] : h.deriv) {
    require(key.first == zero, Errc::ConfigError, "weight evaluated on t^r d_i with r != 0");
    out += c * lam.d_values[key.second];
  }
  return out;
}

WeightFn ToroidalAlgebra::weyl_reflect(const ToroidalRoot& gamma, const WeightFn& lam) const {
  require(gamma.real(), Errc::NullRoot, "reflection in a null root");
  Cyc m = eval_weight(lam, coroot(gamma));
  WeightFn out = lam;
  for (size_t t = 0; t < out.h0_values.size(); ++t) out.h0_values[t] -= m * Cyc(gamma.alpha[t]);
  for (int i = 0; i < n(); ++i) out.d_values[i] -= m * Cyc(rat_of(gamma.k[i]));
  return out;
}

Mat<Cyc> ToroidalAlgebra::pi_of_I(const Vec<Cyc>& u, const Degree& r) const {
  check_gamma(r);
  Mat<Cyc> m = mat_zero<Cyc>(n(), n());
  for (int j = 0; j < n(); ++j)
    for (int i = 0; i < n(); ++i) m[j][i] = u[i] * Cyc(rat_of(r[j]));
  return m;
}

std::vector<ToroidalAlgebra::BasisItem> ToroidalAlgebra::window_basis(
    const DegreeWindow& w) const {
  std::vector<BasisItem> out;
  for (const Degree& k : w.all()) {
    ClassVec cls = dec_->group.reduce(k.k);
    auto it = dec_->by_class.find(cls);
    if (it == dec_->by_class.end()) continue;
    for (int idx : it->second) {
      out.push_back({BasisItem::Loop, k, idx, loop_basis(k, idx),
                     "x" + std::to_string(idx + 1) + "@" + k.str()});
    }
  }
  for (const Degree& r : w.all()) {
    if (!in_gamma(r)) continue;
    int j = -1;
    for (int t = 0; t < n(); ++t) {
      if (r[t] != 0) {
        j = t;
        break;
      }
    }
    for (int i = 0; i < n(); ++i) {
      if (!r.is_zero() && i == j) continue;
      out.push_back({BasisItem::Central, r, i, central(r, i),
                     "K_" + std::to_string(i + 1) + "@" + r.str()});
    }
  }
  for (const Degree& r : w.all()) {
    if (!in_gamma(r)) continue;
    for (int i = 0; i < n(); ++i) {
      out.push_back({BasisItem::Deriv, r, i, derivation(r, i),
                     "d_" + std::to_string(i + 1) + "@" + r.str()});
    }
  }
  return out;
}

namespace {

// splits "term1 + term2 - term3" at top level (outside () and [])
std::vector<std::pair<std::string, int>> split_terms(const std::string& s) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0, sign = 1;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && !cur.empty()) {
      out.push_back({cur, sign});
      cur.clear();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    if (depth == 0 && (c == '+' || c == '-') && cur.empty()) {
      sign = c == '-' ? -sign : sign;
      continue;
    }
    if (!isspace((unsigned char)c) || depth > 0) cur.push_back(c);
  }
  if (!cur.empty()) out.push_back({cur, sign});
  return out;
}

}  // namespace

ToroidalElement ToroidalAlgebra::parse_element(const std::string& text) const {
  ToroidalElement out;
  auto terms = split_terms(text);
  require(!terms.empty(), Errc::ParseError, "empty element literal");
  for (auto& [term, sign] : terms) {
    Cyc scalar(sign);
    std::string body = term;
    auto star = term.rfind('*');
    if (star != std::string::npos) {
      std::string shead = term.substr(0, star);
      if (!shead.empty() && shead.front() == '(' && shead.back() == ')')
        shead = shead.substr(1, shead.size() - 2);
      scalar = scalar * parse_cyc(shead, dec_->conductor);
      body = term.substr(star + 1);
    }
    auto at = body.find('@');
    require(at != std::string::npos, Errc::ParseError,
            "term '" + term + "' is missing a degree: expected sym@[k..]");
    std::string sym = body.substr(0, at);
    std::string degs = body.substr(at + 1);
    require(degs.size() >= 2 && degs.front() == '[' && degs.back() == ']', Errc::ParseError,
            "bad degree in '" + term + "'");
    std::vector<long> kvec;
    std::string inner = degs.substr(1, degs.size() - 2);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) kvec.push_back(std::stol(tok));
    require((int)kvec.size() == n(), Errc::ParseError,
            "degree in '" + term + "' has wrong length");
    Degree deg(kvec);
    if (sym.rfind("x", 0) == 0) {
      int idx = std::stoi(sym.substr(1)) - 1;
      require(idx >= 0 && idx < dec_->g->dim(), Errc::ParseError, "bad basis index in " + sym);
      out = out + loop_basis(deg, idx) * scalar;
    } else if (sym.rfind("K_", 0) == 0 || sym.rfind("K", 0) == 0) {
      int i = std::stoi(sym.substr(sym.rfind('_') == std::string::npos ? 1 : 2)) - 1;
      require(i >= 0 && i < n(), Errc::ParseError, "bad central index in " + sym);
      out = out + central(deg, i, scalar);
    } else if (sym.rfind("d_", 0) == 0 || sym.rfind("d", 0) == 0) {
      int i = std::stoi(sym.substr(sym.rfind('_') == std::string::npos ? 1 : 2)) - 1;
      require(i >= 0 && i < n(), Errc::ParseError, "bad derivation index in " + sym);
      out = out + derivation(deg, i, scalar);
    } else {
      raise(Errc::ParseError, "unknown symbol '" + sym + "'");
    }
  }
  return out;
}

std::string ToroidalAlgebra::format_element(const ToroidalElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Cyc& c, const std::string& sym) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Cyc(1))) os << "(" << c.str() << ")*";
    os << sym;
  };
  for (const auto& [k, v] : e.loop) {
    for (size_t p = 0; p < v.size(); ++p) {
      if (v[p].is_zero()) continue;
      emit(v[p], "x" + std::to_string(p + 1) + "@" + k.str());
    }
  }
  for (const auto& [key, c] : e.central)
    emit(c, "K_" + std::to_string(key.second + 1) + "@" + key.first.str());
  for (const auto& [key, c] : e.deriv)
    emit(c, "d_" + std::to_string(key.second + 1) + "@" + key.first.str());
  return os.str();
}

}  // namespace lietor
