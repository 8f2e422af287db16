#pragma once

#include <map>

#include "lietor/grading.hpp"

namespace lietor {

// Z^n degree of a loop/central/derivation term.
struct Degree {
  std::vector<long> k;

  Degree() = default;
  explicit Degree(std::vector<long> v) : k(std::move(v)) {}
  size_t size() const { return k.size(); }
  long operator[](size_t i) const { return k[i]; }
  Degree operator+(const Degree& o) const {
    Degree out(k);
    for (size_t i = 0; i < k.size(); ++i) out.k[i] += o.k[i];
    return out;
  }
  Degree operator-() const {
    Degree out(k);
    for (auto& v : out.k) v = -v;
    return out;
  }
  bool is_zero() const {
    for (long v : k)
      if (v != 0) return false;
    return true;
  }
  auto operator<=>(const Degree&) const = default;
  std::string str() const;
};

// Enumeration window [-w, w]^n. Elements themselves are unbounded; the
// window bounds sweeps and the checked bracket.
struct DegreeWindow {
  long w = 1;
  int n = 1;
  bool contains(const Degree& d) const {
    for (long v : d.k)
      if (v < -w || v > w) return false;
    return true;
  }
  std::vector<Degree> all() const;
};

// Element of the twisted full toroidal algebra: loop part (coefficients
// in g, degree-homogeneous), central part t^r K_i in dA-reduced canonical
// form, derivation part t^r d_i. Coefficients are refined-basis coords.
struct ToroidalElement {
  std::map<Degree, Vec<Cyc>> loop;                   // degree -> refined coords
  std::map<std::pair<Degree, int>, Cyc> central;     // (r, i) -> coeff
  std::map<std::pair<Degree, int>, Cyc> deriv;       // (r, i) -> coeff

  bool is_zero() const { return loop.empty() && central.empty() && deriv.empty(); }
  ToroidalElement operator+(const ToroidalElement& o) const;
  ToroidalElement operator-(const ToroidalElement& o) const;
  ToroidalElement operator*(const Cyc& s) const;
  bool operator==(const ToroidalElement& o) const;
};

// A root of the toroidal algebra: finite part alpha (h0-weight label,
// zero allowed) plus the null translate delta_k.
struct ToroidalRoot {
  WeightLabel alpha;
  Degree k;
  bool real() const;
};

// Weight functional on h~ = h0 + sum C K_i + sum C d_i, recorded by its
// values on the h0 basis, the K_i and the d_i.
struct WeightFn {
  std::vector<Cyc> h0_values;
  std::vector<Cyc> k_values;
  std::vector<Cyc> d_values;
  bool operator==(const WeightFn&) const = default;
};

// The twisted full toroidal Lie algebra tau~ = LT + Z(m) + D(m) over a
// fixed eigenspace decomposition, with cocycle phi = a phi_1 + b phi_2.
class ToroidalAlgebra {
 public:
  ToroidalAlgebra(DecPtr dec, Cyc phi_a = Cyc(0), Cyc phi_b = Cyc(0));

  const EigenspaceDecomposition& dec() const { return *dec_; }
  DecPtr dec_ptr() const { return dec_; }
  int n() const { return dec_->group.n(); }
  const Cyc& phi_a() const { return phi_a_; }
  const Cyc& phi_b() const { return phi_b_; }

  bool in_gamma(const Degree& r) const { return dec_->group.in_gamma(r.k); }

  // --- element constructors ---
  // x given in refined coords; the nonzero components must lie in g_kbar.
  ToroidalElement loop(const Degree& k, const Vec<Cyc>& refined) const;
  // x given in Chevalley coords.
  ToroidalElement loop_chevalley(const Degree& k, const Vec<Cyc>& chevalley) const;
  ToroidalElement loop_basis(const Degree& k, int refined_idx) const;
  ToroidalElement central(const Degree& r, int i, const Cyc& c = Cyc(1)) const;
  ToroidalElement derivation(const Degree& r, int i, const Cyc& c = Cyc(1)) const;
  // D(u, r) = sum_i u_i t^r d_i and I(u, r) = D(u, r) - D(u, 0)
  ToroidalElement D_element(const Vec<Cyc>& u, const Degree& r) const;
  ToroidalElement I_element(const Vec<Cyc>& u, const Degree& r) const;

  // canonical form of a raw central sum modulo dA(m)
  std::map<std::pair<Degree, int>, Cyc> reduce_central(
      const std::map<std::pair<Degree, int>, Cyc>& raw) const;

  // cocycle value (a phi_1 + b phi_2)(t^r d_i, t^s d_j), dA-reduced
  ToroidalElement cocycle(const Degree& r, int i, const Degree& s, int j) const;

  // full bracket; exact, unwindowed
  ToroidalElement bracket(const ToroidalElement& x, const ToroidalElement& y) const;
  // bracket that raises WindowOverflow if any output degree leaves W
  ToroidalElement bracket_windowed(const ToroidalElement& x, const ToroidalElement& y,
                                   const DegreeWindow& w) const;

  // basis of the root space tau~_gamma (WindowOverflow if gamma.k outside W)
  std::vector<ToroidalElement> root_space(const ToroidalRoot& gamma,
                                          const DegreeWindow& w) const;

  // coroot gamma^vee = alpha^vee + (2/(alpha|alpha)) sum k_i K_i
  ToroidalElement coroot(const ToroidalRoot& gamma) const;

  // evaluation of a weight functional on an h~-element (loop part must be
  // degree-0 h0; central/derivation parts degree 0)
  Cyc eval_weight(const WeightFn& lam, const ToroidalElement& h) const;
  // r_gamma(lam) = lam - lam(gamma^vee) gamma
  WeightFn weyl_reflect(const ToroidalRoot& gamma, const WeightFn& lam) const;

  // pi: I -> gl_n, I(u, r) -> matrix with (j,i) entry u_i r_j
  Mat<Cyc> pi_of_I(const Vec<Cyc>& u, const Degree& r) const;

  // window basis of tau~ (loops, reduced central, derivations)
  struct BasisItem {
    enum Kind { Loop, Central, Deriv } kind;
    Degree deg;
    int idx;  // refined index for loops, direction for central/deriv
    ToroidalElement elem;
    std::string name;
  };
  std::vector<BasisItem> window_basis(const DegreeWindow& w) const;

  // element literal parsing/printing: terms "x3@[1]", "K_1@[0]",
  // "d_1@[-2]" with optional scalar prefixes
  ToroidalElement parse_element(const std::string& text) const;
  std::string format_element(const ToroidalElement& e) const;

 private:
  void check_gamma(const Degree& r) const;
  DecPtr dec_;
  Cyc phi_a_, phi_b_;
};

}  // namespace lietor
