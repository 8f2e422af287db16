#pragma once

#include <string>
#include <vector>

#include "lietor/rat.hpp"

namespace lietor {

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^{phi(N)-1} after reduction modulo the N-th cyclotomic
// polynomial. The representation at a fixed conductor is canonical, so
// equality is coefficient-wise. Binary operations lift both operands to
// the lcm of their conductors.
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  Cyc(const Rat& r) : n_(1), c_(1, r) {}
  Cyc(long v) : n_(1), c_(1, rat_of(v)) {}

  // zeta_N^k
  static Cyc root_of_unity(long n, long k);
  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(Rat(1)); }

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // throws unless is_rational()

  // Same element expressed in Q(zeta_M); requires n | M.
  Cyc promoted(long m) const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const;  // DivisionByZero on zero divisor
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

  Cyc inverse() const;
  Cyc conj() const;       // complex conjugation, z -> z^{N-1}
  Cyc pow(long e) const;  // negative exponents via inverse

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Multiplicative order if this is a root of unity, otherwise 0.
  long torsion_order() const;

  // Rendering: "p/q", "z^k", "p/q*z^k", joined with +/-. No conductor
  // suffix; callers that need one append "@N" themselves.
  std::string str() const;
  // Stable total order for use as a map key (conductor, then coeffs).
  static int cmp(const Cyc& a, const Cyc& b);

 private:
  Cyc(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static void align(const Cyc& a, const Cyc& b, Cyc& pa, Cyc& pb);

  long n_;              // conductor
  std::vector<Rat> c_;  // length phi(n_)
};

inline bool is_zero(const Cyc& a) { return a.is_zero(); }

struct CycLess {
  bool operator()(const Cyc& a, const Cyc& b) const { return Cyc::cmp(a, b) < 0; }
};

// Parses a sum of terms "p/q", "z^k", "p/q*z^k"; each z may carry an
// explicit conductor as "z^k@N", otherwise default_conductor is used.
Cyc parse_cyc(const std::string& text, long default_conductor = 1);

long euler_phi(long n);

// Coefficients of the N-th cyclotomic polynomial (degree phi(N), monic),
// index i = coefficient of x^i. Cached.
const std::vector<Rat>& cyclotomic_poly(long n);

}  // namespace lietor
