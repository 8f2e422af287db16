#include "lietor/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace lietor {

namespace {

using Poly = std::vector<Rat>;  // coefficient of x^i at index i

void poly_trim(Poly& p) {
  while (p.size() > 1 && is_zero(p.back())) p.pop_back();
}

// Exact division, remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
  long dd = (long)den.size() - 1;
  for (long i = (long)num.size() - 1; i >= dd; --i) {
    Rat f = num[i] / den[dd];
    if (is_zero(f)) continue;
    q[i - dd] = f;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (auto& c : num)
    require(is_zero(c), Errc::Internal, "cyclotomic polynomial division not exact");
  poly_trim(q);
  return q;
}

struct CycTables {
  Poly phi;                     // cyclotomic polynomial
  long deg = 1;                 // phi(n)
  std::vector<Poly> xpow_mod;   // x^t mod phi, grown on demand
};

std::map<long, CycTables>& table_cache() {
  static std::map<long, CycTables> cache;
  return cache;
}
std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

Poly compute_cyclotomic(long n) {
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  Poly num(n + 1, Rat(0));
  num[0] = Rat(-1);
  num[n] = Rat(1);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_poly(d));
  }
  return num;
}

CycTables& tables_for(long n) {
  {
    std::lock_guard<std::mutex> lk(table_mutex());
    auto it = table_cache().find(n);
    if (it != table_cache().end()) return it->second;
  }
  // Compute outside the lock; divisor polynomials recurse through here.
  CycTables t;
  if (n == 1) {
    t.phi = {Rat(-1), Rat(1)};  // x - 1
  } else {
    t.phi = compute_cyclotomic(n);
  }
  t.deg = (long)t.phi.size() - 1;
  t.xpow_mod.reserve(2 * t.deg);
  for (long i = 0; i < t.deg; ++i) {
    Poly p(t.deg, Rat(0));
    p[i] = Rat(1);
    t.xpow_mod.push_back(std::move(p));
  }
  std::lock_guard<std::mutex> lk(table_mutex());
  auto [it, fresh] = table_cache().emplace(n, std::move(t));
  (void)fresh;
  return it->second;
}

// x^t mod Phi_n as a coefficient vector of length deg.
const Poly& xpow(long n, long t) {
  CycTables& tab = tables_for(n);
  {
    std::lock_guard<std::mutex> lk(table_mutex());
    while ((long)tab.xpow_mod.size() <= t) {
      const Poly& prev = tab.xpow_mod.back();
      Poly nxt(tab.deg, Rat(0));
      // multiply by x, then reduce the single overflow coefficient
      Rat top = prev[tab.deg - 1];
      for (long i = tab.deg - 1; i >= 1; --i) nxt[i] = prev[i - 1];
      nxt[0] = Rat(0);
      if (!is_zero(top)) {
        for (long i = 0; i < tab.deg; ++i) nxt[i] -= top * tab.phi[i];
      }
      tab.xpow_mod.push_back(std::move(nxt));
    }
  }
  return tab.xpow_mod[t];
}

}  // namespace

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rat>& cyclotomic_poly(long n) { return tables_for(n).phi; }

Cyc Cyc::root_of_unity(long n, long k) {
  require(n >= 1, Errc::ConductorMismatch, "conductor must be >= 1");
  k %= n;
  if (k < 0) k += n;
  long d = euler_phi(n);
  std::vector<Rat> c = xpow(n, k);
  c.resize(d, Rat(0));
  Cyc out(n, std::move(c));
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (!lietor::is_zero(x)) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!lietor::is_zero(c_[i])) return false;
  return true;
}

Rat Cyc::rational() const {
  require(is_rational(), Errc::Internal, "scalar is not rational: " + str());
  return c_[0];
}

Cyc Cyc::promoted(long m) const {
  if (m == n_) return *this;
  require(m % n_ == 0, Errc::ConductorMismatch,
          "cannot promote conductor " + std::to_string(n_) + " to " + std::to_string(m));
  long step = m / n_, dm = euler_phi(m);
  std::vector<Rat> out(dm, Rat(0));
  for (long i = 0; i < (long)c_.size(); ++i) {
    if (lietor::is_zero(c_[i])) continue;
    const auto& pw = xpow(m, step * i);
    for (long j = 0; j < dm; ++j) out[j] += c_[i] * pw[j];
  }
  return Cyc(m, std::move(out));
}

void Cyc::align(const Cyc& a, const Cyc& b, Cyc& pa, Cyc& pb) {
  long m = lcm_long(a.n_, b.n_);
  pa = a.promoted(m);
  pb = b.promoted(m);
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc a, b;
  align(*this, o, a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  Cyc a, b;
  align(*this, o, a, b);
  long d = (long)a.c_.size();
  std::vector<Rat> conv(2 * d - 1, Rat(0));
  for (long i = 0; i < d; ++i) {
    if (lietor::is_zero(a.c_[i])) continue;
    for (long j = 0; j < d; ++j) {
      if (lietor::is_zero(b.c_[j])) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> out(d, Rat(0));
  for (long t = 0; t < 2 * d - 1; ++t) {
    if (lietor::is_zero(conv[t])) continue;
    if (t < d) {
      out[t] += conv[t];
    } else {
      const auto& pw = xpow(a.n_, t);
      for (long j = 0; j < d; ++j) out[j] += conv[t] * pw[j];
    }
  }
  return Cyc(a.n_, std::move(out));
}

Cyc Cyc::inverse() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) return Cyc(Rat(1) / c_[0]).promoted(n_);
  // extended Euclid in Q[x]: u*a + v*Phi = gcd = const
  Poly r0 = cyclotomic_poly(n_);
  Poly r1(c_.begin(), c_.end());
  poly_trim(r1);
  Poly s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of `a` along the way
  auto poly_scale_sub = [](Poly& dst, const Poly& src, const Rat& f, long shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, Rat(0));
    for (size_t i = 0; i < src.size(); ++i) dst[i + shift] -= f * src[i];
  };
  while (r1.size() > 1 || !lietor::is_zero(r1[0])) {
    // divide r0 by r1
    Poly q(std::max<long>(1, (long)r0.size() - (long)r1.size() + 1), Rat(0));
    Poly rem = r0;
    long d1 = (long)r1.size() - 1;
    for (long i = (long)rem.size() - 1; i >= d1; --i) {
      Rat f = rem[i] / r1[d1];
      if (lietor::is_zero(f)) continue;
      q[i - d1] = f;
      for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= f * r1[j];
    }
    poly_trim(rem);
    // s_new = s0 - q*s1
    Poly snew = s0;
    for (size_t i = 0; i < q.size(); ++i) {
      if (lietor::is_zero(q[i])) continue;
      poly_scale_sub(snew, s1, q[i], (long)i);
    }
    poly_trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (r1.size() == 1 && lietor::is_zero(r1[0])) break;
  }
  // r0 is the (constant) gcd, s0 the cofactor of `a`
  require(r0.size() == 1 && !lietor::is_zero(r0[0]), Errc::Internal,
          "element shares a factor with the cyclotomic polynomial");
  long d = (long)c_.size();
  std::vector<Rat> out(d, Rat(0));
  for (size_t i = 0; i < s0.size(); ++i) {
    if (lietor::is_zero(s0[i])) continue;
    const auto& pw = xpow(n_, (long)i);
    for (long j = 0; j < d; ++j) out[j] += (s0[i] / r0[0]) * pw[j];
  }
  return Cyc(n_, std::move(out));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

Cyc Cyc::conj() const {
  if (n_ <= 2) return *this;
  long d = (long)c_.size();
  std::vector<Rat> out(d, Rat(0));
  for (long i = 0; i < d; ++i) {
    if (lietor::is_zero(c_[i])) continue;
    const auto& pw = xpow(n_, ((n_ - 1) * i) % n_);
    for (long j = 0; j < d; ++j) out[j] += c_[i] * pw[j];
  }
  return Cyc(n_, std::move(out));
}

Cyc Cyc::pow(long e) const {
  Cyc base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Cyc acc = Cyc::one().promoted(n_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Cyc::operator==(const Cyc& o) const {
  Cyc a, b;
  align(*this, o, a, b);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

long Cyc::torsion_order() const {
  if (is_zero()) return 0;
  long cap = lcm_long(2, n_);
  Cyc acc = Cyc::one();
  for (long k = 1; k <= cap; ++k) {
    acc *= *this;
    if (acc == Cyc::one()) return k;
  }
  return 0;
}

int Cyc::cmp(const Cyc& a, const Cyc& b) {
  Cyc pa, pb;
  align(a, b, pa, pb);
  for (size_t i = 0; i < pa.c_.size(); ++i) {
    int c = ::cmp(pa.c_[i], pb.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (lietor::is_zero(c_[i])) continue;
    Rat v = c_[i];
    if (first) {
      if (sgn(v) < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (sgn(v) < 0 ? "-" : "+");
      if (sgn(v) < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct CycParser {
  const std::string& s;
  size_t pos = 0;
  long default_n;

  explicit CycParser(const std::string& str, long n) : s(str), default_n(n) {}

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    require(pos > start && isdigit((unsigned char)s[pos - 1]), Errc::ParseError,
            "expected integer in scalar literal '" + s + "'");
    return std::stol(s.substr(start, pos - start));
  }

  // term := rational [*zpart] | [rational *] zpart
  Cyc parse_term(bool negate) {
    skip_ws();
    Rat coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && (isdigit((unsigned char)s[pos]))) {
      long num = parse_int();
      long den = 1;
      if (eat('/')) den = parse_int();
      coeff = rat_of(num, den);
      have_coeff = true;
    }
    Cyc out;
    skip_ws();
    bool star = false;
    if (have_coeff && eat('*')) star = true;
    skip_ws();
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      long k = 1;
      if (eat('^')) k = parse_int();
      long n = default_n;
      if (eat('@')) n = parse_int();
      require(n >= 1, Errc::ParseError, "conductor must be positive in '" + s + "'");
      out = Cyc(coeff) * Cyc::root_of_unity(n, k);
    } else {
      require(have_coeff && !star, Errc::ParseError, "malformed scalar term in '" + s + "'");
      out = Cyc(coeff);
    }
    return negate ? -out : out;
  }

  Cyc parse() {
    Cyc acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = parse_term(neg);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        acc += parse_term(false);
      } else if (eat('-')) {
        acc += parse_term(true);
      } else {
        raise(Errc::ParseError, "unexpected character at position " + std::to_string(pos) +
                                    " in scalar literal '" + s + "'");
      }
    }
    return acc;
  }
};

}  // namespace

Cyc parse_cyc(const std::string& text, long default_conductor) {
  CycParser p(text, default_conductor);
  return p.parse();
}

}  // namespace lietor
