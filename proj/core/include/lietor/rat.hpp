#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lietor/error.hpp"

namespace lietor {

// Exact rational scalar. All arithmetic in the library bottoms out here.
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long to_long(const Rat& a) {
  require(is_integer(a), Errc::Internal, "rational is not an integer: " + a.get_str());
  require(a.get_num().fits_slong_p(), Errc::Internal, "integer out of range");
  return mpz_get_si(a.get_num_mpz_t());
}

inline std::string rat_str(const Rat& a) { return a.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) raise(Errc::ParseError, "bad rational literal '" + s + "'");
  require(sgn(r.get_den()) != 0, Errc::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace lietor
