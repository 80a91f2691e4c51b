#pragma once

#include <gmpxx.h>

#include <string>

namespace jring {

// Exact scalars.  Everything downstream of these is division-free or
// rational-exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace jring
