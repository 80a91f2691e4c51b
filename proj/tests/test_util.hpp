#pragma once

#include <cstdlib>
#include <random>

#include "jring/laurent.hpp"

namespace jring::testing {

// fixed default seed; override with JRING_TEST_SEED
inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("JRING_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return 20250811;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(test_seed() ^ (salt * 0x9e3779b97f4a7c15ull));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 4,
                                  int max_exp = 4, int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

}  // namespace jring::testing
