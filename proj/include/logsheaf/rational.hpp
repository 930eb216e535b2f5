// Exact rational scalars and small integer helpers used throughout.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace logsheaf {

using Int = mpz_class;
using Rat = mpq_class;

// Serialized form used in all JSON output: "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// dim of the space of degree-d forms in nv variables; 0 for d < 0.
inline long dim_forms(int nv, long d) {
  if (d < 0) return 0;
  long r = 1;
  for (int i = 1; i < nv; ++i) r = r * (d + i) / i;
  return r;
}

// Clears denominators and divides by integer content; sign fixed so the
// first nonzero entry is positive.  Returns the all-zero vector unchanged.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  std::vector<Int> w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = Int(v[i] * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) return w;
  int s = 0;
  for (auto& x : w) {
    x /= g;
    if (s == 0) s = sgn(x);
  }
  if (s < 0)
    for (auto& x : w) x = -x;
  return w;
}

}  // namespace logsheaf
