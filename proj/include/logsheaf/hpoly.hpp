// Homogeneous polynomials in 2..4 variables over Q, graded-lex ordered.
// Variable order is (z, x, y, w) for 3/4 variables and (s, t) for binary
// forms; the leading term is the graded-lex largest monomial.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "logsheaf/rational.hpp"

namespace logsheaf {

struct Mono {
  std::array<int16_t, 4> e{0, 0, 0, 0};

  int deg() const { return e[0] + e[1] + e[2] + e[3]; }
};

// Descending graded-lex: z-exponent first.  Map iteration then visits the
// leading term first.
struct MonoDescCmp {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da > db;
    for (int i = 0; i < 4; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

inline bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }

// Monomials of degree d in nv variables, descending graded-lex.
std::vector<Mono> mono_list(int nv, int d);
// Position of m within mono_list(nv, deg(m)).
long mono_index(int nv, const Mono& m);

const char* var_name(int nv, int i);

class HPoly {
 public:
  HPoly() = default;
  HPoly(int nv, int deg) : nv_(nv), deg_(deg) {}

  static HPoly monomial(int nv, const Mono& m, const Rat& c);
  // Linear form  sum coeffs[i] * var_i.
  static HPoly linear(int nv, const std::vector<Rat>& coeffs);
  static HPoly linear(int nv, const std::vector<Int>& coeffs);

  int nvars() const { return nv_; }
  int degree() const { return deg_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Mono, Rat, MonoDescCmp>& terms() const { return terms_; }

  Rat coeff(const Mono& m) const;
  void set_coeff(const Mono& m, const Rat& c);

  HPoly operator+(const HPoly& o) const;
  HPoly operator-(const HPoly& o) const;
  HPoly operator*(const HPoly& o) const;
  HPoly operator*(const Rat& c) const;
  HPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const HPoly& o) const;

  HPoly derivative(int var) const;

  // Substitute var_i -> images[i]; images must share nvars and degree 1.
  HPoly substitute(const std::vector<HPoly>& images) const;

  // Leading (graded-lex largest) term; poly must be nonzero.
  std::pair<Mono, Rat> lead() const;

  // Divide by the content and leading sign: integer coefficients, positive
  // leading coefficient.
  HPoly primitive_part() const;

  // Dense coefficient vector indexed by mono_index.
  std::vector<Rat> coeff_vector() const;

  std::string str() const;  // e.g. "3*x^2*y-2*z^3"

 private:
  int nv_ = 3;
  int deg_ = 0;
  std::map<Mono, Rat, MonoDescCmp> terms_;
};

// Exact quotient f / g; throws if the division leaves a remainder.
// Implemented for binary forms (nv = 2).
HPoly divexact_binary(const HPoly& f, const HPoly& g);

// Monic gcd of binary forms under the graded-lex leading-term convention.
// Throws on an all-zero input ("zero gcd undefined").
HPoly binary_gcd(const std::vector<HPoly>& fs);

// Determinant by cofactor expansion; entries must be compatible homogeneous
// polynomials (suitable for small Saito / pencil-minor matrices).
HPoly hpoly_det(const std::vector<std::vector<HPoly>>& m);

}  // namespace logsheaf
