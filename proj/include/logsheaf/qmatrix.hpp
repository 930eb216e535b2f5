// Exact rational matrices: kernels certified over Q, multi-modular ranks.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "logsheaf/modp.hpp"
#include "logsheaf/rational.hpp"

namespace logsheaf {

struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}
  Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Exact reduced row echelon form (in place).  Returns pivot columns.
std::vector<int> qmatrix_rref(QMatrix& m);

// Rank by full rational elimination: the reference oracle.
int rank_exact_elimination(QMatrix m);

// Basis of { v : Mv = 0 }, exact over Q, in the standard free-column
// parameterization.  Empty matrix (0 rows) gives the full standard basis.
// Large inputs go through the modular path; every returned vector is
// verified against M in exact arithmetic either way.
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

// Rational rank via word-size primes: accepted when two independent primes
// agree and one maximal nonsingular minor verifies over Q (fraction-free
// determinant).  Primes dividing any entry denominator are skipped;
// disagreement falls back to full rational elimination.
int rank_multimodular(const QMatrix& m);

// Fraction-free (Bareiss) determinant of a square rational matrix.
Rat det_bareiss(QMatrix m);

// Rational reconstruction of x mod m (balanced): finds n/d with
// |n|, d <= sqrt(m/2), d invertible mod m.  Empty on failure.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m);

// --- certified kernels for implicitly given integer matrices ---
//
// The resolution engine works with matrices that are cheap to build mod p
// but expensive to materialize exactly.  `build` fills the matrix mod p;
// `verify` must check M v = 0 exactly (typically by polynomial arithmetic).

struct ImplicitIntMatrix {
  int rows = 0, cols = 0;
  std::function<void(const PrimeField&, ModMatrix&)> build;
  std::function<bool(const std::vector<Rat>&)> verify;
};

struct CertifiedKernel {
  int rank = 0;                           // certified rational rank
  std::vector<std::vector<Rat>> kernel;   // exact, verified basis
};

// Exact kernel of an implicit integer matrix: mod-p RREF structure, CRT over
// as many primes as reconstruction needs, exact verification of every basis
// vector.  The verified count certifies the rank (cols - #kernel >= rank_p
// forces equality).  Throws on prime-list exhaustion.
CertifiedKernel certified_kernel(const ImplicitIntMatrix& m);

// Rank of an implicit integer matrix mod one prime: a certified lower bound
// for the rational rank.
int implicit_rank_modp(const ImplicitIntMatrix& m, uint32_t p);

}  // namespace logsheaf
