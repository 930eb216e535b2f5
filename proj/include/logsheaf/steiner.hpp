// Linear (Steiner) presentations, pencil restriction, and the reduction /
// extension moves.  A SteinerMatrix stores the syzygy rows of a resolution
// 0 -> O(-1)^(i-2) -> O^i -> F -> 0, so rows = i-2 and cols = i, and the
// first Chern class of the cokernel is the row count.
#pragma once

#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/split.hpp"

namespace logsheaf {

struct SteinerMatrix {
  std::vector<std::vector<HPoly>> entries;  // [syzygy][generator], linear forms

  int rows() const { return (int)entries.size(); }
  int cols() const { return entries.empty() ? 0 : (int)entries[0].size(); }
  int c1() const { return rows(); }
};

// Syzygy matrix of a linear resolution; errors with "resolution not linear"
// when beta_0 or beta_1 is not concentrated in a single degree pair (a, a+1)
// (free arrangements included).
SteinerMatrix steiner_extract(const Arrangement& A);

// Degrees of the gcd of all i x i minors of the matrix restricted to L,
// for i = 1..rows; -1 marks an identically-zero minor level.
std::vector<int> minor_gcd_ladder(const SteinerMatrix& M, const Line& L);

// Splitting type of coker(O_L(-1)^(i-2) -> O_L^i) on the line: validated by
// the maximal-minor gcd (must be a unit), then read off the degrees of a
// minimal basis of the kernel of the transposed pencil (the kernel module is
// free of rank 2 with generator degrees (a1, a2)).
SplittingType pencil_splitting(const SteinerMatrix& M, const Line& L);

// Nontrivial extension of O_H by the cokernel: one more row and column.
// The extension class is the first candidate in a fixed basis order that is
// nontrivial and keeps the restricted maximal minors coprime along H.
SteinerMatrix extension_move(const SteinerMatrix& M, const Line& H);

// Kernel of the (unique up to scalar) surjection onto O_L for an unstable
// line: one fewer row and column.  Errors when L is not unstable.
SteinerMatrix reduction_move(const SteinerMatrix& M, const Line& L);

// Unstable = extremal splitting (0, c1) of the cokernel.
bool matrix_unstable_line(const SteinerMatrix& M, const Line& L);

// Serialization as arrays of polynomial strings.
std::vector<std::vector<std::string>> matrix_strings(const SteinerMatrix& M);

}  // namespace logsheaf
