// The combinatorial splitting criterion, the explicit A2 catalogs of
// unstable and jumping lines, the conic C_j, and exhaustive candidate scans.
#pragma once

#include <optional>
#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/rootsys.hpp"
#include "logsheaf/split.hpp"

namespace logsheaf {

// Combinatorial criterion for the splitting T_A|_L = O(-d1) + O(-d2):
//   (i)  H in A with h = |A^H|:        d = (n-h, h-1)    when n-h <= ceil((n-1)/2)
//   (ii) L not in A with l = |L cap A|: d = (n-l, l-1)    when n-l >= ceil(n/2)
// Returns the unnormalized pair (d1 <= d2), or nullopt when the hypothesis
// fails (never guesses).
std::optional<std::pair<int, int>> theorem_main0_splitting(int n, int count, bool in_arrangement);

// The same criterion applied to a concrete line of / outside A, normalized to
// the E = T_A(2k+3j+1) convention.  nullopt when inapplicable.
std::optional<SplittingType> main0_splitting_on(const Arrangement& A, const Line& L);

struct DualConic {
  // C_j in point coordinates (z, x, y); lines are tangent iff l^T adj(Q) l = 0
  std::vector<std::vector<Int>> Q;
  std::vector<std::vector<Int>> adjugate;
  Int det;
};

// 3 j^2 z^2 + 12 j z^2 - 4 x^2 - 4 x y - 4 y^2 + 12 x z + 12 y z = 0
DualConic conic_Cj(int j);

bool conic_tangency(int j, const Line& L);

struct LineCatalogEntry {
  Line line;
  bool in_arrangement = false;
  SplittingType predicted;
  int predicted_order = 0;
};

// The six unstable lines (k >= 3): x=(k+j)z, y=(k+j)z, y+x=-jz in A and
// x=-(j+1)z, y=-(j+1)z, y+x=(k+j+1)z outside.
std::vector<LineCatalogEntry> unstable_catalog(int k, int j);

// For each 0 <= 2s <= k-1: X_(k+j-s), Y_(k+j-s), H_(k+j+1-s) in A and
// X_(-(j+s+1)), Y_(-(j+s+1)), H_(-(j+s)) outside, with splitting (s, k-1-s).
std::vector<LineCatalogEntry> jump_catalog(int k, int j);

struct ScanResult {
  std::vector<Line> lines;  // all unstable lines found, canonically sorted
  std::vector<Line> candidates_tested;
};

// Tests is_unstable over { x=sz }, { y=sz }, { x+y=sz } for |s| <= k+j+bound,
// the line at infinity, all lines through pairs of multiple points, and
// `random_count` seeded random lines.  A scan, not a completeness proof.
ScanResult scan_unstable(const Arrangement& A, int bound, int random_count, uint64_t seed);

// The printed cubic through the twelve irrational jumping lines of the
// (k, j) = (6, 0) experiment (dual coordinates x, y, z).
HPoly jumping_cubic_k6();

}  // namespace logsheaf
