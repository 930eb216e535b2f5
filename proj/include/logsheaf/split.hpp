// Splitting types of the logarithmic bundle on lines, computed from the free
// presentation restricted to the line (never from module elements, so
// singular points of the arrangement on the line are harmless).
#pragma once

#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/logmod.hpp"

namespace logsheaf {

struct Line {
  std::vector<Int> ell;                   // dual coordinates (lz, lx, ly), canonical
  std::vector<std::vector<Int>> param;    // two integer points spanning the line

  static Line from_dual(const std::vector<Int>& dual);
  // Explicit parameterization (for invariance tests); points must lie on the
  // line and be independent.
  static Line with_param(const std::vector<Int>& dual, std::vector<std::vector<Int>> pts);

  bool operator==(const Line& o) const { return ell == o.ell; }
  bool operator<(const Line& o) const { return ell < o.ell; }
};

// Restriction of a form to the line in the chosen parameterization.
HPoly restrict_to_line(const HPoly& f, const Line& L);

struct SplittingType {
  int a1 = 0, a2 = 0;  // a1 <= a2, normalized so a1 + a2 = k - 1
  bool operator==(const SplittingType& o) const { return a1 == o.a1 && a2 == o.a2; }
};

// h^0(T_A(t)|_L) from the restricted presentation, via
// h^0(F0) - h^0(F1) + dim ker(H^1(F1) -> H^1(F0)) on P^1.
long restricted_h0(const Arrangement& A, const Line& L, int t);

// Splitting type of E = T_A(2k+3j+1) on L; requires deformation provenance.
SplittingType splitting_type(const Arrangement& A, const Line& L);

// Unstable = extremal splitting (0, k-1); free arrangements count as stable
// (always false).
bool is_unstable(const Arrangement& A, const Line& L);

// Deviation of a1 from the generic floor((k-1)/2); 0 = not jumping.
int jumping_order(const Arrangement& A, const Line& L);

enum class Stability { stable, strictly_semistable, unstable_bundle };

// Classification from graded_dim at the normalizing twists.
Stability is_stable(const Arrangement& A);

}  // namespace logsheaf
