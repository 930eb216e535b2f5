// Type-A root system data and the coned deformation arrangements.
#pragma once

#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/rational.hpp"

namespace logsheaf {

struct DeformationParams {
  int j = 0;  // shifts run over -j <= s <= k+j
  int k = 0;
};

struct RootSystem {
  char family = 'A';
  int m = 2;                                   // rank
  std::vector<std::vector<Int>> positive_roots;  // coefficients on (x_1..x_m)
  int coxeter = 3;
};

// Positive roots of A_m realized as x_a + ... + x_b, 1 <= a <= b <= m.
std::vector<std::vector<Int>> positive_roots(char family, int m);

int coxeter_number(char family, int m);

RootSystem make_root_system(char family, int m);

// { x_0 = 0 } union { alpha = s x_0 : alpha positive, -j <= s <= k+j },
// coned in P^m with coordinates (z, x, y[, w]).
Arrangement build_deformation(const RootSystem& phi, const DeformationParams& p);

// Convenience: the A_m deformation in one call.
Arrangement deformation_A(int m, int j, int k);

}  // namespace logsheaf
