// P^3 / A3 experiments: unstable hyperplanes via top restricted cohomology
// and the dual-module comparison.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/logmod.hpp"

namespace logsheaf {

struct Plane {
  std::vector<Int> dual;                 // primitive 4-vector, canonical
  std::vector<std::vector<Int>> param;   // three integer points spanning it

  static Plane from_dual(const std::vector<Int>& d);
  static Plane with_param(const std::vector<Int>& d, std::vector<std::vector<Int>> pts);

  bool operator<(const Plane& o) const { return dual < o.dual; }
  bool operator==(const Plane& o) const { return dual == o.dual; }
};

// A presentation restricted to P^3 work: rows of data taken from a pdim-1
// linear resolution with generators in one degree a and syzygies in a+1.
struct PlanePresentation {
  std::vector<int> gen_degrees;        // all equal a
  std::vector<int> syz_degrees;        // all equal a+1
  std::vector<std::vector<HPoly>> phi;  // [gen][syz] linear entries (4 vars)
  int twist = 0;                        // E = T_A(twist), twist = a
};

PlanePresentation plane_presentation(const Arrangement& A, int cutoff);
// Presentation of the shifted dual T^(-shift)... built from the dual tower.
PlanePresentation dual_plane_presentation(const Arrangement& A, int shift, int cutoff);

// h^2(E|_H(-3)) for E = coker(O(-1)^s -> O^g) restricted to the plane:
// the cokernel dimension of H^2(O_H(-4))^s -> H^2(O_H(-3))^g.
long plane_h2(const PlanePresentation& P, const Plane& H);

// Unstable plane test: h^2(E|_H(-3)) != 0.
bool unstable_plane_test(const PlanePresentation& P, const Plane& H);

struct PlaneScanResult {
  std::set<std::vector<Int>> unstable_E;
  std::set<std::vector<Int>> unstable_dual;  // empty unless dual_also
  int common = 0;
  int candidates = 0;
};

// Scans lattice planes { alpha = s z } for alpha in the positive roots and
// coordinate forms with |s| <= bound, the plane at infinity, planes spanned
// by triples of points lying on >= 4 hyperplanes, and seeded random planes.
PlaneScanResult scan_unstable_planes(const Arrangement& A, bool dual_also, int bound,
                                     uint64_t seed, int random_count = 50, int cutoff = 11);

}  // namespace logsheaf
