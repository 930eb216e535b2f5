// The graded logarithmic derivation module D_0(A): graded pieces, minimal
// free resolution (Betti table), Saito freeness test, and the dual-module
// Betti comparison.
//
// D_0(A) is computed as the syzygy module of the partials of the defining
// form.  The resolution engine runs degree by degree; each rank is pinned by
// a two-sided certificate (mod-p rank of the defining matrix bounds the
// piece dimension from above, mod-p rank of the generator-multiple span
// bounds it from below; equality makes both exact).  Exact kernel bases are
// reconstructed and verified only at the degrees where new generators or
// syzygies actually appear.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/hpoly.hpp"
#include "logsheaf/qmatrix.hpp"

namespace logsheaf {

using PolyVec = std::vector<HPoly>;  // element of a direct sum of twisted S's

struct GradedPiece {
  int degree = 0;
  std::vector<PolyVec> basis;  // derivation tuples (a_0..a_m), each of degree `degree`
  long dim() const { return (long)basis.size(); }
};

struct BettiTable {
  std::map<int, std::map<int, int>> beta;  // homological step -> degree -> rank
  int pdim = 0;
  std::map<int, long> hilbert;  // degree -> dim of the degree piece (up to cutoff)
  int cutoff = 0;
  bool step3_flag = false;  // P^3: nonzero entries would appear at step 3

  bool operator==(const BettiTable& o) const { return beta == o.beta; }
  int beta_at(int step, int degree) const;
  // Sum_p (-1)^p sum_d beta_{p,d} dim S(d' - d) against hilbert[d'], all d'.
  bool alternating_sum_consistent(int nvars) const;
  // Same table with every internal degree shifted.
  BettiTable degree_shifted(int shift) const;
};

struct Exponents {
  std::vector<int> d;  // ascending
};

// Presentation of D_0(A): generators and the graded syzygy matrix, as the
// map  (+)_c S(-col_twists[c]) -> (+)_r S(-row_twists[r]).
struct GradedMatrix {
  std::vector<std::vector<HPoly>> entries;  // [row][col], deg = col_tw - row_tw
  std::vector<int> row_twists, col_twists;
  int rows() const { return (int)row_twists.size(); }
  int cols() const { return (int)col_twists.size(); }
};

struct Presentation {
  std::vector<PolyVec> generators;  // elements of S^(m+1)
  std::vector<int> gen_degrees;
  GradedMatrix syzygies;  // rows = generators, cols = first syzygies
  BettiTable betti;
  int nvars = 3;
};

// Exact basis of the degree-d piece of D_0(A).
GradedPiece graded_dim(const Arrangement& A, int d);

// Minimal graded Betti numbers of D_0(A), scanned through `cutoff`
// (default |A|).  Throws "cutoff too small" if the Hilbert function fails
// to match the Riemann-Roch polynomial on the last three degrees.
BettiTable minimal_resolution(const Arrangement& A, int cutoff = -1);

// Resolution plus explicit generators and syzygy matrix; cached per
// arrangement (thread-safe).
std::shared_ptr<const Presentation> cached_presentation(const Arrangement& A, int cutoff = -1);

// Saito test: free iff pdim = 0 with m generators whose determinant
// (together with the Euler derivation) is a nonzero scalar times the
// defining form.  Returns the exponents when free.
std::pair<bool, std::optional<Exponents>> is_free(const Arrangement& A);

// Saito determinant det[Euler; gens] for externally chosen generators.
HPoly saito_determinant(const Arrangement& A, const std::vector<PolyVec>& gens);

// Betti table of the twisted dual T^(shift): computed from the transposed
// presentation (pdim <= 1 required).  The free case dualizes directly.
BettiTable dual_module_betti(const Arrangement& A, int shift, int cutoff = -1);

// Euler characteristic chi(E(d)) on P^2 for rank-2 Chern data (c1, c2)
// taken at twist 0, evaluated at twist d.
Int rr_chi_p2(const Int& c1, const Int& c2, int d);
// Same on P^3 for rank-3 data (c1, c2, c3).
Int rr_chi_p3(const Int& c1, const Int& c2, const Int& c3, int d);

// --- shared engine, also used for the dual module ---
//
// Iterated syzygies of a base family V inside (+)_c S(-B_c): level 0 is
// ker(Phi) for Phi(e_i) = V_i, later levels are syzygies of the chosen
// generators one level down.

struct SyzygyTowerSpec {
  int nvars = 3;
  std::vector<int> ambient_twists;  // A_i: level-0 elements live in (+) S(-A_i)
  std::vector<int> target_twists;   // B_c
  std::vector<PolyVec> base;        // V_i over the B-components, integer coeffs
  int cutoff = 0;
  int max_steps = 2;                // compute levels 0..max_steps; beyond -> flag
  // Optional variable involution making the level-0 matrix split (component
  // permutation on ambient entries must match: see build site).
  bool use_symmetry = false;
  std::vector<int> var_perm;   // sigma on variables
  std::vector<int> comp_perm;  // induced permutation of ambient components
};

struct TowerResult {
  BettiTable betti;  // hilbert = level-0 piece dims
  std::vector<PolyVec> gens;
  std::vector<int> gen_degrees;
  GradedMatrix syzygies;
};

TowerResult run_syzygy_tower(const SyzygyTowerSpec& spec);

// The dual tower for T^(shift): base = rows of the transposed presentation.
// Used by dual_module_betti and the P^3 unstable-plane scans.
TowerResult dual_tower(const Arrangement& A, int shift, int cutoff);

}  // namespace logsheaf
