// Projective arrangements: combinatorics, intersection lattice, characteristic
// polynomial, Chern data, and the nested chains used by the Steiner moves.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsheaf/hpoly.hpp"
#include "logsheaf/rational.hpp"

namespace logsheaf {

struct DeformationParams;

// Primitive integer vector, first nonzero coordinate positive.
std::vector<Int> canonical_form(const std::vector<Int>& v);
std::vector<Int> canonical_form_rat(const std::vector<Rat>& v);

struct Arrangement {
  int ambient_dim = 3;  // number of coordinates (z, x, y[, w])
  std::vector<std::vector<Int>> forms;  // canonical, pairwise non-proportional
  std::vector<std::string> labels;

  // Provenance when built by build_deformation (twist bookkeeping).
  std::optional<int> def_j, def_k;
  char family = 'A';
  int rank_m() const { return ambient_dim - 1; }

  int size() const { return (int)forms.size(); }
  HPoly defining_form() const;  // product of the linear forms
  // -1 if absent
  int index_of(const std::vector<Int>& form) const;
  bool contains(const std::vector<Int>& form) const { return index_of(form) >= 0; }

  std::string canonical_key() const;  // deterministic, used for caching

  // The forms are canonicalized and checked pairwise non-proportional.
  static Arrangement from_forms(int ambient_dim, std::vector<std::vector<Int>> forms,
                                std::vector<std::string> labels = {});
};

struct RestrictionProfile {
  int h = 0;                  // |A^H|
  std::map<int, int> counts;  // multiplicity i >= 2 -> number of such points on H
  int t = 0;                  // sum (i-2) * counts[i]
};

// Multiplicity profile of the points on hyperplane H (P^2 only).  The
// multiplicity of a point counts every line through it, H included.
RestrictionProfile restriction_profile(const Arrangement& A, int H);

struct CharPoly {
  std::vector<Int> coeffs;  // descending: coeffs[0] t^(m+1) + ... + coeffs[m+1]

  std::vector<Int> reduced() const;  // chi / (t - 1), exact
  Int eval(const Int& t) const;
};

// Characteristic polynomial via the intersection-lattice Moebius function.
CharPoly char_poly(const Arrangement& A);

// Write chi/(t-1) = t^2 - b1 t + b2 and return
// (c1, c2) = (-b1 + 2 twist, b2 - b1 twist + twist^2).   P^2 only.
std::pair<Int, Int> chern_classes(const Arrangement& A, const Int& twist);

// P^3 analogue: chi/(t-1) = t^3 - B1 t^2 + B2 t - B3 gives Chern classes
// (-B1, B2, -B3) of the rank-3 logarithmic sheaf.
std::array<Int, 3> chern_classes_p3(const Arrangement& A);

// Deletion A minus hyperplane H.
Arrangement deletion(const Arrangement& A, int H);
// Restriction A^H as an arrangement inside H (one dimension down).
Arrangement restriction_arrangement(const Arrangement& A, int H);

// Points of multiplicity >= min_mult (P^2): canonical point coordinates.
std::vector<std::vector<Int>> multiple_points(const Arrangement& A, int min_mult);

// Deterministic small integer points spanning a hyperplane: 2 points for a
// line in P^2, 3 for a plane in P^3.
std::vector<std::vector<Int>> hyperplane_parameterization(const std::vector<Int>& form);

// Rank-3 intersection points of a P^3 arrangement with the number of
// hyperplanes through each.
std::vector<std::pair<std::vector<Int>, int>> point_flats_p3(const Arrangement& A);

// The grid A_0 and the inner chain A_0 c A_1 c ... c A_{k+j+1}
// (adding H_i = { y + x = (k - i + 1) z } for i = 1..k+j+1).
std::vector<Arrangement> build_inner_chain(const DeformationParams& p);

// Outer chain B_1, ..., B_j (or up to B_{k+j-2} when extended = true);
// B_i adds H_0, ..., H_{1-i} to A_{k+j+1}.
std::vector<Arrangement> build_outer_chain(const DeformationParams& p, bool extended = false);

// The diagonal line H_i = { y + x = (k - i + 1) z } as a canonical form.
std::vector<Int> diagonal_line(const DeformationParams& p, int i);

// x = i z  /  y = i z as canonical forms (P^2).
std::vector<Int> line_X(int i);
std::vector<Int> line_Y(int i);
std::vector<Int> line_infinity();

}  // namespace logsheaf
