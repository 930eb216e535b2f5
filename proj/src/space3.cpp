#include "logsheaf/space3.hpp"

#include <random>
#include <stdexcept>

#include "logsheaf/parallel.hpp"
#include "logsheaf/rootsys.hpp"

namespace logsheaf {

Plane Plane::from_dual(const std::vector<Int>& d) {
  Plane P;
  P.dual = canonical_form(d);
  P.param = hyperplane_parameterization(P.dual);
  return P;
}

Plane Plane::with_param(const std::vector<Int>& d, std::vector<std::vector<Int>> pts) {
  Plane P;
  P.dual = canonical_form(d);
  if (pts.size() != 3) throw std::invalid_argument("plane parameterization needs three points");
  for (const auto& p : pts) {
    Int dot = 0;
    for (size_t c = 0; c < p.size(); ++c) dot += P.dual[c] * p[c];
    if (dot != 0) throw std::invalid_argument("parameterization point not on the plane");
  }
  P.param = std::move(pts);
  return P;
}

namespace {

PlanePresentation presentation_from(const std::vector<int>& gdeg, const GradedMatrix& syz) {
  PlanePresentation P;
  P.gen_degrees = gdeg;
  P.syz_degrees = syz.col_twists;
  if (P.gen_degrees.empty() || P.syz_degrees.empty())
    throw std::runtime_error("plane tests need a nonsplit linear presentation");
  int a = P.gen_degrees[0];
  for (int d : P.gen_degrees)
    if (d != a) throw std::runtime_error("plane tests need a linear presentation");
  for (int d : P.syz_degrees)
    if (d != a + 1) throw std::runtime_error("plane tests need a linear presentation");
  P.twist = a;
  P.phi = syz.entries;
  return P;
}

}  // namespace

PlanePresentation plane_presentation(const Arrangement& A, int cutoff) {
  auto pres = cached_presentation(A, cutoff);
  if (pres->betti.pdim != 1) throw std::runtime_error("plane tests need pdim 1");
  return presentation_from(pres->gen_degrees, pres->syzygies);
}

PlanePresentation dual_plane_presentation(const Arrangement& A, int shift, int cutoff) {
  TowerResult res = dual_tower(A, shift, cutoff);
  GradedMatrix syz = res.syzygies;
  return presentation_from(res.gen_degrees, syz);
}

HPoly restrict_to_plane(const HPoly& f, const Plane& H) {
  std::vector<HPoly> images;
  for (int v = 0; v < 4; ++v) {
    std::vector<Rat> c = {Rat(H.param[0][v]), Rat(H.param[1][v]), Rat(H.param[2][v])};
    images.push_back(HPoly::linear(3, c));
  }
  return f.substitute(images);
}

long plane_h2(const PlanePresentation& P, const Plane& H) {
  int g = (int)P.gen_degrees.size();
  int s = (int)P.syz_degrees.size();
  // H^2(O(-4)) has the basis (-2,-1,-1), (-1,-2,-1), (-1,-1,-2); multiplying
  // by a variable kills all but the matching monomial, landing on
  // H^2(O(-3)) = <(-1,-1,-1)>.  Entry (r | c,var) = coefficient of var.
  QMatrix M(g, 3 * s);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < s; ++c) {
      HPoly e = restrict_to_plane(P.phi[r][c], H);
      for (const auto& [m, q] : e.terms())
        for (int var = 0; var < 3; ++var)
          if (m.e[var] == 1) M.at(r, 3 * c + var) = q;
    }
  int rank = rank_exact_elimination(M);
  return g - rank;
}

bool unstable_plane_test(const PlanePresentation& P, const Plane& H) {
  return plane_h2(P, H) > 0;
}

PlaneScanResult scan_unstable_planes(const Arrangement& A, bool dual_also, int bound,
                                     uint64_t seed, int random_count, int cutoff) {
  if (A.ambient_dim != 4) throw std::invalid_argument("scan_unstable_planes: P^3 only");
  PlanePresentation PE = plane_presentation(A, cutoff);
  int eta = coxeter_number('A', 3);
  int kk = A.def_k ? *A.def_k : 2;
  int jj = A.def_j ? *A.def_j : 0;
  int shift = -eta * (kk + 2 * jj + 1);
  PlanePresentation PD;
  if (dual_also) PD = dual_plane_presentation(A, shift, cutoff);

  std::set<std::vector<Int>> cand;
  for (const auto& alpha : positive_roots('A', 3))
    for (int s = -bound; s <= bound; ++s)
      cand.insert(canonical_form({Int(-s), alpha[0], alpha[1], alpha[2]}));
  cand.insert(canonical_form({Int(1), Int(0), Int(0), Int(0)}));
  // planes spanned by triples of points on >= 4 hyperplanes
  auto pts = point_flats_p3(A);
  std::vector<std::vector<Int>> heavy;
  for (auto& [p, mult] : pts)
    if (mult >= 4) heavy.push_back(p);
  for (size_t a = 0; a < heavy.size(); ++a)
    for (size_t b = a + 1; b < heavy.size(); ++b)
      for (size_t c = b + 1; c < heavy.size(); ++c) {
        // dual vector of the spanned plane via signed 3x3 minors
        std::vector<std::vector<Int>> m = {heavy[a], heavy[b], heavy[c]};
        std::vector<Int> d(4);
        bool nonzero = false;
        for (int col = 0; col < 4; ++col) {
          std::vector<std::vector<Int>> sub(3, std::vector<Int>(3));
          for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int cc2 = 0; cc2 < 4; ++cc2)
              if (cc2 != col) sub[r][cc++] = m[r][cc2];
          }
          Int det = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                    sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                    sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
          d[col] = (col % 2 == 0) ? det : -det;
          if (det != 0) nonzero = true;
        }
        if (nonzero) cand.insert(canonical_form(d));
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  int added = 0;
  while (added < random_count) {
    std::vector<Int> d = {Int(coef(rng)), Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
    if (d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0) continue;
    cand.insert(canonical_form(d));
    ++added;
  }

  std::vector<Plane> planes;
  for (const auto& d : cand) planes.push_back(Plane::from_dual(d));
  PlaneScanResult out;
  out.candidates = (int)planes.size();
  std::vector<char> hitE(planes.size(), 0), hitD(planes.size(), 0);
  parallel_for(planes.size(), [&](size_t i) {
    hitE[i] = unstable_plane_test(PE, planes[i]) ? 1 : 0;
    if (dual_also) hitD[i] = unstable_plane_test(PD, planes[i]) ? 1 : 0;
  });
  for (size_t i = 0; i < planes.size(); ++i) {
    if (hitE[i]) out.unstable_E.insert(planes[i].dual);
    if (dual_also && hitD[i]) out.unstable_dual.insert(planes[i].dual);
  }
  for (const auto& d : out.unstable_E)
    if (out.unstable_dual.count(d)) ++out.common;
  return out;
}

}  // namespace logsheaf
