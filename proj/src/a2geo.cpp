#include "logsheaf/a2geo.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "logsheaf/parallel.hpp"

namespace logsheaf {

std::optional<std::pair<int, int>> theorem_main0_splitting(int n, int count, bool in_arrangement) {
  if (in_arrangement) {
    int h = count;
    if (n - h > (n - 1 + 1) / 2) return std::nullopt;  // n-h <= ceil((n-1)/2)
    int d1 = n - h, d2 = h - 1;
    if (d1 > d2) std::swap(d1, d2);
    return std::make_pair(d1, d2);
  }
  int l = count;
  if (n - l < (n + 1) / 2) return std::nullopt;  // n-l >= ceil(n/2)
  int e1 = n - l, e2 = l - 1;
  if (e1 > e2) std::swap(e1, e2);
  return std::make_pair(e1, e2);
}

namespace {

// number of distinct intersection points of L with the arrangement
int meet_count(const Arrangement& A, const Line& L) {
  std::set<std::vector<Int>> pts;
  for (const auto& f : A.forms) {
    std::vector<Int> p = {L.ell[1] * f[2] - L.ell[2] * f[1], L.ell[2] * f[0] - L.ell[0] * f[2],
                          L.ell[0] * f[1] - L.ell[1] * f[0]};
    pts.insert(canonical_form(p));
  }
  return (int)pts.size();
}

}  // namespace

std::optional<SplittingType> main0_splitting_on(const Arrangement& A, const Line& L) {
  if (!A.def_j || !A.def_k)
    throw std::invalid_argument("main0_splitting_on needs a deformation arrangement");
  int tau = 2 * *A.def_k + 3 * *A.def_j + 1;
  int n = A.size();
  int idx = A.index_of(L.ell);
  std::optional<std::pair<int, int>> d;
  if (idx >= 0) {
    d = theorem_main0_splitting(n, restriction_profile(A, idx).h, true);
  } else {
    d = theorem_main0_splitting(n, meet_count(A, L), false);
  }
  if (!d) return std::nullopt;
  return SplittingType{tau - d->second, tau - d->first};
}

DualConic conic_Cj(int j) {
  DualConic C;
  Int jj = j;
  C.Q = {{3 * jj * jj + 12 * jj, Int(6), Int(6)},
         {Int(6), Int(-4), Int(-2)},
         {Int(6), Int(-2), Int(-4)}};
  // adjugate via cyclic cofactors (the cyclic index convention absorbs the
  // checkerboard sign); Q is symmetric, so adj is too
  C.adjugate.assign(3, std::vector<Int>(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      Int cof = C.Q[r0][c0] * C.Q[r1][c1] - C.Q[r0][c1] * C.Q[r1][c0];
      C.adjugate[c][r] = cof;
    }
  C.det = 0;
  for (int c = 0; c < 3; ++c) C.det += C.Q[0][c] * C.adjugate[c][0];
  if (C.det == 0) throw std::logic_error("C_j is not smooth");
  return C;
}

bool conic_tangency(int j, const Line& L) {
  DualConic C = conic_Cj(j);
  Int v = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v += L.ell[r] * C.adjugate[r][c] * L.ell[c];
  return v == 0;
}

std::vector<LineCatalogEntry> unstable_catalog(int k, int j) {
  if (k < 3) throw std::invalid_argument("unstable catalog is only asserted for k >= 3");
  DeformationParams p{j, k};
  std::vector<LineCatalogEntry> out;
  SplittingType extremal{0, k - 1};
  int order = (k - 1) / 2;
  auto add = [&](const std::vector<Int>& dual, bool in_arr) {
    out.push_back({Line::from_dual(dual), in_arr, extremal, order});
  };
  add(line_X(k + j), true);
  add(line_Y(k + j), true);
  add(diagonal_line(p, k + j + 1), true);   // y + x = -j z
  add(line_X(-(j + 1)), false);
  add(line_Y(-(j + 1)), false);
  add(diagonal_line(p, -j), false);         // y + x = (k+j+1) z
  return out;
}

std::vector<LineCatalogEntry> jump_catalog(int k, int j) {
  if (k < 1) throw std::invalid_argument("jump catalog needs k >= 1");
  DeformationParams p{j, k};
  std::vector<LineCatalogEntry> out;
  for (int s = 0; 2 * s <= k - 1; ++s) {
    SplittingType split{s, k - 1 - s};
    int order = (k - 1) / 2 - s;
    auto add = [&](const std::vector<Int>& dual, bool in_arr) {
      out.push_back({Line::from_dual(dual), in_arr, split, order});
    };
    add(line_X(k + j - s), true);
    add(line_Y(k + j - s), true);
    add(diagonal_line(p, k + j + 1 - s), true);
    add(line_X(-(j + s + 1)), false);
    add(line_Y(-(j + s + 1)), false);
    add(diagonal_line(p, -(j + s)), false);
  }
  return out;
}

ScanResult scan_unstable(const Arrangement& A, int bound, int random_count, uint64_t seed) {
  if (!A.def_j || !A.def_k) throw std::invalid_argument("scan needs a deformation arrangement");
  int j = *A.def_j, k = *A.def_k;
  if (k < 2) throw std::invalid_argument("scan_unstable needs k >= 2");
  DeformationParams p{j, k};
  std::set<std::vector<Int>> cand;
  for (int s = -(k + j + bound); s <= k + j + bound; ++s) {
    cand.insert(line_X(s));
    cand.insert(line_Y(s));
    cand.insert(canonical_form({Int(-s), Int(1), Int(1)}));  // x + y = s z
  }
  cand.insert(line_infinity());
  auto pts = multiple_points(A, 3);
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      std::vector<Int> d = {pts[a][1] * pts[b][2] - pts[a][2] * pts[b][1],
                            pts[a][2] * pts[b][0] - pts[a][0] * pts[b][2],
                            pts[a][0] * pts[b][1] - pts[a][1] * pts[b][0]};
      bool zero = d[0] == 0 && d[1] == 0 && d[2] == 0;
      if (!zero) cand.insert(canonical_form(d));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  int added = 0;
  while (added < random_count) {
    std::vector<Int> d = {Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
    if (d[0] == 0 && d[1] == 0 && d[2] == 0) continue;
    cand.insert(canonical_form(d));
    ++added;
  }
  ScanResult res;
  for (const auto& d : cand) res.candidates_tested.push_back(Line::from_dual(d));
  cached_presentation(A);  // fill the cache before the parallel sweep
  std::vector<char> hits(res.candidates_tested.size(), 0);
  parallel_for(res.candidates_tested.size(), [&](size_t i) {
    hits[i] = is_unstable(A, res.candidates_tested[i]) ? 1 : 0;
  });
  for (size_t i = 0; i < hits.size(); ++i)
    if (hits[i]) res.lines.push_back(res.candidates_tested[i]);
  std::sort(res.lines.begin(), res.lines.end());
  return res;
}

HPoly jumping_cubic_k6() {
  // dual coordinates ordered (z, x, y)
  HPoly f(3, 3);
  auto set = [&](int ez, int ex, int ey, long c) {
    Mono m;
    m.e = {(int16_t)ez, (int16_t)ex, (int16_t)ey, 0};
    f.set_coeff(m, Rat(c));
  };
  set(0, 3, 0, 62);
  set(0, 2, 1, -90);
  set(0, 1, 2, -90);
  set(0, 0, 3, 62);
  set(1, 2, 0, 1);
  set(1, 1, 1, -109);
  set(1, 0, 2, 1);
  set(2, 1, 0, -18);
  set(2, 0, 1, -18);
  set(3, 0, 0, -3);
  return f;
}

}  // namespace logsheaf
