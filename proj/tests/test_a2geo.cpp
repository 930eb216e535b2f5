#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "logsheaf/a2geo.hpp"

using namespace logsheaf;

namespace {

Line lx(int i) { return Line::from_dual(line_X(i)); }
Line ldiag(int j, int k, int i) { return Line::from_dual(diagonal_line({j, k}, i)); }

std::set<std::vector<Int>> duals(const std::vector<LineCatalogEntry>& cat) {
  std::set<std::vector<Int>> out;
  for (const auto& e : cat) out.insert(e.line.ell);
  return out;
}

}  // namespace

TEST_CASE("theorem main0: unstable line of A2^[0,3] via the restriction profile") {
  auto A = deformation_A(2, 0, 3);
  int idx = A.index_of(line_X(3));
  REQUIRE(idx >= 0);
  auto rp = restriction_profile(A, idx);
  // t_{A,H} = k+3j+1+s = 4 at s=0, so h = n-1-t = 8
  CHECK(rp.t == 4);
  CHECK(rp.h == 8);
  auto d = theorem_main0_splitting(13, rp.h, true);
  REQUIRE(d.has_value());
  CHECK(d->first == 5);
  CHECK(d->second == 7);
  // normalized: T(7)|_H = O(0) + O(2)
  auto s = main0_splitting_on(A, lx(3));
  REQUIRE(s.has_value());
  CHECK(*s == SplittingType{0, 2});
}

TEST_CASE("theorem main0: line outside the arrangement") {
  auto A = deformation_A(2, 0, 3);
  auto d = theorem_main0_splitting(13, 6, false);  // l = 6 for x = -z
  REQUIRE(d.has_value());
  CHECK(d->first == 5);
  CHECK(d->second == 7);
  auto s = main0_splitting_on(A, lx(-1));
  REQUIRE(s.has_value());
  CHECK(*s == SplittingType{0, 2});
}

TEST_CASE("theorem main0 is inapplicable on generic lines") {
  auto A = deformation_A(2, 0, 3);
  // a generic line meets the 13 lines in 13 points: n - l = 0 < ceil(n/2)
  CHECK(theorem_main0_splitting(13, 13, false) == std::nullopt);
  CHECK(main0_splitting_on(A, Line::from_dual({Int(1), Int(5), Int(7)})) == std::nullopt);
}

TEST_CASE("main0 agrees with the restricted-presentation oracle where defined") {
  for (int j = 0; j <= 1; ++j)
    for (int k = 2; k <= 3; ++k) {
      auto A = deformation_A(2, j, k);
      std::vector<Line> probe;
      for (int s = -j - 2; s <= k + j + 2; ++s) {
        probe.push_back(lx(s));
        probe.push_back(Line::from_dual(line_Y(s)));
        probe.push_back(ldiag(j, k, s));
      }
      probe.push_back(Line::from_dual(line_infinity()));
      for (const auto& L : probe) {
        auto m0 = main0_splitting_on(A, L);
        if (m0) CHECK(*m0 == splitting_type(A, L));
      }
    }
}

TEST_CASE("conic C_0: matrix, adjugate and hand-checked tangency values") {
  DualConic C = conic_Cj(0);
  CHECK(C.Q[0][0] == 0);
  CHECK(C.Q[1][1] == -4);
  CHECK(C.Q[1][2] == -2);
  CHECK(C.Q[0][1] == 6);
  CHECK(C.det != 0);
  // adjugate in (z,x,y) order
  CHECK(C.adjugate[0][0] == 12);
  CHECK(C.adjugate[1][1] == -36);
  CHECK(C.adjugate[1][2] == 36);
  // Q * adj = det * I
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Int v = 0;
      for (int t = 0; t < 3; ++t) v += C.Q[r][t] * C.adjugate[t][c];
      CHECK(v == (r == c ? C.det : Int(0)));
    }
  CHECK(conic_tangency(0, lx(3)));                                  // x = 3z
  CHECK(conic_tangency(0, Line::from_dual({Int(-4), Int(1), Int(1)})));  // x+y = 4z
  CHECK(!conic_tangency(0, lx(0)));                                 // x = 0
}

TEST_CASE("unstable catalog instances") {
  auto c30 = unstable_catalog(3, 0);
  auto expect30 = std::set<std::vector<Int>>{
      canonical_form({Int(-3), Int(1), Int(0)}), canonical_form({Int(-3), Int(0), Int(1)}),
      canonical_form({Int(0), Int(1), Int(1)}),  canonical_form({Int(1), Int(1), Int(0)}),
      canonical_form({Int(1), Int(0), Int(1)}),  canonical_form({Int(-4), Int(1), Int(1)})};
  CHECK(duals(c30) == expect30);

  auto c40 = unstable_catalog(4, 0);
  CHECK(duals(c40).count(canonical_form({Int(-4), Int(1), Int(0)})) == 1);  // x = 4z
  CHECK(duals(c40).count(canonical_form({Int(-5), Int(1), Int(1)})) == 1);  // x+y = 5z

  auto c31 = unstable_catalog(3, 1);
  CHECK(duals(c31).count(canonical_form({Int(-4), Int(1), Int(0)})) == 1);   // x = 4z
  CHECK(duals(c31).count(canonical_form({Int(1), Int(1), Int(1)})) == 1);    // x+y = -z
  CHECK(duals(c31).count(canonical_form({Int(2), Int(1), Int(0)})) == 1);    // x = -2z
  CHECK(duals(c31).count(canonical_form({Int(-5), Int(1), Int(1)})) == 1);   // x+y = 5z

  CHECK_THROWS_AS(unstable_catalog(2, 0), std::invalid_argument);
}

TEST_CASE("catalog symmetry under x <-> y") {
  for (auto [k, j] : std::vector<std::pair<int, int>>{{3, 0}, {4, 1}, {5, 2}}) {
    auto cat = unstable_catalog(k, j);
    auto d = duals(cat);
    for (const auto& ell : d) {
      std::vector<Int> sw = {ell[0], ell[2], ell[1]};
      CHECK(d.count(canonical_form(sw)) == 1);
    }
  }
}

TEST_CASE("all six unstable-catalog lines are tangent to C_j when k = 3") {
  for (int j = 0; j <= 2; ++j)
    for (const auto& e : unstable_catalog(3, j)) CHECK(conic_tangency(j, e.line));
}

TEST_CASE("jump catalog: k=6 rows from the proposition") {
  auto cat = jump_catalog(6, 0);
  REQUIRE(cat.size() == 18);  // s = 0, 1, 2
  // s = 0: X_6 with splitting (0,5), order 2
  CHECK(cat[0].line == lx(6));
  CHECK(cat[0].predicted == SplittingType{0, 5});
  CHECK(cat[0].predicted_order == 2);
  CHECK(cat[0].in_arrangement);
  // s = 1: X_5 -> (1,4)
  CHECK(cat[6].line == lx(5));
  CHECK(cat[6].predicted == SplittingType{1, 4});
  CHECK(cat[6].predicted_order == 1);
  // s = 2: X_(-3) -> (2,3), outside
  CHECK(cat[15].line == lx(-3));
  CHECK(cat[15].predicted == SplittingType{2, 3});
  CHECK(!cat[15].in_arrangement);
  // catalog predictions satisfy a1 + a2 = k - 1
  for (const auto& e : cat) CHECK(e.predicted.a1 + e.predicted.a2 == 5);
}

TEST_CASE("jump catalog verified against the splitting oracle for k=4") {
  auto A = deformation_A(2, 0, 4);
  for (const auto& e : jump_catalog(4, 0)) {
    CHECK(splitting_type(A, e.line) == e.predicted);
    CHECK(jumping_order(A, e.line) == e.predicted_order);
    CHECK(A.contains(e.line.ell) == e.in_arrangement);
  }
}

TEST_CASE("scan_unstable finds exactly the catalog for k=4") {
  auto A = deformation_A(2, 0, 4);
  auto res = scan_unstable(A, 2, 60, 20240101);
  auto found = std::set<std::vector<Int>>();
  for (const auto& L : res.lines) found.insert(L.ell);
  CHECK(found == duals(unstable_catalog(4, 0)));
}

TEST_CASE("scan_unstable for k=3 returns only C_j-tangent lines") {
  auto A = deformation_A(2, 1, 3);
  auto res = scan_unstable(A, 2, 40, 7);
  CHECK(res.lines.size() >= 6);
  for (const auto& L : res.lines) CHECK(conic_tangency(1, L));
}

TEST_CASE("scan_unstable for k=2: every candidate line is unstable") {
  auto A = deformation_A(2, 0, 2);
  auto res = scan_unstable(A, 1, 15, 99);
  CHECK(res.lines.size() == res.candidates_tested.size());
}

TEST_CASE("the stored k=6 jumping cubic") {
  HPoly f = jumping_cubic_k6();
  CHECK(f.degree() == 3);
  Mono x3;
  x3.e = {0, 3, 0, 0};
  CHECK(f.coeff(x3) == 62);
  Mono xyz;
  xyz.e = {1, 1, 1, 0};
  CHECK(f.coeff(xyz) == -109);
  // symmetric under x <-> y, like the catalogs
  Mono xz2, yz2;
  xz2.e = {2, 1, 0, 0};
  yz2.e = {2, 0, 1, 0};
  CHECK(f.coeff(xz2) == f.coeff(yz2));
}
