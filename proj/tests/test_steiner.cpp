#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "logsheaf/rootsys.hpp"
#include "logsheaf/steiner.hpp"

using namespace logsheaf;

namespace {

Line lx(int i) { return Line::from_dual(line_X(i)); }
Line ldiag(int j, int k, int i) { return Line::from_dual(diagonal_line({j, k}, i)); }

Line random_line(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  while (true) {
    std::vector<Int> v = {Int(c(rng)), Int(c(rng)), Int(c(rng))};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    return Line::from_dual(v);
  }
}

// candidate family for unstable-set spot checks
std::vector<Line> line_family(int j, int k) {
  std::set<std::vector<Int>> seen;
  std::vector<Line> out;
  auto add = [&](const std::vector<Int>& d) {
    auto c = canonical_form(d);
    if (seen.insert(c).second) out.push_back(Line::from_dual(c));
  };
  for (int s = -j - 3; s <= k + j + 3; ++s) {
    add(line_X(s));
    add(line_Y(s));
  }
  for (int i = -j - 3; i <= k + j + 4; ++i) add(diagonal_line({j, k}, i));
  add(line_infinity());
  return out;
}

std::set<std::vector<Int>> unstable_set(const SteinerMatrix& M, const std::vector<Line>& fam) {
  std::set<std::vector<Int>> out;
  for (const auto& L : fam)
    if (matrix_unstable_line(M, L)) out.insert(L.ell);
  return out;
}

}  // namespace

TEST_CASE("steiner_extract: shapes and errors") {
  auto M = steiner_extract(deformation_A(2, 0, 3));
  CHECK(M.rows() == 2);
  CHECK(M.cols() == 4);
  for (auto& row : M.entries)
    for (auto& e : row) CHECK((e.zero() || e.degree() == 1));

  CHECK_THROWS_WITH_AS(steiner_extract(deformation_A(2, 0, 1)), "resolution not linear",
                       std::runtime_error);

  // j=1, k=2: 1x3 matrix presenting the twisted tangent bundle
  auto T = steiner_extract(deformation_A(2, 1, 2));
  CHECK(T.rows() == 1);
  CHECK(T.cols() == 3);
}

TEST_CASE("pencil splitting of the tangent-bundle presentation is (0,1)") {
  auto T = steiner_extract(deformation_A(2, 1, 2));
  std::mt19937_64 rng(7);
  CHECK(pencil_splitting(T, lx(0)) == SplittingType{0, 1});
  CHECK(pencil_splitting(T, Line::from_dual(line_infinity())) == SplittingType{0, 1});
  for (int t = 0; t < 5; ++t) CHECK(pencil_splitting(T, random_line(rng)) == SplittingType{0, 1});
}

TEST_CASE("pencil splitting agrees with the restricted-presentation oracle") {
  auto A = deformation_A(2, 0, 3);
  auto M = steiner_extract(A);
  std::vector<Line> lines = {lx(3), lx(-1), lx(1), Line::from_dual(line_infinity()),
                             ldiag(0, 3, 0)};
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 10; ++t) lines.push_back(random_line(rng));
  for (const auto& L : lines) CHECK(pencil_splitting(M, L) == splitting_type(A, L));
}

TEST_CASE("unstable catalog line via the pencil: x+y=0 for k=3") {
  auto M = steiner_extract(deformation_A(2, 0, 3));
  // H_(k+j+1) = {x+y = 0}
  CHECK(pencil_splitting(M, ldiag(0, 3, 4)) == SplittingType{0, 2});
}

TEST_CASE("minor gcd ladder is trivial on locally free restrictions") {
  auto M = steiner_extract(deformation_A(2, 0, 4));
  for (auto L : {lx(4), lx(0)}) {
    auto ladder = minor_gcd_ladder(M, L);
    REQUIRE((int)ladder.size() == M.rows());
    for (int d : ladder) CHECK(d == 0);
  }
}

TEST_CASE("extension move: sizes, unstable new line, nontrivial class") {
  auto F3 = steiner_extract(build_inner_chain({0, 3})[3]);  // A_3 -> F_3 = T_P2(-1) shape
  REQUIRE(F3.rows() == 1);
  REQUIRE(F3.cols() == 3);
  Line H = ldiag(0, 3, 4);
  auto F4 = extension_move(F3, H);
  CHECK(F4.rows() == 2);
  CHECK(F4.cols() == 4);
  // the extension line is unstable for the result (i >= 3)
  CHECK(pencil_splitting(F4, H) == SplittingType{0, 2});
}

TEST_CASE("iterated extensions reproduce the chain's Betti sizes") {
  int j = 0, k = 3;
  auto chain = build_inner_chain({j, k});
  SteinerMatrix F = steiner_extract(chain[3]);
  for (int i = 4; i <= k + j + 1; ++i) {
    F = extension_move(F, ldiag(j, k, i));
    auto Fi = steiner_extract(chain[i]);
    CHECK(F.rows() == Fi.rows());
    CHECK(F.cols() == Fi.cols());
  }
}

TEST_CASE("reduction move: F4 along an unstable line gives a 1x3 matrix") {
  int j = 0, k = 3;
  auto chain = build_inner_chain({j, k});
  auto F4 = steiner_extract(chain[4]);
  REQUIRE(F4.cols() == 4);
  Line H4 = ldiag(j, k, 4);  // unstable for F_4
  REQUIRE(matrix_unstable_line(F4, H4));
  auto F3 = reduction_move(F4, H4);
  CHECK(F3.rows() == 1);
  CHECK(F3.cols() == 3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) CHECK(pencil_splitting(F3, random_line(rng)) == SplittingType{0, 1});
}

TEST_CASE("reduction errors when the line is not unstable") {
  auto F4 = steiner_extract(build_inner_chain({0, 3})[4]);
  CHECK_THROWS_WITH_AS(reduction_move(F4, lx(1)), "no surjection to O_L", std::runtime_error);
}

TEST_CASE("extension then reduction along the same line round-trips") {
  auto A = deformation_A(2, 0, 3);
  auto M = steiner_extract(A);
  Line H = lx(2);  // a non-special line of A
  auto B = extension_move(M, H);
  auto R = reduction_move(B, H);
  CHECK(R.rows() == M.rows());
  CHECK(R.cols() == M.cols());
  std::mt19937_64 rng(11);
  std::vector<Line> probe = {lx(3), lx(-1), Line::from_dual(line_infinity())};
  for (int t = 0; t < 20; ++t) probe.push_back(random_line(rng));
  for (const auto& L : probe) CHECK(pencil_splitting(R, L) == pencil_splitting(M, L));
}

TEST_CASE("W-inclusion along the outer reduction chain") {
  // E_0 = F_(k+j+1) for (j,k) = (1,3); reduce along H_0, H_(-1), ...
  int j = 1, k = 3;
  auto chain = build_inner_chain({j, k});
  auto fam = line_family(j, k);
  SteinerMatrix E = steiner_extract(chain.back());
  for (int i = 1; i <= k + j - 2; ++i) {
    Line L = ldiag(j, k, 1 - i);
    REQUIRE(matrix_unstable_line(E, L));
    auto W_before = unstable_set(E, fam);
    SteinerMatrix next = reduction_move(E, L);
    auto W_after = unstable_set(next, fam);
    // W(E) minus the reduced line is contained in W(next)
    for (const auto& ell : W_before) {
      if (ell == L.ell) continue;
      CHECK(W_after.count(ell) == 1);
    }
    E = next;
  }
  // endpoint behaves like T_P2(-1): every line splits as (0,1)
  CHECK(E.rows() == 1);
  CHECK(E.cols() == 3);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) CHECK(pencil_splitting(E, random_line(rng)) == SplittingType{0, 1});
}

TEST_CASE("matrix serialization uses polynomial strings") {
  auto M = steiner_extract(deformation_A(2, 1, 2));
  auto s = matrix_strings(M);
  REQUIRE(s.size() == 1);
  REQUIRE(s[0].size() == 3);
  for (auto& e : s[0]) CHECK(!e.empty());
}
