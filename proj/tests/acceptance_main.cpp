// Acceptance suite: one line per criterion, exact checks throughout.
// Exit code = number of failed criteria.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "logsheaf/a2geo.hpp"
#include "logsheaf/parallel.hpp"
#include "logsheaf/report.hpp"
#include "logsheaf/rootsys.hpp"
#include "logsheaf/space3.hpp"
#include "logsheaf/split.hpp"
#include "logsheaf/steiner.hpp"

using namespace logsheaf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  Clock::time_point start;
  bool ok = true;
  std::string detail;

  explicit Criterion(const char* n) : name(n), start(Clock::now()) {}
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.find(what) != std::string::npos) return;  // dedup repeats
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  ~Criterion() {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::vector<Line> random_lines(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Line> out;
  while ((int)out.size() < count) {
    std::vector<Int> v = {Int(c(rng)), Int(c(rng)), Int(c(rng))};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    out.push_back(Line::from_dual(v));
  }
  return out;
}

std::set<std::vector<Int>> catalog_duals(int k, int j) {
  std::set<std::vector<Int>> out;
  for (const auto& e : unstable_catalog(k, j)) out.insert(e.line.ell);
  return out;
}

// tables computed along the way, rechecked in criterion 11
std::vector<std::pair<BettiTable, int>> computed_tables;

void criterion1() {
  Criterion c("criterion 1: Steiner resolution shape {k+1 @ 2k+1+3j; k-1 @ +1}, 2<=k<=6, 0<=j<=2");
  for (int j = 0; j <= 2; ++j)
    for (int k = 2; k <= 6; ++k) {
      auto t0 = Clock::now();
      auto A = deformation_A(2, j, k);
      auto b = minimal_resolution(A);
      computed_tables.push_back({b, 3});
      int a = 2 * k + 1 + 3 * j;
      bool cell = b.pdim == 1 && b.beta.size() == 2 && b.beta.at(0).size() == 1 &&
                  b.beta.at(1).size() == 1 && b.beta_at(0, a) == k + 1 &&
                  b.beta_at(1, a + 1) == k - 1;
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      char buf[128];
      std::snprintf(buf, sizeof buf, "cell (k=%d, j=%d) betti mismatch", k, j);
      c.check(cell, buf);
      std::printf("    cell k=%d j=%d n=%d: %s (%.1fs)\n", k, j, A.size(),
                  cell ? "ok" : "MISMATCH", secs);
      std::fflush(stdout);
    }
}

void criterion2() {
  Criterion c("criterion 2: Chern classes and char-poly root real parts");
  for (int j = 0; j <= 2; ++j)
    for (int k = 2; k <= 6; ++k) {
      auto A = deformation_A(2, j, k);
      auto [c1, c2] = chern_classes(A, 2 * k + 3 * j + 1);
      c.check(c1 == k - 1, "c1 != k-1");
      c.check(c2 == Int(k) * (k - 1) / 2, "c2 != k(k-1)/2");
      auto red = char_poly(A).reduced();
      Int b1 = -red[1], b2 = red[2];
      c.check(b1 == 3 * (k + 2 * j + 1), "b1 != 3(k+2j+1)");
      c.check(b1 * b1 - 4 * b2 <= 0, "positive discriminant");
    }
}

void criterion3() {
  Criterion c("criterion 3: freeness for k in {0,1}, j <= 3, with Saito determinant");
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 1; ++k) {
      auto A = deformation_A(2, j, k);
      auto [fr, ex] = is_free(A);
      c.check(fr, "not free");
      if (!fr) continue;
      int sum = 0;
      for (int d : ex->d) sum += d;
      c.check(sum == A.size() - 1, "exponents do not sum to n-1");
      auto pres = cached_presentation(A);
      computed_tables.push_back({pres->betti, 3});
      HPoly det = saito_determinant(A, pres->generators);
      HPoly f = A.defining_form();
      bool saito = false;
      if (!det.zero()) {
        Rat scale = det.lead().second / f.coeff(det.lead().first);
        saito = !is_zero(scale) && det == f * scale;
      }
      c.check(saito, "Saito determinant is not a scalar multiple of f");
    }
}

void criterion4() {
  Criterion c("criterion 4: k=2 identification (tangent-bundle twist)");
  for (int j = 0; j <= 2; ++j) {
    auto A = deformation_A(2, j, 2);
    auto b = minimal_resolution(A);
    c.check(b.beta_at(0, 5 + 3 * j) == 3 && b.beta_at(1, 6 + 3 * j) == 1 && b.pdim == 1,
            "betti is not {3,1}");
    std::vector<Line> lines = random_lines(30, 42 + j);
    for (const auto& e : jump_catalog(2, j)) lines.push_back(e.line);
    std::vector<char> ok(lines.size(), 0);
    cached_presentation(A);
    parallel_for(lines.size(), [&](size_t i) {
      auto s = splitting_type(A, lines[i]);
      ok[i] = (s.a1 == 0 && s.a2 == 1 && is_unstable(A, lines[i])) ? 1 : 0;
    });
    for (char o : ok) c.check(o == 1, "a line is not (0,1)-unstable");
  }
}

void criterion5() {
  Criterion c("criterion 5: exactly six unstable lines for k in {4,5,6}, j in {0,1}");
  for (int j = 0; j <= 1; ++j)
    for (int k = 4; k <= 6; ++k) {
      auto t0 = Clock::now();
      auto A = deformation_A(2, j, k);
      auto res = scan_unstable(A, 3, 200, 20240101);
      std::set<std::vector<Int>> found;
      for (const auto& L : res.lines) found.insert(L.ell);
      bool cell = found == catalog_duals(k, j);
      char buf[96];
      std::snprintf(buf, sizeof buf, "scan != catalog at (k=%d, j=%d)", k, j);
      c.check(cell, buf);
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      std::printf("    scan k=%d j=%d: %zu candidates, %zu unstable: %s (%.1fs)\n", k, j,
                  res.candidates_tested.size(), res.lines.size(), cell ? "ok" : "MISMATCH",
                  secs);
      std::fflush(stdout);
    }
}

void criterion6() {
  Criterion c("criterion 6: k=3 unstable lines are exactly the C_j tangents");
  for (int j = 0; j <= 2; ++j) {
    auto A = deformation_A(2, j, 3);
    auto res = scan_unstable(A, 3, 200, 20240101);
    c.check(res.lines.size() >= 6, "scan found fewer than the catalog");
    for (const auto& L : res.lines) c.check(conic_tangency(j, L), "found line not tangent");
    for (const auto& e : unstable_catalog(3, j))
      c.check(conic_tangency(j, e.line), "catalog line not tangent");
  }
}

void criterion7() {
  Criterion c("criterion 7: jumping-line table for k=6, j=0, three oracles agree");
  auto A = deformation_A(2, 0, 6);
  auto M = steiner_extract(A);
  for (const auto& e : jump_catalog(6, 0)) {
    auto s1 = splitting_type(A, e.line);
    auto s2 = pencil_splitting(M, e.line);
    auto s3 = main0_splitting_on(A, e.line);
    c.check(s1 == e.predicted, "restricted-presentation oracle disagrees with the table");
    c.check(s2 == e.predicted, "pencil oracle disagrees with the table");
    c.check(s3.has_value(), "main0 unexpectedly inapplicable");
    if (s3) c.check(*s3 == e.predicted, "main0 disagrees with the table");
  }
}

void criterion8() {
  Criterion c("criterion 8: shift isomorphism obstruction for k=3 + Betti shift identity");
  for (int j = 0; j <= 1; ++j) {
    auto A = deformation_A(2, j, 3);
    auto B = deformation_A(2, j + 1, 3);
    bool differs = false;
    for (const auto& e : unstable_catalog(3, j)) {
      bool ua = is_unstable(A, e.line);
      bool ub = is_unstable(B, e.line);
      c.check(ua, "catalog line not unstable for its own cell");
      if (ua && !ub) differs = true;
    }
    c.check(differs, "unstable sets do not differ");
    auto ba = minimal_resolution(A);
    auto bb = minimal_resolution(B);
    c.check(bb.beta == ba.degree_shifted(3).beta, "Betti shift by 3 fails");
  }
}

void criterion9() {
  Criterion c("criterion 9: A3 [0,2] dual-shift counter-example (7 / 7 / 4)");
  auto A = deformation_A(3, 0, 2);
  auto b = minimal_resolution(A, 11);
  computed_tables.push_back({b, 4});
  c.check(b.beta_at(0, 7) == 6 && b.beta_at(1, 8) == 3 && b.pdim == 1,
          "betti is not {6@7, 3@8}");
  auto bd = dual_module_betti(A, -12, 11);
  c.check(bd.beta == b.beta, "dual Betti table differs");
  auto res = scan_unstable_planes(A, true, 3, 20240101, 60, 11);
  c.check((int)res.unstable_E.size() == 7, "|W(E)| != 7");
  c.check((int)res.unstable_dual.size() == 7, "|W(E')| != 7");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "common = %d; the reference count is 4, the exact recount (twice-verified) gives 3",
                res.common);
  c.check(res.common == 4, buf);
}

void criterion10() {
  Criterion c("criterion 10: Steiner move laws");
  {
    auto A = deformation_A(2, 0, 3);
    auto M = steiner_extract(A);
    Line H = Line::from_dual(line_X(2));
    auto B = extension_move(M, H);
    auto R = reduction_move(B, H);
    c.check(R.rows() == M.rows() && R.cols() == M.cols(), "round trip changes sizes");
    auto probe = random_lines(20, 1234);
    std::vector<char> ok(probe.size(), 0);
    parallel_for(probe.size(), [&](size_t i) {
      ok[i] = pencil_splitting(R, probe[i]) == pencil_splitting(M, probe[i]) ? 1 : 0;
    });
    for (char o : ok) c.check(o == 1, "round trip changes a splitting");
  }
  for (auto [j, k] : std::vector<std::pair<int, int>>{{0, 4}, {1, 3}, {0, 5}, {1, 4}, {2, 5}}) {
    auto chain = build_inner_chain({j, k});
    std::vector<Line> fam;
    for (int s = -j - 3; s <= k + j + 3; ++s) {
      fam.push_back(Line::from_dual(line_X(s)));
      fam.push_back(Line::from_dual(line_Y(s)));
      fam.push_back(Line::from_dual(canonical_form({Int(-s), Int(1), Int(1)})));
    }
    fam.push_back(Line::from_dual(line_infinity()));
    auto unstable_set = [&](const SteinerMatrix& M) {
      std::set<std::vector<Int>> out;
      for (const auto& L : fam)
        if (matrix_unstable_line(M, L)) out.insert(L.ell);
      return out;
    };
    SteinerMatrix E = steiner_extract(chain.back());
    for (int i = 1; i <= k + j - 2; ++i) {
      Line L = Line::from_dual(diagonal_line({j, k}, 1 - i));
      bool unst = matrix_unstable_line(E, L);
      c.check(unst, "chain line not unstable");
      if (!unst) break;
      auto W_before = unstable_set(E);
      SteinerMatrix next = reduction_move(E, L);
      auto W_after = unstable_set(next);
      for (const auto& ell : W_before) {
        if (ell == L.ell) continue;
        c.check(W_after.count(ell) == 1, "W-inclusion violated");
      }
      E = next;
    }
    c.check(E.rows() == 1 && E.cols() == 3, "chain endpoint is not 1x3");
    for (const auto& L : random_lines(20, 777 + k + 10 * j))
      c.check(pencil_splitting(E, L) == SplittingType{0, 1}, "endpoint splitting not (0,1)");
  }
}

void criterion11() {
  Criterion c("criterion 11: property suite (oracle triangle, rank-nullity, Betti sums)");
  int pair_count = 0;
  std::mt19937_64 rng(31415926);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int j = 0; j <= 2; ++j)
    for (int k = 2; k <= 6 && pair_count < 500; ++k) {
      auto A = deformation_A(2, j, k);
      auto M = steiner_extract(A);
      std::vector<Line> lines;
      for (const auto& e : jump_catalog(k, j)) lines.push_back(e.line);
      while (lines.size() < 34) {
        std::vector<Int> v = {Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        lines.push_back(Line::from_dual(v));
      }
      std::vector<char> ok(lines.size(), 2);
      parallel_for(lines.size(), [&](size_t i) {
        auto s = splitting_type(A, lines[i]);
        if (s.a1 + s.a2 != k - 1 || s.a1 < 0) {
          ok[i] = 0;
          return;
        }
        if (!(pencil_splitting(M, lines[i]) == s)) {
          ok[i] = 0;
          return;
        }
        auto m0 = main0_splitting_on(A, lines[i]);
        if (m0 && !(*m0 == s)) {
          ok[i] = 0;
          return;
        }
        ok[i] = 1;
      });
      for (char o : ok) c.check(o == 1, "oracle triangle disagreement");
      pair_count += (int)lines.size();
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "only %d pairs tested", pair_count);
  c.check(pair_count >= 500, buf);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int t = 0; t < 100; ++t) {
    int r = dim(rng), cc = dim(rng);
    QMatrix m(r, cc);
    for (int i = 0; i < r; ++i)
      for (int jj = 0; jj < cc; ++jj) m.at(i, jj) = Rat(num(rng));
    int rk = rank_multimodular(m);
    c.check(rk == rank_exact_elimination(m), "modular rank disagrees with elimination");
    c.check((int)kernel_basis(m).size() == cc - rk, "rank-nullity fails");
  }
  for (const auto& [b, nv] : computed_tables)
    c.check(b.alternating_sum_consistent(nv), "Betti/Hilbert alternating sum fails");
}

}  // namespace

int main() {
  std::printf("acceptance suite (exact arithmetic; all tolerances are zero)\n");
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("criteria passed: %d/11 (%.1fs total)\n", 11 - failures, secs);
  if (failures)
    std::printf("known discrepancies are documented in README.md\n");
  return failures;
}
