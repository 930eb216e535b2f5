#include "logsheaf/split.hpp"

#include <stdexcept>

namespace logsheaf {

Line Line::from_dual(const std::vector<Int>& dual) {
  Line L;
  L.ell = canonical_form(dual);
  L.param = hyperplane_parameterization(L.ell);
  return L;
}

Line Line::with_param(const std::vector<Int>& dual, std::vector<std::vector<Int>> pts) {
  Line L;
  L.ell = canonical_form(dual);
  if (pts.size() != 2) throw std::invalid_argument("line parameterization needs two points");
  for (const auto& p : pts) {
    Int dot = 0;
    for (size_t c = 0; c < p.size(); ++c) dot += L.ell[c] * p[c];
    if (dot != 0) throw std::invalid_argument("parameterization point not on the line");
  }
  L.param = std::move(pts);
  return L;
}

HPoly restrict_to_line(const HPoly& f, const Line& L) {
  std::vector<HPoly> images;
  for (int v = 0; v < f.nvars(); ++v) {
    std::vector<Rat> c = {Rat(L.param[0][v]), Rat(L.param[1][v])};
    images.push_back(HPoly::linear(2, c));
  }
  return f.substitute(images);
}

namespace {

// dim H^0(O_P1(e)) and dim H^1(O_P1(e))
long h0_line(int e) { return e >= 0 ? e + 1 : 0; }
long h1_line(int e) { return e <= -2 ? -e - 1 : 0; }

// H^1(O(e)) basis: s^a t^b with a, b <= -1, a + b = e, indexed by -1 - a.
long h1_index(int a) { return -1 - a; }

}  // namespace

long restricted_h0(const Arrangement& A, const Line& L, int t) {
  auto pres = cached_presentation(A);
  if (pres->betti.pdim > 1) throw std::runtime_error("presentation not available");
  const auto& adeg = pres->gen_degrees;
  const auto& bdeg = pres->syzygies.col_twists;
  long h0 = 0;
  for (int a : adeg) h0 += h0_line(t - a);
  for (int b : bdeg) h0 -= h0_line(t - b);
  // connecting map H^1(F1(t)|_L) -> H^1(F0(t)|_L)
  std::vector<long> roff(adeg.size() + 1, 0), coff(bdeg.size() + 1, 0);
  for (size_t r = 0; r < adeg.size(); ++r) roff[r + 1] = roff[r] + h1_line(t - adeg[r]);
  for (size_t c = 0; c < bdeg.size(); ++c) coff[c + 1] = coff[c] + h1_line(t - bdeg[c]);
  long rows = roff.back(), cols = coff.back();
  if (cols == 0) return h0;
  QMatrix M((int)rows, (int)cols);
  for (size_t c = 0; c < bdeg.size(); ++c) {
    int ec = t - bdeg[c];
    for (size_t r = 0; r < adeg.size(); ++r) {
      int er = t - adeg[r];
      if (h1_line(er) == 0) continue;
      HPoly entry = restrict_to_line(pres->syzygies.entries[r][c], L);
      // multiplication s^alpha t^(ec-alpha) -> entry * same, kept when both
      // exponents stay <= -1
      for (const auto& [m, coeff] : entry.terms()) {
        int g = m.e[0], d = m.e[1];
        for (int alpha = -1; alpha >= ec + 1; --alpha) {
          int beta = ec - alpha;
          int a2 = alpha + g, b2 = beta + d;
          if (a2 <= -1 && b2 <= -1)
            M.at((int)(roff[r] + h1_index(a2)), (int)(coff[c] + h1_index(alpha))) += coeff;
        }
      }
    }
  }
  long rank = rank_exact_elimination(M);
  return h0 + (cols - rank);
}

SplittingType splitting_type(const Arrangement& A, const Line& L) {
  if (!A.def_j || !A.def_k)
    throw std::invalid_argument("splitting_type needs a deformation arrangement");
  int j = *A.def_j, k = *A.def_k;
  int tau = 2 * k + 3 * j + 1;  // E = T_A(tau), c1(E) = k-1
  auto pres = cached_presentation(A);
  if (pres->betti.pdim == 0) {
    std::vector<int> d = pres->gen_degrees;
    std::sort(d.begin(), d.end());
    SplittingType s{tau - d[1], tau - d[0]};
    if (s.a1 + s.a2 != k - 1) throw std::logic_error("inconsistent h0 profile");
    return s;
  }
  int c1 = k - 1;
  int a2 = -1;
  for (int a = c1; 2 * a >= c1; --a) {
    if (restricted_h0(A, L, tau - a) > 0) {
      a2 = a;
      break;
    }
  }
  if (a2 < 0) throw std::logic_error("inconsistent h0 profile");
  SplittingType s{c1 - a2, a2};
  // cross-check the full profile at a few twists
  auto expect = [&](int a) { return std::max(0, s.a1 - a + 1) + std::max(0, s.a2 - a + 1); };
  for (int a : {a2 + 1, a2, s.a1, s.a1 - 1}) {
    if (restricted_h0(A, L, tau - a) != expect(a)) throw std::logic_error("inconsistent h0 profile");
  }
  return s;
}

bool is_unstable(const Arrangement& A, const Line& L) {
  auto pres = cached_presentation(A);
  if (pres->betti.pdim == 0) return false;
  if (!A.def_k) throw std::invalid_argument("is_unstable needs a deformation arrangement");
  int k = *A.def_k;
  SplittingType s = splitting_type(A, L);
  return s.a1 == 0 && s.a2 == k - 1;
}

int jumping_order(const Arrangement& A, const Line& L) {
  if (!A.def_k) throw std::invalid_argument("jumping_order needs a deformation arrangement");
  int k = *A.def_k;
  SplittingType s = splitting_type(A, L);
  return (k - 1) / 2 - s.a1;
}

Stability is_stable(const Arrangement& A) {
  auto pres = cached_presentation(A);
  if (pres->betti.pdim == 0) {
    std::vector<int> d = pres->gen_degrees;
    std::sort(d.begin(), d.end());
    return d[0] == d[1] ? Stability::strictly_semistable : Stability::unstable_bundle;
  }
  int n = A.size();
  int t0 = (n - 1) / 2;  // c1(T(t0)) in {0, -1}
  if (graded_dim(A, t0).dim() == 0) return Stability::stable;
  if ((n - 1) % 2 == 0 && graded_dim(A, t0 - 1).dim() == 0)
    return Stability::strictly_semistable;
  return Stability::unstable_bundle;
}

}  // namespace logsheaf
