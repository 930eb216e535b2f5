#include "logsheaf/qmatrix.hpp"

#include <map>
#include <stdexcept>

namespace logsheaf {

std::vector<int> qmatrix_rref(QMatrix& m) {
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Rat inv = 1 / m.at(rank, col);
    for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || is_zero(m.at(r, col))) continue;
      Rat q = m.at(r, col);
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= q * m.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

int rank_exact_elimination(QMatrix m) { return (int)qmatrix_rref(m).size(); }

namespace {

std::vector<std::vector<Rat>> kernel_from_rref(const QMatrix& m, const std::vector<int>& pivots) {
  std::vector<int> pivot_of_col(m.cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = (int)i;
  std::vector<std::vector<Rat>> out;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at((int)i, c);
    out.push_back(std::move(v));
  }
  return out;
}

// Reduce a rational matrix entrywise mod p.  Returns false if p divides a
// denominator (the prime must be skipped).
bool qmatrix_mod(const QMatrix& m, const PrimeField& F, ModMatrix& out) {
  out = ModMatrix(m.rows, m.cols);
  Int num, den;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const Rat& v = m.at(r, c);
      unsigned long dp = mpz_fdiv_ui(v.get_den().get_mpz_t(), F.p);
      if (dp == 0) return false;
      unsigned long np = mpz_fdiv_ui(v.get_num().get_mpz_t(), F.p);
      out.at(r, c) = F.mul((uint32_t)np, F.inv((uint32_t)dp));
    }
  return true;
}

bool verify_kernel_vector(const QMatrix& m, const std::vector<Rat>& v) {
  for (int r = 0; r < m.rows; ++r) {
    Rat s = 0;
    for (int c = 0; c < m.cols; ++c)
      if (!is_zero(v[c])) s += m.at(r, c) * v[c];
    if (!is_zero(s)) return false;
  }
  return true;
}

}  // namespace

Rat det_bareiss(QMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  int n = m.rows;
  if (n == 0) return Rat(1);
  // Clear row denominators first, tracking the factor.
  Rat scale = 1;
  std::vector<Int> z((size_t)n * n);
  for (int r = 0; r < n; ++r) {
    Int l = 1;
    for (int c = 0; c < n; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    scale /= Rat(l);
    for (int c = 0; c < n; ++c) z[(size_t)r * n + c] = Int(m.at(r, c) * l);
  }
  auto at = [&](int r, int c) -> Int& { return z[(size_t)r * n + c]; };
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rat(0);
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        Int t = at(r, c) * at(k, k) - at(r, k) * at(k, c);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(r, c) = t;
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return scale * Rat(sign * at(n - 1, n - 1));
}

int rank_multimodular(const QMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int agreed = -1;
  std::vector<int> pivot_rows, pivot_cols;
  int seen = 0;
  for (uint32_t p : kRankPrimes) {
    PrimeField F(p);
    ModMatrix mm;
    if (!qmatrix_mod(m, F, mm)) continue;  // p divides a denominator
    // Track pivot rows/cols of the first accepted prime for the minor check.
    ModRref rr = modp_rref(F, mm);
    if (seen == 0) {
      agreed = rr.rank;
      pivot_cols = rr.pivot_cols;
      // recover pivot rows: rerun forward elimination tracking row swaps
      ModMatrix m2;
      qmatrix_mod(m, F, m2);
      std::vector<int> rowperm(m2.rows);
      for (int i = 0; i < m2.rows; ++i) rowperm[i] = i;
      int rk = 0;
      for (int col = 0; col < m2.cols && rk < m2.rows; ++col) {
        int piv = -1;
        for (int r = rk; r < m2.rows; ++r)
          if (m2.at(r, col) != 0) {
            piv = r;
            break;
          }
        if (piv < 0) continue;
        if (piv != rk) {
          for (int j = col; j < m2.cols; ++j) std::swap(m2.at(piv, j), m2.at(rk, j));
          std::swap(rowperm[piv], rowperm[rk]);
        }
        uint32_t inv = F.inv(m2.at(rk, col));
        for (int r = rk + 1; r < m2.rows; ++r) {
          uint32_t v = m2.at(r, col);
          if (v == 0) continue;
          uint32_t q = F.p - F.mul(v, inv);
          for (int j = col; j < m2.cols; ++j)
            m2.at(r, j) = F.reduce64((uint64_t)q * m2.at(rk, j) + m2.at(r, j));
        }
        ++rk;
      }
      pivot_rows.assign(rowperm.begin(), rowperm.begin() + rk);
      ++seen;
      continue;
    }
    ++seen;
    if (rr.rank != agreed) {
      // Disagreement: full rational elimination decides.
      return rank_exact_elimination(m);
    }
    // Two primes agree; certify by the exact minor.
    QMatrix minor(agreed, agreed);
    for (int i = 0; i < agreed; ++i)
      for (int j = 0; j < agreed; ++j) minor.at(i, j) = m.at(pivot_rows[i], pivot_cols[j]);
    if (agreed == 0 || !is_zero(det_bareiss(minor))) return agreed;
    return rank_exact_elimination(m);
  }
  return rank_exact_elimination(m);
}

std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
  // Half-gcd style: stop when the remainder drops below sqrt(m/2).
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int den = t1 < 0 ? Int(-t1) : t1;
  Int num = t1 < 0 ? Int(-r1) : r1;
  if (den > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

int implicit_rank_modp(const ImplicitIntMatrix& m, uint32_t p) {
  PrimeField F(p);
  ModMatrix mm(m.rows, m.cols);
  m.build(F, mm);
  return modp_rank(F, mm);
}

CertifiedKernel certified_kernel(const ImplicitIntMatrix& m) {
  if (m.cols == 0) return {0, {}};
  // Structure pass: RREF mod the first prime fixes the candidate pivot set.
  size_t pi = 0;
  while (true) {
    if (pi >= kRankPrimes.size()) throw std::runtime_error("certified_kernel: primes exhausted");
    PrimeField F0(kRankPrimes[pi]);
    ModMatrix mm(m.rows, m.cols);
    m.build(F0, mm);
    ModRref rr = modp_rref(F0, mm);
    auto ker0 = modp_kernel(F0, rr, m.cols);
    int nker = (int)ker0.size();

    // CRT state per kernel vector entry.
    std::vector<std::vector<Int>> residue(nker, std::vector<Int>(m.cols));
    for (int v = 0; v < nker; ++v)
      for (int c = 0; c < m.cols; ++c) residue[v][c] = ker0[v][c];
    Int modulus = kRankPrimes[pi];

    size_t pj = pi + 1;
    bool structure_bad = false;
    while (true) {
      // Attempt reconstruction with the current modulus.
      std::vector<std::vector<Rat>> kernel(nker, std::vector<Rat>(m.cols));
      bool ok = true;
      for (int v = 0; v < nker && ok; ++v)
        for (int c = 0; c < m.cols && ok; ++c) {
          auto r = rational_reconstruct(residue[v][c], modulus);
          if (!r) ok = false;
          else kernel[v][c] = *r;
        }
      if (ok) {
        for (int v = 0; v < nker && ok; ++v) ok = m.verify(kernel[v]);
        if (ok) {
          // nker verified independent vectors (distinct unit coordinates on
          // the free columns) + rank_p lower bound pin the rank exactly.
          return {rr.rank, std::move(kernel)};
        }
      }
      // Add a prime and CRT.
      if (pj >= kRankPrimes.size()) throw std::runtime_error("certified_kernel: primes exhausted");
      PrimeField F(kRankPrimes[pj]);
      ModMatrix mm2(m.rows, m.cols);
      m.build(F, mm2);
      ModRref rr2 = modp_rref(F, mm2);
      ++pj;
      if (rr2.rank > rr.rank || (rr2.rank == rr.rank && rr2.pivot_cols < rr.pivot_cols)) {
        // First prime was bad (lost rank or picked later pivots); restart
        // the structure pass from this prime.
        pi = pj - 1;
        structure_bad = true;
        break;
      }
      if (rr2.rank < rr.rank || rr2.pivot_cols != rr.pivot_cols) continue;  // skip bad prime
      auto ker2 = modp_kernel(F, rr2, m.cols);
      Int newmod = modulus * F.p;
      for (int v = 0; v < nker; ++v)
        for (int c = 0; c < m.cols; ++c) {
          // x = residue mod modulus, = ker2 mod p: CRT lift.
          Int d = Int(ker2[v][c]) - residue[v][c];
          unsigned long mp = mpz_fdiv_ui(modulus.get_mpz_t(), F.p);
          unsigned long dp = mpz_fdiv_ui(d.get_mpz_t(), F.p);
          uint32_t t = F.mul((uint32_t)dp, F.inv((uint32_t)mp));
          residue[v][c] += modulus * t;
        }
      modulus = newmod;
    }
    if (structure_bad) continue;
  }
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
  if (m.cols == 0) return {};
  if (m.rows == 0) {
    std::vector<std::vector<Rat>> out;
    for (int c = 0; c < m.cols; ++c) {
      std::vector<Rat> v(m.cols, Rat(0));
      v[c] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  // Small matrices: plain exact elimination.
  double work = (double)m.rows * m.cols * std::min(m.rows, m.cols);
  if (work <= 2e6) {
    QMatrix r = m;
    auto pivots = qmatrix_rref(r);
    return kernel_from_rref(r, pivots);
  }
  // Modular path with exact verification.
  ImplicitIntMatrix im;
  im.rows = m.rows;
  im.cols = m.cols;
  im.build = [&m](const PrimeField& F, ModMatrix& out) {
    if (!qmatrix_mod(m, F, out))
      throw std::runtime_error("kernel_basis: prime divides a denominator");
  };
  im.verify = [&m](const std::vector<Rat>& v) { return verify_kernel_vector(m, v); };
  try {
    return certified_kernel(im).kernel;
  } catch (const std::exception&) {
    QMatrix r = m;
    auto pivots = qmatrix_rref(r);
    return kernel_from_rref(r, pivots);
  }
}

}  // namespace logsheaf
