#include "logsheaf/modp.hpp"

namespace logsheaf {

const std::vector<uint32_t> kRankPrimes = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u,
    2147483543u, 2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u,
    2147483353u, 2147483323u, 2147483269u, 2147483249u, 2147483237u, 2147483179u,
    2147483171u, 2147483137u, 2147483123u, 2147483077u, 2147483069u, 2147483059u,
    2147483053u, 2147483033u, 2147483029u, 2147482951u, 2147482949u, 2147482943u,
    2147482937u, 2147482921u, 2147482877u, 2147482873u, 2147482867u, 2147482859u,
    2147482819u, 2147482817u, 2147482811u, 2147482801u, 2147482763u, 2147482739u,
    2147482697u, 2147482693u, 2147482681u, 2147482663u, 2147482661u, 2147482621u,
};

PrimeField::PrimeField(uint32_t prime) : p(prime) {
  magic = (uint64_t)(((unsigned __int128)1 << 62) / p);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1, b = a;
  while (e) {
    if (e & 1) r = reduce64(r * b);
    b = reduce64(b * b);
    e >>= 1;
  }
  return (uint32_t)r;
}

namespace {

// r += q * s over F, on a row segment starting at column `from`.
inline void axpy_row(const PrimeField& F, uint32_t* r, const uint32_t* s, uint32_t q, int from,
                     int cols) {
  if (q == 0) return;
  for (int j = from; j < cols; ++j) {
    r[j] = F.reduce64((uint64_t)q * s[j] + r[j]);
  }
}

}  // namespace

int modp_rank(const PrimeField& F, ModMatrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const uint32_t inv = F.inv(m.at(rank, col));
    const uint32_t* prow = m.row(rank);
    for (int r = rank + 1; r < m.rows; ++r) {
      uint32_t v = m.at(r, col);
      if (v == 0) continue;
      // eliminate: row_r -= (v/pivot) * pivot_row
      uint32_t q = F.p - F.mul(v, inv);
      axpy_row(F, m.row(r), prow, q, col, m.cols);
      m.at(r, col) = 0;
    }
    ++rank;
  }
  return rank;
}

ModRref modp_rref(const PrimeField& F, ModMatrix m) {
  ModRref out;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint32_t inv = F.inv(m.at(rank, col));
    uint32_t* prow = m.row(rank);
    for (int j = col; j < m.cols; ++j) prow[j] = F.mul(prow[j], inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      uint32_t v = m.at(r, col);
      if (v == 0) continue;
      uint32_t q = F.p - v;
      axpy_row(F, m.row(r), prow, q, col, m.cols);
      m.at(r, col) = 0;
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  out.rank = rank;
  out.m = ModMatrix(rank, m.cols);
  for (int r = 0; r < rank; ++r)
    for (int j = 0; j < m.cols; ++j) out.m.at(r, j) = m.at(r, j);
  return out;
}

std::vector<std::vector<uint32_t>> modp_kernel(const PrimeField& F, const ModRref& r, int cols) {
  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < r.rank; ++i) pivot_of_col[r.pivot_cols[i]] = i;
  std::vector<std::vector<uint32_t>> out;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<uint32_t> v(cols, 0);
    v[c] = 1;
    for (int i = 0; i < r.rank; ++i) {
      uint32_t e = r.m.at(i, c);
      if (e != 0) v[r.pivot_cols[i]] = F.p - e;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace logsheaf
