// Dense linear algebra over word-size prime fields.  This is the fast path
// behind the certified rational rank/kernel routines: ranks mod p are exact
// lower bounds for the rational rank, which the callers combine into
// two-sided certificates.
#pragma once

#include <cstdint>
#include <vector>

namespace logsheaf {

// Primes just below 2^31 (all > 2^30, as the rank certification requires).
extern const std::vector<uint32_t> kRankPrimes;

// Barrett reduction for a fixed modulus p < 2^31: values stay < p,
// products fit in 64 bits.
struct PrimeField {
  uint32_t p;
  uint64_t magic;  // floor(2^62 / p)

  explicit PrimeField(uint32_t prime);

  inline uint32_t reduce64(uint64_t x) const {
    uint64_t q = (uint64_t)(((unsigned __int128)x * magic) >> 62);
    uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return (uint32_t)r;
  }
  inline uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  inline uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  inline uint32_t mul(uint32_t a, uint32_t b) const { return reduce64((uint64_t)a * b); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const { return pow(a, p - 2); }
};

struct ModMatrix {
  int rows = 0, cols = 0;
  std::vector<uint32_t> a;  // row-major

  ModMatrix() = default;
  ModMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  uint32_t* row(int r) { return a.data() + (size_t)r * cols; }
  const uint32_t* row(int r) const { return a.data() + (size_t)r * cols; }
  uint32_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
  uint32_t at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Forward elimination; destroys m.  Returns the rank.
int modp_rank(const PrimeField& F, ModMatrix& m);

struct ModRref {
  int rank = 0;
  std::vector<int> pivot_cols;
  ModMatrix m;  // reduced row echelon form, zero rows dropped
};

// Full RREF with partial pivoting by leftmost column; deterministic.
ModRref modp_rref(const PrimeField& F, ModMatrix m);

// Kernel basis in the standard free-column parameterization of an RREF.
// Column j of the result corresponds to the j-th non-pivot column.
std::vector<std::vector<uint32_t>> modp_kernel(const PrimeField& F, const ModRref& r, int cols);

}  // namespace logsheaf
