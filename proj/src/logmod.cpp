#include "logsheaf/logmod.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "logsheaf/parallel.hpp"

namespace logsheaf {

int BettiTable::beta_at(int step, int degree) const {
  auto it = beta.find(step);
  if (it == beta.end()) return 0;
  auto jt = it->second.find(degree);
  return jt == it->second.end() ? 0 : jt->second;
}

bool BettiTable::alternating_sum_consistent(int nvars) const {
  for (const auto& [d, hf] : hilbert) {
    long acc = 0;
    int sign = 1;
    for (int p = 0;; ++p) {
      auto it = beta.find(p);
      if (it == beta.end()) {
        if (p > pdim) break;
        sign = -sign;
        continue;
      }
      for (const auto& [deg, cnt] : it->second) acc += sign * cnt * dim_forms(nvars, d - deg);
      sign = -sign;
    }
    if (acc != hf) return false;
  }
  return true;
}

BettiTable BettiTable::degree_shifted(int shift) const {
  BettiTable out = *this;
  out.beta.clear();
  for (const auto& [p, row] : beta)
    for (const auto& [d, c] : row) out.beta[p][d + shift] = c;
  out.hilbert.clear();
  for (const auto& [d, v] : hilbert) out.hilbert[d + shift] = v;
  return out;
}

Int rr_chi_p2(const Int& c1, const Int& c2, int d) {
  Int c1d = c1 + 2 * d;
  Int c2d = c2 + c1 * d + Int(d) * d;
  Int num = c1d * (c1d + 3);
  if (num % 2 != 0) throw std::logic_error("rr_chi_p2: parity");
  return 2 + num / 2 - c2d;
}

Int rr_chi_p3(const Int& c1, const Int& c2, const Int& c3, int d) {
  Int c1d = c1 + 3 * d;
  Int c2d = c2 + 2 * c1 * d + 3 * Int(d) * d;
  Int c3d = c3 + c2 * d + c1 * Int(d) * d + Int(d) * d * d;
  Rat chi = Rat(c1d * c1d * c1d - 3 * c1d * c2d + 3 * c3d) / 6 + Rat(c1d * c1d - 2 * c2d) +
            Rat(11 * c1d) / 6 + 3;
  if (chi.get_den() != 1) throw std::logic_error("rr_chi_p3: not an integer");
  return chi.get_num();
}

namespace {

// ---------------------------------------------------------------------------
// Syzygy tower engine
// ---------------------------------------------------------------------------

struct FamilyMember {
  PolyVec comps;  // over the target components of its level
  int degree;     // module degree
};

// Coefficients of one family member reduced mod p, per component:
// list of (mono, residue).
struct ReducedMember {
  std::vector<std::vector<std::pair<Mono, uint32_t>>> comps;
};

struct Level {
  std::vector<PolyVec> gens;
  std::vector<int> gen_degrees;
  std::map<int, int> beta;
};

struct Tower {
  SyzygyTowerSpec spec;
  std::vector<Level> levels;
  std::map<int, long> dims;  // level-0 piece dimensions
  bool step_flag = false;

  int nv() const { return spec.nvars; }

  // family feeding level l (whose syzygies level l computes)
  int family_size(int l) const {
    if (l == 0) return (int)spec.base.size();
    if ((int)levels.size() < l) return 0;
    return (int)levels[l - 1].gens.size();
  }
  const PolyVec& family_member(int l, int i) const {
    return l == 0 ? spec.base[i] : levels[l - 1].gens[i];
  }
  int family_degree(int l, int i) const {
    return l == 0 ? spec.ambient_twists[i] : levels[l - 1].gen_degrees[i];
  }
  // target components of the level-l evaluation map
  std::vector<int> target_twists(int l) const {
    if (l == 0) return spec.target_twists;
    if (l == 1) return spec.ambient_twists;
    return levels[l - 2].gen_degrees;
  }

  long cols(int l, int d) const {
    long c = 0;
    for (int i = 0; i < family_size(l); ++i) c += dim_forms(nv(), d - family_degree(l, i));
    return c;
  }
  long target_dim(int l, int d) const {
    long c = 0;
    for (int t : target_twists(l)) c += dim_forms(nv(), d - t);
    return c;
  }

  // --- mod-p builders ---

  ReducedMember reduce_member(const PolyVec& v, const PrimeField& F) const {
    ReducedMember out;
    out.comps.resize(v.size());
    for (size_t c = 0; c < v.size(); ++c)
      for (const auto& [m, coeff] : v[c].terms()) {
        unsigned long np = mpz_fdiv_ui(coeff.get_num().get_mpz_t(), F.p);
        unsigned long dp = mpz_fdiv_ui(coeff.get_den().get_mpz_t(), F.p);
        uint32_t r = F.mul((uint32_t)np, F.inv((uint32_t)dp));
        if (r) out.comps[c].push_back({m, r});
      }
    return out;
  }

  // Dense evaluation matrix of the level-l family at degree d, mod p.
  void build_def(int l, int d, const PrimeField& F, ModMatrix& out) const {
    auto tws = target_twists(l);
    std::vector<long> toff(tws.size() + 1, 0);
    for (size_t c = 0; c < tws.size(); ++c) toff[c + 1] = toff[c] + dim_forms(nv(), d - tws[c]);
    long rows = toff.back();
    long ncols = cols(l, d);
    out = ModMatrix((int)rows, (int)ncols);
    if (rows == 0 || ncols == 0) return;
    long col = 0;
    for (int i = 0; i < family_size(l); ++i) {
      ReducedMember rm = reduce_member(family_member(l, i), F);
      int mdeg = d - family_degree(l, i);
      auto monos = mono_list(nv(), mdeg);
      for (const auto& m : monos) {
        for (size_t c = 0; c < rm.comps.size(); ++c) {
          for (const auto& [mu, r] : rm.comps[c]) {
            Mono prod;
            for (int e = 0; e < 4; ++e) prod.e[e] = (int16_t)(mu.e[e] + m.e[e]);
            long rowi = toff[c] + mono_index(nv(), prod);
            out.a[(size_t)rowi * ncols + col] = F.add(out.a[(size_t)rowi * ncols + col], r);
          }
        }
        ++col;
      }
    }
  }

  // rank of the level-0 matrix mod p, split by the involution when enabled
  int def0_rank_modp(int d, uint32_t p) const {
    PrimeField F(p);
    if (!spec.use_symmetry) {
      ModMatrix m;
      build_def(0, d, F, m);
      return modp_rank(F, m);
    }
    return def0_rank_symmetric(d, F);
  }

  int def0_rank_symmetric(int d, const PrimeField& F) const;

  int rank_modp(int l, int d, uint32_t p) const {
    if (family_size(l) == 0) return 0;
    if (l == 0) return def0_rank_modp(d, p);
    PrimeField F(p);
    ModMatrix m;
    build_def(l, d, F, m);
    return modp_rank(F, m);
  }

  // --- exact machinery ---

  ImplicitIntMatrix implicit_def(int l, int d) const {
    ImplicitIntMatrix im;
    im.rows = (int)target_dim(l, d);
    im.cols = (int)cols(l, d);
    im.build = [this, l, d](const PrimeField& F, ModMatrix& out) { build_def(l, d, F, out); };
    im.verify = [this, l, d](const std::vector<Rat>& v) {
      auto w = apply_family(l, d, v);
      for (const auto& p : w)
        if (!p.zero()) return false;
      return true;
    };
    return im;
  }

  // Sum of v_(i,m) * m * family_i as a tuple over the target components.
  PolyVec apply_family(int l, int d, const std::vector<Rat>& v) const {
    auto tws = target_twists(l);
    PolyVec acc;
    for (int t : tws) acc.push_back(HPoly(nv(), d - t));
    long col = 0;
    for (int i = 0; i < family_size(l); ++i) {
      int mdeg = d - family_degree(l, i);
      auto monos = mono_list(nv(), mdeg);
      const PolyVec& fam = family_member(l, i);
      for (const auto& m : monos) {
        if (!is_zero(v[col])) {
          HPoly mono_poly = HPoly::monomial(nv(), m, v[col]);
          for (size_t c = 0; c < fam.size(); ++c) acc[c] = acc[c] + mono_poly * fam[c];
        }
        ++col;
      }
    }
    return acc;
  }

  // Coordinates of the degree-d piece: concatenated coefficient vectors of
  // the components of an element of (+) S(-famdeg_i).
  std::vector<Rat> element_coords(int l, int d, const PolyVec& el) const {
    std::vector<long> off(family_size(l) + 1, 0);
    for (int i = 0; i < family_size(l); ++i)
      off[i + 1] = off[i] + dim_forms(nv(), d - family_degree(l, i));
    std::vector<Rat> v(off.back(), Rat(0));
    for (int i = 0; i < family_size(l); ++i)
      for (const auto& [m, c] : el[i].terms()) v[off[i] + mono_index(nv(), m)] = c;
    return v;
  }

  PolyVec coords_to_element(int l, int d, const std::vector<Rat>& v) const {
    PolyVec el;
    long col = 0;
    for (int i = 0; i < family_size(l); ++i) {
      int mdeg = d - family_degree(l, i);
      HPoly p(nv(), mdeg);
      for (const auto& m : mono_list(nv(), mdeg)) {
        if (!is_zero(v[col])) p.set_coeff(m, v[col]);
        ++col;
      }
      el.push_back(std::move(p));
    }
    return el;
  }

  // Exact handling of a degree where new generators may appear at level l.
  // Returns the exact piece dimension; appends any new minimal generators.
  long resolve_level(int l, int d) {
    CertifiedKernel ck = certified_kernel(implicit_def(l, d));
    long dim = (long)ck.kernel.size();
    if ((int)levels.size() <= l) levels.resize(l + 1);
    // exact span of S * (gens found so far) in degree d
    std::vector<std::vector<Rat>> echelon;  // rows, kept fully reduced
    std::vector<long> pivots;
    auto insert_row = [&](std::vector<Rat> row) -> bool {
      for (size_t r = 0; r < echelon.size(); ++r) {
        if (!is_zero(row[pivots[r]])) {
          Rat q = row[pivots[r]];
          for (size_t j = 0; j < row.size(); ++j) row[j] -= q * echelon[r][j];
        }
      }
      long piv = -1;
      for (size_t j = 0; j < row.size(); ++j)
        if (!is_zero(row[j])) {
          piv = (long)j;
          break;
        }
      if (piv < 0) return false;
      Rat inv = 1 / row[piv];
      for (auto& x : row) x *= inv;
      for (size_t r = 0; r < echelon.size(); ++r) {
        if (!is_zero(echelon[r][piv])) {
          Rat q = echelon[r][piv];
          for (size_t j = 0; j < row.size(); ++j) echelon[r][j] -= q * row[j];
        }
      }
      echelon.push_back(std::move(row));
      pivots.push_back(piv);
      return true;
    };
    Level& lev = levels[l];
    for (size_t g = 0; g < lev.gens.size(); ++g) {
      int mdeg = d - lev.gen_degrees[g];
      if (mdeg < 0) continue;
      for (const auto& m : mono_list(nv(), mdeg)) {
        PolyVec prod;
        HPoly mono_poly = HPoly::monomial(nv(), m, 1);
        for (const auto& comp : lev.gens[g]) prod.push_back(mono_poly * comp);
        insert_row(element_coords(l, d, prod));
      }
    }
    for (const auto& kv : ck.kernel) {
      std::vector<Rat> row = kv;
      size_t before = echelon.size();
      if (insert_row(std::move(row))) {
        // new minimal generator: integerized canonical representative
        const std::vector<Rat>& red = echelon[before];
        auto w = primitive_integer_vector(red);
        std::vector<Rat> wr(w.begin(), w.end());
        lev.gens.push_back(coords_to_element(l, d, wr));
        lev.gen_degrees.push_back(d);
        lev.beta[d]++;
      }
    }
    return dim;
  }
};

// Symmetric/antisymmetric split of the level-0 evaluation matrix.
int Tower::def0_rank_symmetric(int d, const PrimeField& F) const {
  const auto& vp = spec.var_perm;
  const auto& cp = spec.comp_perm;
  int D = d - spec.target_twists[0];  // single target component
  auto tmonos = mono_list(nv(), D);
  long tdim = (long)tmonos.size();
  if (tdim <= 0) return 0;
  // target involution
  std::vector<long> sigma(tdim);
  for (long t = 0; t < tdim; ++t) {
    Mono sm;
    for (int v = 0; v < nv(); ++v) sm.e[vp[v]] = tmonos[t].e[v];
    sigma[t] = mono_index(nv(), sm);
  }
  // orbit bookkeeping: plus-coordinates for every orbit rep and diagonal,
  // minus-coordinates for proper orbit reps
  std::vector<long> plus_row(tdim, -1), minus_row(tdim, -1);
  long nplus = 0, nminus = 0;
  for (long t = 0; t < tdim; ++t) {
    if (sigma[t] == t) plus_row[t] = nplus++;
    else if (t < sigma[t]) {
      plus_row[t] = nplus++;
      minus_row[t] = nminus++;
    }
  }
  // column enumeration with involution (i, m) -> (cp[i], sigma m)
  struct Col {
    int i;
    long mi;  // monomial index within its degree block
  };
  int fam = family_size(0);
  std::vector<long> moff(fam + 1, 0);
  for (int i = 0; i < fam; ++i) moff[i + 1] = moff[i] + dim_forms(nv(), d - family_degree(0, i));
  long ncols = moff.back();
  std::vector<ReducedMember> rms;
  for (int i = 0; i < fam; ++i) rms.push_back(reduce_member(family_member(0, i), F));
  std::vector<std::vector<Mono>> monos(fam);
  for (int i = 0; i < fam; ++i) monos[i] = mono_list(nv(), d - family_degree(0, i));

  auto col_entries = [&](int i, const Mono& m, std::vector<std::pair<long, uint32_t>>& out) {
    out.clear();
    for (const auto& [mu, r] : rms[i].comps[0]) {
      Mono prod;
      for (int e = 0; e < 4; ++e) prod.e[e] = (int16_t)(mu.e[e] + m.e[e]);
      out.push_back({mono_index(nv(), prod), r});
    }
  };

  std::vector<bool> visited(ncols, false);
  std::vector<uint32_t> plus_cols, minus_cols;  // column-major storage
  long n_plus_cols = 0, n_minus_cols = 0;
  std::vector<uint32_t> dense(tdim), dense2(tdim);
  std::vector<std::pair<long, uint32_t>> ent;
  for (int i = 0; i < fam; ++i) {
    for (size_t mi = 0; mi < monos[i].size(); ++mi) {
      long ci = moff[i] + (long)mi;
      if (visited[ci]) continue;
      visited[ci] = true;
      const Mono& m = monos[i][mi];
      Mono sm;
      for (int v = 0; v < nv(); ++v) sm.e[vp[v]] = m.e[v];
      int i2 = cp[i];
      long mi2 = mono_index(nv(), sm);
      long ci2 = moff[i2] + mi2;
      bool self = (ci2 == ci);
      if (!self) visited[ci2] = true;
      std::fill(dense.begin(), dense.end(), 0);
      col_entries(i, m, ent);
      for (auto& [t, r] : ent) dense[t] = F.add(dense[t], r);
      if (self) {
        // symmetric column: plus part only
        plus_cols.resize(plus_cols.size() + nplus, 0);
        uint32_t* pc = plus_cols.data() + (size_t)n_plus_cols * nplus;
        for (long t = 0; t < tdim; ++t)
          if (plus_row[t] >= 0 && dense[t]) pc[plus_row[t]] = dense[t];
        ++n_plus_cols;
        continue;
      }
      std::fill(dense2.begin(), dense2.end(), 0);
      col_entries(i2, monos[i2][mi2], ent);
      for (auto& [t, r] : ent) dense2[t] = F.add(dense2[t], r);
      // span{C, C'} = span{C + C', C - C'}; the symmetric / antisymmetric
      // parts are read off at the orbit representatives.
      plus_cols.resize(plus_cols.size() + nplus, 0);
      uint32_t* pc = plus_cols.data() + (size_t)n_plus_cols * nplus;
      minus_cols.resize(minus_cols.size() + nminus, 0);
      uint32_t* mc = minus_cols.data() + (size_t)n_minus_cols * nminus;
      for (long t = 0; t < tdim; ++t) {
        if (plus_row[t] >= 0) pc[plus_row[t]] = F.add(dense[t], dense2[t]);
        if (minus_row[t] >= 0) mc[minus_row[t]] = F.sub(dense[t], dense2[t]);
      }
      ++n_plus_cols;
      ++n_minus_cols;
    }
  }
  // transpose into row-major matrices and eliminate
  ModMatrix P((int)n_plus_cols, (int)nplus);
  for (long c = 0; c < n_plus_cols; ++c)
    for (long r = 0; r < nplus; ++r) P.at((int)c, (int)r) = plus_cols[(size_t)c * nplus + r];
  ModMatrix M((int)n_minus_cols, (int)nminus);
  for (long c = 0; c < n_minus_cols; ++c)
    for (long r = 0; r < nminus; ++r) M.at((int)c, (int)r) = minus_cols[(size_t)c * nminus + r];
  return modp_rank(F, P) + modp_rank(F, M);
}

struct DegreeRanks {
  long u = 0;                   // cols0 - rank_p(def0): upper bound on dim
  std::vector<long> span_rank;  // rank_p(def_(l+1)) per level l = 0..L
};

TowerResult run_tower_impl(Tower& tw) {
  const SyzygyTowerSpec& spec = tw.spec;
  int cutoff = spec.cutoff;

  auto compute_ranks = [&](int d, int prime_idx) {
    DegreeRanks R;
    long r0 = tw.rank_modp(0, d, kRankPrimes[prime_idx]);
    R.u = tw.cols(0, d) - r0;
    int L = (int)tw.levels.size();
    R.span_rank.resize(L + 1, 0);
    for (int l = 0; l <= L; ++l) {
      if (l + 1 > spec.max_steps + 1) break;
      R.span_rank[l] = tw.rank_modp(l + 1, d, kRankPrimes[prime_idx]);
      if (l >= (int)tw.levels.size() || tw.levels[l].gens.empty()) break;
    }
    return R;
  };

  // Process one degree given its rank data.  Returns false if the
  // certificates did not close (caller escalates).
  auto try_certify = [&](int d, const DegreeRanks& R) -> bool {
    long s0 = R.span_rank.empty() ? 0 : R.span_rank[0];
    if (s0 > R.u) throw std::logic_error("rank certificate inconsistency");
    if (s0 != R.u) return false;
    tw.dims[d] = R.u;
    long prev = R.u;
    for (int l = 1;; ++l) {
      if ((int)tw.levels.size() < l || tw.levels[l - 1].gens.empty()) break;
      long dim_l = tw.cols(l, d) - prev;
      if (dim_l < 0) throw std::logic_error("negative piece dimension");
      if (dim_l == 0) break;
      if (l > spec.max_steps) {
        tw.step_flag = true;
        break;
      }
      long sl = (int)R.span_rank.size() > l ? R.span_rank[l] : 0;
      if (sl > dim_l) throw std::logic_error("rank certificate inconsistency");
      if (sl != dim_l) return false;
      prev = dim_l;
    }
    return true;
  };

  int last_event = -1;  // last degree where exact extraction ran

  // Full exact handling of one degree (new generators and/or bad primes).
  auto handle_exact = [&](int d) {
    last_event = d;
    long dim0 = tw.resolve_level(0, d);
    tw.dims[d] = dim0;
    long prev = dim0;
    for (int l = 1;; ++l) {
      if ((int)tw.levels.size() < l || tw.levels[l - 1].gens.empty()) break;
      long dim_l = tw.cols(l, d) - prev;
      if (dim_l < 0) throw std::logic_error("negative piece dimension");
      if (dim_l == 0) break;
      if (l > spec.max_steps) {
        tw.step_flag = true;
        break;
      }
      // exact span test at level l
      long span = tw.rank_modp(l + 1, d, kRankPrimes[0]);
      if (span != dim_l) {
        long got = tw.resolve_level(l, d);
        if (got != dim_l) throw std::logic_error("exact dimension mismatch across levels");
      }
      prev = dim_l;
    }
  };

  auto sequential_step = [&](int d) {
    DegreeRanks R = compute_ranks(d, 0);
    if (try_certify(d, R)) return;
    R = compute_ranks(d, 1);
    if (try_certify(d, R)) return;
    handle_exact(d);
  };

  // Degrees are processed in order; once generators exist and no extraction
  // has happened for two degrees, the remaining rank computations are
  // independent and run on the worker pool.
  int d = 0;
  while (d <= cutoff) {
    bool stable = !tw.levels.empty() && !tw.levels[0].gens.empty() && d >= last_event + 3;
    if (!stable || worker_count() == 1) {
      sequential_step(d);
      ++d;
      continue;
    }
    int first = d;
    int count = cutoff - d + 1;
    std::vector<DegreeRanks> ranks(count);
    parallel_for((size_t)count, [&](size_t i) { ranks[i] = compute_ranks(first + (int)i, 0); });
    bool restarted = false;
    for (int i = 0; i < count; ++i) {
      int dd = first + i;
      if (try_certify(dd, ranks[i])) continue;
      DegreeRanks R = compute_ranks(dd, 1);
      if (try_certify(dd, R)) continue;
      handle_exact(dd);
      d = dd + 1;
      restarted = true;
      break;
    }
    if (!restarted) d = cutoff + 1;
  }

  TowerResult out;
  for (size_t l = 0; l < tw.levels.size(); ++l)
    if (!tw.levels[l].beta.empty()) {
      out.betti.beta[(int)l] = tw.levels[l].beta;
      out.betti.pdim = (int)l;
    }
  out.betti.hilbert = tw.dims;
  out.betti.cutoff = cutoff;
  out.betti.step3_flag = tw.step_flag;
  if (!tw.levels.empty()) {
    out.gens = tw.levels[0].gens;
    out.gen_degrees = tw.levels[0].gen_degrees;
    if (tw.levels.size() >= 2) {
      const Level& syz = tw.levels[1];
      out.syzygies.row_twists = out.gen_degrees;
      out.syzygies.col_twists = syz.gen_degrees;
      out.syzygies.entries.assign(out.gens.size(), std::vector<HPoly>(syz.gens.size()));
      for (size_t c = 0; c < syz.gens.size(); ++c)
        for (size_t r = 0; r < out.gens.size(); ++r) out.syzygies.entries[r][c] = syz.gens[c][r];
    } else {
      out.syzygies.row_twists = out.gen_degrees;
    }
  }
  return out;
}

}  // namespace

TowerResult run_syzygy_tower(const SyzygyTowerSpec& spec) {
  Tower tw;
  tw.spec = spec;
  return run_tower_impl(tw);
}

TowerResult dual_tower(const Arrangement& A, int shift, int cutoff) {
  if (cutoff < 0) cutoff = A.size();
  auto pres = cached_presentation(A, cutoff);
  if (pres->betti.pdim != 1) throw std::runtime_error("dual tower requires pdim 1");
  SyzygyTowerSpec spec;
  spec.nvars = pres->nvars;
  const GradedMatrix& phi = pres->syzygies;
  for (int r = 0; r < phi.rows(); ++r) spec.ambient_twists.push_back(-phi.row_twists[r] - shift);
  for (int c = 0; c < phi.cols(); ++c) spec.target_twists.push_back(-phi.col_twists[c] - shift);
  for (int r = 0; r < phi.rows(); ++r) {
    PolyVec row;
    for (int c = 0; c < phi.cols(); ++c) row.push_back(phi.entries[r][c]);
    spec.base.push_back(row);
  }
  spec.cutoff = cutoff;
  spec.max_steps = 2;
  return run_syzygy_tower(spec);
}

// ---------------------------------------------------------------------------
// D_0(A) front ends
// ---------------------------------------------------------------------------

namespace {

SyzygyTowerSpec jacobian_tower_spec(const Arrangement& A, int cutoff) {
  SyzygyTowerSpec spec;
  spec.nvars = A.ambient_dim;
  int n = A.size();
  spec.ambient_twists.assign(A.ambient_dim, 0);
  spec.target_twists = {-(n - 1)};
  HPoly f = A.defining_form();
  for (int v = 0; v < A.ambient_dim; ++v) spec.base.push_back({f.derivative(v)});
  spec.cutoff = cutoff;
  spec.max_steps = 2;
  // involution x<->y (P^2) or x<->w (P^3) when the form set is stable
  std::vector<int> vp;
  if (A.ambient_dim == 3) vp = {0, 2, 1};
  else vp = {0, 3, 2, 1};
  bool sym = true;
  for (const auto& form : A.forms) {
    std::vector<Int> pf(form.size());
    for (size_t i = 0; i < form.size(); ++i) pf[vp[i]] = form[i];
    if (!A.contains(pf)) {
      sym = false;
      break;
    }
  }
  if (sym) {
    spec.use_symmetry = true;
    spec.var_perm = vp;
    spec.comp_perm = vp;  // derivation slots permute with the variables
  }
  return spec;
}

void check_stabilization(const Arrangement& A, const BettiTable& b) {
  int cutoff = b.cutoff;
  if (A.ambient_dim == 3) {
    // T_A is locally free on P^2, so the characteristic polynomial pins the
    // full Chern data and the Hilbert function must agree with chi(T(d)).
    auto [c1, c2] = chern_classes(A, 0);
    for (int d = cutoff - 2; d <= cutoff; ++d) {
      auto it = b.hilbert.find(d);
      if (it == b.hilbert.end() || Int(it->second) != rr_chi_p2(c1, c2, d))
        throw std::runtime_error("cutoff too small");
    }
    return;
  }
  // P^3: the sheaf may fail to be locally free at finitely many points,
  // which shifts c3 only; chi(T(d)) differs from the char-poly prediction
  // by the constant c3_correction/2.  Stabilization = (c1, c2) agree and
  // the offset is constant over the last three degrees.
  auto c = chern_classes_p3(A);
  Rat offset;
  for (int d = cutoff - 2; d <= cutoff; ++d) {
    auto it = b.hilbert.find(d);
    if (it == b.hilbert.end()) throw std::runtime_error("cutoff too small");
    Rat delta = Rat(Int(it->second) - rr_chi_p3(c[0], c[1], Int(0), d));
    if (d == cutoff - 2) offset = delta;
    else if (delta != offset) throw std::runtime_error("cutoff too small");
  }
}

}  // namespace

GradedPiece graded_dim(const Arrangement& A, int d) {
  if (d < 0) throw std::invalid_argument("graded_dim: degree must be >= 0");
  Tower tw;
  tw.spec = jacobian_tower_spec(A, d);
  tw.spec.use_symmetry = false;
  CertifiedKernel ck = certified_kernel(tw.implicit_def(0, d));
  GradedPiece out;
  out.degree = d;
  for (const auto& v : ck.kernel) out.basis.push_back(tw.coords_to_element(0, d, v));
  return out;
}

BettiTable minimal_resolution(const Arrangement& A, int cutoff) {
  return cached_presentation(A, cutoff)->betti;
}

namespace {
std::mutex g_pres_mutex;
std::map<std::string, std::shared_ptr<const Presentation>> g_pres_cache;
}  // namespace

std::shared_ptr<const Presentation> cached_presentation(const Arrangement& A, int cutoff) {
  if (cutoff < 0) cutoff = A.size();
  std::string key = A.canonical_key() + "#" + std::to_string(cutoff);
  {
    std::lock_guard<std::mutex> lk(g_pres_mutex);
    auto it = g_pres_cache.find(key);
    if (it != g_pres_cache.end()) return it->second;
  }
  Tower tw;
  tw.spec = jacobian_tower_spec(A, cutoff);
  TowerResult res = run_tower_impl(tw);
  check_stabilization(A, res.betti);
  auto pres = std::make_shared<Presentation>();
  pres->generators = res.gens;
  pres->gen_degrees = res.gen_degrees;
  pres->syzygies = res.syzygies;
  pres->betti = res.betti;
  pres->nvars = A.ambient_dim;
  std::lock_guard<std::mutex> lk(g_pres_mutex);
  g_pres_cache[key] = pres;
  return pres;
}

HPoly saito_determinant(const Arrangement& A, const std::vector<PolyVec>& gens) {
  int nv = A.ambient_dim;
  std::vector<std::vector<HPoly>> m;
  std::vector<HPoly> euler;
  for (int v = 0; v < nv; ++v) {
    Mono mono;
    mono.e[v] = 1;
    euler.push_back(HPoly::monomial(nv, mono, 1));
  }
  m.push_back(euler);
  for (const auto& g : gens) m.push_back(g);
  return hpoly_det(m);
}

std::pair<bool, std::optional<Exponents>> is_free(const Arrangement& A) {
  auto pres = cached_presentation(A);
  int mrank = A.ambient_dim - 1;
  if (pres->betti.pdim != 0 || (int)pres->generators.size() != mrank) return {false, std::nullopt};
  HPoly det = saito_determinant(A, pres->generators);
  HPoly f = A.defining_form();
  if (det.zero()) throw std::logic_error("Saito determinant vanished for a pdim-0 module");
  // det must equal (nonzero scalar) * f
  Rat c = det.lead().second / f.coeff(det.lead().first);
  if (!(det == f * c)) throw std::logic_error("Saito determinant is not a multiple of f");
  Exponents e;
  e.d = pres->gen_degrees;
  std::sort(e.d.begin(), e.d.end());
  return {true, e};
}

BettiTable dual_module_betti(const Arrangement& A, int shift, int cutoff) {
  if (cutoff < 0) cutoff = A.size();
  auto pres = cached_presentation(A, cutoff);
  int nv = pres->nvars;
  if (pres->betti.pdim == 0) {
    // dual of a free module, twisted
    BettiTable out;
    std::map<int, int> b0;
    for (int dgen : pres->gen_degrees) b0[-dgen - shift]++;
    out.beta[0] = b0;
    out.pdim = 0;
    out.cutoff = cutoff;
    for (int d = 0; d <= cutoff; ++d) {
      long h = 0;
      for (int dgen : pres->gen_degrees) h += dim_forms(nv, d + dgen + shift);
      out.hilbert[d] = h;
    }
    return out;
  }
  if (pres->betti.pdim != 1)
    throw std::runtime_error("dual_module_betti requires pdim <= 1");
  TowerResult res = dual_tower(A, shift, cutoff);
  // stabilization against Riemann-Roch for the dual sheaf (P^3: up to the
  // constant c3 correction, as in check_stabilization)
  if (nv == 3) {
    auto [c1, c2] = chern_classes(A, 0);
    Int c1s = -c1 + 2 * shift;
    Int c2s = c2 - c1 * shift + Int(shift) * shift;
    for (int d = cutoff - 2; d <= cutoff; ++d) {
      auto it = res.betti.hilbert.find(d);
      if (it == res.betti.hilbert.end() || Int(it->second) != rr_chi_p2(c1s, c2s, d))
        throw std::runtime_error("cutoff too small");
    }
  } else {
    auto c = chern_classes_p3(A);
    Int s = shift;
    Int c1s = -c[0] + 3 * s;
    Int c2s = c[1] - 2 * c[0] * s + 3 * s * s;
    Rat offset;
    for (int d = cutoff - 2; d <= cutoff; ++d) {
      auto it = res.betti.hilbert.find(d);
      if (it == res.betti.hilbert.end()) throw std::runtime_error("cutoff too small");
      Rat delta = Rat(Int(it->second) - rr_chi_p3(c1s, c2s, Int(0), d));
      if (d == cutoff - 2) offset = delta;
      else if (delta != offset) throw std::runtime_error("cutoff too small");
    }
  }
  return res.betti;
}

}  // namespace logsheaf
