#include "logsheaf/steiner.hpp"

#include <stdexcept>

#include "logsheaf/qmatrix.hpp"

namespace logsheaf {

SteinerMatrix steiner_extract(const Arrangement& A) {
  auto pres = cached_presentation(A);
  const auto& b = pres->betti;
  if (b.pdim != 1) throw std::runtime_error("resolution not linear");
  if (b.beta.at(0).size() != 1 || b.beta.at(1).size() != 1)
    throw std::runtime_error("resolution not linear");
  int a = b.beta.at(0).begin()->first;
  int s = b.beta.at(1).begin()->first;
  if (s != a + 1) throw std::runtime_error("resolution not linear");
  SteinerMatrix M;
  int nsyz = pres->syzygies.cols();
  int ngen = (int)pres->generators.size();
  M.entries.assign(nsyz, std::vector<HPoly>(ngen));
  for (int r = 0; r < nsyz; ++r)
    for (int c = 0; c < ngen; ++c) M.entries[r][c] = pres->syzygies.entries[c][r];
  return M;
}

namespace {

std::vector<std::vector<HPoly>> restrict_matrix(const SteinerMatrix& M, const Line& L) {
  std::vector<std::vector<HPoly>> out(M.rows(), std::vector<HPoly>(M.cols()));
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) out[r][c] = restrict_to_line(M.entries[r][c], L);
  return out;
}

void enumerate_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of the i x i minors of a restricted (binary) matrix; nullopt if all
// minors of that size vanish identically.
std::optional<HPoly> minor_gcd(const std::vector<std::vector<HPoly>>& m, int size) {
  int r = (int)m.size(), c = r ? (int)m[0].size() : 0;
  std::vector<HPoly> minors;
  enumerate_subsets(r, size, [&](const std::vector<int>& ri) {
    enumerate_subsets(c, size, [&](const std::vector<int>& ci) {
      std::vector<std::vector<HPoly>> sub(size, std::vector<HPoly>(size));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub[i][j] = m[ri[i]][ci[j]];
      HPoly d = hpoly_det(sub);
      if (!d.zero()) minors.push_back(d);
    });
  });
  if (minors.empty()) return std::nullopt;
  return binary_gcd(minors);
}

// Kernel dimension of the transposed pencil at degree d: tuples v in
// (R_d)^cols with sum_c M[r][c] v_c = 0 for every syzygy row r.
long pencil_kernel_dim(const std::vector<std::vector<HPoly>>& m, int rows, int cols, int d) {
  long vcols = (long)cols * (d + 1);
  long vrows = (long)rows * (d + 2);
  if (vrows == 0) return vcols;
  QMatrix M((int)vrows, (int)vcols);
  auto monos_d = mono_list(2, d);
  for (int c = 0; c < cols; ++c)
    for (long mi = 0; mi < (long)monos_d.size(); ++mi) {
      long col = (long)c * (d + 1) + mi;
      for (int r = 0; r < rows; ++r) {
        for (const auto& [mu, q] : m[r][c].terms()) {
          Mono prod;
          prod.e[0] = (int16_t)(mu.e[0] + monos_d[mi].e[0]);
          prod.e[1] = (int16_t)(mu.e[1] + monos_d[mi].e[1]);
          M.at((int)((long)r * (d + 2) + mono_index(2, prod)), (int)col) += q;
        }
      }
    }
  return vcols - rank_exact_elimination(M);
}

}  // namespace

std::vector<int> minor_gcd_ladder(const SteinerMatrix& M, const Line& L) {
  auto m = restrict_matrix(M, L);
  std::vector<int> out;
  for (int i = 1; i <= M.rows(); ++i) {
    auto g = minor_gcd(m, i);
    out.push_back(g ? g->degree() : -1);
  }
  return out;
}

SplittingType pencil_splitting(const SteinerMatrix& M, const Line& L) {
  int rows = M.rows(), cols = M.cols();
  if (cols != rows + 2) throw std::invalid_argument("pencil must have cols = rows + 2");
  auto m = restrict_matrix(M, L);
  if (rows > 0) {
    auto g = minor_gcd(m, rows);
    if (!g) throw std::runtime_error("pencil drops rank on all of L");
    if (g->degree() != 0)
      throw std::runtime_error("pencil drops rank on L: restriction is not locally free");
  }
  int c1 = rows;
  int a1 = -1, a2 = -1;
  for (int d = 0; d <= c1 && a2 < 0; ++d) {
    long dim = pencil_kernel_dim(m, rows, cols, d);
    long expect_from_a1 = a1 >= 0 ? (d - a1 + 1) : 0;
    if (a1 < 0) {
      if (dim == 0) continue;
      a1 = d;
      expect_from_a1 = 1;
      if (dim == 2) {
        a2 = d;  // both generators in the same degree
        break;
      }
      if (dim != 1) throw std::logic_error("pencil kernel dimension inconsistent");
      continue;
    }
    if (dim == expect_from_a1 + 1) {
      a2 = d;
      break;
    }
    if (dim != expect_from_a1) throw std::logic_error("pencil kernel dimension inconsistent");
  }
  if (a1 < 0 || a2 < 0 || a1 + a2 != c1)
    throw std::logic_error("pencil splitting does not match c1");
  return SplittingType{a1, a2};
}

bool matrix_unstable_line(const SteinerMatrix& M, const Line& L) {
  auto s = pencil_splitting(M, L);
  return s.a1 == 0 && s.a2 == M.c1();
}

SteinerMatrix extension_move(const SteinerMatrix& M, const Line& H) {
  int i = M.cols();
  int nv = 3;
  // coefficient coordinates of (S_1)^i: component-major, variable order z,x,y
  auto row_coords = [&](const std::vector<HPoly>& row) {
    std::vector<Rat> v(3 * i, Rat(0));
    for (int c = 0; c < i; ++c)
      for (const auto& [m, q] : row[c].terms())
        for (int var = 0; var < 3; ++var)
          if (m.e[var] == 1) v[3 * c + var] = q;
    return v;
  };
  HPoly h = HPoly::linear(nv, std::vector<Rat>{Rat(H.ell[0]), Rat(H.ell[1]), Rat(H.ell[2])});
  // trivializing subspace: row space of M plus h * (constant vectors)
  QMatrix T(M.rows() + i, 3 * i);
  for (int r = 0; r < M.rows(); ++r) {
    auto v = row_coords(M.entries[r]);
    for (int c = 0; c < 3 * i; ++c) T.at(r, c) = v[c];
  }
  for (int c = 0; c < i; ++c) {
    std::vector<HPoly> row(i, HPoly(nv, 1));
    row[c] = h;
    auto v = row_coords(row);
    for (int cc = 0; cc < 3 * i; ++cc) T.at(M.rows() + c, cc) = v[cc];
  }
  int trank = rank_exact_elimination(T);
  if (trank == 3 * i) throw std::runtime_error("only trivial extensions exist");

  auto in_subspace = [&](const std::vector<Rat>& cand) {
    QMatrix Tc(T.rows + 1, T.cols);
    Tc.a.assign(T.a.begin(), T.a.end());
    Tc.a.resize((size_t)(T.rows + 1) * T.cols, Rat(0));
    for (int c = 0; c < T.cols; ++c) Tc.at(T.rows, c) = cand[c];
    return rank_exact_elimination(Tc) == trank;
  };

  auto build_candidate = [&](const std::vector<Rat>& cvec) {
    SteinerMatrix B;
    B.entries.assign(M.rows() + 1, std::vector<HPoly>(i + 1, HPoly(nv, 1)));
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < i; ++c) B.entries[r][c] = M.entries[r][c];
    for (int c = 0; c < i; ++c) {
      std::vector<Rat> lin = {cvec[3 * c], cvec[3 * c + 1], cvec[3 * c + 2]};
      B.entries[M.rows()][c] = HPoly::linear(nv, lin);
    }
    B.entries[M.rows()][i] = h;
    return B;
  };

  auto locally_free_along_H = [&](const SteinerMatrix& B) {
    auto m = restrict_matrix(B, H);
    auto g = minor_gcd(m, B.rows());
    return g && g->degree() == 0;
  };

  // fixed enumeration: single basis vectors, then pairs
  std::vector<std::vector<Rat>> singles;
  for (int c = 0; c < i; ++c)
    for (int var = 0; var < 3; ++var) {
      std::vector<Rat> v(3 * i, Rat(0));
      v[3 * c + var] = 1;
      singles.push_back(v);
    }
  for (const auto& cand : singles) {
    if (in_subspace(cand)) continue;
    auto B = build_candidate(cand);
    if (locally_free_along_H(B)) return B;
  }
  for (size_t a = 0; a < singles.size(); ++a)
    for (size_t b = a + 1; b < singles.size(); ++b) {
      std::vector<Rat> cand(3 * i, Rat(0));
      for (int c = 0; c < 3 * i; ++c) cand[c] = singles[a][c] + singles[b][c];
      if (in_subspace(cand)) continue;
      auto B = build_candidate(cand);
      if (locally_free_along_H(B)) return B;
    }
  throw std::runtime_error("no locally free extension class found in the search family");
}

SteinerMatrix reduction_move(const SteinerMatrix& M, const Line& L) {
  int i = M.cols();
  if (i < 4) throw std::invalid_argument("reduction needs i >= 4");
  int nv = 3;
  // constant covector v with sum_c M[r][c]|_L v_c = 0: the surjection onto O_L
  auto m = restrict_matrix(M, L);
  QMatrix K(2 * M.rows(), i);
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < i; ++c)
      for (const auto& [mono, q] : m[r][c].terms()) {
        int which = mono.e[0] == 1 ? 0 : 1;
        K.at(2 * r + which, c) = q;
      }
  auto ker = kernel_basis(K);
  if (ker.empty()) throw std::runtime_error("no surjection to O_L");
  auto v = primitive_integer_vector(ker[0]);
  int pivot = -1;
  for (int c = 0; c < i; ++c)
    if (v[c] != 0) {
      pivot = c;
      break;
    }
  // generators of the kernel: w_c = v[pivot] e_c - v[c] e_pivot, c != pivot
  std::vector<std::vector<Int>> gens;
  for (int c = 0; c < i; ++c) {
    if (c == pivot) continue;
    std::vector<Int> w(i, Int(0));
    w[c] = v[pivot];
    w[pivot] = -v[c];
    gens.push_back(primitive_integer_vector(std::vector<Rat>(w.begin(), w.end())));
  }
  int ng = (int)gens.size();  // i - 1
  // linear syzygies among the w's: sum_c l_c w_c = sum_r lambda_r row_r
  // unknowns: l (3 per new generator) then lambda (one per old row)
  int unknowns = 3 * ng + M.rows();
  QMatrix S(3 * i, unknowns);
  for (int g = 0; g < ng; ++g)
    for (int var = 0; var < 3; ++var) {
      int u = 3 * g + var;
      for (int c = 0; c < i; ++c)
        if (gens[g][c] != 0) S.at(3 * c + var, u) += Rat(gens[g][c]);
    }
  for (int r = 0; r < M.rows(); ++r) {
    int u = 3 * ng + r;
    for (int c = 0; c < i; ++c)
      for (const auto& [mono, q] : M.entries[r][c].terms())
        for (int var = 0; var < 3; ++var)
          if (mono.e[var] == 1) S.at(3 * c + var, u) -= q;
  }
  auto syz = kernel_basis(S);
  if ((int)syz.size() != i - 3)
    throw std::logic_error("reduction: unexpected syzygy count");
  SteinerMatrix R;
  R.entries.assign(i - 3, std::vector<HPoly>(ng, HPoly(nv, 1)));
  for (int s = 0; s < i - 3; ++s) {
    auto w = primitive_integer_vector(syz[s]);
    for (int g = 0; g < ng; ++g) {
      std::vector<Rat> lin = {Rat(w[3 * g]), Rat(w[3 * g + 1]), Rat(w[3 * g + 2])};
      R.entries[s][g] = HPoly::linear(nv, lin);
    }
  }
  return R;
}

std::vector<std::vector<std::string>> matrix_strings(const SteinerMatrix& M) {
  std::vector<std::vector<std::string>> out(M.rows(), std::vector<std::string>(M.cols()));
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) out[r][c] = M.entries[r][c].str();
  return out;
}

}  // namespace logsheaf
