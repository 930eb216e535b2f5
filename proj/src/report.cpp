#include "logsheaf/report.hpp"

#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "logsheaf/a2geo.hpp"
#include "logsheaf/rootsys.hpp"
#include "logsheaf/split.hpp"

namespace logsheaf {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skipped";
  }
}

Json arrangement_to_json(const Arrangement& A) {
  Json out;
  out["ambient_dim"] = A.ambient_dim;
  Json forms = Json::array();
  for (const auto& f : A.forms) {
    Json row = Json::array();
    for (const auto& c : f) row.push_back(c.get_str());
    forms.push_back(row);
  }
  out["forms"] = forms;
  out["labels"] = A.labels;
  return out;
}

Json betti_to_json(const BettiTable& b) {
  Json beta;
  for (const auto& [step, row] : b.beta) {
    Json r;
    for (const auto& [deg, cnt] : row) r[std::to_string(deg)] = cnt;
    beta[std::to_string(step)] = r;
  }
  Json out;
  out["beta"] = beta;
  out["pdim"] = b.pdim;
  Json hf;
  for (const auto& [d, h] : b.hilbert) hf[std::to_string(d)] = h;
  out["hilbert"] = hf;
  return out;
}

Json charpoly_to_json(const Arrangement& A, const Int& twist) {
  auto chi = char_poly(A);
  Json out;
  Json coeffs = Json::array();
  for (const auto& c : chi.coeffs) coeffs.push_back(c.get_str());
  out["chi"] = coeffs;
  Json red = Json::array();
  for (const auto& c : chi.reduced()) red.push_back(c.get_str());
  out["reduced"] = red;
  if (A.ambient_dim == 3) {
    auto [c1, c2] = chern_classes(A, twist);
    out["c1"] = c1.get_str();
    out["c2"] = c2.get_str();
  }
  return out;
}

namespace {

bool is_linear_table(const BettiTable& b) {
  if (b.beta.empty()) return false;
  int base = 0;
  bool first = true;
  for (const auto& [step, row] : b.beta) {
    if (row.size() != 1) return false;
    int d = row.begin()->first;
    if (first) {
      base = d - step;
      first = false;
    } else if (d - step != base) {
      return false;
    }
  }
  return true;
}

// All roots of the reduced characteristic polynomial have real part
// eta (k+2j+1) / 2 (integer 2*rho for our grids).
bool riemann_hypothesis_holds(const Arrangement& A) {
  auto red = char_poly(A).reduced();
  int eta = A.ambient_dim;  // m + 1 for A_m
  int k = *A.def_k, j = *A.def_j;
  if (A.ambient_dim == 3) {
    Int b1 = -red[1], b2 = red[2];
    if (b1 != Int(eta) * (k + 2 * j + 1)) return false;
    return b1 * b1 - 4 * b2 <= 0;
  }
  // cubic: substitute t = rho + u; require u^2 and constant coefficients to
  // vanish and the u-coefficient to be nonnegative
  Rat rho = Rat(Int(eta) * (k + 2 * j + 1), 2);
  Rat c3 = Rat(red[0]), c2 = Rat(red[1]), c1 = Rat(red[2]), c0 = Rat(red[3]);
  Rat u2 = 3 * rho + c2;
  Rat u1 = 3 * rho * rho + 2 * c2 * rho + c1;
  Rat u0 = rho * rho * rho + c2 * rho * rho + c1 * rho + c0;
  return u2 == 0 && u0 == 0 && u1 >= 0;
}

long matrix_entries_at_cutoff(const Arrangement& A, int cutoff) {
  int n = A.size();
  return dim_forms(A.ambient_dim, cutoff + n - 1) * A.ambient_dim *
         dim_forms(A.ambient_dim, cutoff);
}

std::optional<BettiTable> betti_guarded(const Arrangement& A, const SweepOptions& opt) {
  if (matrix_entries_at_cutoff(A, A.size()) > opt.matrix_budget) return std::nullopt;
  return minimal_resolution(A);
}

}  // namespace

SweepReport conjecture_sweep(char family, int m, std::pair<int, int> j_range,
                             std::pair<int, int> k_range, const SweepOptions& opt) {
  SweepReport rep;
  int eta = coxeter_number(family, m);
  for (int j = j_range.first; j <= j_range.second; ++j)
    for (int k = k_range.first; k <= k_range.second; ++k) {
      CellReport cell;
      cell.family = family;
      cell.m = m;
      cell.j = j;
      cell.k = k;
      auto A = deformation_A(m, j, k);
      cell.n = A.size();
      cell.charpoly = charpoly_to_json(A, m == 2 ? Int(2 * k + 3 * j + 1) : Int(0));
      auto b = betti_guarded(A, opt);
      if (!b) {
        rep.cells.push_back(cell);
        continue;  // resource guard: cell skipped
      }
      cell.betti = betti_to_json(*b);
      auto [fr, ex] = is_free(A);
      cell.free_arrangement = fr;
      if (ex) cell.exponents = ex->d;
      if (m == 2 && k >= 2) {
        auto scan = scan_unstable(A, opt.scan_bound, opt.random_lines, opt.seed);
        for (const auto& L : scan.lines) {
          std::vector<std::string> c;
          for (const auto& x : L.ell) c.push_back(x.get_str());
          cell.unstable.push_back(c);
        }
      }
      // conjecture part (i): Betti of the (j+1, k) cell shifted by eta
      {
        auto B = deformation_A(m, j + 1, k);
        if (matrix_entries_at_cutoff(B, B.size()) <= opt.matrix_budget) {
          auto bb = minimal_resolution(B);
          cell.shift_betti = (bb.beta == b->degree_shifted(eta).beta) ? Verdict::pass
                                                                      : Verdict::fail;
        }
      }
      // part (ii): dual shifted by -eta (k+2j+1)
      if (b->pdim <= 1) {
        auto bd = dual_module_betti(A, -eta * (k + 2 * j + 1),
                                    m == 3 ? std::min(A.size(), 11) : -1);
        cell.dual_betti = (bd.beta == b->beta) ? Verdict::pass : Verdict::fail;
      }
      // part (iii): pdim = min(m-1, k-1) for k >= 1
      if (k >= 1)
        cell.pdim = (b->pdim == std::min(m - 1, k - 1)) ? Verdict::pass : Verdict::fail;
      // part (iv): linear resolution for A_m, k >= 1
      if (k >= 1) cell.linear = is_linear_table(*b) ? Verdict::pass : Verdict::fail;
      // PS Riemann hypothesis on the deformation grid (k >= 1)
      if (k >= 1)
        cell.riemann_hypothesis = riemann_hypothesis_holds(A) ? Verdict::pass : Verdict::fail;
      for (Verdict v : {cell.shift_betti, cell.dual_betti, cell.pdim, cell.linear,
                        cell.riemann_hypothesis})
        if (v == Verdict::fail) rep.all_pass = false;
      rep.cells.push_back(cell);
    }
  return rep;
}

Json sweep_to_json(const SweepReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json jc;
    jc["family"] = std::string(1, c.family);
    jc["m"] = c.m;
    jc["j"] = c.j;
    jc["k"] = c.k;
    jc["n"] = c.n;
    jc["charpoly"] = c.charpoly;
    if (!c.betti.is_null()) jc["betti"] = c.betti;
    jc["free"] = c.free_arrangement;
    if (!c.exponents.empty()) jc["exponents"] = c.exponents;
    if (!c.unstable.empty()) jc["unstable"] = c.unstable;
    Json verdicts;
    verdicts["shift_betti"] = verdict_name(c.shift_betti);
    verdicts["dual_betti"] = verdict_name(c.dual_betti);
    verdicts["pdim"] = verdict_name(c.pdim);
    verdicts["linear"] = verdict_name(c.linear);
    verdicts["riemann_hypothesis"] = verdict_name(c.riemann_hypothesis);
    jc["verdicts"] = verdicts;
    cells.push_back(jc);
  }
  Json out;
  out["cells"] = cells;
  out["all_pass"] = r.all_pass;
  return out;
}

std::string sweep_to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "family,m,j,k,n,free,pdim_value,shift_betti,dual_betti,pdim,linear,riemann_hypothesis\n";
  for (const auto& c : r.cells) {
    int pd = c.betti.is_null() ? -1 : c.betti["pdim"].get<int>();
    os << c.family << "," << c.m << "," << c.j << "," << c.k << "," << c.n << ","
       << (c.free_arrangement ? 1 : 0) << "," << pd << "," << verdict_name(c.shift_betti) << ","
       << verdict_name(c.dual_betti) << "," << verdict_name(c.pdim) << ","
       << verdict_name(c.linear) << "," << verdict_name(c.riemann_hypothesis) << "\n";
  }
  return os.str();
}

Json report(const Arrangement& A, const ReportOptions& opt) {
  Json out;
  out["arrangement"] = arrangement_to_json(A);
  out["n"] = A.size();
  if (A.def_j) {
    out["j"] = *A.def_j;
    out["k"] = *A.def_k;
  }
  std::string cache_key = "report-betti:" + A.canonical_key();
  Json betti_json;
  if (!opt.cache_dir.empty()) {
    auto hit = cache_get(opt.cache_dir, cache_key);
    if (hit) betti_json = *hit;
  }
  BettiTable b;
  if (betti_json.is_null()) {
    b = minimal_resolution(A, opt.cutoff);
    betti_json = betti_to_json(b);
    if (!opt.cache_dir.empty()) cache_put(opt.cache_dir, cache_key, betti_json);
  } else {
    b = minimal_resolution(A, opt.cutoff);  // cache is advisory; recompute is exact
  }
  out["betti"] = betti_json;
  out["charpoly"] = charpoly_to_json(
      A, A.ambient_dim == 3 && A.def_k ? Int(2 * *A.def_k + 3 * *A.def_j + 1) : Int(0));
  auto [fr, ex] = is_free(A);
  out["free"] = fr;
  if (ex) out["exponents"] = ex->d;
  if (A.def_k && A.ambient_dim == 3) {
    int k = *A.def_k, j = *A.def_j;
    // k = 2 pattern: 3 generators, 1 linear syzygy = twisted tangent bundle
    bool tangent = b.pdim == 1 && b.beta_at(0, 5 + 3 * j) == 3 && b.beta_at(1, 6 + 3 * j) == 1;
    out["isomorphic_to_twisted_tangent"] = (k == 2) && tangent;
    Json samples = Json::array();
    for (const auto& dual : {line_infinity(), line_X(k + j), line_X(0)}) {
      Line L = Line::from_dual(dual);
      auto s = splitting_type(A, L);
      Json js;
      Json lc = Json::array();
      for (const auto& c : L.ell) lc.push_back(c.get_str());
      js["line"] = lc;
      js["a1"] = s.a1;
      js["a2"] = s.a2;
      samples.push_back(js);
    }
    out["splitting_samples"] = samples;
    if (opt.with_unstable && k >= 2) {
      auto scan = scan_unstable(A, opt.scan_bound, opt.random_lines, opt.seed);
      Json lines = Json::array();
      for (const auto& L : scan.lines) {
        Json lc = Json::array();
        for (const auto& c : L.ell) lc.push_back(c.get_str());
        lines.push_back(lc);
      }
      out["unstable"] = lines;
      if (k >= 3) {
        auto cat = unstable_catalog(k, j);
        std::set<std::vector<Int>> cs, fs;
        for (const auto& e : cat) cs.insert(e.line.ell);
        for (const auto& L : scan.lines) fs.insert(L.ell);
        out["matches_catalog"] = (cs == fs);
      }
    }
  }
  return out;
}

namespace {

uint64_t fnv64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::optional<Json> cache_get(const std::string& dir, const std::string& key) {
  if (dir.empty()) return std::nullopt;
  auto path = std::filesystem::path(dir) / (std::to_string(fnv64(key)) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  if (!j.contains("key") || j["key"] != key) return std::nullopt;
  return j["value"];
}

void cache_put(const std::string& dir, const std::string& key, const Json& value) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto path = std::filesystem::path(dir) / (std::to_string(fnv64(key)) + ".json");
  Json j;
  j["key"] = key;
  j["value"] = value;
  std::ofstream out(path);
  if (out) out << j.dump(1) << "\n";
}

}  // namespace logsheaf
