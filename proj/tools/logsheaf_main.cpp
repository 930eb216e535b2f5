// Command-line front end: one verb per concept.
//   logsheaf build|charpoly|betti|splitting|unstable|jumping|steiner-moves|a3|sweep|report
// Exit codes: 0 = all requested checks pass, 1 = a check failed,
//             2 = usage or resource error.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <random>
#include <iostream>

#include "logsheaf/a2geo.hpp"
#include "logsheaf/report.hpp"
#include "logsheaf/rootsys.hpp"
#include "logsheaf/space3.hpp"
#include "logsheaf/split.hpp"
#include "logsheaf/steiner.hpp"

using namespace logsheaf;

namespace {

struct CommonArgs {
  std::string type = "A";
  int m = 2;
  int j = 0;
  int k = 2;
  int cutoff = -1;
  int scan_bound = 2;
  int random_count = 50;
  uint64_t seed = 20240101;
  std::string line;
  std::string out;
  std::string cache_dir;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--type", a.type, "root system family (A)");
  cmd->add_option("--m", a.m, "rank (2 or 3)");
  cmd->add_option("--j", a.j, "negative shift count j >= 0");
  cmd->add_option("--k", a.k, "deformation parameter k >= 0");
  cmd->add_option("--cutoff", a.cutoff, "resolution degree cutoff (default |A|)");
  cmd->add_option("--scan-bound", a.scan_bound, "extra shift range for scans");
  cmd->add_option("--random", a.random_count, "random candidates in scans");
  cmd->add_option("--seed", a.seed, "RNG seed for scans");
  cmd->add_option("--line", a.line, "line dual coordinates \"lz,lx,ly\"");
  cmd->add_option("--out", a.out, "write JSON/CSV to this file");
  cmd->add_option("--cache-dir", a.cache_dir, "advisory result cache directory");
  cmd->add_option("--threads", a.threads, "worker threads (default: hardware)");
}

Arrangement build_from(const CommonArgs& a) {
  if (a.type != "A") throw CLI::ValidationError("--type", "only family A is supported");
  if (a.m < 1 || a.m > 3) throw CLI::ValidationError("--m", "rank must be 1..3");
  return deformation_A(a.m, a.j, a.k);
}

Line parse_line(const std::string& s) {
  std::vector<Int> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw CLI::ValidationError("--line", "expected lz,lx,ly");
      v.push_back(Int(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (v.size() != 3) throw CLI::ValidationError("--line", "expected three coordinates");
  return Line::from_dual(v);
}

void emit(const CommonArgs& a, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    f << text;
  }
}

void set_threads(const CommonArgs& a) {
  if (a.threads > 0) setenv("LOGSHEAF_THREADS", std::to_string(a.threads).c_str(), 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for deformed Weyl arrangements and their log sheaves"};
  app.require_subcommand(1);

  CommonArgs a;
  int exit_code = 0;

  auto* build = app.add_subcommand("build", "emit the arrangement as JSON");
  add_common(build, a);
  build->callback([&] { emit(a, arrangement_to_json(build_from(a))); });

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial and Chern data");
  add_common(charpoly, a);
  int twist = 0;
  charpoly->add_option("--twist", twist, "twist for (c1, c2) (default 0)");
  charpoly->callback([&] { emit(a, charpoly_to_json(build_from(a), Int(twist))); });

  auto* betti = app.add_subcommand("betti", "minimal graded Betti numbers of D_0");
  add_common(betti, a);
  betti->callback([&] {
    set_threads(a);
    emit(a, betti_to_json(minimal_resolution(build_from(a), a.cutoff)));
  });

  auto* splitting = app.add_subcommand("splitting", "splitting type on a line");
  add_common(splitting, a);
  splitting->callback([&] {
    set_threads(a);
    auto A = build_from(a);
    Line L = parse_line(a.line);
    auto s = splitting_type(A, L);
    Json out;
    out["a1"] = s.a1;
    out["a2"] = s.a2;
    out["order"] = jumping_order(A, L);
    out["unstable"] = is_unstable(A, L);
    emit(a, out);
  });

  auto* unstable = app.add_subcommand("unstable", "scan for unstable lines");
  add_common(unstable, a);
  unstable->callback([&] {
    set_threads(a);
    auto A = build_from(a);
    auto res = scan_unstable(A, a.scan_bound, a.random_count, a.seed);
    Json out;
    Json lines = Json::array();
    for (const auto& L : res.lines) {
      Json lc = Json::array();
      for (const auto& c : L.ell) lc.push_back(c.get_str());
      lines.push_back(lc);
    }
    out["lines"] = lines;
    if (a.k == 3) {
      bool all_tangent = true;
      for (const auto& L : res.lines) all_tangent = all_tangent && conic_tangency(a.j, L);
      out["all_tangent_to_Cj"] = all_tangent;
      if (!all_tangent) exit_code = 1;
    }
    if (a.k >= 3) {
      std::set<std::vector<Int>> cs, fs;
      for (const auto& e : unstable_catalog(a.k, a.j)) cs.insert(e.line.ell);
      for (const auto& L : res.lines) fs.insert(L.ell);
      bool match = a.k == 3 ? std::includes(fs.begin(), fs.end(), cs.begin(), cs.end())
                            : cs == fs;
      out["matches_catalog"] = match;
      if (!match) exit_code = 1;
    }
    emit(a, out);
  });

  auto* jumping = app.add_subcommand("jumping", "jumping-line catalog with verified orders");
  add_common(jumping, a);
  jumping->callback([&] {
    set_threads(a);
    auto A = build_from(a);
    Json rows = Json::array();
    bool ok = true;
    for (const auto& e : jump_catalog(a.k, a.j)) {
      auto s = splitting_type(A, e.line);
      Json r;
      Json lc = Json::array();
      for (const auto& c : e.line.ell) lc.push_back(c.get_str());
      r["line"] = lc;
      r["in_arrangement"] = e.in_arrangement;
      r["predicted"] = {e.predicted.a1, e.predicted.a2};
      r["computed"] = {s.a1, s.a2};
      r["order"] = jumping_order(A, e.line);
      ok = ok && s == e.predicted && jumping_order(A, e.line) == e.predicted_order;
      rows.push_back(r);
    }
    Json out;
    out["catalog"] = rows;
    out["verified"] = ok;
    if (a.k == 6 && a.j == 0) out["cubic"] = jumping_cubic_k6().str();
    if (!ok) exit_code = 1;
    emit(a, out);
  });

  auto* moves = app.add_subcommand("steiner-moves", "extension/reduction round trip");
  add_common(moves, a);
  moves->callback([&] {
    set_threads(a);
    auto A = build_from(a);
    auto M = steiner_extract(A);
    Line H = a.line.empty() ? Line::from_dual(line_X(*A.def_k + *A.def_j + a.scan_bound + 1))
                            : parse_line(a.line);
    auto B = extension_move(M, H);
    auto R = reduction_move(B, H);
    Json out;
    out["matrix"] = matrix_strings(M);
    out["extended"] = matrix_strings(B);
    out["reduced"] = matrix_strings(R);
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    bool ok = R.rows() == M.rows() && R.cols() == M.cols();
    for (int t = 0; t < 20 && ok; ++t) {
      std::vector<Int> d = {Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
      if (d[0] == 0 && d[1] == 0 && d[2] == 0) continue;
      Line L = Line::from_dual(d);
      ok = pencil_splitting(R, L) == pencil_splitting(M, L);
    }
    out["roundtrip_ok"] = ok;
    if (!ok) exit_code = 1;
    emit(a, out);
  });

  auto* a3 = app.add_subcommand("a3", "P^3 experiments");
  add_common(a3, a);
  auto* planes = a3->add_subcommand("unstable-planes", "unstable planes of E and its dual");
  planes->callback([&] {
    set_threads(a);
    a.m = 3;
    auto A = build_from(a);
    int cutoff = a.cutoff > 0 ? a.cutoff : 11;
    auto res = scan_unstable_planes(A, true, a.scan_bound >= 3 ? a.scan_bound : 3, a.seed,
                                    a.random_count, cutoff);
    auto b = minimal_resolution(A, cutoff);
    int eta = coxeter_number('A', 3);
    auto bd = dual_module_betti(A, -eta * (a.k + 2 * a.j + 1), cutoff);
    Json out;
    auto dump_set = [](const std::set<std::vector<Int>>& s) {
      Json arr = Json::array();
      for (const auto& d : s) {
        Json row = Json::array();
        for (const auto& c : d) row.push_back(c.get_str());
        arr.push_back(row);
      }
      return arr;
    };
    out["E"] = dump_set(res.unstable_E);
    out["Edual"] = dump_set(res.unstable_dual);
    out["common"] = res.common;
    out["betti_equal"] = (b.beta == bd.beta);
    emit(a, out);
  });
  a3->require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "conjecture sweep over a (j, k) grid");
  add_common(sweep, a);
  std::vector<int> jr = {0, 2}, kr = {1, 5};
  bool csv = false;
  sweep->add_option("--j-range", jr, "j range (two values)")->expected(2);
  sweep->add_option("--k-range", kr, "k range (two values)")->expected(2);
  sweep->add_flag("--csv", csv, "emit CSV instead of JSON");
  sweep->callback([&] {
    set_threads(a);
    SweepOptions opt;
    opt.scan_bound = a.scan_bound;
    opt.random_lines = a.random_count;
    opt.seed = a.seed;
    opt.cache_dir = a.cache_dir;
    auto rep = conjecture_sweep('A', a.m, {jr[0], jr[1]}, {kr[0], kr[1]}, opt);
    if (csv) {
      std::string text = sweep_to_csv(rep);
      if (a.out.empty()) std::cout << text;
      else std::ofstream(a.out) << text;
    } else {
      emit(a, sweep_to_json(rep));
    }
    if (!rep.all_pass) exit_code = 1;
  });

  auto* rep = app.add_subcommand("report", "bundled exact report for one arrangement");
  add_common(rep, a);
  bool with_unstable = false;
  rep->add_flag("--with-unstable", with_unstable, "include the unstable-line scan");
  rep->callback([&] {
    set_threads(a);
    ReportOptions opt;
    opt.with_unstable = with_unstable;
    opt.scan_bound = a.scan_bound;
    opt.random_lines = a.random_count;
    opt.seed = a.seed;
    opt.cutoff = a.cutoff;
    opt.cache_dir = a.cache_dir;
    emit(a, report(build_from(a), opt));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return exit_code;
}
