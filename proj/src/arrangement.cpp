#include "logsheaf/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "logsheaf/rootsys.hpp"

namespace logsheaf {

std::vector<Int> canonical_form(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("zero linear form");
  std::vector<Int> w(v.size());
  int s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i] / g;
    if (s == 0) s = sgn(w[i]);
  }
  if (s < 0)
    for (auto& x : w) x = -x;
  return w;
}

std::vector<Int> canonical_form_rat(const std::vector<Rat>& v) {
  auto w = primitive_integer_vector(v);
  bool all_zero = true;
  for (const auto& x : w)
    if (x != 0) all_zero = false;
  if (all_zero) throw std::invalid_argument("zero linear form");
  return w;
}

Arrangement Arrangement::from_forms(int ambient_dim, std::vector<std::vector<Int>> forms,
                                    std::vector<std::string> labels) {
  Arrangement A;
  A.ambient_dim = ambient_dim;
  for (auto& f : forms) {
    if ((int)f.size() != ambient_dim) throw std::invalid_argument("form has wrong length");
    A.forms.push_back(canonical_form(f));
  }
  for (size_t i = 0; i < A.forms.size(); ++i)
    for (size_t j = i + 1; j < A.forms.size(); ++j)
      if (A.forms[i] == A.forms[j])
        throw std::invalid_argument("hyperplanes must be pairwise distinct");
  if (labels.empty()) {
    for (size_t i = 0; i < A.forms.size(); ++i) labels.push_back("H" + std::to_string(i));
  }
  A.labels = std::move(labels);
  return A;
}

HPoly Arrangement::defining_form() const {
  HPoly f = HPoly::monomial(ambient_dim, Mono{}, 1);
  for (const auto& v : forms) {
    std::vector<Rat> c(v.begin(), v.end());
    f = f * HPoly::linear(ambient_dim, c);
  }
  return f;
}

int Arrangement::index_of(const std::vector<Int>& form) const {
  auto c = canonical_form(form);
  for (size_t i = 0; i < forms.size(); ++i)
    if (forms[i] == c) return (int)i;
  return -1;
}

std::string Arrangement::canonical_key() const {
  std::vector<std::string> fs;
  for (const auto& f : forms) {
    std::string s;
    for (const auto& x : f) s += x.get_str() + ",";
    fs.push_back(s);
  }
  std::sort(fs.begin(), fs.end());
  std::ostringstream os;
  os << "dim" << ambient_dim << ";";
  for (const auto& s : fs) os << s << ";";
  return os.str();
}

namespace {

// Intersection point of two projective lines (P^2), canonical.
std::vector<Int> cross_point(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> p = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
  return canonical_form(p);
}

// Rank of a small integer matrix, fraction-free.
int int_rank(std::vector<std::vector<Int>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Int a = m[rank][c], b = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * a - m[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

// Map from intersection point to the indices of all hyperplanes through it.
std::map<std::vector<Int>, std::vector<int>> point_incidences(const Arrangement& A) {
  std::map<std::vector<Int>, std::vector<int>> pts;
  int n = A.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto p = cross_point(A.forms[i], A.forms[j]);
      pts[p];  // ensure present
    }
  for (auto& [p, idx] : pts) {
    for (int i = 0; i < n; ++i) {
      Int dot = 0;
      for (int c = 0; c < 3; ++c) dot += A.forms[i][c] * p[c];
      if (dot == 0) idx.push_back(i);
    }
  }
  return pts;
}

}  // namespace

RestrictionProfile restriction_profile(const Arrangement& A, int H) {
  if (A.ambient_dim != 3) throw std::invalid_argument("restriction_profile: P^2 only");
  if (H < 0 || H >= A.size()) throw std::out_of_range("hyperplane index out of range");
  std::map<std::vector<Int>, int> mult;  // point on H -> #lines through it (incl. H)
  for (int k = 0; k < A.size(); ++k) {
    if (k == H) continue;
    auto p = cross_point(A.forms[H], A.forms[k]);
    mult[p]++;
  }
  RestrictionProfile out;
  out.h = (int)mult.size();
  for (auto& [p, c] : mult) out.counts[c + 1]++;
  for (auto& [i, c] : out.counts)
    if (i >= 3) out.t += (i - 2) * c;
  // Lemma t_{A,H} = n - 1 - h, by construction.
  if (out.t != A.size() - 1 - out.h)
    throw std::logic_error("restriction profile violates t = n-1-h");
  return out;
}

std::vector<Int> CharPoly::reduced() const {
  // synthetic division by (t - 1)
  std::vector<Int> q(coeffs.size() - 1);
  Int carry = 0;
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
    carry = coeffs[i] + carry;
    q[i] = carry;
  }
  if (coeffs.back() + carry != 0) throw std::logic_error("char poly not divisible by t-1");
  return q;
}

Int CharPoly::eval(const Int& t) const {
  Int v = 0;
  for (const auto& c : coeffs) v = v * t + c;
  return v;
}

CharPoly char_poly(const Arrangement& A) {
  int n = A.size();
  CharPoly chi;
  if (n == 0) {
    chi.coeffs.assign(A.ambient_dim + 1, Int(0));
    chi.coeffs[0] = 1;
    return chi;
  }
  if (A.ambient_dim == 2) {
    // n points on a projective line
    chi.coeffs = {Int(1), Int(-n), Int(n - 1)};
    return chi;
  }
  if (A.ambient_dim == 3) {
    Int t_coeff = 0;
    auto pts = point_incidences(A);
    for (auto& [p, idx] : pts) t_coeff += (Int)((int)idx.size() - 1);
    Int mu_top = -(1 - n + t_coeff);
    chi.coeffs = {Int(1), Int(-n), t_coeff, mu_top};
    return chi;
  }
  if (A.ambient_dim != 4) throw std::invalid_argument("char_poly: ambient dimension 3 or 4");
  // P^3: rank-2 flats (lines) and rank-3 flats (points)
  int nn = n;
  std::set<std::vector<int>> line_flats;  // each = sorted indices of hyperplanes through the line
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      std::vector<int> through;
      for (int h = 0; h < nn; ++h) {
        if (int_rank({A.forms[i], A.forms[j], A.forms[h]}) == 2) through.push_back(h);
      }
      line_flats.insert(through);
    }
  std::map<std::vector<Int>, std::vector<int>> points;  // canonical point -> hyperplanes
  for (const auto& [p, mult] : point_flats_p3(A)) {
    std::vector<int> through;
    for (int h = 0; h < nn; ++h) {
      Int dot = 0;
      for (int c = 0; c < 4; ++c) dot += A.forms[h][c] * p[c];
      if (dot == 0) through.push_back(h);
    }
    points[p] = through;
  }
  Int sum_lines = 0;
  for (const auto& f : line_flats) sum_lines += (Int)((int)f.size() - 1);
  Int sum_points = 0;
  for (const auto& [p, hp] : points) {
    Int mu = 1 - (Int)(int)hp.size();
    for (const auto& f : line_flats) {
      if (std::includes(hp.begin(), hp.end(), f.begin(), f.end()))
        mu += (Int)((int)f.size() - 1);
    }
    sum_points += -mu;
  }
  Int mu_top = -(1 - nn + sum_lines + sum_points);
  CharPoly chi4;
  chi4.coeffs = {Int(1), Int(-nn), sum_lines, sum_points, mu_top};
  return chi4;
}

std::pair<Int, Int> chern_classes(const Arrangement& A, const Int& twist) {
  if (A.ambient_dim != 3) throw std::invalid_argument("chern_classes: P^2 only");
  auto red = char_poly(A).reduced();  // t^2 - b1 t + b2
  Int b1 = -red[1], b2 = red[2];
  return {-b1 + 2 * twist, b2 - b1 * twist + twist * twist};
}

std::array<Int, 3> chern_classes_p3(const Arrangement& A) {
  if (A.ambient_dim != 4) throw std::invalid_argument("chern_classes_p3: P^3 only");
  auto red = char_poly(A).reduced();  // t^3 - B1 t^2 + B2 t - B3
  return {red[1], red[2], -red[3]};
}

Arrangement deletion(const Arrangement& A, int H) {
  Arrangement B;
  B.ambient_dim = A.ambient_dim;
  for (int i = 0; i < A.size(); ++i) {
    if (i == H) continue;
    B.forms.push_back(A.forms[i]);
    B.labels.push_back(A.labels[i]);
  }
  return B;
}

namespace {

Int height(const std::vector<Int>& v) {
  Int h = 0;
  for (const auto& x : v) h = std::max(h, Int(abs(x)));
  return h;
}

}  // namespace

// Deterministic small integer points spanning the hyperplane `form`.
static std::vector<std::vector<Int>> span_points(const std::vector<Int>& form) {
  int d = (int)form.size();
  std::vector<std::vector<Int>> cands;
  for (int i = 0; i < d; ++i) {
    if (form[i] == 0) {
      std::vector<Int> e(d, Int(0));
      e[i] = 1;
      cands.push_back(e);
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (form[i] == 0 && form[j] == 0) continue;
      std::vector<Int> v(d, Int(0));
      v[i] = form[j];
      v[j] = -form[i];
      cands.push_back(canonical_form(v));
    }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<std::vector<Int>> pts;
  for (const auto& c : cands) {
    auto test = pts;
    test.push_back(c);
    if (int_rank(test) == (int)pts.size() + 1) pts.push_back(c);
    if ((int)pts.size() == d - 1) break;
  }
  if ((int)pts.size() != d - 1) throw std::logic_error("failed to parameterize hyperplane");
  return pts;
}

std::vector<std::vector<Int>> hyperplane_parameterization(const std::vector<Int>& form) {
  return span_points(form);
}

Arrangement restriction_arrangement(const Arrangement& A, int H) {
  auto pts = span_points(A.forms[H]);
  std::set<std::vector<Int>> seen;
  Arrangement B;
  B.ambient_dim = A.ambient_dim - 1;
  for (int k = 0; k < A.size(); ++k) {
    if (k == H) continue;
    std::vector<Int> restricted(pts.size());
    bool zero = true;
    for (size_t i = 0; i < pts.size(); ++i) {
      Int dot = 0;
      for (int c = 0; c < A.ambient_dim; ++c) dot += A.forms[k][c] * pts[i][c];
      restricted[i] = dot;
      if (dot != 0) zero = false;
    }
    if (zero) throw std::logic_error("hyperplane coincides with restriction target");
    auto canon = canonical_form(restricted);
    if (seen.insert(canon).second) {
      B.forms.push_back(canon);
      B.labels.push_back(A.labels[k]);
    }
  }
  return B;
}

std::vector<std::pair<std::vector<Int>, int>> point_flats_p3(const Arrangement& A) {
  if (A.ambient_dim != 4) throw std::invalid_argument("point_flats_p3: P^3 only");
  int nn = A.size();
  std::map<std::vector<Int>, int> points;
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      for (int k = j + 1; k < nn; ++k) {
        std::vector<std::vector<Int>> m = {A.forms[i], A.forms[j], A.forms[k]};
        if (int_rank(m) != 3) continue;
        // 1-dimensional kernel of the 3x4 system, by 3x3 minors with signs
        std::vector<Int> p(4);
        for (int c = 0; c < 4; ++c) {
          std::vector<std::vector<Int>> sub(3, std::vector<Int>(3));
          for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
              if (col == c) continue;
              sub[r][cc++] = m[r][col];
            }
          }
          Int det = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                    sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                    sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
          p[c] = (c % 2 == 0) ? det : -det;
        }
        auto cp = canonical_form(p);
        if (points.count(cp)) continue;
        int mult = 0;
        for (int h = 0; h < nn; ++h) {
          Int dot = 0;
          for (int c = 0; c < 4; ++c) dot += A.forms[h][c] * cp[c];
          if (dot == 0) ++mult;
        }
        points[cp] = mult;
      }
  return {points.begin(), points.end()};
}

std::vector<std::vector<Int>> multiple_points(const Arrangement& A, int min_mult) {
  if (A.ambient_dim != 3) throw std::invalid_argument("multiple_points: P^2 only");
  std::vector<std::vector<Int>> out;
  for (auto& [p, idx] : point_incidences(A))
    if ((int)idx.size() >= min_mult) out.push_back(p);
  return out;
}

std::vector<Int> line_X(int i) { return canonical_form({Int(-i), Int(1), Int(0)}); }
std::vector<Int> line_Y(int i) { return canonical_form({Int(-i), Int(0), Int(1)}); }
std::vector<Int> line_infinity() { return {Int(1), Int(0), Int(0)}; }

std::vector<Int> diagonal_line(const DeformationParams& p, int i) {
  return canonical_form({Int(-(p.k - i + 1)), Int(1), Int(1)});
}

std::vector<Arrangement> build_inner_chain(const DeformationParams& p) {
  std::vector<std::vector<Int>> forms;
  std::vector<std::string> labels;
  forms.push_back(line_infinity());
  labels.push_back("infinity");
  for (int i = -p.j; i <= p.k + p.j; ++i) {
    forms.push_back(line_X(i));
    labels.push_back("x=" + std::to_string(i) + "z");
    forms.push_back(line_Y(i));
    labels.push_back("y=" + std::to_string(i) + "z");
  }
  std::vector<Arrangement> chain;
  chain.push_back(Arrangement::from_forms(3, forms, labels));
  for (int i = 1; i <= p.k + p.j + 1; ++i) {
    forms.push_back(diagonal_line(p, i));
    labels.push_back("H" + std::to_string(i));
    chain.push_back(Arrangement::from_forms(3, forms, labels));
  }
  return chain;
}

std::vector<Arrangement> build_outer_chain(const DeformationParams& p, bool extended) {
  if (extended && p.k + p.j < 3)
    throw std::invalid_argument("extended outer chain requires k+j >= 3");
  auto inner = build_inner_chain(p);
  const Arrangement& top = inner.back();
  std::vector<std::vector<Int>> forms = top.forms;
  std::vector<std::string> labels = top.labels;
  int last = extended ? p.k + p.j - 2 : p.j;
  std::vector<Arrangement> chain;
  for (int i = 1; i <= last; ++i) {
    forms.push_back(diagonal_line(p, 1 - i));
    labels.push_back("H" + std::to_string(1 - i));
    Arrangement B = Arrangement::from_forms(3, forms, labels);
    if (i == p.j) {
      B.def_j = p.j;
      B.def_k = p.k;
    }
    chain.push_back(B);
  }
  return chain;
}

}  // namespace logsheaf
