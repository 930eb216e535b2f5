#include "logsheaf/hpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace logsheaf {

std::vector<Mono> mono_list(int nv, int d) {
  std::vector<Mono> out;
  if (d < 0) return out;
  Mono m;
  if (nv == 2) {
    for (int es = d; es >= 0; --es) {
      m.e = {(int16_t)es, (int16_t)(d - es), 0, 0};
      out.push_back(m);
    }
  } else if (nv == 3) {
    for (int ez = d; ez >= 0; --ez)
      for (int ex = d - ez; ex >= 0; --ex) {
        m.e = {(int16_t)ez, (int16_t)ex, (int16_t)(d - ez - ex), 0};
        out.push_back(m);
      }
  } else {
    for (int ez = d; ez >= 0; --ez)
      for (int ex = d - ez; ex >= 0; --ex)
        for (int ey = d - ez - ex; ey >= 0; --ey) {
          m.e = {(int16_t)ez, (int16_t)ex, (int16_t)ey, (int16_t)(d - ez - ex - ey)};
          out.push_back(m);
        }
  }
  return out;
}

long mono_index(int nv, const Mono& m) {
  int d = m.deg();
  if (nv == 2) return m.e[1];
  if (nv == 3) {
    long s = d - m.e[0];
    return s * (s + 1) / 2 + m.e[2];
  }
  long s = d - m.e[0];
  long base = s * (s + 1) * (s + 2) / 6;           // monomials with larger z-exponent
  long sx = s - m.e[1];                            // degree left after x
  return base + sx * (sx + 1) / 2 + m.e[3];
}

const char* var_name(int nv, int i) {
  static const char* bin[] = {"s", "t"};
  static const char* proj[] = {"z", "x", "y", "w"};
  return nv == 2 ? bin[i] : proj[i];
}

HPoly HPoly::monomial(int nv, const Mono& m, const Rat& c) {
  HPoly p(nv, m.deg());
  if (!is_zero(c)) p.terms_[m] = c;
  return p;
}

HPoly HPoly::linear(int nv, const std::vector<Rat>& coeffs) {
  HPoly p(nv, 1);
  for (int i = 0; i < nv; ++i) {
    if (is_zero(coeffs[i])) continue;
    Mono m;
    m.e[i] = 1;
    p.terms_[m] = coeffs[i];
  }
  return p;
}

HPoly HPoly::linear(int nv, const std::vector<Int>& coeffs) {
  std::vector<Rat> c(coeffs.begin(), coeffs.end());
  return linear(nv, c);
}

Rat HPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void HPoly::set_coeff(const Mono& m, const Rat& c) {
  if (is_zero(c)) terms_.erase(m);
  else terms_[m] = c;
}

HPoly HPoly::operator+(const HPoly& o) const {
  HPoly r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end()) r.terms_[m] = c;
    else {
      it->second += c;
      if (is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

HPoly HPoly::operator-(const HPoly& o) const { return *this + o * Rat(-1); }

HPoly HPoly::operator*(const HPoly& o) const {
  HPoly r(nv_, deg_ + o.deg_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m;
      for (int i = 0; i < 4; ++i) m.e[i] = (int16_t)(m1.e[i] + m2.e[i]);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) r.terms_[m] = c1 * c2;
      else {
        it->second += c1 * c2;
        if (is_zero(it->second)) r.terms_.erase(it);
      }
    }
  return r;
}

HPoly HPoly::operator*(const Rat& c) const {
  HPoly r(nv_, deg_);
  if (is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

bool HPoly::operator==(const HPoly& o) const { return terms_ == o.terms_; }

HPoly HPoly::derivative(int var) const {
  HPoly r(nv_, deg_ > 0 ? deg_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Mono d = m;
    d.e[var]--;
    r.terms_[d] = c * m.e[var];
  }
  return r;
}

HPoly HPoly::substitute(const std::vector<HPoly>& images) const {
  int nv2 = images.at(0).nvars();
  HPoly r(nv2, deg_);
  // Cache powers of each image.
  std::vector<std::vector<HPoly>> pow(nv_);
  for (int i = 0; i < nv_; ++i) {
    pow[i].push_back(HPoly::monomial(nv2, Mono{}, 1));  // degree-0 unit
    pow[i].push_back(images[i]);
  }
  for (const auto& [m, c] : terms_) {
    HPoly t = HPoly::monomial(nv2, Mono{}, c);
    for (int i = 0; i < nv_; ++i) {
      while ((int)pow[i].size() <= m.e[i]) pow[i].push_back(pow[i].back() * images[i]);
      if (m.e[i] > 0) t = t * pow[i][m.e[i]];
    }
    r = r + t;
  }
  r.deg_ = deg_;  // images are linear, degree preserved
  if (!r.terms_.empty()) r.deg_ = r.terms_.begin()->first.deg();
  return r;
}

std::pair<Mono, Rat> HPoly::lead() const {
  if (terms_.empty()) throw std::logic_error("lead of zero polynomial");
  return *terms_.begin();
}

HPoly HPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  std::vector<Rat> v;
  v.reserve(terms_.size());
  for (const auto& [m, c] : terms_) v.push_back(c);
  auto w = primitive_integer_vector(v);
  HPoly r(nv_, deg_);
  size_t i = 0;
  for (const auto& [m, c] : terms_) r.terms_[m] = Rat(w[i++]);
  return r;
}

std::vector<Rat> HPoly::coeff_vector() const {
  std::vector<Rat> v(dim_forms(nv_, deg_), Rat(0));
  for (const auto& [m, c] : terms_) v[mono_index(nv_, m)] = c;
  return v;
}

std::string HPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nv_; ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(nv_, i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    Rat a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    if (mono.empty()) os << rat_to_string(a);
    else if (a == 1) os << mono;
    else os << rat_to_string(a) << "*" << mono;
  }
  return os.str();
}

namespace {

// Binary form -> univariate coefficients c[i] of s^i t^(deg-i).
std::vector<Rat> binary_coeffs(const HPoly& f) {
  std::vector<Rat> c(f.degree() + 1, Rat(0));
  for (const auto& [m, v] : f.terms()) c[m.e[0]] = v;
  return c;
}

HPoly binary_from_coeffs(const std::vector<Rat>& c, int deg) {
  HPoly f(2, deg);
  for (int i = 0; i <= deg && i < (int)c.size(); ++i) {
    if (is_zero(c[i])) continue;
    Mono m;
    m.e = {(int16_t)i, (int16_t)(deg - i), 0, 0};
    f.set_coeff(m, c[i]);
  }
  return f;
}

int poly_deg(const std::vector<Rat>& c) {
  for (int i = (int)c.size() - 1; i >= 0; --i)
    if (!is_zero(c[i])) return i;
  return -1;
}

// Univariate remainder of a by b (b nonzero).
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  int db = poly_deg(b);
  for (int da = poly_deg(a); da >= db && da >= 0; da = poly_deg(a)) {
    Rat q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a[da] = 0;
  }
  return a;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  while (poly_deg(b) >= 0) {
    auto r = poly_rem(a, b);
    a = b;
    b = r;
  }
  int d = poly_deg(a);
  if (d >= 0) {
    Rat inv = 1 / a[d];
    for (auto& c : a) c *= inv;
  }
  return a;
}

struct BinarySplit {
  int s_pow = 0, t_pow = 0;
  std::vector<Rat> u;  // dehomogenized, nonzero constant term
};

BinarySplit split_binary(const HPoly& f) {
  BinarySplit out;
  int smin = f.degree(), tmin = f.degree();
  for (const auto& [m, c] : f.terms()) {
    smin = std::min(smin, (int)m.e[0]);
    tmin = std::min(tmin, (int)m.e[1]);
  }
  out.s_pow = smin;
  out.t_pow = tmin;
  int d = f.degree() - smin - tmin;
  out.u.assign(d + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) out.u[m.e[0] - smin] = c;
  return out;
}

}  // namespace

HPoly divexact_binary(const HPoly& f, const HPoly& g) {
  if (g.zero()) throw std::invalid_argument("division by zero form");
  if (f.zero()) return HPoly(2, 0);
  auto F = split_binary(f), G = split_binary(g);
  if (F.s_pow < G.s_pow || F.t_pow < G.t_pow)
    throw std::runtime_error("divexact_binary: not divisible");
  // univariate long division, must be exact
  std::vector<Rat> a = F.u;
  const std::vector<Rat>& b = G.u;
  int da = poly_deg(a), db = poly_deg(b);
  if (da < db) throw std::runtime_error("divexact_binary: not divisible");
  std::vector<Rat> q(da - db + 1, Rat(0));
  for (int d = da; d >= db; d = poly_deg(a)) {
    if (d < db) break;
    Rat c = a[d] / b[db];
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
  }
  if (poly_deg(a) >= 0) throw std::runtime_error("divexact_binary: not divisible");
  int qdeg = (f.degree() - G.s_pow - G.t_pow) - g.degree() + G.s_pow + G.t_pow;
  // quotient = s^(Fs-Gs) t^(Ft-Gt) * q(u) homogenized
  int hs = F.s_pow - G.s_pow, ht = F.t_pow - G.t_pow;
  int ud = (int)q.size() - 1;
  HPoly qh = binary_from_coeffs(q, ud);
  Mono shift;
  shift.e = {(int16_t)hs, (int16_t)ht, 0, 0};
  HPoly res = qh * HPoly::monomial(2, shift, 1);
  (void)qdeg;
  return res;
}

HPoly binary_gcd(const std::vector<HPoly>& fs) {
  bool any = false;
  int s_pow = 0, t_pow = 0;
  std::vector<Rat> g;  // univariate gcd so far
  for (const auto& f : fs) {
    if (f.zero()) continue;
    auto sp = split_binary(f);
    if (!any) {
      any = true;
      s_pow = sp.s_pow;
      t_pow = sp.t_pow;
      g = sp.u;
      int d = poly_deg(g);
      Rat inv = 1 / g[d];
      for (auto& c : g) c *= inv;
    } else {
      s_pow = std::min(s_pow, sp.s_pow);
      t_pow = std::min(t_pow, sp.t_pow);
      g = poly_gcd(g, sp.u);
    }
  }
  if (!any) throw std::invalid_argument("zero gcd undefined");
  int ud = poly_deg(g);
  std::vector<Rat> gg(g.begin(), g.begin() + ud + 1);
  HPoly base = binary_from_coeffs(gg, ud);
  Mono shift;
  shift.e = {(int16_t)s_pow, (int16_t)t_pow, 0, 0};
  HPoly res = base * HPoly::monomial(2, shift, 1);
  // monic under the graded-lex leading-term convention
  auto [lm, lc] = res.lead();
  return res * (1 / lc);
}

HPoly hpoly_det(const std::vector<std::vector<HPoly>>& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det of empty matrix");
  if (n == 1) return m[0][0];
  int nv = 0;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.zero()) nv = e.nvars();
  // Laplace expansion along the first row with column masks.
  std::vector<int> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = (int)i;
  std::function<HPoly(size_t, std::vector<int>&)> rec = [&](size_t row,
                                                            std::vector<int>& cs) -> HPoly {
    if (cs.size() == 1) return m[row][cs[0]];
    HPoly acc(nv, 0);
    bool first_term = true;
    for (size_t i = 0; i < cs.size(); ++i) {
      const HPoly& e = m[row][cs[i]];
      if (e.zero()) continue;
      std::vector<int> rest;
      rest.reserve(cs.size() - 1);
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != i) rest.push_back(cs[j]);
      HPoly sub = rec(row + 1, rest);
      HPoly term = e * sub;
      if (i % 2 == 1) term = -term;
      if (first_term) {
        acc = term;
        first_term = false;
      } else {
        acc = acc + term;
      }
    }
    return acc;
  };
  return rec(0, cols);
}

}  // namespace logsheaf
