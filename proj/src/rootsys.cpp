#include "logsheaf/rootsys.hpp"

#include <stdexcept>

namespace logsheaf {

std::vector<std::vector<Int>> positive_roots(char family, int m) {
  if (family != 'A') throw std::invalid_argument("only family A is constructed");
  if (m < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<std::vector<Int>> roots;
  // x_a + ... + x_b, ordered by length then starting index
  for (int len = 1; len <= m; ++len)
    for (int a = 1; a + len - 1 <= m; ++a) {
      std::vector<Int> r(m, Int(0));
      for (int i = a; i <= a + len - 1; ++i) r[i - 1] = 1;
      roots.push_back(std::move(r));
    }
  return roots;
}

int coxeter_number(char family, int m) {
  if (family != 'A') throw std::invalid_argument("only family A supported");
  if (m < 1) throw std::invalid_argument("rank must be >= 1");
  return m + 1;
}

RootSystem make_root_system(char family, int m) {
  RootSystem phi;
  phi.family = family;
  phi.m = m;
  phi.positive_roots = positive_roots(family, m);
  phi.coxeter = coxeter_number(family, m);
  return phi;
}

namespace {

std::string root_label(const std::vector<Int>& alpha, int m) {
  static const char* names[] = {"x", "y", "w"};
  std::string s;
  for (int i = 0; i < m; ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += names[i];
  }
  return s;
}

}  // namespace

Arrangement build_deformation(const RootSystem& phi, const DeformationParams& p) {
  if (phi.m + 1 > 4) throw std::invalid_argument("ambient dimension above 4 not supported");
  std::vector<std::vector<Int>> forms;
  std::vector<std::string> labels;
  // infinity first, then per root, shifts ascending
  std::vector<Int> inf(phi.m + 1, Int(0));
  inf[0] = 1;
  forms.push_back(inf);
  labels.push_back("infinity");
  for (const auto& alpha : phi.positive_roots) {
    for (int s = -p.j; s <= p.k + p.j; ++s) {
      std::vector<Int> f(phi.m + 1, Int(0));
      f[0] = -s;
      for (int i = 0; i < phi.m; ++i) f[i + 1] = alpha[i];
      forms.push_back(std::move(f));
      std::string lab = root_label(alpha, phi.m) + "=";
      if (s == 0) lab += "0";
      else lab += std::to_string(s) + "z";
      labels.push_back(lab);
    }
  }
  Arrangement A = Arrangement::from_forms(phi.m + 1, std::move(forms), std::move(labels));
  A.def_j = p.j;
  A.def_k = p.k;
  A.family = phi.family;
  return A;
}

Arrangement deformation_A(int m, int j, int k) {
  return build_deformation(make_root_system('A', m), DeformationParams{j, k});
}

}  // namespace logsheaf
