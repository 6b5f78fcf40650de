#include "linkforge/sturm.hpp"

namespace linkforge {

namespace {

int sign_at_inf(const CPoly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading().re_q());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int var_at(const std::vector<CPoly>& chain, const mpq_class& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sturm_sign_at(p, x));
  return variations(s);
}

int var_at_inf(const std::vector<CPoly>& chain, bool plus) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sign_at_inf(p, plus));
  return variations(s);
}

}  // namespace

int sturm_sign_at(const CPoly& p, const mpq_class& x) {
  Scalar v = p.eval(Scalar::exact(x, 0));
  return sgn(v.re_q());
}

mpq_class sturm_root_bound(const CPoly& p) {
  mpq_class lead = abs(p.leading().re_q());
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class a = abs(p.coeff(i).re_q()) / lead;
    if (a > m) m = a;
  }
  return m + 1;
}

std::vector<CPoly> sturm_chain(const CPoly& p) {
  std::vector<CPoly> chain;
  CPoly a = p, b = p.derivative();
  chain.push_back(a);
  while (!b.is_zero()) {
    chain.push_back(b);
    CPoly r = -a.divmod(b).r;
    a = b;
    b = r;
  }
  return chain;
}

int sturm_count(const std::vector<CPoly>& chain, const mpq_class& a,
                const mpq_class& b) {
  return var_at(chain, a) - var_at(chain, b);
}

int sturm_count_all(const std::vector<CPoly>& chain) {
  return var_at_inf(chain, false) - var_at_inf(chain, true);
}

}  // namespace linkforge
