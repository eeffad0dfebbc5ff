#include "kkw/sphere.hpp"

#include <stdexcept>

namespace kkw {

Rational sphere_moment_ratio(const std::vector<int>& alpha, int m) {
  if (m < 2) throw std::invalid_argument("sphere dimension must be at least 2");
  if (static_cast<int>(alpha.size()) > m) throw std::invalid_argument("too many exponents");
  int total = 0;
  Rational num = 1;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2) return 0;
    for (int k = a - 1; k > 1; k -= 2) num *= k;
    total += a;
  }
  Rational den = 1;
  for (int k = 1; k <= total / 2; ++k) den *= m + 2 * k - 2;
  return num / den;
}

Poly sphere_moment(const std::vector<int>& alpha, int m) {
  return Poly(GaussRat(sphere_moment_ratio(alpha, m))) * sym::Omega(m);
}

Poly sphere_integrate(const Poly& p, int m) {
  Poly out;
  std::vector<Poly::Term> plain;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<int> alpha(m, 0);
    Monomial::Storage rest;
    bool odd = false;
    for (VarId v : mono.vars()) {
      if (var::kind(v) == SymKind::Xi) {
        int j = var::index(v, 0);
        if (j < 1 || j > m) throw std::invalid_argument("sphere integrand depends on " + var::name(v));
        ++alpha[j - 1];
      } else {
        rest.push_back(v);
      }
    }
    for (int a : alpha) odd = odd || (a % 2);
    if (odd) continue;
    Rational r = sphere_moment_ratio(alpha, m);
    out += Poly::monomial(Monomial(std::move(rest)), coeff * GaussRat(r));
  }
  return out * sym::Omega(m);
}

}  // namespace kkw
