#include "kkw/xi_line.hpp"

#include <algorithm>
#include <stdexcept>

namespace kkw {

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

GaussRat gpow(const GaussRat& c, int k) {
  GaussRat r(1);
  for (int j = 0; j < k; ++j) r *= c;
  return r;
}

void trim(XiPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XiPoly mul(const XiPoly& a, const std::vector<GaussRat>& s) {
  if (a.empty() || s.empty()) return {};
  int n = a[0].dim();
  XiPoly out(a.size() + s.size() - 1, CliffordElem(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!s[j].is_zero()) out[i + j] += a[i] * s[j];
  }
  trim(out);
  return out;
}

XiPoly add(XiPoly a, const XiPoly& b) {
  if (b.empty()) return a;
  if (a.size() < b.size()) a.resize(b.size(), CliffordElem(b[0].dim()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

CliffordElem eval_at(const XiPoly& a, const GaussRat& c) {
  CliffordElem acc(a[0].dim());
  for (std::size_t d = a.size(); d-- > 0;) acc = acc * c + a[d];
  return acc;
}

// Quotient of a by (xi - c); the remainder is dropped.
XiPoly divide_linear(const XiPoly& a, const GaussRat& c) {
  if (a.size() <= 1) return {};
  XiPoly q(a.size() - 1, CliffordElem(a[0].dim()));
  CliffordElem carry = a.back();
  for (std::size_t d = a.size() - 1; d-- > 0;) {
    q[d] = carry;
    carry = a[d] + carry * c;
  }
  return q;
}

// Coefficients of N(c + t) in t.
XiPoly shift(const XiPoly& a, const GaussRat& c) {
  XiPoly out(a.size(), CliffordElem(a[0].dim()));
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[d].is_zero()) continue;
    for (std::size_t m = 0; m <= d; ++m)
      out[m] += a[d] * (GaussRat(binomial(static_cast<int>(d), static_cast<int>(m))) *
                        gpow(c, static_cast<int>(d - m)));
  }
  return out;
}

// First `count` Laurent coefficients of N(c+t) (2c+t)^-r, i.e. principal-part
// coefficients at xi = c when the pole there has order `count`.
std::vector<CliffordElem> laurent_at(const XiPoly& a, const GaussRat& c, int r, int count) {
  int n = a[0].dim();
  XiPoly sh = shift(a, c);
  GaussRat b = GaussRat(2) * c;
  GaussRat binv = b.inverse();
  std::vector<GaussRat> series(count);
  GaussRat base = gpow(binv, r);
  for (int s = 0; s < count; ++s) {
    GaussRat term = base * GaussRat(binomial(r + s - 1, s)) * gpow(binv, s);
    if (s % 2) term = -term;
    series[s] = r == 0 ? GaussRat(s == 0 ? 1 : 0) : term;
  }
  std::vector<CliffordElem> e(count, CliffordElem(n));
  for (int m = 0; m < count; ++m)
    for (int a_idx = 0; a_idx <= m && a_idx < static_cast<int>(sh.size()); ++a_idx)
      if (!sh[a_idx].is_zero() && !series[m - a_idx].is_zero())
        e[m] += sh[a_idx] * series[m - a_idx];
  return e;
}

XiPoly as_xipoly(const std::vector<GaussRat>& s, int n) {
  XiPoly out;
  for (const auto& c : s) out.push_back(CliffordElem::scalar(n, Poly(c)));
  return out;
}

}  // namespace

VarId xi_normal(int n) { return var::make(SymKind::Xi, {n}); }

std::vector<GaussRat> linear_power(const GaussRat& c, int k) {
  std::vector<GaussRat> out{GaussRat(1)};
  for (int j = 0; j < k; ++j) {
    std::vector<GaussRat> next(out.size() + 1);
    for (std::size_t d = 0; d < out.size(); ++d) {
      next[d + 1] += out[d];
      next[d] -= out[d] * c;
    }
    out = std::move(next);
  }
  return out;
}

static std::vector<GaussRat> denominator(int p, int q) {
  auto a = linear_power(GaussRat::i(), p);
  auto b = linear_power(-GaussRat::i(), q);
  std::vector<GaussRat> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

XiRational::XiRational(CliffordElem numerator, int p, int q)
    : num_(std::move(numerator)), p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative pole order");
  canonicalize();
}

XiRational XiRational::from_coefficients(int n, const XiPoly& coeffs, int p, int q) {
  CliffordElem num(n);
  Poly xin = Poly::variable(xi_normal(n));
  Poly power(1);
  for (const auto& c : coeffs) {
    if (!c.is_zero()) num += c * power;
    power = power * xin;
  }
  return XiRational(std::move(num), p, q);
}

XiPoly XiRational::coefficients() const {
  if (is_zero()) return {};
  int n = num_.dim();
  VarId v = xi_normal(n);
  XiPoly out;
  for (Blade b = 0; b < num_.blade_count(); ++b) {
    if (num_.coeff(b).is_zero()) continue;
    auto sl = num_.coeff(b).slices(v);
    if (out.size() < sl.size()) out.resize(sl.size(), CliffordElem(n));
    for (std::size_t d = 0; d < sl.size(); ++d)
      if (!sl[d].is_zero()) out[d].add_to(b, sl[d]);
  }
  trim(out);
  return out;
}

int XiRational::numerator_degree() const {
  if (is_zero()) return -1;
  VarId v = xi_normal(num_.dim());
  int d = 0;
  for (Blade b = 0; b < num_.blade_count(); ++b) d = std::max(d, num_.coeff(b).degree_in(v));
  return d;
}

void XiRational::canonicalize() {
  if (is_zero()) {
    p_ = q_ = 0;
    return;
  }
  if (p_ == 0 && q_ == 0) return;
  XiPoly c = coefficients();
  bool changed = false;
  const GaussRat I = GaussRat::i();
  while (p_ > 0 && eval_at(c, I).is_zero()) {
    c = divide_linear(c, I);
    --p_;
    changed = true;
  }
  while (q_ > 0 && eval_at(c, -I).is_zero()) {
    c = divide_linear(c, -I);
    --q_;
    changed = true;
  }
  if (changed) *this = from_coefficients(num_.dim(), c, p_, q_);
}

CliffordElem XiRational::numerator_over(int p, int q) const {
  if (p < p_ || q < q_) throw std::invalid_argument("cannot lower pole orders");
  if (is_zero()) return num_;
  if (p == p_ && q == q_) return num_;
  XiPoly c = mul(coefficients(), denominator(p - p_, q - q_));
  return from_coefficients(num_.dim(), c, 0, 0).num_;
}

XiRational& XiRational::operator+=(const XiRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  int p = std::max(p_, o.p_), q = std::max(q_, o.q_);
  return *this = XiRational(numerator_over(p, q) + o.numerator_over(p, q), p, q);
}

XiRational operator*(const XiRational& a, const XiRational& b) {
  if (a.is_zero() || b.is_zero()) return XiRational();
  return XiRational(a.num_ * b.num_, a.p_ + b.p_, a.q_ + b.q_);
}

XiRational operator*(XiRational a, const GaussRat& c) {
  if (a.is_zero()) return a;
  a.num_ = a.num_ * c;
  if (c.is_zero()) a.p_ = a.q_ = 0;
  return a;
}

XiRational operator*(XiRational a, const Poly& c) {
  if (a.is_zero()) return a;
  return XiRational(a.num_ * c, a.p_, a.q_);
}

XiRational XiRational::operator-() const { return *this * GaussRat(-1); }

std::string XiRational::str() const {
  return "[" + num_.str() + "] / ((xi_n - i)^" + std::to_string(p_) + " (xi_n + i)^" +
         std::to_string(q_) + ")";
}

PFParts pf_decompose(const XiRational& f) {
  PFParts parts;
  parts.n = f.dim();
  if (f.is_zero()) return parts;
  XiPoly c = f.coefficients();
  int p = f.upper_order(), q = f.lower_order();
  const GaussRat I = GaussRat::i();
  if (p > 0) {
    auto e = laurent_at(c, I, q, p);
    for (int k = 1; k <= p; ++k) parts.upper.push_back(e[p - k]);
  }
  if (q > 0) {
    auto e = laurent_at(c, -I, p, q);
    for (int k = 1; k <= q; ++k) parts.lower.push_back(e[q - k]);
  }
  auto den = denominator(p, q);
  int dn = static_cast<int>(c.size()) - 1, dd = static_cast<int>(den.size()) - 1;
  if (dn >= dd) {
    XiPoly rem = c;
    XiPoly quo(dn - dd + 1, CliffordElem(f.dim()));
    for (int k = dn - dd; k >= 0; --k) {
      quo[k] = rem[k + dd];
      for (int j = 0; j <= dd; ++j) rem[k + j] -= quo[k] * den[j];
    }
    trim(quo);
    parts.entire = std::move(quo);
  }
  return parts;
}

XiRational recompose(const PFParts& parts) {
  int n = parts.n;
  if (n == 0) return XiRational();
  int p = static_cast<int>(parts.upper.size()), q = static_cast<int>(parts.lower.size());
  XiPoly acc;
  for (int k = 1; k <= p; ++k)
    acc = add(acc, mul({parts.upper[k - 1]}, denominator(p - k, q)));
  for (int k = 1; k <= q; ++k)
    acc = add(acc, mul({parts.lower[k - 1]}, denominator(p, q - k)));
  if (!parts.entire.empty()) acc = add(acc, mul(parts.entire, denominator(p, q)));
  return XiRational::from_coefficients(n, acc, p, q);
}

XiRational pi_plus(const XiRational& f) {
  if (f.is_zero()) return f;
  if (!f.strictly_proper()) throw std::domain_error("pi_plus needs a strictly proper input");
  int p = f.upper_order();
  if (p == 0) return XiRational();
  auto e = laurent_at(f.coefficients(), GaussRat::i(), f.lower_order(), p);
  // sum_k e[p-k] (xi - i)^(p-k) = sum_m e[m] (xi - i)^m
  XiPoly acc;
  for (int m = 0; m < p; ++m) acc = add(acc, mul({e[m]}, linear_power(GaussRat::i(), m)));
  return XiRational::from_coefficients(f.dim(), acc, p, 0);
}

XiRational d_xi_n(const XiRational& f) {
  if (f.is_zero()) return f;
  int n = f.dim();
  XiPoly c = f.coefficients();
  XiPoly dc;
  for (std::size_t d = 1; d < c.size(); ++d) dc.push_back(c[d] * GaussRat(static_cast<long>(d)));
  trim(dc);
  int p = f.upper_order(), q = f.lower_order();
  int P = p > 0 ? 1 : 0, Q = q > 0 ? 1 : 0;
  XiPoly acc = mul(dc, denominator(P, Q));
  if (p > 0) acc = add(acc, mul(mul(c, denominator(0, Q)), {GaussRat(-p)}));
  if (q > 0) acc = add(acc, mul(mul(c, denominator(P, 0)), {GaussRat(-q)}));
  return XiRational::from_coefficients(n, acc, p + P, q + Q);
}

CliffordElem line_integral(const XiRational& f) {
  if (f.is_zero()) return f.numerator();
  if (f.numerator_degree() > f.upper_order() + f.lower_order() - 2)
    throw std::domain_error("line integral diverges: degree gap below 2 for " + f.str());
  int p = f.upper_order();
  if (p == 0) return CliffordElem(f.dim());
  auto e = laurent_at(f.coefficients(), GaussRat::i(), f.lower_order(), p);
  return e[p - 1] * (Poly(GaussRat(0, 2)) * sym::Pi());
}

XiRational trace_pair(const XiRational& x, const XiRational& y) {
  if (x.is_zero() || y.is_zero()) return XiRational();
  Poly tr = trace_product(x.numerator(), y.numerator());
  return XiRational(CliffordElem::scalar(x.dim(), tr), x.upper_order() + y.upper_order(),
                    x.lower_order() + y.lower_order());
}

}  // namespace kkw
