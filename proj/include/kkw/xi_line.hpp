#pragma once

#include "kkw/clifford.hpp"

#include <vector>

namespace kkw {

// Polynomial in xi_n with Clifford coefficients, index = power.
using XiPoly = std::vector<CliffordElem>;

// N(xi_n) / ((xi_n - i)^p (xi_n + i)^q), N carried with xi_n as the variable Xi(n).
class XiRational {
public:
  XiRational() = default;
  XiRational(CliffordElem numerator, int p, int q);  // canonicalizes
  static XiRational from_coefficients(int n, const XiPoly& coeffs, int p, int q);

  int dim() const { return num_.dim(); }
  const CliffordElem& numerator() const { return num_; }
  int upper_order() const { return p_; }
  int lower_order() const { return q_; }
  bool is_zero() const { return num_.dim() == 0 || num_.is_zero(); }

  XiPoly coefficients() const;
  int numerator_degree() const;  // -1 for zero
  bool strictly_proper() const { return numerator_degree() < p_ + q_; }

  XiRational& operator+=(const XiRational& o);
  XiRational& operator-=(const XiRational& o) { return *this += -o; }
  friend XiRational operator+(XiRational a, const XiRational& b) { return a += b; }
  friend XiRational operator-(XiRational a, const XiRational& b) { return a -= b; }
  friend XiRational operator*(const XiRational& a, const XiRational& b);
  friend XiRational operator*(XiRational a, const GaussRat& c);
  friend XiRational operator*(XiRational a, const Poly& c);
  XiRational operator-() const;

  // Numerator re-expressed over (xi_n - i)^p (xi_n + i)^q with p, q at least the current orders.
  CliffordElem numerator_over(int p, int q) const;

  std::string str() const;

private:
  void canonicalize();
  CliffordElem num_;
  int p_ = 0;
  int q_ = 0;
};

struct PFParts {
  int n = 0;
  std::vector<CliffordElem> upper;  // upper[k-1] multiplies (xi_n - i)^-k
  std::vector<CliffordElem> lower;  // lower[k-1] multiplies (xi_n + i)^-k
  XiPoly entire;
};

VarId xi_normal(int n);

PFParts pf_decompose(const XiRational& f);
XiRational recompose(const PFParts& parts);

XiRational pi_plus(const XiRational& f);
XiRational d_xi_n(const XiRational& f);

// Integral over the real line: 2 pi i Res_{+i}, carried with a PiConst factor.
CliffordElem line_integral(const XiRational& f);

// Scalar XiRational tr(x * y), numerator on the identity blade.
XiRational trace_pair(const XiRational& x, const XiRational& y);

// Exact (xi - c)^k expanded, coefficients by power.
std::vector<GaussRat> linear_power(const GaussRat& c, int k);

}  // namespace kkw
