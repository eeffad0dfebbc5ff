#pragma once

#include "kkw/poly.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kkw {

using Blade = std::uint32_t;  // bit h-1 set <=> c_h present, increasing order

// Sign s with c_a c_b = s * c_{a xor b} under c_i^2 = -1.
int blade_sign(Blade a, Blade b);

// Element of the Clifford algebra over R^n with Poly coefficients, normal ordered.
class CliffordElem {
public:
  CliffordElem() = default;
  explicit CliffordElem(int n);

  static CliffordElem identity(int n);
  static CliffordElem scalar(int n, Poly p);
  static CliffordElem generator(int n, int h);
  static CliffordElem blade(int n, Blade b, Poly coeff);
  // sum_h comps[h-1] c_h
  static CliffordElem vector(int n, const std::vector<Poly>& comps);

  int dim() const { return n_; }
  std::size_t blade_count() const { return coeffs_.size(); }
  const Poly& coeff(Blade b) const { return coeffs_.at(b); }
  const Poly& identity_component() const { return coeffs_.at(0); }
  void add_to(Blade b, const Poly& p);
  bool is_zero() const;
  bool is_scalar() const;

  CliffordElem& operator+=(const CliffordElem& o);
  CliffordElem& operator-=(const CliffordElem& o);
  friend CliffordElem operator+(CliffordElem a, const CliffordElem& b) { return a += b; }
  friend CliffordElem operator-(CliffordElem a, const CliffordElem& b) { return a -= b; }
  friend CliffordElem operator*(const CliffordElem& a, const CliffordElem& b);
  friend CliffordElem operator*(CliffordElem a, const Poly& p) { return a.scale(p); }
  friend CliffordElem operator*(const Poly& p, CliffordElem a) { return a.scale(p); }
  friend CliffordElem operator*(CliffordElem a, const GaussRat& c) { return a.scale(c); }
  friend CliffordElem operator*(const GaussRat& c, CliffordElem a) { return a.scale(c); }
  CliffordElem operator-() const;
  friend bool operator==(const CliffordElem& a, const CliffordElem& b);

  CliffordElem& scale(const Poly& p);
  CliffordElem& scale(const GaussRat& c);

  CliffordElem map(const std::function<Poly(const Poly&)>& fn) const;

  std::string str() const;

private:
  void check_same(const CliffordElem& o) const;
  int n_ = 0;
  std::vector<Poly> coeffs_;
};

CliffordElem normal_order(int n, const std::vector<int>& word);

// Identity coefficient times TrId; n must be even.
Poly cliff_trace(const CliffordElem& x);

// cliff_trace(x * y) without forming the product.
Poly trace_product(const CliffordElem& x, const CliffordElem& y);

// Trace of a generator word in units of TrId, by the pairing recursion
// tr(c_a W) = -sum_j (-1)^j delta(a, w_j) tr(W without w_j).
Rational pairing_trace(const std::vector<int>& word);

// Explicit complex representation of dimension 2^(n/2) with c_h = i * gamma_h.
class CliffordMatrices {
public:
  explicit CliffordMatrices(int n);
  int dim() const { return n_; }
  int size() const { return d_; }

  using Matrix = std::vector<GaussRat>;  // row-major d x d
  const Matrix& generator(int h) const { return gens_.at(h - 1); }
  Matrix word(const std::vector<int>& w) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  GaussRat trace(const Matrix& m) const;

  // Trace of x with each coefficient mapped through `eval` first.
  Poly trace(const CliffordElem& x, const std::function<Poly(const Poly&)>& eval) const;

private:
  int n_;
  int d_;
  std::vector<Matrix> gens_;
};

}  // namespace kkw
