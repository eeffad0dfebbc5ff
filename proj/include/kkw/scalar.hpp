#pragma once

#include <gmpxx.h>

#include <string>

namespace kkw {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Exact complex number a + b*i with rational parts.
class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat frac(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "3/2", "-i", "(1/2 + 3*i)"
  std::string str() const;

private:
  Rational re_{0};
  Rational im_{0};
};

// i^k for any integer k
GaussRat ipow(int k);

}  // namespace kkw
