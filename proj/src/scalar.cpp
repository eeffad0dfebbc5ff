#include "kkw/scalar.hpp"

#include <stdexcept>

namespace kkw {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussRat GaussRat::frac(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return GaussRat(Rational(1) / re_);
  Rational n = re_ * re_ + im_ * im_;
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
  } else if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
  } else if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
  } else {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
  }
  return *this;
}

std::string GaussRat::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string imag;
  if (im_ == 1) imag = "i";
  else if (im_ == -1) imag = "-i";
  else imag = to_string(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + to_string(re_);
  if (sgn(im_) > 0) out += " + " + imag;
  else out += " - " + (im_ == -1 ? std::string("i") : to_string(Rational(-im_)) + "*i");
  return out + ")";
}

GaussRat ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat(0, 1);
    case 2: return GaussRat(-1);
    default: return GaussRat(0, -1);
  }
}

}  // namespace kkw
