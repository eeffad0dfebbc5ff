#pragma once

#include "kkw/scalar.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kkw {

enum class SymKind : std::uint8_t {
  Xi = 1,
  A,
  DA,
  H1,
  Tor,
  Riem,
  ScalarCurv,
  NablaJ,
  Nabla2J,
  TrId,
  PiConst,
  OmegaArea,
};

// Packed variable id: kind in the top byte, up to four 4-bit indices below.
using VarId = std::uint32_t;

namespace var {
VarId make(SymKind kind, std::initializer_list<int> idx = {});
SymKind kind(VarId v);
int index(VarId v, int slot);
std::string name(VarId v);
bool is_formal(VarId v);  // TrId, PiConst, OmegaArea
}  // namespace var

class Monomial {
public:
  using Storage = boost::container::small_vector<VarId, 8>;

  Monomial() = default;
  explicit Monomial(VarId v) { vars_.push_back(v); }
  explicit Monomial(Storage sorted) : vars_(std::move(sorted)) {}

  const Storage& vars() const { return vars_; }
  bool empty() const { return vars_.empty(); }
  std::size_t degree() const { return vars_.size(); }
  int exponent(VarId v) const;
  int degree_in(SymKind k) const;

  Monomial without(VarId v) const;  // drops every occurrence
  Monomial times(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.vars_ == b.vars_; }
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::string str() const;

private:
  Storage vars_;  // sorted, with repetition
};

class Poly {
public:
  using Term = std::pair<Monomial, GaussRat>;

  Poly() = default;
  Poly(long c);
  Poly(const GaussRat& c);
  static Poly variable(VarId v);
  static Poly monomial(Monomial m, GaussRat c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRat constant_term() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const GaussRat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int k) const;
  int degree_in(VarId v) const;
  int max_degree_in(SymKind k) const;

  // Coefficient polynomials of v^0, v^1, ... (v removed).
  std::vector<Poly> slices(VarId v) const;
  static Poly from_slices(const std::vector<Poly>& slices, VarId v);

  Poly partial(VarId v) const;

  // Replaces every variable for which `fn` yields a value; others are kept.
  Poly substitute(const std::function<std::optional<Poly>(VarId)>& fn) const;

  // Keeps the terms accepted by `keep`.
  Poly filter(const std::function<bool(const Monomial&)>& keep) const;

  std::string str() const;

  // Sorts, merges like monomials and drops zero coefficients.
  static Poly from_unsorted(std::vector<Term> terms);

private:
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

// Named parameter symbols; indices are 1-based.
namespace sym {
Poly xi(int j);
Poly A(int p, int h);
Poly DA(int p, int h, int j);
Poly H1();
Poly Tor(int v, int s, int t);  // canonical order with sign, 0 on repeated index
Poly Riem(int i, int j, int k, int l);
Poly ScalarCurv();
Poly NablaJ(int alpha, int j, int h);
Poly Nabla2J(int nu, int h);
Poly TrId();
Poly Pi();
Poly Omega(int m);
}  // namespace sym

}  // namespace kkw
