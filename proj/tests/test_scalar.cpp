#include "doctest.h"

#include "kkw/poly.hpp"

#include <random>

using namespace kkw;

namespace {

Poly random_poly(std::mt19937_64& rng, int terms) {
  std::vector<Poly> atoms = {sym::xi(1), sym::xi(2), sym::xi(3), sym::A(1, 2), sym::H1(),
                             sym::Tor(1, 2, 3), sym::TrId()};
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly m(GaussRat(Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4),
                    Rational(static_cast<long>(rng() % 5) - 2, 1 + rng() % 3)));
    int deg = rng() % 4;
    for (int d = 0; d < deg; ++d) m = m * atoms[rng() % atoms.size()];
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rationals stay exact and canonical") {
  GaussRat a(Rational(2, 4), Rational(-3, 6));
  CHECK(a == GaussRat(Rational(1, 2), Rational(1, -2)));
  CHECK(a.re().get_den() == 2);
  CHECK(a.im() == Rational(-1, 2));
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK(ipow(3) == GaussRat(0, -1));
  CHECK(GaussRat::frac(3, -6).str() == "-1/2");
  CHECK(GaussRat(Rational(1, 2), 3).str() == "(1/2 + 3*i)");
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK(sym::xi(1) + sym::xi(1) == Poly(2) * sym::xi(1));
  Poly prod = sym::A(1, 2) * sym::A(2, 1);
  CHECK(prod.terms().size() == 1);
  CHECK(prod.terms()[0].first.degree() == 2);
  Poly i = Poly(GaussRat::i());
  CHECK((sym::xi(1) + i * sym::xi(2)) * (sym::xi(1) - i * sym::xi(2)) ==
        sym::xi(1).pow(2) + sym::xi(2).pow(2));
  Poly p = sym::xi(1) * sym::H1();
  CHECK((p - p).is_zero());
}

TEST_CASE("partial derivatives in tangential variables") {
  VarId x1 = var::make(SymKind::Xi, {1});
  VarId x2 = var::make(SymKind::Xi, {2});
  CHECK((sym::xi(1).pow(2) * sym::xi(2)).partial(x1) == Poly(2) * sym::xi(1) * sym::xi(2));
  CHECK(sym::A(1, 1).partial(x2).is_zero());
  Poly s;
  for (int p = 1; p <= 4; ++p) s += sym::xi(p) * sym::A(p, 3);
  CHECK(s.partial(x1) == sym::A(1, 3));
}

TEST_CASE("torsion and curvature symbols are canonical") {
  CHECK(sym::Tor(2, 1, 3) == -sym::Tor(1, 2, 3));
  CHECK(sym::Tor(3, 1, 2) == sym::Tor(1, 2, 3));
  CHECK(sym::Tor(1, 1, 3).is_zero());
  CHECK(sym::Riem(2, 1, 3, 4) == -sym::Riem(1, 2, 3, 4));
  CHECK(sym::Riem(1, 2, 4, 3) == -sym::Riem(1, 2, 3, 4));
  CHECK(sym::Riem(3, 4, 1, 2) == sym::Riem(1, 2, 3, 4));
  CHECK(sym::Riem(1, 1, 3, 4).is_zero());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("slices round trip") {
  std::mt19937_64 rng(11);
  VarId x2 = var::make(SymKind::Xi, {2});
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = random_poly(rng, 6);
    CHECK(Poly::from_slices(a.slices(x2), x2) == a);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(3);
  auto sub = [](VarId v) -> std::optional<Poly> {
    if (var::kind(v) == SymKind::H1) return Poly(GaussRat(Rational(3, 2)));
    if (var::kind(v) == SymKind::Xi) return Poly(GaussRat(var::index(v, 0), 1));
    return std::nullopt;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4);
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
  }
  CHECK((sym::TrId() * sym::H1()).substitute([](VarId v) -> std::optional<Poly> {
    if (var::kind(v) == SymKind::H1) return Poly(1);
    return std::nullopt;
  }) == sym::TrId());
}
