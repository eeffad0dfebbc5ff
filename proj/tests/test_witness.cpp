#include "doctest.h"

#include "kkw/witness.hpp"

using namespace kkw;

namespace {

bool is_zero(const RatMatrix& m) {
  for (const auto& r : m)
    for (const auto& x : r)
      if (sgn(x) != 0) return false;
  return true;
}

RatMatrix plus(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

RatMatrix minus(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

void check_constraints(const SamplePoint& s) {
  int n = s.n;
  CHECK(s.A == transpose(s.A));
  CHECK(matmul(s.A, s.A) == identity_matrix(n));
  for (const auto& d : s.DA) {
    CHECK(is_zero(plus(matmul(s.A, d), matmul(d, s.A))));
    CHECK(is_zero(plus(matmul(s.A, transpose(d)), matmul(d, transpose(s.A)))));
  }
  for (const auto& d : s.NablaJ) {
    CHECK(d == transpose(d));
    CHECK(is_zero(plus(matmul(s.A, d), matmul(d, s.A))));
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        CHECK(s.tor(a, b, c) == -s.tor(b, a, c));
        CHECK(s.tor(a, b, c) == -s.tor(a, c, b));
      }
}

}  // namespace

TEST_CASE("generated samples satisfy the structure constraints") {
  for (int n : {4, 6})
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      check_constraints(SamplePoint::generate(n, seed));
      check_constraints(SamplePoint::generate(n, seed, SampleSpec{.normal_eigen = seed % 2 ? 1 : -1}));
    }
}

TEST_CASE("degenerate normal direction") {
  auto s = SamplePoint::generate(6, 5, SampleSpec{.normal_eigen = -1});
  CHECK(s.A[5][5] == -1);
  for (int i = 0; i < 5; ++i) CHECK(sgn(s.A[i][5]) == 0);
}

TEST_CASE("householder family examples") {
  // v constant -> DA = 0
  auto fixed = householder_involution({1, 2, 0, 1}, {{0, 0, 0, 0}});
  CHECK(is_zero(fixed.DA[0]));
  // v(t) = (1, t, 0, 0): A(t) = I - 2 v v^T / (1 + t^2); derivative at 0 by hand
  auto inv = householder_involution({1, 0, 0, 0}, {{0, 1, 0, 0}});
  RatMatrix expect(4, std::vector<Rational>(4, Rational(0)));
  expect[0][1] = expect[1][0] = -2;
  CHECK(inv.DA[0] == expect);
  CHECK(is_zero(plus(matmul(inv.A, inv.DA[0]), matmul(inv.DA[0], inv.A))));
  // difference quotient oracle at t = 1/1000
  Rational t(1, 1000);
  std::vector<Rational> v0 = {2, -1, 1, 3}, w = {1, 1, -2, 0};
  std::vector<Rational> vt(4);
  for (int i = 0; i < 4; ++i) vt[i] = v0[i] + t * w[i];
  auto a0 = householder_involution(v0, {w});
  auto at = householder_involution(vt, {});
  auto am = householder_involution([&] { auto v = v0; for (int i = 0; i < 4; ++i) v[i] -= t * w[i]; return v; }(), {});
  RatMatrix central = minus(at.A, am.A);
  for (auto& r : central)
    for (auto& x : r) x /= 2 * t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(abs(central[i][j] - a0.DA[0][i][j]) < Rational(1, 10000));
  CHECK_THROWS(householder_involution({0, 0, 0, 0}, {}));
  CHECK(sample_involution(4, 1, SampleSpec{.minus_count = 0}).A == identity_matrix(4));
}

TEST_CASE("torsion antisymmetrization") {
  std::vector<Rational> t(27, Rational(0));
  t[0 * 9 + 1 * 3 + 2] = 6;  // T_123 before projection
  auto a = antisymmetrize(3, t);
  CHECK(a[0 * 9 + 1 * 3 + 2] == 1);
  CHECK(a[1 * 9 + 0 * 3 + 2] == -1);
  CHECK(a[2 * 9 + 0 * 3 + 1] == 1);
  CHECK(sgn(a[0 * 9 + 0 * 3 + 2]) == 0);
  CHECK(antisymmetrize(3, a) == a);
}

TEST_CASE("determinism") {
  auto a = SamplePoint::generate(6, 99), b = SamplePoint::generate(6, 99);
  CHECK(a.A == b.A);
  CHECK(a.DA == b.DA);
  CHECK(a.Tor == b.Tor);
  CHECK(a.H1 == b.H1);
}

TEST_CASE("evaluation examples") {
  auto s = SamplePoint::generate(4, 3);
  s.H1 = Rational(3, 2);
  CHECK(poly_eval(sym::H1(), s) == Poly(GaussRat::frac(3, 2)));
  s.H1 = 1;
  CHECK(poly_eval(sym::TrId() * sym::H1(), s) == sym::TrId());
  Poly dot;
  for (int h = 1; h <= 4; ++h) dot += sym::A(1, h) * sym::A(2, h);
  CHECK(poly_eval(dot, s).is_zero());
  SamplePoint empty;
  empty.n = 4;
  CHECK_THROWS(poly_eval(sym::A(1, 1), empty));
}

TEST_CASE("identity checking") {
  CHECK(check_identity(sym::A(1, 2), sym::A(1, 2), 4, 8, 1).holds);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      Poly lhs;
      for (int h = 1; h <= 4; ++h) lhs += sym::A(p, h) * sym::A(q, h);
      CHECK(check_identity(lhs, Poly(p == q ? 1 : 0), 4, 16, 7).holds);
    }
  auto v = check_identity(sym::A(1, 1), Poly(), 4, 16, 2);
  CHECK_FALSE(v.holds);
  auto v2 = check_identity(Poly(1), Poly(1), 4, 32, 2);
  CHECK(v2.holds);
  CHECK(v2.samples == 32);
}

TEST_CASE("diff report grouping") {
  CHECK(poly_diff_report(sym::A(1, 1), sym::A(1, 1)).empty());
  Poly rhs = sym::ScalarCurv();
  Poly lhs = rhs + sym::Tor(1, 2, 3) * sym::A(1, 1);
  auto r = poly_diff_report(lhs, rhs);
  CHECK(r.groups.size() == 1);
  CHECK(r.groups.count("torsion-linear") == 1);
  auto q = poly_diff_report(sym::Tor(1, 2, 3).pow(2) + sym::Riem(1, 2, 1, 2), Poly());
  CHECK(q.groups.count("torsion-quadratic") == 1);
  CHECK(q.groups.count("curvature") == 1);
}
