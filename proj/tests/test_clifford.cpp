#include "doctest.h"

#include "kkw/clifford.hpp"

#include <random>

using namespace kkw;

namespace {

std::vector<int> random_word(std::mt19937_64& rng, int n, int max_len) {
  std::vector<int> w(rng() % (max_len + 1));
  for (auto& h : w) h = 1 + static_cast<int>(rng() % n);
  return w;
}

Rational delta(int a, int b) { return a == b ? 1 : 0; }

CliffordElem random_elem(std::mt19937_64& rng, int n) {
  CliffordElem x(n);
  std::vector<Poly> atoms = {Poly(1), sym::A(1, 2), sym::H1(), sym::xi(1)};
  for (int t = 0; t < 5; ++t) {
    Blade b = rng() % (Blade{1} << n);
    x.add_to(b, Poly(static_cast<long>(rng() % 5) - 2) * atoms[rng() % atoms.size()]);
  }
  return x;
}

}  // namespace

TEST_CASE("normal ordering examples") {
  CHECK(normal_order(4, {1, 1}) == -CliffordElem::identity(4));
  CHECK(normal_order(4, {2, 1}) == -normal_order(4, {1, 2}));
  CHECK(normal_order(4, {1, 2, 1}) == CliffordElem::generator(4, 2));
  CHECK(normal_order(4, {1, 2, 2, 3}) == -normal_order(4, {1, 3}));
  CHECK_THROWS(normal_order(4, {5}));
}

TEST_CASE("products and identity") {
  int n = 4;
  CliffordElem c12 = normal_order(n, {1, 2}), c23 = normal_order(n, {2, 3});
  CHECK(c12 * c23 == -normal_order(n, {1, 3}));
  CliffordElem x = c12 * Poly(3) + CliffordElem::generator(n, 4) * sym::H1();
  CHECK(CliffordElem::identity(n) * x == x);
  CHECK(x * CliffordElem::identity(n) == x);
  CHECK_THROWS(CliffordElem::identity(4) * CliffordElem::identity(6));

  std::vector<Poly> comps;
  for (int h = 1; h <= n; ++h) comps.push_back(sym::xi(h));
  CliffordElem v = CliffordElem::vector(n, comps);
  Poly norm;
  for (int h = 1; h <= n; ++h) norm += sym::xi(h).pow(2);
  CHECK(v * v == CliffordElem::scalar(n, -norm));
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto a = random_elem(rng, 4), b = random_elem(rng, 4), c = random_elem(rng, 4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("trace examples") {
  CHECK(cliff_trace(CliffordElem::identity(4)) == sym::TrId());
  CHECK(cliff_trace(normal_order(4, {1, 2})).is_zero());
  CHECK(cliff_trace(normal_order(4, {1, 2, 2, 1})) == sym::TrId());
  CHECK_THROWS(cliff_trace(CliffordElem::identity(3)));
}

TEST_CASE("trace cyclicity and product shortcut") {
  std::mt19937_64 rng(9);
  for (int n : {4, 6})
    for (int t = 0; t < 30; ++t) {
      auto a = random_elem(rng, n), b = random_elem(rng, n);
      CHECK(cliff_trace(a * b) == cliff_trace(b * a));
      CHECK(trace_product(a, b) == cliff_trace(a * b));
    }
}

TEST_CASE("pairing recursion agrees with normal ordering") {
  std::mt19937_64 rng(13);
  for (int n : {4, 6})
    for (int t = 0; t < 500; ++t) {
      auto w = random_word(rng, n, 8);
      CHECK(Poly(GaussRat(pairing_trace(w))) * sym::TrId() == cliff_trace(normal_order(n, w)));
    }
}

TEST_CASE("two-, four- and six-factor trace formulas on basis tuples") {
  for (int n : {4, 6}) {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        CHECK(pairing_trace({x, y}) == -delta(x, y));
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        for (int z = 1; z <= n; ++z)
          for (int w = 1; w <= n; ++w) {
            Rational expect = delta(x, w) * delta(y, z) - delta(x, z) * delta(y, w) +
                              delta(x, y) * delta(z, w);
            CliffordElem e = normal_order(n, {x, y, z, w});
            CHECK(e.identity_component() == Poly(GaussRat(expect)));
          }
  }
}

TEST_CASE("matrix representation examples") {
  CliffordMatrices m4(4), m6(6);
  auto id = [](const Poly& p) { return p; };
  CHECK(m4.trace(CliffordElem::identity(4), id) == Poly(4));
  CHECK(m6.trace(CliffordElem::identity(6), id) == Poly(8));
  CHECK(m4.trace(normal_order(4, {1, 2, 3, 4}), id).is_zero());
  for (int h = 1; h <= 4; ++h) {
    auto sq = m4.word({h, h});
    CHECK(m4.trace(sq) == GaussRat(-4));
    for (int k = h + 1; k <= 4; ++k) {
      auto anti = m4.multiply(m4.word({h, k}), m4.word({1}));
      auto other = m4.multiply(m4.word({k, h}), m4.word({1}));
      for (std::size_t i = 0; i < anti.size(); ++i) CHECK(anti[i] == -other[i]);
    }
  }
}

TEST_CASE("symbolic trace matches matrix oracle on random words") {
  std::mt19937_64 rng(17);
  for (int n : {4, 6}) {
    CliffordMatrices m(n);
    GaussRat size(m.size());
    for (int t = 0; t < 1000; ++t) {
      auto w = random_word(rng, n, 8);
      GaussRat symbolic = cliff_trace(normal_order(n, w)).terms().empty()
                              ? GaussRat()
                              : cliff_trace(normal_order(n, w)).terms()[0].second;
      CHECK(m.trace(m.word(w)) == symbolic * size);
    }
  }
}
