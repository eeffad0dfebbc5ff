#include "doctest.h"

#include "kkw/interior.hpp"

using namespace kkw;

namespace {

Poly trid_to_value(const Poly& p, int n) {
  return p.substitute([n](VarId v) -> std::optional<Poly> {
    if (var::kind(v) == SymKind::TrId) return Poly(1L << (n / 2));
    return std::nullopt;
  });
}

SampleSpec torsion_free() {
  SampleSpec s;
  s.zero_torsion = true;
  return s;
}

}  // namespace

TEST_CASE("E for the trivial structure is the classical curvature endomorphism") {
  for (int n : {4, 6}) {
    SampleSpec spec = torsion_free();
    spec.minus_count = 0;
    spec.zero_gradient = true;
    SamplePoint sp = SamplePoint::generate(n, 3, spec);
    InteriorData d = InteriorData::from_sample(sp, FamA | FamTor | FamNablaJ | FamNabla2J);
    InteriorExpr e = build_E(d);
    CliffordElem want(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            want += normal_order(n, {i, j, k, l}) * sym::Riem(i, j, k, l);
    CHECK(e.clifford_part == want * GaussRat::frac(1, 8));
    CHECK(e.scalar_part == sym::ScalarCurv() * GaussRat::frac(-1, 4));
  }
}

TEST_CASE("E carries -T_J^2") {
  SamplePoint sp = SamplePoint::generate(4, 8);
  InteriorData d = InteriorData::from_sample(sp);
  InteriorExpr e = build_E(d);
  CliffordElem tj = torsion_clifford(d);
  bool found = false;
  for (const auto& [name, x] : e.terms)
    if (name == "torsion-square") {
      CHECK(x == -(tj * tj));
      found = true;
    }
  CHECK(found);
  CHECK_FALSE(tj.is_zero());
}

TEST_CASE("trace evaluations hold with free curvature and gradient symbols") {
  for (int n : {4, 6})
    for (std::uint64_t i = 0; i < 32; ++i) {
      SamplePoint sp = SamplePoint::generate(n, derive_seed(213, i));
      InteriorData d = InteriorData::from_sample(sp, FamA);
      for (const auto& t : trace_evaluations(d)) {
        INFO(t.id);
        CHECK(t.lhs == t.rhs);
      }
    }
}

TEST_CASE("integrand scalar coefficient and the classical limit") {
  for (int n : {4, 6}) {
    SampleSpec spec = torsion_free();
    spec.minus_count = n;  // J = -identity
    spec.zero_gradient = true;
    SamplePoint sp = SamplePoint::generate(n, 5, spec);
    InteriorData d = InteriorData::from_sample(sp, FamA | FamTor | FamNablaJ | FamNabla2J);
    Poly got = interior_integrand(d);
    Poly curv;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) curv += sym::Riem(i, j, j, i);
    Poly want = interior_prefactor(n) * sym::TrId() *
                (sym::ScalarCurv() * GaussRat::frac(-5, 12) + curv * GaussRat::frac(1, 4));
    CHECK(got == want);
    CHECK(trid_to_value(got, n) == theorem_2_1_target(d));
  }
  CHECK(interior_prefactor(4) == sym::Pi().pow(2) * GaussRat(2));
  CHECK(interior_prefactor(6) == sym::Pi().pow(3) * GaussRat(2));
}

TEST_CASE("integrand degree bounds") {
  for (int n : {4, 6}) {
    InteriorData d = InteriorData::from_sample(SamplePoint::generate(n, 17), FamA | FamNablaJ | FamNabla2J);
    Poly p = interior_integrand(d);
    CHECK(p.max_degree_in(SymKind::Riem) == 1);
    CHECK(p.max_degree_in(SymKind::ScalarCurv) == 1);
    CHECK(p.max_degree_in(SymKind::Tor) == 2);
  }
}

TEST_CASE("torsion-free sector matches the closed form") {
  for (int n : {4, 6}) {
    InteriorCheck c = check_theorem_2_1(n, 32, 2100 + n, torsion_free());
    CHECK(c.holds);
    CHECK(c.samples == 32);
    CHECK(c.diff.empty());
  }
}

TEST_CASE("torsion sector comparison is localized to torsion families") {
  for (int n : {4, 6}) {
    InteriorCheck c = check_theorem_2_1(n, 8, 3100 + n);
    CHECK(c.samples == 8);
    for (const auto& [family, residual] : c.diff.groups) {
      INFO(family);
      CHECK((family == "torsion-linear" || family == "torsion-quadratic"));
      CHECK_FALSE(residual.is_zero());
    }
    CHECK(c.holds == c.diff.empty());
  }
}
