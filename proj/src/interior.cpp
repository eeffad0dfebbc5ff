#include "kkw/interior.hpp"

#include <stdexcept>

namespace kkw {

namespace {

CliffordElem cvec(int n, const std::vector<Poly>& v) { return CliffordElem::vector(n, v); }

CliffordElem gen(int n, int h) { return CliffordElem::generator(n, h); }

Poly dot(const std::vector<Poly>& x, const std::vector<Poly>& y) {
  Poly r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) r += x[i] * y[i];
  return r;
}

// T(e_a, e_b, Z)
Poly tor_e_e_v(const InteriorData& d, int a, int b, const std::vector<Poly>& z) {
  Poly r;
  for (int c = 1; c <= d.n; ++c)
    if (!z[c - 1].is_zero() && !d.T(a, b, c).is_zero()) r += z[c - 1] * d.T(a, b, c);
  return r;
}

// T(e_a, Y, Z)
Poly tor_e_v_v(const InteriorData& d, int a, const std::vector<Poly>& y, const std::vector<Poly>& z) {
  Poly r;
  for (int b = 1; b <= d.n; ++b)
    if (!y[b - 1].is_zero()) r += y[b - 1] * tor_e_e_v(d, a, b, z);
  return r;
}

// R(J(e_i), J(e_j), e_k, e_l)
Poly riem_jj(const InteriorData& d, int i, int j, int k, int l) {
  Poly r;
  for (int a = 1; a <= d.n; ++a) {
    if (d.A(i, a).is_zero()) continue;
    for (int b = 1; b <= d.n; ++b) {
      if (d.A(j, b).is_zero() || d.R(a, b, k, l).is_zero()) continue;
      r += d.A(i, a) * d.A(j, b) * d.R(a, b, k, l);
    }
  }
  return r;
}

// sum R(J(e_i), J(e_j), e_k, e_l) c(e_i) c(e_j) c(e_k) c(e_l)
// = sum_{a,b} c[u_a] c[u_b] sum_{k,l} R(e_a, e_b, e_k, e_l) c(e_k) c(e_l), u_a = sum_i A(i,a) e_i
CliffordElem curvature_word(const InteriorData& d) {
  int n = d.n;
  std::vector<CliffordElem> u;
  for (int a = 1; a <= n; ++a) {
    std::vector<Poly> col;
    for (int i = 1; i <= n; ++i) col.push_back(d.A(i, a));
    u.push_back(CliffordElem::vector(n, col));
  }
  CliffordElem r(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      CliffordElem q(n);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (!d.R(a, b, k, l).is_zero()) q += normal_order(n, {k, l}) * d.R(a, b, k, l);
      if (!q.is_zero()) r += u[a - 1] * u[b - 1] * q;
    }
  return r;
}

// W_j = sum_al c[J(e_al)] c[(nabla_al J) e_j]
CliffordElem w_j(const InteriorData& d, int j) {
  int n = d.n;
  CliffordElem r(n);
  for (int al = 1; al <= n; ++al) r += cvec(n, d.je(al)) * cvec(n, d.nabla_je(al, j));
  return r;
}

// sum_{a,l,t} T(e_a, e_l, e_t) c[X_a] c(e_l) c(e_t) for a family of vectors X_a
CliffordElem torsion_with(const InteriorData& d, const std::vector<std::vector<Poly>>& x) {
  int n = d.n;
  CliffordElem r(n);
  for (int a = 1; a <= n; ++a) {
    CliffordElem ca = cvec(n, x[a - 1]);
    if (ca.is_zero()) continue;
    for (int l = 1; l <= n; ++l)
      for (int t = 1; t <= n; ++t) {
        const Poly& T = d.T(a, l, t);
        if (!T.is_zero()) r += ca * gen(n, l) * gen(n, t) * T;
      }
  }
  return r;
}

Poly substitute_trid(const Poly& p, int n) {
  return p.substitute([n](VarId v) -> std::optional<Poly> {
    if (var::kind(v) == SymKind::TrId) return Poly(1L << (n / 2));
    return std::nullopt;
  });
}

void check_dim(int n) {
  if (n != 4 && n != 6) throw std::invalid_argument("interior: dimension must be 4 or 6");
}

}  // namespace

std::vector<Poly> InteriorData::je(int j) const {
  std::vector<Poly> v;
  for (int h = 1; h <= n; ++h) v.push_back(A(j, h));
  return v;
}

std::vector<Poly> InteriorData::nabla_je(int al, int j) const {
  std::vector<Poly> v;
  for (int h = 1; h <= n; ++h) v.push_back(NJ(al, j, h));
  return v;
}

std::vector<Poly> InteriorData::n2je(int nu) const {
  std::vector<Poly> v;
  for (int h = 1; h <= n; ++h) v.push_back(N2J(nu, h));
  return v;
}

InteriorData InteriorData::symbolic(int n) {
  check_dim(n);
  InteriorData d;
  d.n = n;
  for (int p = 1; p <= n; ++p)
    for (int h = 1; h <= n; ++h) d.a.push_back(sym::A(p, h));
  for (int v = 1; v <= n; ++v)
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t) d.tor.push_back(sym::Tor(v, s, t));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) d.riem.push_back(sym::Riem(i, j, k, l));
  for (int al = 1; al <= n; ++al)
    for (int j = 1; j <= n; ++j)
      for (int h = 1; h <= n; ++h) d.nj.push_back(sym::NablaJ(al, j, h));
  for (int nu = 1; nu <= n; ++nu)
    for (int h = 1; h <= n; ++h) d.n2j.push_back(sym::Nabla2J(nu, h));
  d.s = sym::ScalarCurv();
  return d;
}

InteriorData InteriorData::from_sample(const SamplePoint& s, unsigned families) {
  InteriorData d = symbolic(s.n);
  auto ev = [&](std::vector<Poly>& v) {
    for (auto& p : v) p = evaluate(p, s, families);
  };
  ev(d.a);
  ev(d.tor);
  ev(d.riem);
  ev(d.nj);
  ev(d.n2j);
  d.s = evaluate(d.s, s, families);
  return d;
}

InteriorData InteriorData::without_torsion() const {
  InteriorData d = *this;
  for (auto& p : d.tor) p = Poly();
  return d;
}

CliffordElem InteriorExpr::total() const {
  return clifford_part + CliffordElem::scalar(n, scalar_part);
}

CliffordElem torsion_clifford(const InteriorData& d) {
  std::vector<std::vector<Poly>> x;
  for (int j = 1; j <= d.n; ++j) x.push_back(d.je(j));
  return torsion_with(d, x) * GaussRat::frac(1, 4);
}

InteriorExpr build_E(const InteriorData& d) {
  int n = d.n;
  check_dim(n);
  InteriorExpr e;
  e.n = n;
  const GaussRat quarter = GaussRat::frac(1, 4), half = GaussRat::frac(1, 2);

  e.terms.push_back({"curvature", curvature_word(d) * GaussRat::frac(1, 8)});

  CliffordElem pair(n);
  for (int nu = 1; nu <= n; ++nu)
    for (int j = 1; j <= n; ++j) pair += cvec(n, d.nabla_je(j, nu)) * cvec(n, d.nabla_je(nu, j));
  e.terms.push_back({"gradient-pair", pair * half});

  CliffordElem second(n);
  for (int nu = 1; nu <= n; ++nu) second += cvec(n, d.je(nu)) * cvec(n, d.n2je(nu));
  e.terms.push_back({"second-derivative", second * half});

  std::vector<CliffordElem> w;
  for (int j = 1; j <= n; ++j) w.push_back(w_j(d, j));
  CliffordElem quartic(n);
  for (int j = 1; j <= n; ++j) quartic += w[j - 1] * w[j - 1];
  e.terms.push_back({"gradient-quartic", quartic * (-quarter)});

  CliffordElem tj = torsion_clifford(d);
  e.terms.push_back({"torsion-square", -(tj * tj)});

  // G_j = sum T(e_a, e_l, e_t) c[(nabla_j J) e_a] c(e_l) c(e_t)
  std::vector<CliffordElem> g;
  for (int j = 1; j <= n; ++j) {
    std::vector<std::vector<Poly>> x;
    for (int a = 1; a <= n; ++a) x.push_back(d.nabla_je(j, a));
    g.push_back(torsion_with(d, x));
  }
  CliffordElem jg(n);
  for (int j = 1; j <= n; ++j) jg += cvec(n, d.je(j)) * g[j - 1];
  e.terms.push_back({"torsion-gradient-left", jg * (-quarter)});

  CliffordElem trace_grad(n);
  for (int j = 1; j <= n; ++j) trace_grad += cvec(n, d.nabla_je(j, j));
  CliffordElem braced = trace_grad * tj * GaussRat(4) + jg;
  e.terms.push_back({"torsion-gradient-braced", braced * quarter});

  std::vector<CliffordElem> xj;
  for (int j = 1; j <= n; ++j) {
    CliffordElem cj = cvec(n, d.je(j));
    xj.push_back(cj * tj + tj * cj);
  }
  CliffordElem wx(n), left(n), right(n);
  for (int j = 1; j <= n; ++j) {
    CliffordElem cj = cvec(n, d.je(j));
    CliffordElem inner = w[j - 1] + xj[j - 1];
    wx += w[j - 1] * xj[j - 1];
    left += cj * tj * inner;
    right += tj * cj * inner;
  }
  e.terms.push_back({"torsion-anticommutator", wx * (-quarter)});
  e.terms.push_back({"torsion-bracket-left", left * (-quarter)});
  e.terms.push_back({"torsion-bracket-right", right * (-quarter)});

  e.clifford_part = CliffordElem(n);
  for (const auto& [name, x] : e.terms) e.clifford_part += x;
  e.scalar_part = d.s * GaussRat::frac(-1, 4);
  return e;
}

InteriorExpr build_E(int n) { return build_E(InteriorData::symbolic(n)); }

Poly interior_prefactor(int n) {
  check_dim(n);
  long fact = 1;
  for (int k = 2; k <= n / 2 - 1; ++k) fact *= k;
  return sym::Pi().pow(n / 2) * GaussRat::frac(n - 2, fact);
}

Poly interior_integrand(const InteriorData& d) {
  InteriorExpr e = build_E(d);
  Poly scalar = d.s * GaussRat::frac(-1, 6) + e.scalar_part;
  return interior_prefactor(d.n) * (cliff_trace(e.clifford_part) + scalar * sym::TrId());
}

Poly interior_integrand(int n) { return interior_integrand(InteriorData::symbolic(n)); }

std::vector<std::pair<std::string, Poly>> target_terms(const InteriorData& d) {
  int n = d.n;
  check_dim(n);
  const GaussRat quarter = GaussRat::frac(1, 4), half = GaussRat::frac(1, 2);
  std::vector<std::pair<std::string, Poly>> out;

  Poly t;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t += riem_jj(d, i, j, j, i);
  out.push_back({"curvature", t * quarter});

  t = Poly();
  for (int nu = 1; nu <= n; ++nu)
    for (int j = 1; j <= n; ++j) t += dot(d.nabla_je(j, nu), d.nabla_je(nu, j));
  out.push_back({"gradient-pair", t * (-half)});

  t = Poly();
  for (int nu = 1; nu <= n; ++nu) t += dot(d.je(nu), d.n2je(nu));
  out.push_back({"second-derivative", t * (-half)});

  Poly cross, diag, sq;
  for (int j = 1; j <= n; ++j) {
    Poly tr;
    for (int al = 1; al <= n; ++al) {
      tr += dot(d.je(al), d.nabla_je(al, j));
      for (int nu = 1; nu <= n; ++nu)
        cross += dot(d.je(al), d.nabla_je(nu, j)) * dot(d.nabla_je(al, j), d.je(nu));
    }
    diag += tr * tr;
    for (int nu = 1; nu <= n; ++nu) sq += dot(d.nabla_je(nu, j), d.nabla_je(nu, j));
  }
  out.push_back({"gradient-cross", cross * (-quarter)});
  out.push_back({"gradient-trace-square", diag * (-quarter)});
  out.push_back({"gradient-norm", sq * quarter});
  out.push_back({"scalar", d.s * GaussRat::frac(-5, 12)});

  std::vector<Poly> v(n);
  for (int j = 1; j <= n; ++j) {
    auto x = d.nabla_je(j, j);
    for (int h = 0; h < n; ++h) v[h] += x[h];
  }
  t = Poly();
  for (int m = 1; m <= n; ++m)
    for (int p = 1; p <= n; ++p) t += tor_e_e_v(d, m, p, d.je(m)) * v[p - 1];
  out.push_back({"torsion-trace-gradient", t * (-half)});

  Poly t2, t3;
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      Poly tm = tor_e_v_v(d, m, d.je(j), d.je(m));
      for (int al = 1; al <= n; ++al) {
        t2 += tor_e_v_v(d, m, d.je(j), d.je(al)) * dot(d.nabla_je(al, j), d.je(m));
        if (!tm.is_zero()) t3 += tm * dot(d.nabla_je(al, j), d.je(al));
      }
    }
  out.push_back({"torsion-jj-gradient", t2 * (-half)});
  out.push_back({"torsion-jj-trace", t3 * (-half)});

  Poly t4, t5;
  for (int m = 1; m <= n; ++m)
    for (int p = 1; p <= n; ++p)
      for (int al = 1; al <= n; ++al) {
        Poly tv = tor_e_e_v(d, m, p, d.je(al));
        if (tv.is_zero()) continue;
        t4 += tv * d.NJ(al, m, p);
        t5 += tv * d.NJ(m, al, p);
      }
  out.push_back({"torsion-gradient-a", t4 * half});
  out.push_back({"torsion-gradient-b", t5 * (-half)});

  Poly t6, t7;
  for (int j = 1; j <= n; ++j)
    for (int p = 1; p <= n; ++p)
      for (int m = 1; m <= n; ++m)
        t6 += tor_e_e_v(d, j, p, d.je(m)) * tor_e_e_v(d, m, p, d.je(j));
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l)
      for (int al = 1; al <= n; ++al) {
        // T(J(e_j), e_l, e_al) = T(e_l, e_al, J(e_j))
        Poly x = tor_e_e_v(d, l, al, d.je(j));
        t7 += x * x;
      }
  out.push_back({"torsion-quadratic-cross", t6 * (-quarter)});
  out.push_back({"torsion-quadratic-square", t7 * (-half)});
  return out;
}

Poly theorem_2_1_target(const InteriorData& d) {
  Poly sum;
  for (const auto& [name, p] : target_terms(d)) sum += p;
  return sum * interior_prefactor(d.n) * GaussRat(1L << (d.n / 2));
}

Poly theorem_2_1_target(int n) { return theorem_2_1_target(InteriorData::symbolic(n)); }

InteriorCheck check_theorem_2_1(int n, int samples, std::uint64_t seed, const SampleSpec& spec) {
  check_dim(n);
  InteriorCheck r;
  r.seed = seed;
  r.samples = samples;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t si = derive_seed(seed, static_cast<std::uint64_t>(i));
    r.seeds.push_back(si);
    SamplePoint sp = SamplePoint::generate(n, si, spec);
    InteriorData d = InteriorData::from_sample(sp);
    if (substitute_trid(interior_integrand(d), n) == theorem_2_1_target(d)) continue;
    r.holds = false;
    r.failing_seeds.push_back(si);
    if (r.diff.empty()) {
      InteriorData ds = InteriorData::from_sample(sp, FamAll & ~FamTor);
      r.diff = poly_diff_report(substitute_trid(interior_integrand(ds), n), theorem_2_1_target(ds));
    }
  }
  return r;
}

std::vector<TraceEvaluation> trace_evaluations(const InteriorData& d) {
  int n = d.n;
  check_dim(n);
  Poly tr = sym::TrId();
  std::vector<TraceEvaluation> out;

  Poly rhs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rhs += riem_jj(d, i, j, j, i);
  out.push_back({"curvature-word", cliff_trace(curvature_word(d)), rhs * GaussRat(2) * tr});

  CliffordElem pair(n);
  rhs = Poly();
  for (int nu = 1; nu <= n; ++nu)
    for (int j = 1; j <= n; ++j) {
      pair += cvec(n, d.nabla_je(j, nu)) * cvec(n, d.nabla_je(nu, j));
      rhs -= dot(d.nabla_je(j, nu), d.nabla_je(nu, j));
    }
  out.push_back({"gradient-pair", cliff_trace(pair), rhs * tr});

  CliffordElem second(n);
  rhs = Poly();
  for (int nu = 1; nu <= n; ++nu) {
    second += cvec(n, d.je(nu)) * cvec(n, d.n2je(nu));
    rhs -= dot(d.je(nu), d.n2je(nu));
  }
  out.push_back({"second-derivative", cliff_trace(second), rhs * tr});

  Poly quartic;
  for (int j = 1; j <= n; ++j) {
    CliffordElem w = w_j(d, j);
    quartic += trace_product(w, w);
  }
  // g[(al-1)n + nu-1][j-1] = g(J(e_al), (nabla_nu J) e_j)
  std::vector<std::vector<Poly>> g(n * n, std::vector<Poly>(n));
  for (int al = 1; al <= n; ++al)
    for (int nu = 1; nu <= n; ++nu)
      for (int j = 1; j <= n; ++j) g[(al - 1) * n + nu - 1][j - 1] = dot(d.je(al), d.nabla_je(nu, j));
  rhs = Poly();
  for (int j = 1; j <= n; ++j) {
    Poly tr;
    for (int al = 1; al <= n; ++al) {
      tr += g[(al - 1) * n + al - 1][j - 1];
      for (int nu = 1; nu <= n; ++nu)
        rhs += g[(al - 1) * n + nu - 1][j - 1] * g[(nu - 1) * n + al - 1][j - 1];
    }
    rhs += tr * tr;
    for (int nu = 1; nu <= n; ++nu) rhs -= dot(d.nabla_je(nu, j), d.nabla_je(nu, j));
  }
  out.push_back({"gradient-quartic", quartic, rhs * tr});
  return out;
}

}  // namespace kkw
