#include "kkw/symbols.hpp"

#include <stdexcept>

namespace kkw {

Poly xi_norm2(int n) {
  Poly r;
  for (int i = 1; i <= n; ++i) r += sym::xi(i) * sym::xi(i);
  return r;
}

Poly xi_tangent_norm2(int n) {
  Poly r;
  for (int i = 1; i < n; ++i) r += sym::xi(i) * sym::xi(i);
  return r;
}

// ---------------------------------------------------------------- HomSymbol

CliffordElem HomSymbol::numerator_over(int k2) const {
  if (k2 < k) throw std::invalid_argument("numerator_over: lower power");
  if (k2 == k) return num;
  return num * xi_norm2(num.dim()).pow(k2 - k);
}

HomSymbol& HomSymbol::operator+=(const HomSymbol& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int m = std::max(k, o.k);
  num = numerator_over(m) + o.numerator_over(m);
  k = m;
  return *this;
}

HomSymbol operator*(const HomSymbol& a, const HomSymbol& b) {
  if (a.is_zero()) return HomSymbol::zero(b.dim());
  if (b.is_zero()) return HomSymbol::zero(a.dim());
  return HomSymbol(a.num * b.num, a.k + b.k);
}

HomSymbol operator*(HomSymbol a, const GaussRat& c) {
  a.num.scale(c);
  return a;
}

HomSymbol operator*(HomSymbol a, const Poly& c) {
  a.num.scale(c);
  return a;
}

HomSymbol HomSymbol::operator-() const { return HomSymbol(-num, k); }

HomSymbol HomSymbol::d_xi(int j) const {
  int n = dim();
  if (j < 1 || j > n) throw std::invalid_argument("d_xi: direction out of range");
  VarId v = var::make(SymKind::Xi, {j});
  CliffordElem dn = num.map([&](const Poly& p) { return p.partial(v); });
  if (k == 0) return HomSymbol(dn, 0);
  CliffordElem r = dn * xi_norm2(n) - num * (Poly(2 * k) * sym::xi(j));
  return HomSymbol(r, k + 1);
}

XiRational HomSymbol::restrict() const {
  if (num.dim() == 0) throw std::invalid_argument("restrict: empty symbol");
  return XiRational(num, k, k);
}

// ---------------------------------------------------------------- JetSymbol

HomSymbol JetSymbol::jet(int j) const {
  int n = dim();
  if (j < 1 || j > n) throw std::invalid_argument("jet: direction out of range");
  if (dx.empty()) return HomSymbol::zero(n);
  return dx[j - 1];
}

JetSymbol& JetSymbol::operator+=(const JetSymbol& o) {
  int n = dim();
  value += o.value;
  if (o.dx.empty()) return *this;
  if (dx.empty()) dx.assign(n, HomSymbol::zero(n));
  for (int j = 0; j < n; ++j) dx[j] += o.dx[j];
  return *this;
}

JetSymbol operator*(const JetSymbol& a, const JetSymbol& b) {
  int n = a.dim();
  JetSymbol r(a.value * b.value);
  if (a.dx.empty() && b.dx.empty()) return r;
  r.dx.assign(n, HomSymbol::zero(n));
  for (int j = 1; j <= n; ++j) r.dx[j - 1] = a.jet(j) * b.value + a.value * b.jet(j);
  return r;
}

JetSymbol operator*(JetSymbol a, const GaussRat& c) {
  a.value = a.value * c;
  for (auto& h : a.dx) h = h * c;
  return a;
}

JetSymbol JetSymbol::operator-() const { return *this * GaussRat(-1); }

// ---------------------------------------------------------------- PointData

Poly PointData::boundary_nabla_j(int alpha, int j, int h) const {
  // w_alpha[s][t]: coefficient of e_s in nabla_alpha e_t; nonzero only for alpha < n:
  // nabla_alpha e_alpha = h1/2 e_n, nabla_alpha e_n = -h1/2 e_alpha.
  auto w = [&](int s, int t) -> Poly {
    if (alpha == n) return Poly();
    if (s == n && t == alpha) return h1 * GaussRat::frac(1, 2);
    if (s == alpha && t == n) return h1 * GaussRat::frac(-1, 2);
    return Poly();
  };
  Poly r = DA(j, h, alpha);
  for (int s = 1; s <= n; ++s) {
    r += A(j, s) * w(h, s);
    r -= w(s, j) * A(s, h);
  }
  return r;
}

PointData PointData::symbolic(int n) {
  PointData d;
  d.n = n;
  for (int p = 1; p <= n; ++p)
    for (int h = 1; h <= n; ++h) d.a.push_back(sym::A(p, h));
  for (int j = 1; j <= n; ++j)
    for (int p = 1; p <= n; ++p)
      for (int h = 1; h <= n; ++h) d.da.push_back(sym::DA(p, h, j));
  d.h1 = sym::H1();
  for (int v = 1; v <= n; ++v)
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t) d.tor.push_back(sym::Tor(v, s, t));
  return d;
}

PointData PointData::from_sample(const SamplePoint& s, unsigned families) {
  PointData d = symbolic(s.n);
  auto ev = [&](Poly& p) { p = evaluate(p, s, families); };
  for (auto& p : d.a) ev(p);
  for (auto& p : d.da) ev(p);
  ev(d.h1);
  for (auto& p : d.tor) ev(p);
  return d;
}

PointData PointData::without_torsion() const {
  PointData d = *this;
  for (auto& p : d.tor) p = Poly();
  return d;
}

// ---------------------------------------------------------------- SymbolParts

HomSymbol SymbolParts::total() const {
  if (parts.empty()) throw std::logic_error("SymbolParts: empty");
  HomSymbol r = HomSymbol::zero(parts.front().dim());
  for (const auto& p : parts) r += p;
  return r;
}

const HomSymbol& SymbolParts::part(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return parts[i];
  throw std::invalid_argument("unknown symbol part " + name);
}

// ---------------------------------------------------------------- SymbolBank

SymbolBank::SymbolBank(PointData data) : d_(std::move(data)) {
  if (d_.n < 2 || d_.n % 2 != 0) throw std::invalid_argument("SymbolBank: even n >= 2 required");
}

CliffordElem SymbolBank::c_j(const std::vector<Poly>& w) const {
  int n = d_.n;
  std::vector<Poly> comps(n);
  for (int p = 1; p <= n; ++p) {
    if (w[p - 1].is_zero()) continue;
    for (int h = 1; h <= n; ++h) comps[h - 1] += w[p - 1] * d_.A(p, h);
  }
  return CliffordElem::vector(n, comps);
}

CliffordElem SymbolBank::c_j_dx(int p) const {
  std::vector<Poly> w(d_.n);
  w[p - 1] = Poly(1);
  return c_j(w);
}

JetSymbol SymbolBank::c_j_xi() const {
  int n = d_.n;
  std::vector<Poly> xi(n);
  for (int p = 1; p <= n; ++p) xi[p - 1] = sym::xi(p);
  JetSymbol r(HomSymbol(c_j(xi)));
  r.dx.assign(n, HomSymbol::zero(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<Poly> comps(n);
    for (int p = 1; p <= n; ++p)
      for (int h = 1; h <= n; ++h) comps[h - 1] += xi[p - 1] * d_.DA(p, h, j);
    if (j == n) {
      // d/dx_n c(dx_h) = h'(0)/2 c(dx_h) for h < n
      for (int p = 1; p <= n; ++p)
        for (int h = 1; h < n; ++h)
          comps[h - 1] += xi[p - 1] * d_.A(p, h) * d_.h1 * GaussRat::frac(1, 2);
    }
    r.dx[j - 1] = HomSymbol(CliffordElem::vector(n, comps));
  }
  return r;
}

JetSymbol SymbolBank::xi2() const {
  int n = d_.n;
  JetSymbol r(HomSymbol(CliffordElem::scalar(n, xi_norm2(n))));
  r.dx.assign(n, HomSymbol::zero(n));
  r.dx[n - 1] = HomSymbol(CliffordElem::scalar(n, d_.h1 * xi_tangent_norm2(n)));
  return r;
}

JetSymbol SymbolBank::inv_xi2(int k) const {
  int n = d_.n;
  JetSymbol r(HomSymbol(CliffordElem::identity(n), k));
  r.dx.assign(n, HomSymbol::zero(n));
  // d/dx_n |xi|^{-2k} = -k h1 |xi'|^2 / |xi|^{2k+2}
  r.dx[n - 1] =
      HomSymbol(CliffordElem::scalar(n, d_.h1 * xi_tangent_norm2(n) * GaussRat(-k)), k + 1);
  return r;
}

CliffordElem SymbolBank::t_j() const {
  int n = d_.n;
  CliffordElem r(n);
  for (int j = 1; j <= n; ++j) {
    CliffordElem cj = c_j_dx(j);
    for (int l = 1; l <= n; ++l)
      for (int t = 1; t <= n; ++t) {
        const Poly& T = d_.T(j, l, t);
        if (T.is_zero()) continue;
        r += cj * CliffordElem::generator(n, l) * CliffordElem::generator(n, t) *
             (T * GaussRat::frac(1, 4));
      }
  }
  return r;
}

JetSymbol SymbolBank::p1() const { return c_j_xi() * GaussRat::i(); }

SymbolParts SymbolBank::sigma0() const {
  int n = d_.n;
  auto c = [&](int h) { return CliffordElem::generator(n, h); };
  CliffordElem s0(n), tj3(n), tj1(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu < n; ++nu)
      s0 += c(mu) * c(n) * c(nu) * (d_.A(mu, nu) * d_.h1 * GaussRat::frac(-1, 4));
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= n; ++u) {
      const Poly& a = d_.A(v, u);
      if (a.is_zero()) continue;
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          if (u == s || s == t || u == t) continue;
          const Poly& T = d_.T(v, s, t);
          if (T.is_zero()) continue;
          tj3 += c(u) * c(s) * c(t) * (T * a * GaussRat::frac(1, 4));
        }
      for (int t = 1; t <= n; ++t) {
        const Poly& T = d_.T(v, u, t);
        if (!T.is_zero()) tj1 += c(t) * (T * a * GaussRat::frac(-1, 2));
      }
    }
  return {{"S0", "TJ3", "TJ1"}, {HomSymbol(s0), HomSymbol(tj3), HomSymbol(tj1)}};
}

JetSymbol SymbolBank::q_m1() const { return c_j_xi() * inv_xi2(1) * GaussRat::i(); }

SymbolParts SymbolBank::q_m2_lemma() const {
  int n = d_.n;
  JetSymbol cx = c_j_xi();
  JetSymbol x2 = xi2();
  SymbolParts s0 = sigma0();
  const CliffordElem& c = cx.value.num;
  // c sigma0 c / |xi|^4 + c / |xi|^6 sum_j c[J dx_j] [d_j c |xi|^2 - c d_j |xi|^2]
  CliffordElem jet_sum(n);
  for (int j = 1; j <= n; ++j) {
    CliffordElem br = cx.jet(j).num * x2.value.num - c * x2.jet(j).num;
    jet_sum += c_j_dx(j) * br;
  }
  HomSymbol b0 = HomSymbol(c * s0.parts[0].num * c, 2) + HomSymbol(c * jet_sum, 3);
  HomSymbol b1(c * s0.parts[1].num * c, 2);
  HomSymbol b2(c * s0.parts[2].num * c, 2);
  return {{"B0", "B1", "B2"}, {b0, b1, b2}};
}

HomSymbol SymbolBank::next_inverse(const JetSymbol& p_top, const HomSymbol& p_next,
                                   const JetSymbol& q_top, bool with_jet_term) const {
  int n = d_.n;
  HomSymbol inner = p_next * q_top.value;
  if (with_jet_term)
    for (int j = 1; j <= n; ++j)
      inner += p_top.value.d_xi(j) * q_top.jet(j) * GaussRat(0, -1);
  return -(q_top.value * inner);
}

SymbolParts SymbolBank::q_m2_derived() const {
  JetSymbol p = p1(), q = q_m1();
  SymbolParts s0 = sigma0();
  return {{"B0", "B1", "B2"},
          {next_inverse(p, s0.parts[0], q, true), next_inverse(p, s0.parts[1], q, false),
           next_inverse(p, s0.parts[2], q, false)}};
}

JetSymbol SymbolBank::p3() const { return c_j_xi() * xi2() * GaussRat::i(); }

SymbolParts SymbolBank::p2() const {
  int n = d_.n;
  auto c = [&](int h) { return CliffordElem::generator(n, h); };
  CliffordElem cx = c_j_xi().value.num;
  Poly x2 = xi_norm2(n);
  Poly xt2 = xi_tangent_norm2(n);
  CliffordElem tj = t_j();

  CliffordElem t1 = c_j_dx(n) * (d_.h1 * xt2);

  CliffordElem inner = CliffordElem::scalar(
      n, d_.h1 * sym::xi(n) * GaussRat::frac(-(n - 1), 2));
  for (int k = 1; k < n; ++k)
    inner += c(k) * c(n) * (d_.h1 * sym::xi(k) * GaussRat::frac(1, 2));
  CliffordElem t2 = cx * inner;

  CliffordElem t3(n);
  for (int al = 1; al <= n; ++al) {
    std::vector<Poly> comps(n);
    for (int b = 1; b <= n; ++b)
      for (int h = 1; h <= n; ++h) comps[h - 1] += sym::xi(b) * d_.boundary_nabla_j(al, b, h);
    t3 -= cx * c_j_dx(al) * CliffordElem::vector(n, comps);
  }

  CliffordElem t4 = sigma0().parts[0].num * x2;

  CliffordElem t5(n), t6(n);
  for (int l = 1; l <= n; ++l) {
    CliffordElem cl = c_j_dx(l);
    for (int j = 1; j <= n; ++j) {
      CliffordElem cj = c_j_dx(j);
      Poly w = sym::xi(l) * sym::xi(j);
      t5 -= cl * cj * tj * w;
      t6 -= cl * tj * cj * w;
    }
  }
  CliffordElem t7 = tj * x2;
  std::vector<HomSymbol> parts;
  for (auto* t : {&t1, &t2, &t3, &t4, &t5, &t6, &t7}) parts.emplace_back(*t);
  return {{"T1", "T2", "T3", "T4", "T5", "T6", "T7"}, parts};
}

JetSymbol SymbolBank::q_m3() const { return c_j_xi() * inv_xi2(2) * GaussRat::i(); }

SymbolParts SymbolBank::q_m4_lemma() const {
  int n = d_.n;
  JetSymbol cx = c_j_xi();
  JetSymbol x2 = xi2();
  SymbolParts pp = p2();
  const CliffordElem& c = cx.value.num;
  // c p2 c / |xi|^8 + c / |xi|^10 sum_j [c[J dx_j] |xi|^2 + 2 xi_j c][d_j c |xi|^2 - c d_j |xi|^2]
  CliffordElem jet_sum(n);
  for (int j = 1; j <= n; ++j) {
    CliffordElem left = c_j_dx(j) * x2.value.num + c * (Poly(2) * sym::xi(j));
    CliffordElem right = cx.jet(j).num * x2.value.num - c * x2.jet(j).num;
    jet_sum += left * right;
  }
  HomSymbol p0 = pp.part("T1") + pp.part("T2") + pp.part("T3") + pp.part("T4");
  HomSymbol q0 = HomSymbol(c * p0.num * c, 4) + HomSymbol(c * jet_sum, 5);
  HomSymbol q1(c * pp.part("T7").num * c, 4);
  HomSymbol q2(c * (pp.part("T5") + pp.part("T6")).num * c, 4);
  return {{"Q0", "Q1", "Q2"}, {q0, q1, q2}};
}

SymbolParts SymbolBank::q_m4_derived() const {
  JetSymbol p = p3(), q = q_m3();
  SymbolParts pp = p2();
  HomSymbol p0 = pp.part("T1") + pp.part("T2") + pp.part("T3") + pp.part("T4");
  return {{"Q0", "Q1", "Q2"},
          {next_inverse(p, p0, q, true), next_inverse(p, pp.part("T7"), q, false),
           next_inverse(p, pp.part("T5") + pp.part("T6"), q, false)}};
}

JetSymbol SymbolBank::build(OperatorKind op, int order) const {
  switch (op) {
    case OperatorKind::D:
      if (order == 1) return p1();
      if (order == 0) return JetSymbol(sigma0().total());
      break;
    case OperatorKind::Dinv:
      if (order == -1) return q_m1();
      if (order == -2) return JetSymbol(q_m2_lemma().total());
      break;
    case OperatorKind::Dcube:
      if (order == 3) return p3();
      if (order == 2) return JetSymbol(p2().total());
      break;
    case OperatorKind::DcubeInv:
      if (order == -3) return q_m3();
      if (order == -4) return JetSymbol(q_m4_lemma().total());
      break;
  }
  throw std::invalid_argument("build: unsupported (operator, order) pair");
}

// ---------------------------------------------------------------- composition

const JetSymbol* GradedSymbol::grade(int order) const {
  int idx = top - order;
  if (idx < 0 || idx >= static_cast<int>(grades.size())) return nullptr;
  return &grades[idx];
}

HomSymbol compose_symbols(const GradedSymbol& p, const GradedSymbol& q, int target) {
  if (p.grades.empty() || q.grades.empty()) throw std::invalid_argument("compose: empty symbol");
  int n = p.grades.front().dim();
  HomSymbol r = HomSymbol::zero(n);
  // alpha = 0: a + b = target; |alpha| = 1: a + b - 1 = target.
  for (int a = p.top; a + q.top >= target; --a) {
    int b = target - a;
    if (b > q.top) continue;
    const JetSymbol* pa = p.grade(a);
    const JetSymbol* qb = q.grade(b);
    if (!pa || !qb) throw std::invalid_argument("compose: missing grade");
    r += pa->value * qb->value;
  }
  for (int a = p.top; a + q.top - 1 >= target; --a) {
    int b = target - a + 1;
    if (b > q.top) continue;
    const JetSymbol* pa = p.grade(a);
    const JetSymbol* qb = q.grade(b);
    if (!pa || !qb) throw std::invalid_argument("compose: missing grade");
    for (int j = 1; j <= n; ++j) r += pa->value.d_xi(j) * qb->jet(j) * GaussRat(0, -1);
  }
  return r;
}

}  // namespace kkw
