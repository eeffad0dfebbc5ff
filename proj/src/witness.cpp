#include "kkw/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kkw {

RatMatrix identity_matrix(int n) {
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.empty() ? 0 : a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix x = matmul(a, b), y = matmul(b, a);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) x[i][j] -= y[i][j];
  return x;
}

static RatMatrix reflection(const std::vector<Rational>& v) {
  int n = static_cast<int>(v.size());
  Rational vv = 0;
  for (const auto& x : v) vv += x * x;
  if (sgn(vv) == 0) throw std::invalid_argument("degenerate reflection vector");
  RatMatrix a = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] -= 2 * v[i] * v[j] / vv;
  return a;
}

Involution householder_involution(const std::vector<Rational>& v0,
                                  const std::vector<std::vector<Rational>>& w) {
  int n = static_cast<int>(v0.size());
  Involution out;
  out.A = reflection(v0);
  Rational vv = 0;
  for (const auto& x : v0) vv += x * x;
  for (const auto& wj : w) {
    if (static_cast<int>(wj.size()) != n) throw std::invalid_argument("direction size mismatch");
    Rational vw = 0;
    for (int i = 0; i < n; ++i) vw += v0[i] * wj[i];
    RatMatrix d(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational r = -2 * ((wj[i] * v0[j] + v0[i] * wj[j]) / vv - 2 * vw * v0[i] * v0[j] / (vv * vv));
        d[i][j] = r;
      }
    out.DA.push_back(std::move(d));
  }
  return out;
}

Involution conjugated_involution(const RatMatrix& R, const std::vector<int>& signs,
                                 const std::vector<RatMatrix>& K) {
  int n = static_cast<int>(R.size());
  RatMatrix D(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) D[i][i] = signs.at(i);
  Involution out;
  out.A = matmul(matmul(R, D), transpose(R));
  for (const auto& k : K) out.DA.push_back(commutator(k, out.A));
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct Draw {
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  long small(int lo, int hi) { return lo + static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1)); }
  Rational frac() {
    long num = small(-4, 4);
    long den = small(1, 3);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  std::vector<Rational> vec(int n, bool nonzero) {
    std::vector<Rational> v(n);
    do {
      for (auto& x : v) x = small(-3, 3);
    } while (nonzero && std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; }));
    return v;
  }
  RatMatrix antisym(int n) {
    RatMatrix k(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        k[i][j] = small(-2, 2);
        k[j][i] = -k[i][j];
      }
    return k;
  }
  std::mt19937_64 rng;
};

RatMatrix random_orthogonal(Draw& d, int n) {
  return matmul(reflection(d.vec(n, true)), reflection(d.vec(n, true)));
}

}  // namespace

Involution sample_involution(int n, std::uint64_t seed, const SampleSpec& spec) {
  if (n < 2) throw std::invalid_argument("dimension too small");
  Draw d(derive_seed(seed, 1));
  int m = spec.normal_eigen ? n - 1 : n;
  int k = spec.minus_count;
  if (k < 0) {
    long r = d.small(0, 9);
    k = r == 0 ? 0 : (r == 1 ? m : static_cast<int>(d.small(1, m - 1)));
  }
  k = std::min(k, m);
  std::vector<RatMatrix> K;
  for (int j = 0; j < n; ++j) K.push_back(spec.zero_gradient ? RatMatrix(n, std::vector<Rational>(n, Rational(0))) : d.antisym(n));

  if (!spec.normal_eigen && k == 1) {
    std::vector<std::vector<Rational>> w;
    for (int j = 0; j < n; ++j)
      w.push_back(spec.zero_gradient ? std::vector<Rational>(n, Rational(0)) : d.vec(n, false));
    return householder_involution(d.vec(n, true), w);
  }
  RatMatrix R = identity_matrix(n);
  RatMatrix sub = random_orthogonal(d, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) R[i][j] = sub[i][j];
  std::vector<int> signs(n, 1);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(order[i], order[d.small(0, i)]);
  for (int i = 0; i < k; ++i) signs[order[i]] = -1;
  if (spec.normal_eigen) signs[n - 1] = spec.normal_eigen;
  return conjugated_involution(R, signs, K);
}

std::vector<Rational> antisymmetrize(int n, const std::vector<Rational>& t) {
  std::vector<Rational> out(n * n * n, Rational(0));
  auto at = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Rational s = t[at(a, b, c)] + t[at(b, c, a)] + t[at(c, a, b)] - t[at(b, a, c)] -
                     t[at(a, c, b)] - t[at(c, b, a)];
        out[at(a, b, c)] = s / 6;
      }
  return out;
}

std::vector<Rational> sample_torsion(int n, std::uint64_t seed) {
  Draw d(derive_seed(seed, 2));
  std::vector<Rational> t(n * n * n);
  for (auto& x : t) x = d.small(-3, 3);
  return antisymmetrize(n, t);
}

static std::vector<Rational> sample_riemann(int n, Draw& d) {
  std::vector<Rational> r(n * n * n * n);
  for (auto& x : r) x = d.small(-3, 3);
  auto at = [n](int i, int j, int k, int l) { return ((i * n + j) * n + k) * n + l; };
  std::vector<Rational> out(r.size(), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = r[at(i, j, k, l)] - r[at(j, i, k, l)] - r[at(i, j, l, k)] + r[at(j, i, l, k)] +
                       r[at(k, l, i, j)] - r[at(l, k, i, j)] - r[at(k, l, j, i)] + r[at(l, k, j, i)];
          out[at(i, j, k, l)] = s / 8;
        }
  return out;
}

const Rational& SamplePoint::tor(int v, int s_, int t) const {
  return Tor.at(((v - 1) * n + (s_ - 1)) * n + (t - 1));
}

const Rational& SamplePoint::riem(int i, int j, int k, int l) const {
  return Riem.at((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1));
}

SamplePoint SamplePoint::generate(int n, std::uint64_t seed, const SampleSpec& spec) {
  SamplePoint s;
  s.n = n;
  s.seed = seed;
  Involution inv = sample_involution(n, seed, spec);
  s.A = std::move(inv.A);
  s.DA = std::move(inv.DA);
  s.Tor = spec.zero_torsion ? std::vector<Rational>(n * n * n, Rational(0)) : sample_torsion(n, seed);
  Draw d(derive_seed(seed, 3));
  do {
    s.H1 = d.frac();
  } while (sgn(s.H1) == 0);
  s.s = d.frac();
  s.Riem = sample_riemann(n, d);
  for (int a = 0; a < n; ++a) {
    RatMatrix k = spec.zero_gradient ? RatMatrix(n, std::vector<Rational>(n, Rational(0))) : d.antisym(n);
    s.NablaJ.push_back(commutator(k, s.A));
  }
  s.Nabla2J.assign(n, std::vector<Rational>(n, Rational(0)));
  if (!spec.zero_gradient)
    for (auto& row : s.Nabla2J)
      for (auto& x : row) x = d.frac();
  return s;
}

static std::optional<Poly> assign(VarId v, const SamplePoint& s, unsigned families, bool strict) {
  auto val = [](const Rational& r) { return std::optional<Poly>(Poly(GaussRat(r))); };
  auto idx = [v](int slot) { return var::index(v, slot); };
  auto check = [&](int count) {
    for (int i = 0; i < count; ++i)
      if (idx(i) < 1 || idx(i) > s.n) throw std::out_of_range("symbol index outside sample dimension");
  };
  switch (var::kind(v)) {
    case SymKind::A:
      if (!(families & FamA)) break;
      check(2);
      return val(s.A[idx(0) - 1][idx(1) - 1]);
    case SymKind::DA:
      if (!(families & FamDA)) break;
      check(3);
      return val(s.DA.at(idx(2) - 1)[idx(0) - 1][idx(1) - 1]);
    case SymKind::H1:
      if (!(families & FamH1)) break;
      return val(s.H1);
    case SymKind::Tor:
      if (!(families & FamTor)) break;
      check(3);
      return val(s.tor(idx(0), idx(1), idx(2)));
    case SymKind::Riem:
      if (!(families & FamRiem)) break;
      check(4);
      return val(s.riem(idx(0), idx(1), idx(2), idx(3)));
    case SymKind::ScalarCurv:
      if (!(families & FamScalar)) break;
      return val(s.s);
    case SymKind::NablaJ:
      if (!(families & FamNablaJ)) break;
      check(3);
      return val(s.NablaJ.at(idx(0) - 1)[idx(1) - 1][idx(2) - 1]);
    case SymKind::Nabla2J:
      if (!(families & FamNabla2J)) break;
      check(2);
      return val(s.Nabla2J[idx(0) - 1][idx(1) - 1]);
    default:
      return std::nullopt;
  }
  if (strict) throw std::invalid_argument("unassigned symbol " + var::name(v));
  return std::nullopt;
}

Poly evaluate(const Poly& p, const SamplePoint& s, unsigned families) {
  return p.substitute([&](VarId v) { return assign(v, s, families, false); });
}

Poly poly_eval(const Poly& p, const SamplePoint& s) {
  if (s.A.empty() || s.DA.empty() || s.Tor.empty() || s.Riem.empty() || s.NablaJ.empty() ||
      s.Nabla2J.empty()) {
    for (const auto& [m, c] : p.terms())
      for (VarId v : m.vars()) {
        SymKind k = var::kind(v);
        bool missing = (k == SymKind::A && s.A.empty()) || (k == SymKind::DA && s.DA.empty()) ||
                       (k == SymKind::Tor && s.Tor.empty()) ||
                       (k == SymKind::Riem && s.Riem.empty()) ||
                       (k == SymKind::NablaJ && s.NablaJ.empty()) ||
                       (k == SymKind::Nabla2J && s.Nabla2J.empty());
        if (missing) throw std::invalid_argument("unassigned symbol " + var::name(v));
      }
  }
  return p.substitute([&](VarId v) { return assign(v, s, FamAll, true); });
}

IdentityVerdict check_identity(const Poly& lhs, const Poly& rhs, int n, int k, std::uint64_t seed,
                               const SampleSpec& spec) {
  IdentityVerdict v;
  Poly diff = lhs - rhs;
  for (int i = 0; i < k; ++i) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    v.seeds.push_back(s);
    Poly r = poly_eval(diff, SamplePoint::generate(n, s, spec));
    ++v.samples;
    if (!r.is_zero()) {
      if (v.holds) v.first_residual = r;
      v.holds = false;
      v.failing_seeds.push_back(s);
    }
  }
  return v;
}

std::string family_of(const Monomial& m) {
  int tor = m.degree_in(SymKind::Tor);
  if (tor >= 2) return "torsion-quadratic";
  if (tor == 1) return "torsion-linear";
  if (m.degree_in(SymKind::Riem) || m.degree_in(SymKind::ScalarCurv)) return "curvature";
  if (m.degree_in(SymKind::NablaJ) || m.degree_in(SymKind::Nabla2J) || m.degree_in(SymKind::DA))
    return "J-gradient";
  if (m.degree_in(SymKind::H1)) return "boundary-metric";
  return "other";
}

DiffReport poly_diff_report(const Poly& lhs, const Poly& rhs) {
  DiffReport report;
  Poly diff = lhs - rhs;
  for (const auto& [m, c] : diff.terms()) report.groups[family_of(m)] += Poly::monomial(m, c);
  return report;
}

}  // namespace kkw
