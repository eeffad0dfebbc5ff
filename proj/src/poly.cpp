#include "kkw/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kkw {

namespace var {

VarId make(SymKind kind, std::initializer_list<int> idx) {
  if (idx.size() > 4) throw std::invalid_argument("too many indices");
  VarId v = static_cast<VarId>(kind) << 24;
  int slot = 0;
  for (int i : idx) {
    if (i < 0 || i > 15) throw std::out_of_range("index out of range");
    v |= static_cast<VarId>(i) << (20 - 4 * slot);
    ++slot;
  }
  return v;
}

SymKind kind(VarId v) { return static_cast<SymKind>(v >> 24); }

int index(VarId v, int slot) { return static_cast<int>((v >> (20 - 4 * slot)) & 0xF); }

bool is_formal(VarId v) {
  SymKind k = kind(v);
  return k == SymKind::TrId || k == SymKind::PiConst || k == SymKind::OmegaArea;
}

static std::string idx(VarId v, int count) {
  std::string s;
  for (int i = 0; i < count; ++i) {
    if (i) s += ",";
    s += std::to_string(index(v, i));
  }
  return s;
}

std::string name(VarId v) {
  switch (kind(v)) {
    case SymKind::Xi: return "xi" + std::to_string(index(v, 0));
    case SymKind::A: return "a[" + idx(v, 2) + "]";
    case SymKind::DA: return "da[" + idx(v, 3) + "]";
    case SymKind::H1: return "h1";
    case SymKind::Tor: return "T[" + idx(v, 3) + "]";
    case SymKind::Riem: return "R[" + idx(v, 4) + "]";
    case SymKind::ScalarCurv: return "s";
    case SymKind::NablaJ: return "nJ[" + idx(v, 3) + "]";
    case SymKind::Nabla2J: return "n2J[" + idx(v, 2) + "]";
    case SymKind::TrId: return "tr_id";
    case SymKind::PiConst: return "pi";
    case SymKind::OmegaArea: return "Omega_" + std::to_string(index(v, 0));
  }
  return "?";
}

}  // namespace var

int Monomial::exponent(VarId v) const {
  auto [lo, hi] = std::equal_range(vars_.begin(), vars_.end(), v);
  return static_cast<int>(hi - lo);
}

int Monomial::degree_in(SymKind k) const {
  int d = 0;
  for (VarId v : vars_)
    if (var::kind(v) == k) ++d;
  return d;
}

Monomial Monomial::without(VarId v) const {
  Storage out;
  for (VarId w : vars_)
    if (w != v) out.push_back(w);
  return Monomial(std::move(out));
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.vars_.resize(vars_.size() + o.vars_.size());
  std::merge(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(), out.vars_.begin());
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.vars_.size() != b.vars_.size()) return a.vars_.size() < b.vars_.size();
  return std::lexicographical_compare(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                                      b.vars_.end());
}

std::string Monomial::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < vars_.size()) {
    std::size_t j = i;
    while (j < vars_.size() && vars_[j] == vars_[i]) ++j;
    if (!out.empty()) out += "*";
    out += var::name(vars_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), GaussRat(c));
}

Poly::Poly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Poly Poly::variable(VarId v) { return monomial(Monomial(v), GaussRat(1)); }

Poly Poly::monomial(Monomial m, GaussRat c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

GaussRat Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.empty()) return terms_[0].second;
  return GaussRat();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      out.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::from_unsorted(std::vector<Term> terms) {
  // sort indices, so heavy terms move once
  std::vector<std::uint32_t> order(terms.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t x, std::uint32_t y) { return terms[x].first < terms[y].first; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (std::uint32_t i : order) {
    Term& t = terms[i];
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (a.is_constant()) return b * a.terms_[0].second;
  if (b.is_constant()) return a * b.terms_[0].second;
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prods.emplace_back(x.first.times(y.first), x.second * y.second);
  return Poly::from_unsorted(std::move(prods));
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly r(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

int Poly::max_degree_in(SymKind k) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(k));
  return d;
}

std::vector<Poly> Poly::slices(VarId v) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    int e = t.first.exponent(v);
    if (static_cast<int>(buckets.size()) <= e) buckets.resize(e + 1);
    buckets[e].emplace_back(e ? t.first.without(v) : t.first, t.second);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_unsorted(std::move(b)));
  return out;
}

Poly Poly::from_slices(const std::vector<Poly>& slices, VarId v) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < slices.size(); ++e) {
    Monomial ve;
    for (std::size_t k = 0; k < e; ++k) ve = ve.times(Monomial(v));
    for (const auto& t : slices[e].terms_) terms.emplace_back(t.first.times(ve), t.second);
  }
  return from_unsorted(std::move(terms));
}

Poly Poly::partial(VarId v) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    int e = t.first.exponent(v);
    if (e == 0) continue;
    Monomial::Storage vs;
    bool dropped = false;
    for (VarId w : t.first.vars()) {
      if (w == v && !dropped) {
        dropped = true;
        continue;
      }
      vs.push_back(w);
    }
    terms.emplace_back(Monomial(std::move(vs)), t.second * GaussRat(e));
  }
  return from_unsorted(std::move(terms));
}

Poly Poly::substitute(const std::function<std::optional<Poly>(VarId)>& fn) const {
  std::map<VarId, std::optional<Poly>> cache;
  auto lookup = [&](VarId v) -> const std::optional<Poly>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, fn(v)).first;
    return it->second;
  };
  Poly out;
  std::vector<Term> plain;
  for (const auto& t : terms_) {
    Monomial kept;
    Poly factor(t.second);
    for (VarId v : t.first.vars()) {
      const auto& s = lookup(v);
      if (s) factor = factor * *s;
      else kept = kept.times(Monomial(v));
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    if (factor.is_constant()) {
      plain.emplace_back(std::move(kept), factor.constant_term());
    } else {
      out += factor * monomial(std::move(kept), GaussRat(1));
    }
  }
  return out + from_unsorted(std::move(plain));
}

Poly Poly::filter(const std::function<bool(const Monomial&)>& keep) const {
  Poly p;
  for (const auto& t : terms_)
    if (keep(t.first)) p.terms_.push_back(t);
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = c.is_real() && sgn(c.re()) < 0;
    if (neg) cs = GaussRat(-c).str();
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (m.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += m.str();
    }
  }
  return out;
}

namespace sym {

Poly xi(int j) { return Poly::variable(var::make(SymKind::Xi, {j})); }
Poly A(int p, int h) { return Poly::variable(var::make(SymKind::A, {p, h})); }
Poly DA(int p, int h, int j) { return Poly::variable(var::make(SymKind::DA, {p, h, j})); }
Poly H1() { return Poly::variable(var::make(SymKind::H1)); }

Poly Tor(int v, int s, int t) {
  if (v == s || s == t || v == t) return Poly();
  int sign = 1;
  if (v > s) std::swap(v, s), sign = -sign;
  if (s > t) std::swap(s, t), sign = -sign;
  if (v > s) std::swap(v, s), sign = -sign;
  return Poly(sign) * Poly::variable(var::make(SymKind::Tor, {v, s, t}));
}

Poly Riem(int i, int j, int k, int l) {
  if (i == j || k == l) return Poly();
  int sign = 1;
  if (i > j) std::swap(i, j), sign = -sign;
  if (k > l) std::swap(k, l), sign = -sign;
  if (std::pair(i, j) > std::pair(k, l)) std::swap(i, k), std::swap(j, l);
  return Poly(sign) * Poly::variable(var::make(SymKind::Riem, {i, j, k, l}));
}

Poly ScalarCurv() { return Poly::variable(var::make(SymKind::ScalarCurv)); }
Poly NablaJ(int alpha, int j, int h) {
  return Poly::variable(var::make(SymKind::NablaJ, {alpha, j, h}));
}
Poly Nabla2J(int nu, int h) { return Poly::variable(var::make(SymKind::Nabla2J, {nu, h})); }
Poly TrId() { return Poly::variable(var::make(SymKind::TrId)); }
Poly Pi() { return Poly::variable(var::make(SymKind::PiConst)); }
Poly Omega(int m) { return Poly::variable(var::make(SymKind::OmegaArea, {m})); }

}  // namespace sym

}  // namespace kkw
