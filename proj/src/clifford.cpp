#include "kkw/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace kkw {

int blade_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade x = a >> 1; x; x >>= 1) swaps += std::popcount(x & b);
  swaps += std::popcount(a & b);  // c_i^2 = -1
  return (swaps & 1) ? -1 : 1;
}

static void check_dim(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("unsupported Clifford dimension");
}

CliffordElem::CliffordElem(int n) : n_(n) {
  check_dim(n);
  coeffs_.resize(std::size_t{1} << n);
}

CliffordElem CliffordElem::identity(int n) { return scalar(n, Poly(1)); }

CliffordElem CliffordElem::scalar(int n, Poly p) { return blade(n, 0, std::move(p)); }

CliffordElem CliffordElem::generator(int n, int h) {
  if (h < 1 || h > n) throw std::out_of_range("generator index out of range");
  return blade(n, Blade{1} << (h - 1), Poly(1));
}

CliffordElem CliffordElem::blade(int n, Blade b, Poly coeff) {
  CliffordElem x(n);
  x.coeffs_.at(b) = std::move(coeff);
  return x;
}

CliffordElem CliffordElem::vector(int n, const std::vector<Poly>& comps) {
  if (static_cast<int>(comps.size()) != n) throw std::invalid_argument("vector size mismatch");
  CliffordElem x(n);
  for (int h = 0; h < n; ++h) x.coeffs_[Blade{1} << h] = comps[h];
  return x;
}

void CliffordElem::add_to(Blade b, const Poly& p) { coeffs_.at(b) += p; }

bool CliffordElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CliffordElem::is_scalar() const {
  for (std::size_t b = 1; b < coeffs_.size(); ++b)
    if (!coeffs_[b].is_zero()) return false;
  return true;
}

void CliffordElem::check_same(const CliffordElem& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Clifford dimension mismatch");
}

CliffordElem& CliffordElem::operator+=(const CliffordElem& o) {
  if (n_ == 0) return *this = o;
  if (o.n_ == 0) return *this;
  check_same(o);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] += o.coeffs_[b];
  return *this;
}

CliffordElem& CliffordElem::operator-=(const CliffordElem& o) {
  if (o.n_ == 0) return *this;
  return *this += -o;
}

CliffordElem operator*(const CliffordElem& a, const CliffordElem& b) {
  a.check_same(b);
  // gather every term product per output blade, then canonicalize once
  std::vector<std::vector<Poly::Term>> buckets(a.coeffs_.size());
  for (Blade x = 0; x < a.coeffs_.size(); ++x) {
    const auto& px = a.coeffs_[x].terms();
    if (px.empty()) continue;
    for (Blade y = 0; y < b.coeffs_.size(); ++y) {
      const auto& py = b.coeffs_[y].terms();
      if (py.empty()) continue;
      auto& bucket = buckets[x ^ y];
      bool neg = blade_sign(x, y) < 0;
      for (const auto& s : px)
        for (const auto& t : py) {
          GaussRat c = s.second * t.second;
          bucket.emplace_back(s.first.times(t.first), neg ? -c : std::move(c));
        }
    }
  }
  CliffordElem out(a.n_);
  for (Blade z = 0; z < buckets.size(); ++z)
    if (!buckets[z].empty()) out.coeffs_[z] = Poly::from_unsorted(std::move(buckets[z]));
  return out;
}

CliffordElem CliffordElem::operator-() const {
  CliffordElem x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

bool operator==(const CliffordElem& a, const CliffordElem& b) {
  if (a.n_ == 0 || b.n_ == 0) return a.is_zero() && b.is_zero();
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

CliffordElem& CliffordElem::scale(const Poly& p) {
  for (auto& c : coeffs_)
    if (!c.is_zero()) c = c * p;
  return *this;
}

CliffordElem& CliffordElem::scale(const GaussRat& g) {
  for (auto& c : coeffs_) c *= g;
  return *this;
}

CliffordElem CliffordElem::map(const std::function<Poly(const Poly&)>& fn) const {
  CliffordElem x(n_);
  for (std::size_t b = 0; b < coeffs_.size(); ++b)
    if (!coeffs_[b].is_zero()) x.coeffs_[b] = fn(coeffs_[b]);
  return x;
}

std::string CliffordElem::str() const {
  std::string out;
  for (Blade b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[b].str() + ")";
    for (int h = 0; h < n_; ++h)
      if (b & (Blade{1} << h)) out += "*c" + std::to_string(h + 1);
  }
  return out.empty() ? "0" : out;
}

CliffordElem normal_order(int n, const std::vector<int>& word) {
  check_dim(n);
  Blade acc = 0;
  int sign = 1;
  for (int h : word) {
    if (h < 1 || h > n) throw std::out_of_range("generator index out of range");
    Blade g = Blade{1} << (h - 1);
    sign *= blade_sign(acc, g);
    acc ^= g;
  }
  return CliffordElem::blade(n, acc, Poly(sign));
}

Poly cliff_trace(const CliffordElem& x) {
  if (x.dim() % 2 != 0) throw std::invalid_argument("trace requires even dimension");
  return x.identity_component() * sym::TrId();
}

Poly trace_product(const CliffordElem& x, const CliffordElem& y) {
  if (x.dim() % 2 != 0) throw std::invalid_argument("trace requires even dimension");
  if (x.dim() != y.dim()) throw std::invalid_argument("Clifford dimension mismatch");
  Poly acc;
  for (Blade b = 0; b < x.blade_count(); ++b) {
    if (x.coeff(b).is_zero() || y.coeff(b).is_zero()) continue;
    Poly p = x.coeff(b) * y.coeff(b);
    acc += blade_sign(b, b) < 0 ? -p : p;
  }
  return acc * sym::TrId();
}

Rational pairing_trace(const std::vector<int>& word) {
  if (word.empty()) return 1;
  if (word.size() % 2) return 0;
  Rational acc = 0;
  for (std::size_t j = 1; j < word.size(); ++j) {
    if (word[j] != word[0]) continue;
    std::vector<int> rest;
    rest.reserve(word.size() - 2);
    for (std::size_t k = 1; k < word.size(); ++k)
      if (k != j) rest.push_back(word[k]);
    // position j+1 in 1-based numbering
    Rational t = pairing_trace(rest);
    if ((j + 1) % 2 == 0) acc -= t;
    else acc += t;
  }
  return acc;
}

CliffordMatrices::CliffordMatrices(int n) : n_(n) {
  if (n < 2 || n % 2 || n > 10) throw std::invalid_argument("matrix representation needs even n");
  int k = n / 2;
  d_ = 1 << k;
  const GaussRat I = GaussRat::i();
  const Matrix id2 = {1, 0, 0, 1};
  const Matrix sx = {0, 1, 1, 0};
  const Matrix sy = {0, -I, I, 0};
  const Matrix sz = {1, 0, 0, -1};
  auto kron = [](const Matrix& a, int da, const Matrix& b, int db) {
    Matrix out(static_cast<std::size_t>(da * db * da * db));
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int p = 0; p < db; ++p)
          for (int q = 0; q < db; ++q)
            out[(i * db + p) * da * db + (j * db + q)] = a[i * da + j] * b[p * db + q];
    return out;
  };
  for (int j = 0; j < k; ++j) {
    for (const Matrix* s : {&sx, &sy}) {
      Matrix m = {1};
      int dm = 1;
      for (int f = 0; f < k; ++f) {
        const Matrix& factor = f < j ? sz : (f == j ? *s : id2);
        m = kron(m, dm, factor, 2);
        dm *= 2;
      }
      for (auto& e : m) e *= I;
      gens_.push_back(std::move(m));
    }
  }
}

CliffordMatrices::Matrix CliffordMatrices::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(static_cast<std::size_t>(d_ * d_));
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      const GaussRat& x = a[i * d_ + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < d_; ++j)
        if (!b[k * d_ + j].is_zero()) out[i * d_ + j] += x * b[k * d_ + j];
    }
  return out;
}

CliffordMatrices::Matrix CliffordMatrices::word(const std::vector<int>& w) const {
  Matrix m(static_cast<std::size_t>(d_ * d_));
  for (int i = 0; i < d_; ++i) m[i * d_ + i] = 1;
  for (int h : w) {
    if (h < 1 || h > n_) throw std::out_of_range("generator index out of range");
    m = multiply(m, generator(h));
  }
  return m;
}

GaussRat CliffordMatrices::trace(const Matrix& m) const {
  GaussRat t;
  for (int i = 0; i < d_; ++i) t += m[i * d_ + i];
  return t;
}

Poly CliffordMatrices::trace(const CliffordElem& x,
                             const std::function<Poly(const Poly&)>& eval) const {
  if (x.dim() != n_) throw std::invalid_argument("Clifford dimension mismatch");
  Poly acc;
  for (Blade b = 0; b < x.blade_count(); ++b) {
    if (x.coeff(b).is_zero()) continue;
    std::vector<int> w;
    for (int h = 0; h < n_; ++h)
      if (b & (Blade{1} << h)) w.push_back(h + 1);
    GaussRat t = trace(word(w));
    if (!t.is_zero()) acc += eval(x.coeff(b)) * t;
  }
  return acc;
}

}  // namespace kkw
