#pragma once

#include "kkw/witness.hpp"
#include "kkw/xi_line.hpp"

#include <string>
#include <vector>

namespace kkw {

Poly xi_norm2(int n);          // sum_i xi_i^2
Poly xi_tangent_norm2(int n);  // sum_{i<n} xi_i^2

// Homogeneous symbol N / |xi|^{2k}, N Clifford valued and polynomial in xi_1..xi_n.
struct HomSymbol {
  CliffordElem num;
  int k = 0;

  HomSymbol() = default;
  HomSymbol(CliffordElem numerator, int power = 0) : num(std::move(numerator)), k(power) {}
  static HomSymbol zero(int n) { return HomSymbol(CliffordElem(n)); }

  int dim() const { return num.dim(); }
  bool is_zero() const { return num.dim() == 0 || num.is_zero(); }

  HomSymbol& operator+=(const HomSymbol& o);
  HomSymbol& operator-=(const HomSymbol& o) { return *this += -o; }
  friend HomSymbol operator+(HomSymbol a, const HomSymbol& b) { return a += b; }
  friend HomSymbol operator-(HomSymbol a, const HomSymbol& b) { return a -= b; }
  friend HomSymbol operator*(const HomSymbol& a, const HomSymbol& b);
  friend HomSymbol operator*(HomSymbol a, const GaussRat& c);
  friend HomSymbol operator*(HomSymbol a, const Poly& c);
  HomSymbol operator-() const;

  HomSymbol d_xi(int j) const;
  // Restriction to |xi'| = 1 as a function of xi_n.
  XiRational restrict() const;
  // Numerator over |xi|^{2k'} for k' >= k.
  CliffordElem numerator_over(int k2) const;
};

// Value and first-order x-jets at x0; an empty jet list means x-independent.
struct JetSymbol {
  HomSymbol value;
  std::vector<HomSymbol> dx;  // dx[j-1] = d/dx_j at x0

  JetSymbol() = default;
  explicit JetSymbol(HomSymbol v) : value(std::move(v)) {}

  int dim() const { return value.dim(); }
  HomSymbol jet(int j) const;
  XiRational restricted() const { return value.restrict(); }
  XiRational jet_restricted(int j) const { return jet(j).restrict(); }

  JetSymbol& operator+=(const JetSymbol& o);
  friend JetSymbol operator+(JetSymbol a, const JetSymbol& b) { return a += b; }
  friend JetSymbol operator*(const JetSymbol& a, const JetSymbol& b);
  friend JetSymbol operator*(JetSymbol a, const GaussRat& c);
  JetSymbol operator-() const;
};

// Parameters at x0: either symbols or sample values.
struct PointData {
  int n = 0;
  std::vector<Poly> a;    // a[(p-1)n + h-1] = A(p,h), J(dx_p) = sum_h A(p,h) dx_h
  std::vector<Poly> da;   // da[((j-1)n + p-1)n + h-1] = d/dx_j A(p,h)
  Poly h1;
  std::vector<Poly> tor;  // tor[((v-1)n + s-1)n + t-1]

  const Poly& A(int p, int h) const { return a[(p - 1) * n + h - 1]; }
  const Poly& DA(int p, int h, int j) const { return da[((j - 1) * n + p - 1) * n + h - 1]; }
  const Poly& T(int v, int s, int t) const { return tor[((v - 1) * n + s - 1) * n + t - 1]; }

  // Coefficient of e_h in (nabla_alpha J) e_j at the boundary point: DA_alpha + [w_alpha, A],
  // w_alpha the Levi-Civita connection matrix of the collar metric at x0.
  Poly boundary_nabla_j(int alpha, int j, int h) const;

  static PointData symbolic(int n);
  // Families not selected stay symbolic.
  static PointData from_sample(const SamplePoint& s, unsigned families = FamAll);
  PointData without_torsion() const;
};

// Named tagged parts whose sum is the symbol.
struct SymbolParts {
  std::vector<std::string> names;
  std::vector<HomSymbol> parts;
  HomSymbol total() const;
  const HomSymbol& part(const std::string& name) const;
};

enum class OperatorKind { D, Dinv, Dcube, DcubeInv };

class SymbolBank {
public:
  explicit SymbolBank(PointData data);

  int dim() const { return d_.n; }
  const PointData& data() const { return d_; }

  // c[J(w)] for the covector sum_p w_p dx_p.
  CliffordElem c_j(const std::vector<Poly>& w) const;
  CliffordElem c_j_dx(int p) const;  // c[J(dx_p)]
  JetSymbol c_j_xi() const;          // c[J(xi)] with jets
  JetSymbol xi2() const;             // |xi|^2 with jets
  JetSymbol inv_xi2(int k) const;    // |xi|^{-2k} with jets

  CliffordElem t_j() const;  // 1/4 sum T(j,l,t) c[J(e_j)] c_l c_t

  // sigma_1(D), sigma_0(D) split as S0 (metric), TJ3 (three-vector torsion), TJ1 (vector torsion).
  JetSymbol p1() const;
  SymbolParts sigma0() const;

  JetSymbol q_m1() const;
  SymbolParts q_m2_lemma() const;    // B0, B1, B2
  SymbolParts q_m2_derived() const;  // same split from the composition identity

  JetSymbol p3() const;
  SymbolParts p2() const;  // T1..T7
  JetSymbol q_m3() const;
  SymbolParts q_m4_lemma() const;    // Q0, Q1, Q2
  SymbolParts q_m4_derived() const;

  // Closed form (operator, order).
  JetSymbol build(OperatorKind op, int order) const;

private:
  // -q [p_next q + sum_j d_{xi_j} p_top (-i) d_{x_j} q], for one part of p_next.
  HomSymbol next_inverse(const JetSymbol& p_top, const HomSymbol& p_next, const JetSymbol& q_top,
                         bool with_jet_term) const;
  PointData d_;
};

// Graded symbol list: entry i has order top - i.
struct GradedSymbol {
  int top = 0;
  std::vector<JetSymbol> grades;
  const JetSymbol* grade(int order) const;
};

// Grade `target` of p o q with first-order x-jets: sum over |alpha| <= 1 of
// d_xi^alpha p_a D_x^alpha q_b, D_x = -i d_x.
HomSymbol compose_symbols(const GradedSymbol& p, const GradedSymbol& q, int target);

}  // namespace kkw
