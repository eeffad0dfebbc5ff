#pragma once

#include "kkw/clifford.hpp"
#include "kkw/witness.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kkw {

// Pointwise data of a closed almost product manifold at x0 in normal coordinates.
struct InteriorData {
  int n = 0;
  std::vector<Poly> a;    // a[(p-1)n + h-1] = A(p,h), J(e_p) = sum_h A(p,h) e_h
  std::vector<Poly> tor;  // tor[((v-1)n + s-1)n + t-1]
  std::vector<Poly> riem;
  std::vector<Poly> nj;   // nj[((al-1)n + j-1)n + h-1]: e_h component of (nabla_al J) e_j
  std::vector<Poly> n2j;  // n2j[(nu-1)n + h-1]: e_h component of the second-derivative combination
  Poly s;

  const Poly& A(int p, int h) const { return a[(p - 1) * n + h - 1]; }
  const Poly& T(int v, int s_, int t) const { return tor[((v - 1) * n + s_ - 1) * n + t - 1]; }
  const Poly& R(int i, int j, int k, int l) const {
    return riem[(((i - 1) * n + j - 1) * n + k - 1) * n + l - 1];
  }
  const Poly& NJ(int al, int j, int h) const { return nj[((al - 1) * n + j - 1) * n + h - 1]; }
  const Poly& N2J(int nu, int h) const { return n2j[(nu - 1) * n + h - 1]; }

  std::vector<Poly> je(int j) const;               // J(e_j)
  std::vector<Poly> nabla_je(int al, int j) const;  // (nabla_al J) e_j
  std::vector<Poly> n2je(int nu) const;

  static InteriorData symbolic(int n);
  // Families not selected stay symbolic.
  static InteriorData from_sample(const SamplePoint& s, unsigned families = FamAll);
  InteriorData without_torsion() const;
};

// E at x0: Clifford part plus the scalar multiple of the identity.
struct InteriorExpr {
  int n = 0;
  CliffordElem clifford_part;
  Poly scalar_part;
  std::vector<std::pair<std::string, CliffordElem>> terms;  // named pieces of clifford_part

  CliffordElem total() const;
};

// T_J = 1/4 sum T(e_j,e_l,e_t) c[J(e_j)] c(e_l) c(e_t)
CliffordElem torsion_clifford(const InteriorData& d);

InteriorExpr build_E(const InteriorData& d);
InteriorExpr build_E(int n);

// (n-2) pi^{n/2} / (n/2-1)!
Poly interior_prefactor(int n);

// Prefactor times cliff_trace(-s/6 + E); TrId stays formal.
Poly interior_integrand(const InteriorData& d);
Poly interior_integrand(int n);

// Closed-form integrand times 2^{n/2} and the prefactor.
Poly theorem_2_1_target(const InteriorData& d);
Poly theorem_2_1_target(int n);

// Per-term pieces of the closed-form bracket, without 2^{n/2} and the prefactor.
std::vector<std::pair<std::string, Poly>> target_terms(const InteriorData& d);

struct InteriorCheck {
  bool holds = true;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::uint64_t> failing_seeds;
  // Residual at the first failing sample with torsion kept symbolic, grouped by family.
  DiffReport diff;
};

InteriorCheck check_theorem_2_1(int n, int samples, std::uint64_t seed, const SampleSpec& spec = {});

// A trace evaluation: cliff_trace of a Clifford sum against its metric contraction.
struct TraceEvaluation {
  std::string id;
  Poly lhs;
  Poly rhs;
};

std::vector<TraceEvaluation> trace_evaluations(const InteriorData& d);

}  // namespace kkw
