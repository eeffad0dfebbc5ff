#pragma once

#include "kkw/symbols.hpp"

#include <array>
#include <string>
#include <vector>

namespace kkw {

enum class CaseKind { aI, aII, aIII, b, c };

std::string to_string(CaseKind k);
CaseKind parse_case(const std::string& s);

struct CaseId {
  int dim = 4;
  CaseKind kind = CaseKind::aI;
  std::string part = "all";  // B0, B1, B2, Q0, Q1, Q2 or all; only for b and c

  std::string label() const;
};

// Which closed form feeds sigma_-2 and sigma_-4.
enum class SymbolSource { Composition, Lemma };

struct ProvenanceEntry {
  std::string term;
  Poly residue;  // line integral over xi_n, before the sphere integral
  Poly value;    // after the sphere integral, prefactor included
};

struct CaseResult {
  std::string label;
  Poly value;
  std::vector<ProvenanceEntry> provenance;
};

// A traced integrand term with its combinatorial prefactor folded in.
struct IntegrandTerm {
  std::string term;
  XiRational integrand;
};

class BoundaryPipe {
public:
  BoundaryPipe(PointData data, SymbolSource source = SymbolSource::Composition);

  int dim() const { return bank_.dim(); }
  const SymbolBank& bank() const { return bank_; }

  std::vector<IntegrandTerm> case_terms(const CaseId& id) const;
  XiRational case_integrand(const CaseId& id) const;
  CaseResult compute_psi(const CaseId& id) const;
  CaseResult sum_boundary() const;
  // Psi1+Psi2+Psi3, Psi4, Psi5, then Psi4 and Psi5 per part.
  std::vector<CaseResult> partial_sums() const;

  // Parts of case b or c in this dimension.
  std::vector<std::string> parts(CaseKind kind) const;

private:
  void validate(const CaseId& id) const;

  SymbolBank bank_;
  SymbolSource source_;
  JetSymbol q_m1_;
  JetSymbol left_;        // sigma_-1 in dimension 4, sigma_-3 in dimension 6
  SymbolParts sigma_m2_;  // B parts
  SymbolParts sigma_m4_;  // Q parts, dimension 6 only
};

// All (r, l, k, j, |alpha|) with r - k - |alpha| + l - j - 1 = -n, r <= -1, l <= p2 and
// k, j, |alpha| >= 0, where p2 = -1 for n = 4 and -3 for n = 6.
std::vector<std::array<int, 5>> enumerate_case_tuples(int n);

// Reference closed forms in units of tr[id] pi Omega_{n-1}, with a_l^i = A(i, l) and the
// boundary nabla J model of PointData. The a-sum and the b and c cases are dimension 6 only.
Poly reference_a_sum(const PointData& d);
Poly reference_psi(CaseKind kind, const PointData& d);
// 0 in dimension 4; -(1/16)(1 - a_n^n^2) h'(0) tr[id] pi Omega_5 in dimension 6 (tr[id] = 8).
Poly reference_total(const PointData& d);

// tr[id] = 2^{n/2} and the unit xi'-sphere area in terms of the formal pi.
Poly substitute_constants(const Poly& p, int n);

}  // namespace kkw
