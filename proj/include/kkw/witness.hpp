#pragma once

#include "kkw/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kkw {

using RatMatrix = std::vector<std::vector<Rational>>;  // 0-based [row][col]

RatMatrix identity_matrix(int n);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

struct Involution {
  RatMatrix A;
  std::vector<RatMatrix> DA;  // DA[j-1] = d/dx_j of A at x0
};

// A(t) = I - 2 v(t) v(t)^T / (v(t)^T v(t)) with v(t) = v0 + t w_j in direction j.
Involution householder_involution(const std::vector<Rational>& v0,
                                  const std::vector<std::vector<Rational>>& w);

// A = R D R^T with R orthogonal; DA_j = [K_j, A] for antisymmetric K_j (tangent to the
// involution manifold).
Involution conjugated_involution(const RatMatrix& R, const std::vector<int>& signs,
                                 const std::vector<RatMatrix>& K);

struct SampleSpec {
  int minus_count = -1;       // number of -1 eigenvalues of A; -1 picks one from the seed
  int normal_eigen = 0;       // +1 / -1 forces J(e_n) = +-e_n
  bool zero_torsion = false;
  bool zero_gradient = false;  // DA = 0, NablaJ = 0, Nabla2J = 0
};

struct SamplePoint {
  int n = 0;
  std::uint64_t seed = 0;
  RatMatrix A;
  std::vector<RatMatrix> DA;      // [j-1][p-1][h-1]
  Rational H1;
  std::vector<Rational> Tor;      // flat n^3, totally antisymmetric
  std::vector<Rational> Riem;     // flat n^4, pair symmetries
  Rational s;
  std::vector<RatMatrix> NablaJ;  // [alpha-1][j-1][h-1], entries of (nabla_alpha J) e_j
  RatMatrix Nabla2J;              // [nu-1][h-1]

  const Rational& tor(int v, int s_, int t) const;
  const Rational& riem(int i, int j, int k, int l) const;

  static SamplePoint generate(int n, std::uint64_t seed, const SampleSpec& spec = {});
};

Involution sample_involution(int n, std::uint64_t seed, const SampleSpec& spec = {});
std::vector<Rational> sample_torsion(int n, std::uint64_t seed);
std::vector<Rational> antisymmetrize(int n, const std::vector<Rational>& t);

// Families of parameter symbols that an evaluation substitutes.
enum Family : unsigned {
  FamA = 1u << 0,
  FamDA = 1u << 1,
  FamH1 = 1u << 2,
  FamTor = 1u << 3,
  FamRiem = 1u << 4,
  FamScalar = 1u << 5,
  FamNablaJ = 1u << 6,
  FamNabla2J = 1u << 7,
  FamAll = 0xFFu,
};

// Substitutes the selected families; TrId, PiConst, OmegaArea and xi stay formal.
Poly evaluate(const Poly& p, const SamplePoint& s, unsigned families = FamAll);

// Full evaluation: every parameter symbol in p must be assigned by s.
Poly poly_eval(const Poly& p, const SamplePoint& s);

struct IdentityVerdict {
  bool holds = true;
  int samples = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::uint64_t> failing_seeds;
  Poly first_residual;
};

IdentityVerdict check_identity(const Poly& lhs, const Poly& rhs, int n, int k, std::uint64_t seed,
                               const SampleSpec& spec = {});

struct DiffReport {
  std::map<std::string, Poly> groups;  // family name -> residual
  bool empty() const { return groups.empty(); }
};

std::string family_of(const Monomial& m);
DiffReport poly_diff_report(const Poly& lhs, const Poly& rhs);

// Deterministic per-sample seed derivation.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace kkw
