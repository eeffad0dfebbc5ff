#pragma once

#include "kkw/poly.hpp"

#include <vector>

namespace kkw {

// Integral of prod_j xi_j^alpha_j over the unit sphere in R^m, as a multiple of Omega_m.
Rational sphere_moment_ratio(const std::vector<int>& alpha, int m);
Poly sphere_moment(const std::vector<int>& alpha, int m);

// Integrates the xi_1..xi_m dependence of p over |xi'| = 1; other symbols pass through.
// Throws if p involves xi_k with k > m.
Poly sphere_integrate(const Poly& p, int m);

}  // namespace kkw
