#pragma once

// Test-only oracles, written without any of the library's Pieri or tower code.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, mpz_class>;

// Schur polynomial s_lambda(x_1..x_nvars) by Jacobi-Trudi.
Poly schur_polynomial(const std::vector<int>& lambda, int nvars);

Poly multiply(const Poly& a, const Poly& b);

// Expansion of a symmetric polynomial in Schur polynomials, read off from
// f * a_delta (coefficients of strictly decreasing exponent vectors).
std::map<std::vector<int>, mpz_class> schur_decompose(const Poly& f, int nvars);

// s_lambda * s_mu in Chow(G(m, r)): r variables, parts capped at m - r.
std::map<std::vector<int>, mpz_class> grass_product(const std::vector<int>& lambda, const std::vector<int>& mu, int m,
                                                    int r);

// Degree of the locus of m x n matrices (m <= n) of rank <= r.
mpz_class determinantal_degree(int m, int n, int r);

}  // namespace oracle
