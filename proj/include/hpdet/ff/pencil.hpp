#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hpdet/ff/field.hpp"

namespace hpdet::ff {

// Matrices are indexed with rows by a basis of V (n of them) and columns by a
// basis of U (m of them), i.e. M : V -> U^dual.
//
// A pencil is an n x m matrix of linear forms in v variables:
// entry (i, j) is sum_k coeffs[(i * m + j) * v + k] x_k.
struct FpMatrixPencil {
  Elem p = 0;
  int m = 0, n = 0;
  std::size_t v = 0;
  std::vector<Elem> coeffs;

  Elem coeff(int i, int j, std::size_t k) const { return coeffs[(static_cast<std::size_t>(i) * m + j) * v + k]; }
  Mat evaluate(const std::vector<Elem>& x) const;
  Mat slice(std::size_t k) const;  // the k-th basis matrix
};

// Reproducible generator for (seed, p, stream); the streams of different
// primes and retries are independent.
std::mt19937_64 make_rng(std::uint64_t seed, Elem p, std::uint64_t stream);

// Uniform random pencil. Throws InvalidParameters for a bad prime, m, n < 1 or v < 1.
FpMatrixPencil sample_pencil(int m, int n, std::size_t v, Elem p, std::uint64_t seed);

FpMatrixPencil pencil_from_basis(int m, int n, const std::vector<Mat>& basis, Elem p);

// A c-dimensional space L of n x m matrices and its orthogonal complement
// under the trace pairing <A, B> = sum_ij A_ij B_ij.
struct LinearSection {
  Elem p = 0;
  int m = 0, n = 0;
  std::vector<Mat> basis;  // spans L, linearly independent
  std::vector<Mat> perp;   // spans L^perp, dimension mn - c

  // Z^L: matrices in L (v = c). Z_L: matrices in L^perp (v = mn - c).
  FpMatrixPencil upper() const { return pencil_from_basis(m, n, basis, p); }
  FpMatrixPencil lower() const { return pencil_from_basis(m, n, perp, p); }
};

// Rejects dependent draws (the coefficient map must be injective) and redraws.
LinearSection sample_section(int m, int n, int c, Elem p, std::uint64_t seed, std::uint64_t stream = 0);
// Throws InvalidParameters when the matrices are dependent.
LinearSection section_from_basis(int m, int n, const std::vector<Mat>& basis, Elem p);

// Whether the basis matrices of the pencil are linearly independent.
bool injective(const FpMatrixPencil& pencil);

}  // namespace hpdet::ff
