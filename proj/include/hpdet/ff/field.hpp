#pragma once

// Small prime-field linear algebra. Elements are uint64 values in [0, p) with
// p < 2^31, so products fit in 64 bits.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hpdet::ff {

using Elem = std::uint64_t;

bool is_prime(std::uint64_t p);

// Throws InvalidParameters unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

Elem pow_mod(Elem a, std::uint64_t e, Elem p);
Elem inv_mod(Elem a, Elem p);  // a != 0

// Row-major dense matrix over F_p.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns the rank and fills pivot columns.
std::size_t row_reduce(Mat& m, Elem p, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Mat m, Elem p);
Elem det(Mat m, Elem p);  // square

// Basis of {x : m x = 0}.
std::vector<std::vector<Elem>> nullspace(Mat m, Elem p);

// Number of points of P^{v-1}(F_p); throws BudgetExceeded past `cap`.
std::uint64_t projective_count(Elem p, std::size_t v, std::uint64_t cap);

// The index-th point of P^{v-1}(F_p), normalized so its first nonzero coordinate is 1.
void projective_point(std::uint64_t index, Elem p, std::size_t v, std::vector<Elem>& out);

// Scales x so its first nonzero coordinate is 1; returns false for the zero vector.
bool normalize(std::vector<Elem>& x, Elem p);

}  // namespace hpdet::ff
