#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hpdet/chow/tower.hpp"

namespace hpdet {

using chow::Side;

// (m, n, r, c) and the side of the duality. c = 0 on side X (or c = mn on
// side Y) stands for the whole tower.
struct HPDParams {
  int m = 0;
  int n = 0;
  int r = 0;
  int c = 0;
  Side side = Side::X;

  // Throws InvalidParameters unless 0 < r < m <= n and 0 <= c <= mn.
  void validate() const;

  int tower_dim() const;
  // Number of hyperplanes cutting the section out of the tower: c on X, mn - c on Y.
  int codim() const;
  int section_dim() const { return tower_dim() - codim(); }
  int rank() const { return side == Side::X ? n * r : n * (m - r); }

  HPDParams with_side(Side s) const {
    HPDParams p = *this;
    p.side = s;
    return p;
  }
  chow::TowerHandle tower() const { return chow::tower_ring(m, n, r, side); }

  bool operator==(const HPDParams&) const = default;
};

int dim_xl(int m, int n, int r, int c);
int dim_yl(int m, int n, int r, int c);

// h H + p P, where P is the pullback of c_1(Q) (written Q on side Y).
struct DivisorClass {
  std::int64_t h = 0;
  std::int64_t p = 0;
  bool operator==(const DivisorClass&) const = default;
};

// Degree of the section in its linear span; independent of c.
mpz_class degree_section(const HPDParams& params);

DivisorClass canonical_class(const HPDParams& params);

// chi(O(a1 H + b1 P), O(a2 H + b2 P)) on the section, via Riemann-Roch on the
// tower and the Koszul resolution of the section.
mpz_class euler_pairing(const HPDParams& params, std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2);
mpz_class euler_characteristic(const HPDParams& params, std::int64_t a, std::int64_t b);

// Topological Euler characteristic of a smooth section of expected dimension.
mpz_class euler_char_top(const HPDParams& params);

// Genus of a one-dimensional section. Cross-checks 2g - 2 against the
// degree of the canonical class and throws NonIntegralResult on mismatch.
mpz_class curve_genus(const HPDParams& params);

// Intersection numbers int_section H^i P^j for i + j = dim of the section.
mpz_class section_number(const HPDParams& params, int h_power, int p_power);

struct NonisoReport {
  int m = 0, n = 0, r = 0, c = 0;
  int dimension = 0;
  // f(a) = int_{X_L} (H + aP)^D, ascending powers of a.
  std::vector<mpz_class> deg_x_poly;
  mpz_class deg_y;
  // Every integer root of f(a) - deg_y lies in [-cauchy_bound, cauchy_bound];
  // all integer candidates there were tested, so integer_solutions is complete.
  mpz_class cauchy_bound;
  std::vector<mpz_class> integer_solutions;
  std::int64_t range_lo = 0, range_hi = 0;
  std::vector<mpz_class> solutions_in_range;
  bool identically_equal = false;  // f(a) - deg_y is the zero polynomial
  bool operator==(const NonisoReport&) const = default;
};

// Throws InvalidParameters unless dim X_L = dim Y_L >= 0.
NonisoReport nonisomorphism_scan(int m, int n, int r, int c, std::int64_t lo, std::int64_t hi);

}  // namespace hpdet
