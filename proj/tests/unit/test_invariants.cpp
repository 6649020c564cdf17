#include <doctest.h>

#include "hpdet/errors.hpp"
#include "hpdet/invariants.hpp"
#include "oracles/schur_oracle.hpp"

using namespace hpdet;

namespace {
HPDParams X(int m, int n, int r, int c) { return {m, n, r, c, Side::X}; }
HPDParams Y(int m, int n, int r, int c) { return {m, n, r, c, Side::Y}; }

mpz_class binom(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}
}  // namespace

TEST_CASE("dimensions") {
  CHECK(X(5, 7, 3, 21).section_dim() == 5);
  CHECK(Y(5, 7, 3, 21).section_dim() == 5);
  CHECK(Y(5, 6, 1, 4).section_dim() == 1);
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 6; ++n)
      for (int r = 1; r < m; ++r)
        for (int c = 0; c <= m * n; ++c) {
          CHECK(X(m, n, r, c).section_dim() == dim_xl(m, n, r, c));
          CHECK(Y(m, n, r, c).section_dim() == dim_yl(m, n, r, c));
          CHECK(dim_xl(m, n, r, c) - dim_yl(m, n, r, c) == 2 * (n * r - c));
        }
  CHECK_THROWS_AS(X(3, 2, 1, 1).validate(), InvalidParameters);
  CHECK_THROWS_AS(X(3, 3, 1, 10).validate(), InvalidParameters);
}

TEST_CASE("degrees") {
  CHECK(degree_section(X(5, 7, 3, 21)) == 490);
  CHECK(degree_section(Y(5, 7, 3, 21)) == 1176);
  CHECK(degree_section(X(2, 2, 1, 0)) == 2);
  CHECK(degree_section(X(2, 2, 1, 2)) == 2);
  CHECK_THROWS_AS(degree_section(X(2, 2, 1, 4)), InvalidParameters);
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 5; ++n)
      for (int r = 1; r < m; ++r) {
        CHECK(degree_section(X(m, n, r, 1)) == oracle::determinantal_degree(m, n, r));
        CHECK(degree_section(X(m, n, r, 0)) == degree_section(Y(m, n, m - r, m * n)));
      }
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(X(5, 7, 3, 21)) == DivisorClass{0, 2});
  CHECK(canonical_class(Y(5, 7, 3, 21)) == DivisorClass{0, 2});
  CHECK(canonical_class(X(4, 4, 2, 8)) == DivisorClass{0, 0});
  CHECK(canonical_class(Y(4, 4, 2, 8)) == DivisorClass{0, 0});
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 6; ++n)
      for (int c = 1; c <= m * n; ++c) {
        // product coordinates O(x, y) = x H + (y - x) P on P^{n-1} x P^{m-1}
        const auto k = canonical_class(X(m, n, 1, c));
        CHECK(k.h == c - n);
        CHECK(k.h + k.p == c - m);
        const auto kx = canonical_class(X(m, n, 2 < m ? 2 : 1, c));
        const auto ky = canonical_class(Y(m, n, 2 < m ? 2 : 1, c));
        CHECK(kx.h == -ky.h);
        CHECK(kx.p == ky.p);
      }
}

TEST_CASE("canonical class against the Chern class of the tower") {
  for (auto [m, n, r] : {std::tuple{2, 3, 1}, {3, 3, 2}, {3, 4, 1}})
    for (Side side : {Side::X, Side::Y}) {
      HPDParams p{m, n, r, side == Side::X ? 0 : m * n, side};
      const auto k = canonical_class(p);
      const auto c1 = chow::tangent_chern(p.tower()).part(1);
      auto expect = chow::TowerElement::hyperplane(p.tower()) * mpz_class(-k.h) +
                    chow::TowerElement::p_class(p.tower()) * mpz_class(-k.p);
      CHECK(c1 == expect);
    }
}

TEST_CASE("Euler pairings") {
  CHECK(euler_pairing(X(2, 2, 1, 0), 0, 0, 0, 0) == 1);
  // P^1 x P^1: chi(O(x, y)) = (x + 1)(y + 1) with O(x, y) = xH + (y - x)P
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) CHECK(euler_characteristic(X(2, 2, 1, 0), x, y - x) == (x + 1) * (y + 1));
  // P^2 x P^2 minus nothing: chi(O(x, y)) = C(x+2,2) C(y+2,2)
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y)
      CHECK(euler_characteristic(X(3, 3, 1, 0), x, y - x) == binom(x + 2, 2) * binom(y + 2, 2));
  // 5 x 6 linear matrix on P^3: maximal minors cut a curve with Hilbert-Burch
  // resolution 0 -> O(-6)^5 -> O(-5)^6 -> I_C -> 0
  auto chi_p3 = [](int t) { return mpz_class((t + 1) * (t + 2) * (t + 3) / 6); };
  for (int t = -1; t <= 3; ++t)
    CHECK(euler_characteristic(Y(5, 6, 1, 4), t, 0) == chi_p3(t) - 6 * chi_p3(t - 5) + 5 * chi_p3(t - 6));
  CHECK(euler_characteristic(Y(5, 6, 1, 4), 0, 0) == -25);
  for (int a = -2; a <= 2; ++a) CHECK(euler_pairing(Y(5, 6, 1, 4), a, 1, a, 1) == -25);
  // quadric surface section of P^1 x P^1 x ... : a (1,1) divisor on P^1 x P^1 is a conic
  CHECK(euler_characteristic(X(2, 2, 1, 1), 0, 0) == 1);
  CHECK(euler_characteristic(X(2, 2, 1, 1), 1, 0) == 3);
}

TEST_CASE("topological Euler characteristics") {
  CHECK(euler_char_top(Y(3, 3, 1, 3)) == 0);
  CHECK(euler_char_top(Y(5, 6, 1, 4)) == -50);
  CHECK(euler_char_top(X(2, 2, 1, 0)) == 4);
  CHECK(euler_char_top(X(3, 4, 2, 0)) == 8 * 3);
  // conic in P^1 x P^1
  CHECK(euler_char_top(X(2, 2, 1, 1)) == 2);
  // sextic del Pezzo surface
  CHECK(euler_char_top(X(3, 3, 1, 2)) == 6);
}

TEST_CASE("curve genus") {
  CHECK(curve_genus(Y(5, 6, 1, 4)) == 26);
  CHECK(curve_genus(Y(3, 3, 1, 3)) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(curve_genus(Y(2, n, 1, n + 1)) == 0);
  CHECK_THROWS_AS(curve_genus(Y(3, 3, 1, 4)), InvalidParameters);
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 6; ++n)
      for (int r = 1; r < m; ++r)
        for (int c = 0; c <= m * n; ++c)
          for (Side side : {Side::X, Side::Y}) {
            HPDParams p{m, n, r, c, side};
            if (p.section_dim() != 1) continue;
            const auto g = curve_genus(p);
            CHECK(2 - 2 * g == euler_char_top(p));
          }
}

TEST_CASE("non-isomorphism scan") {
  const auto rep = nonisomorphism_scan(5, 7, 3, 21, -10, 10);
  CHECK(rep.dimension == 5);
  CHECK(rep.deg_x_poly.front() == 490);
  CHECK(rep.deg_y == 1176);
  CHECK(rep.integer_solutions.empty());
  CHECK(rep.solutions_in_range.empty());
  CHECK(rep.cauchy_bound > 0);
  const auto self = nonisomorphism_scan(4, 4, 2, 8, -5, 5);
  CHECK(self.deg_x_poly.front() == self.deg_y);
  CHECK(std::find(self.solutions_in_range.begin(), self.solutions_in_range.end(), mpz_class(0)) !=
        self.solutions_in_range.end());
  CHECK_THROWS_AS(nonisomorphism_scan(5, 7, 3, 20, -1, 1), InvalidParameters);
}
