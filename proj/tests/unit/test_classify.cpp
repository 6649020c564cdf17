#include <doctest.h>

#include "hpdet/classify.hpp"
#include "hpdet/errors.hpp"

using namespace hpdet;

TEST_CASE("classify examples") {
  const auto a = classify(4, 4, 2, 8);
  CHECK(a.functor_direction == FunctorDirection::Equivalence);
  CHECK(a.dim_xl == 3);
  CHECK(a.dim_yl == 3);
  CHECK(a.cy_x());
  CHECK(a.cy_y());
  CHECK(a.complement_count == 0);
  CHECK(!a.segre);

  const auto b = classify(5, 7, 3, 21);
  CHECK(b.functor_direction == FunctorDirection::Equivalence);
  CHECK(b.dim_xl == 5);
  CHECK(b.dim_yl == 5);
  CHECK(b.canonical_x == DivisorClass{0, 2});
  CHECK(!b.cy);
  CHECK(b.tower_exceptional_x == 210);
  CHECK(b.tower_exceptional_y == 140);

  const int d = 4;
  const auto p = classify(d, d, 1, 3);
  CHECK(p.functor_direction == FunctorDirection::YToX);
  CHECK(p.complement_count == (d - 3) * d);
  CHECK(p.weak_fano_visitor_y);
  CHECK(!p.weak_fano_visitor_x);
  CHECK(p.dim_yl == 1);

  CHECK_THROWS_AS(classify(2, 1, 1, 1), InvalidParameters);
  CHECK_THROWS_AS(classify(3, 3, 1, 0), InvalidParameters);
  CHECK_THROWS_AS(classify(3, 3, 1, 10), InvalidParameters);
}

TEST_CASE("report invariants over a box") {
  for (int m = 2; m <= 6; ++m)
    for (int n = m; n <= 6; ++n)
      for (int r = 1; r < m; ++r)
        for (int c = 1; c <= m * n; ++c) {
          const auto rep = classify(m, n, r, c);
          CHECK(rep.dim_xl - rep.dim_yl == 2 * (n * r - c));
          CHECK(rep.cy == (m == n && c == n * r));
          CHECK(rep.rational_x == (n * r > c));
          CHECK(rep.rational_y == (c > n * r));
          CHECK((rep.complement_count == 0) == (rep.functor_direction == FunctorDirection::Equivalence));
          CHECK(rep.empty_x == (rep.dim_xl < 0));
          // L <-> L^perp with r <-> m - r swaps the two sides
          if (c < m * n) {
            const auto dual = classify(m, n, m - r, m * n - c);
            CHECK(dual.dim_xl == rep.dim_yl);
            CHECK(dual.dim_yl == rep.dim_xl);
            CHECK(dual.canonical_x == rep.canonical_y);
            CHECK(dual.canonical_y == rep.canonical_x);
          }
          if (r == 1) {
            REQUIRE(rep.segre);
            CHECK(*rep.segre == segre_row(m, n, c));
            CHECK(rep.segre->rational_x == rep.rational_x);
            CHECK(rep.segre->rational_y == rep.rational_y);
            CHECK(rep.segre->cy == rep.cy);
            CHECK(rep.segre->birational_pair == (rep.functor_direction == FunctorDirection::Equivalence));
            CHECK(rep.segre->fano_visitor_x == rep.weak_fano_visitor_x);
            CHECK(rep.segre->fano_y == rep.fano_candidate_y);
          }
        }
}

TEST_CASE("segre rows") {
  const auto a = segre_row(5, 6, 4);
  CHECK(a.regime == "c<m");
  CHECK(a.fano_x);
  CHECK(a.rational_x);
  CHECK(a.fano_visitor_y);
  CHECK(!a.fano_y);
  const auto b = segre_row(3, 3, 3);
  CHECK(b.regime == "c=n");
  CHECK(b.cy);
  CHECK(b.birational_pair);
  const auto c = segre_row(4, 4, 5);
  CHECK(c.regime == "n<c");
  CHECK(c.fano_visitor_x);
  CHECK(c.rational_y);
  CHECK(c.fano_y);
  CHECK(segre_row(3, 5, 4).regime == "m<=c<n");
  CHECK(segre_row(3, 5, 8).smooth_zl_generic);
  CHECK(!segre_row(3, 5, 9).smooth_zl_generic);
}

TEST_CASE("sweeps") {
  SweepRange cy_box{2, 4, 2, 4, 1, 3, 1, 16};
  const auto cy = sweep(cy_box, SweepFilter::CY);
  CHECK(!cy.empty());
  for (const auto& rep : cy) {
    CHECK(rep.m == rep.n);
    CHECK(rep.c == rep.n * rep.r);
  }
  std::size_t expected = 0;
  for (int m = 2; m <= 4; ++m) expected += static_cast<std::size_t>(m - 1);
  CHECK(cy.size() == expected);

  SweepRange curves{3, 5, 3, 7, 1, 1, 1, 35};
  const auto cv = sweep(curves, SweepFilter::Curve);
  bool found = false;
  for (const auto& rep : cv) {
    CHECK((rep.dim_xl == 1 || rep.dim_yl == 1));
    found = found || (rep.m == 5 && rep.n == 6 && rep.r == 1 && rep.c == 4);
  }
  CHECK(found);
  for (std::size_t i = 1; i < cv.size(); ++i) {
    CHECK(std::tie(cv[i - 1].m, cv[i - 1].n, cv[i - 1].r, cv[i - 1].c) < std::tie(cv[i].m, cv[i].n, cv[i].r, cv[i].c));
  }

  const auto eq = sweep(SweepRange{5, 5, 7, 7, 3, 3, 1, 35}, SweepFilter::Equivalence);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].c == 21);
  CHECK(sweep(SweepRange{3, 3, 2, 2, 1, 1, 1, 4}, SweepFilter::All).empty());
  CHECK_THROWS_AS(sweep(SweepRange{4, 3, 2, 2, 1, 1, 1, 1}, SweepFilter::All), InvalidParameters);

  const auto withdeg = sweep(SweepRange{5, 5, 7, 7, 3, 3, 21, 21}, SweepFilter::All, true);
  REQUIRE(withdeg.size() == 1);
  CHECK(*withdeg[0].degree_x == 490);
  CHECK(*withdeg[0].degree_y == 1176);
  CHECK(!classify(5, 7, 3, 21).degree_x);
  CHECK(parse_filter("fano_candidate") == SweepFilter::FanoCandidate);
  CHECK_THROWS_AS(parse_filter("nope"), InvalidParameters);
}

TEST_CASE("residual counts") {
  CHECK(residual_counts(3, 4).residual_exceptional == 4);
  CHECK(residual_counts(3, 5).residual_exceptional == 6);
  const auto r45 = residual_counts(4, 5);
  CHECK(r45.total_exceptional == 8);
  CHECK(r45.residual_exceptional == 6);
  CHECK(residual_counts(3, 4).dual_section_empty);
  CHECK(residual_counts(3, 5).dual_section_empty);
  for (int k = 4; k <= 10; ++k)
    for (int d = 3; d < k; ++d) {
      const auto rep = residual_counts(d, k);
      CHECK(rep.total_exceptional - rep.residual_exceptional == k - d + 1);
      // the residual count equals the Y_L-side complement of the (d, d, 1, k+1) section minus one block
      if (k + 1 <= d * d) {
        const auto cls = classify(d, d, 1, k + 1);
        CHECK(cls.complement_count == rep.total_exceptional);
      }
    }
  CHECK(residual_counts(4, 4).fano_index == 1);
  CHECK_THROWS_AS(residual_counts(2, 4), InvalidParameters);
  CHECK_THROWS_AS(residual_counts(5, 4), InvalidParameters);
}
