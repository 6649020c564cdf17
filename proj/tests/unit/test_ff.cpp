#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "hpdet/errors.hpp"
#include "hpdet/ff/verify.hpp"

using namespace hpdet;
using namespace hpdet::ff;

namespace {

// Brute-force rank: largest k with a nonzero k x k minor (cofactor expansion).
Elem brute_det(const std::vector<std::vector<Elem>>& a, Elem p) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Elem out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Elem>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Elem> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(row);
    }
    const Elem t = a[0][j] * brute_det(sub, p) % p;
    out = (j % 2 ? out + p - t : out + t) % p;
  }
  return out;
}

int brute_rank(const Mat& m, Elem p) {
  const std::size_t lim = std::min(m.rows, m.cols);
  int best = 0;
  for (std::size_t k = 1; k <= lim; ++k) {
    bool found = false;
    for (std::uint32_t rs = 0; rs < (1U << m.rows) && !found; ++rs) {
      if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
      for (std::uint32_t cs = 0; cs < (1U << m.cols) && !found; ++cs) {
        if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
        std::vector<std::vector<Elem>> sub;
        for (std::size_t i = 0; i < m.rows; ++i) {
          if (!(rs >> i & 1)) continue;
          std::vector<Elem> row;
          for (std::size_t j = 0; j < m.cols; ++j)
            if (cs >> j & 1) row.push_back(m(i, j));
          sub.push_back(row);
        }
        found = brute_det(sub, p) != 0;
      }
    }
    if (!found) break;
    best = static_cast<int>(k);
  }
  return best;
}

// Strata over all nonzero affine vectors, divided by p - 1.
std::map<int, std::uint64_t> brute_strata(const FpMatrixPencil& pen) {
  std::map<int, std::uint64_t> affine;
  std::vector<Elem> x(pen.v, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pen.v) {
      if (std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; })) return;
      ++affine[brute_rank(pen.evaluate(x), pen.p)];
      return;
    }
    for (Elem a = 0; a < pen.p; ++a) {
      x[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  for (auto& [r, c] : affine) c /= (pen.p - 1);
  return affine;
}

std::vector<Mat> unit_basis(int m, int n) {
  std::vector<Mat> out;
  for (int e = 0; e < m * n; ++e) {
    Mat w(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    w.a[static_cast<std::size_t>(e)] = 1;
    out.push_back(w);
  }
  return out;
}

// Tangent-space criterion at a point of exact rank r: the rank of
// (y_a^T C_k x_b) over kernel vectors x_b and cokernel vectors y_a.
int tangent_rank(const FpMatrixPencil& pen, const std::vector<Elem>& x, int r) {
  const Elem p = pen.p;
  const Mat a = pen.evaluate(x);
  if (brute_rank(a, p) != r) return -1;
  const auto ker = nullspace(a, p);
  Mat at(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) at(j, i) = a(i, j);
  const auto coker = nullspace(at, p);
  Mat t(ker.size() * coker.size(), pen.v);
  std::size_t row = 0;
  for (const auto& y : coker)
    for (const auto& xb : ker) {
      for (std::size_t k = 0; k < pen.v; ++k) {
        Elem s = 0;
        for (int i = 0; i < pen.n; ++i)
          for (int j = 0; j < pen.m; ++j) s = (s + y[static_cast<std::size_t>(i)] * pen.coeff(i, j, k) % p * xb[static_cast<std::size_t>(j)]) % p;
        t(row, k) = s;
      }
      ++row;
    }
  return static_cast<int>(rank(t, p));
}

}  // namespace

TEST_CASE("prime field linear algebra agrees with brute force") {
  for (Elem p : {2ULL, 3ULL, 7ULL}) {
    auto gen = make_rng(11, p, 0);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + gen() % 4, cols = 1 + gen() % 4;
      Mat m(rows, cols);
      for (auto& e : m.a) e = gen() % (trial % 3 == 0 ? 2 : p);
      CHECK(static_cast<int>(rank(m, p)) == brute_rank(m, p));
      const auto ker = nullspace(m, p);
      CHECK(ker.size() == cols - rank(m, p));
      for (const auto& x : ker)
        for (std::size_t i = 0; i < rows; ++i) {
          Elem s = 0;
          for (std::size_t j = 0; j < cols; ++j) s = (s + m(i, j) * x[j]) % p;
          CHECK(s == 0);
        }
      if (rows == cols) {
        std::vector<std::vector<Elem>> rowsv(rows);
        for (std::size_t i = 0; i < rows; ++i) rowsv[i].assign(m.a.begin() + static_cast<long>(i * cols), m.a.begin() + static_cast<long>((i + 1) * cols));
        CHECK(det(m, p) == brute_det(rowsv, p));
      }
    }
  }
  CHECK_THROWS_AS(require_prime(9), InvalidParameters);
  CHECK_THROWS_AS(require_prime(1ULL << 31), InvalidParameters);
}

TEST_CASE("projective enumeration lists each point once") {
  for (Elem p : {2ULL, 3ULL, 5ULL}) {
    for (std::size_t v = 1; v <= 4; ++v) {
      const auto total = projective_count(p, v, kHardBudget);
      std::set<std::vector<Elem>> seen;
      std::vector<Elem> x;
      for (std::uint64_t i = 0; i < total; ++i) {
        projective_point(i, p, v, x);
        auto y = x;
        REQUIRE(normalize(y, p));
        CHECK(y == x);
        seen.insert(x);
      }
      CHECK(seen.size() == total);
      CHECK(total == (static_cast<std::uint64_t>(std::pow(p, v)) - 1) / (p - 1));
    }
  }
  CHECK_THROWS_AS(projective_count(11, 30, kHardBudget), BudgetExceeded);
}

TEST_CASE("pencils are reproducible and sections are injective") {
  CHECK(sample_pencil(3, 4, 5, 7, 42).coeffs == sample_pencil(3, 4, 5, 7, 42).coeffs);
  CHECK(sample_pencil(3, 4, 5, 7, 42).coeffs != sample_pencil(3, 4, 5, 7, 43).coeffs);
  CHECK_THROWS_AS(sample_pencil(2, 2, 4, 8, 1), InvalidParameters);
  CHECK_THROWS_AS(sample_pencil(2, 2, 0, 7, 1), InvalidParameters);
  const auto s = sample_section(3, 4, 5, 3, 9);
  CHECK(s.basis.size() == 5);
  CHECK(s.perp.size() == 7);
  CHECK(injective(s.upper()));
  CHECK(injective(s.lower()));
  for (const auto& a : s.basis)
    for (const auto& b : s.perp) {
      Elem t = 0;
      for (std::size_t e = 0; e < a.a.size(); ++e) t = (t + a.a[e] * b.a[e]) % 3;
      CHECK(t == 0);
    }
  CHECK_THROWS_AS(section_from_basis(2, 2, {unit_basis(2, 2)[0], unit_basis(2, 2)[0]}, 5), InvalidParameters);
}

TEST_CASE("Segre quadric: the full 2x2 space has (p+1)^2 rank-one points") {
  for (Elem p : {3ULL, 5ULL, 7ULL}) {
    const auto full = section_from_basis(2, 2, unit_basis(2, 2), p).upper();
    const auto sc = rank_strata_count(full);
    CHECK(sc.at_most(1) == (p + 1) * (p + 1));
    CHECK(sc.at_most(0) == 0);
    CHECK(sc.total() == (p * p * p * p - 1) / (p - 1));
    // a random injective 4-dimensional pencil is the same space in new coordinates
    const auto gen = sample_section(2, 2, 4, p, 5).upper();
    CHECK(rank_strata_count(gen).at_most(1) == (p + 1) * (p + 1));
  }
}

TEST_CASE("strata match a brute-force minors count") {
  struct Case {
    int m, n;
    std::size_t v;
    Elem p;
  };
  for (const auto& c : {Case{2, 2, 3, 5}, Case{2, 3, 4, 3}, Case{3, 3, 4, 3}, Case{2, 4, 3, 7}}) {
    const auto pen = sample_pencil(c.m, c.n, c.v, c.p, 17);
    const auto sc = rank_strata_count(pen);
    auto brute = brute_strata(pen);
    for (auto& [r, cnt] : sc.by_rank) {
      CAPTURE(r);
      CHECK(cnt == brute[r]);
    }
    CHECK(sc.total() == projective_count(c.p, c.v, kHardBudget));
    for (int r = 0; r < 3; ++r) CHECK(sc.at_most(r) <= sc.at_most(r + 1));
    CHECK(sc.at_most(std::min(c.m, c.n)) == sc.total());
    CHECK(rank_locus_points(pen, 1).size() == sc.at_most(1));
  }
  CHECK_THROWS_AS(rank_strata_count(sample_pencil(3, 3, 9, 11, 1), 1000), BudgetExceeded);
}

TEST_CASE("dimension estimate") {
  const std::vector<Elem> ps{3, 5, 7, 11};
  std::vector<std::uint64_t> quad;
  for (auto p : ps) quad.push_back((p + 1) * (p + 1));
  auto d = dimension_estimate(ps, quad, 3, 2);
  CHECK(d.status == "ok");
  CHECK(d.dimension == 2);
  CHECK(d.matches);
  CHECK_FALSE(dimension_estimate(ps, quad, 3, 1).matches);

  auto e = dimension_estimate(ps, {0, 0, 0, 0}, 3, -1);
  CHECK(e.status == "empty");
  CHECK(e.matches);
  CHECK_FALSE(dimension_estimate(ps, {0, 0, 0, 0}, 3, 0).matches);
  CHECK(dimension_estimate(ps, {0, 6, 0, 12}, 3, 1).status == "inconclusive");
  // one special L among four primes is outvoted
  CHECK(dimension_estimate({5, 7, 11, 13}, {11, 8, 12, 14}, 3, 1).dimension == 1);
  CHECK(dimension_estimate({5, 7, 11, 13}, {36, 8, 12, 14}, 3, 1).matches);
  CHECK(dimension_estimate({5, 7, 11, 13}, {0, 0, 12, 0}, 3, -1).status == "empty");
  CHECK(dimension_estimate({5, 7, 11, 13}, {6, 8, 133, 183}, 3, 1).status == "inconclusive");
  CHECK_THROWS_AS(dimension_estimate({5}, {6}, 3, 1), InvalidParameters);

  // plane quartic determinantal curves: counts near p + 1
  std::vector<std::uint64_t> quartic;
  for (auto p : ps) quartic.push_back(rank_strata_count(sample_section(4, 4, 3, p, 3).upper()).at_most(3));
  const auto q = dimension_estimate(ps, quartic, 2, 1);
  CAPTURE(quartic[0]);
  CAPTURE(quartic[3]);
  CHECK(q.dimension == 1);
}

TEST_CASE("minors Jacobian agrees with the tangent criterion") {
  for (auto [m, n, v, r] : {std::tuple{3, 3, 6, 1}, std::tuple{3, 3, 7, 2}, std::tuple{2, 3, 5, 1}, std::tuple{3, 4, 8, 2}}) {
    const auto pen = sample_pencil(m, n, static_cast<std::size_t>(v), 3, 23);
    int compared = 0;
    for (const auto& x : rank_locus_points(pen, r)) {
      const int t = tangent_rank(pen, x, r);
      if (t < 0) {
        CHECK(minors_jacobian_rank(pen, x, r) == 0);  // rank below r
        continue;
      }
      CHECK(minors_jacobian_rank(pen, x, r) == t);
      ++compared;
    }
    CHECK(compared > 0);
  }
}

TEST_CASE("Jacobian singular test") {
  // the smooth quadric in P^3
  for (Elem p : {3ULL, 5ULL}) {
    const auto full = section_from_basis(2, 2, unit_basis(2, 2), p).upper();
    const auto j = jacobian_singular_test(full, 1);
    CHECK(j.locus_points == (p + 1) * (p + 1));
    CHECK(j.singular_points == 0);
    CHECK(j.expected_codim == 1);
    CHECK(j.codim_estimate == 1);
  }
  // repeated rows: every point has rank <= 1 and the determinant vanishes identically
  auto pen = sample_pencil(2, 2, 3, 5, 4);
  for (std::size_t k = 0; k < 3; ++k)
    for (int j = 0; j < 2; ++j) pen.coeffs[(static_cast<std::size_t>(1 * 2 + j)) * 3 + k] = pen.coeff(0, j, k);
  const auto deg = jacobian_singular_test(pen, 1);
  CHECK(deg.locus_points == 31);
  CHECK(deg.singular_points == 31);
}

TEST_CASE("Springer sampler") {
  for (auto [m, n, r, c] : {std::tuple{3, 3, 1, 2}, std::tuple{3, 4, 2, 5}, std::tuple{2, 3, 1, 2}}) {
    const auto s = sample_section(m, n, c, 5, 31);
    const auto rep = springer_sample(s, r, 15, 8);
    CHECK(rep.produced == 15);
    CHECK(rep.successes == rep.produced);
    CHECK(rep.ratio == 1.0);
    const auto pts = rank_locus_points(s.lower(), r);
    const std::set<std::vector<Elem>> locus(pts.begin(), pts.end());
    for (const auto& x : rep.points) CHECK(locus.count(x) == 1);
  }
  // r = m: every matrix of L^perp is reachable
  const auto all = springer_sample(2, 2, 2, 1, 7, 3, 10);
  CHECK(all.ratio == 1.0);
  CHECK(all.produced == 10);
  CHECK_THROWS_AS(springer_sample(2, 2, 3, 1, 7, 3, 10), InvalidParameters);
  CHECK_THROWS_AS(springer_sample(2, 2, 1, 1, 7, 3, 0), InvalidParameters);
}

TEST_CASE("duality determinant matches direct evaluation") {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
    const Elem p = 5;
    const auto s = sample_section(m, n, n, p, 2);
    const auto f = duality_determinant(s);
    CHECK(f.degree() == n);
    CHECK(f.homogeneous());
    std::vector<Elem> q;
    for (std::uint64_t i = 0; i < projective_count(p, static_cast<std::size_t>(m), kHardBudget); ++i) {
      projective_point(i, p, static_cast<std::size_t>(m), q);
      std::vector<std::vector<Elem>> a(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n), 0));
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r)
          for (int j = 0; j < m; ++j)
            a[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] + s.basis[static_cast<std::size_t>(k)](static_cast<std::size_t>(r), static_cast<std::size_t>(j)) * q[static_cast<std::size_t>(j)]) % p;
      CHECK(f.evaluate(q) == brute_det(a, p));
    }
  }
}

TEST_CASE("determinantal loci of the two sides agree") {
  for (Elem p : {3ULL, 5ULL}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto d2 = check_duality_DL(2, 2, p, seed);
      CHECK(d2.agree);
      CHECK(d2.degree_check);
      CHECK(d2.locus_points <= 2);  // a binary quadric has at most two roots
      const auto d3 = check_duality_DL(3, 3, p, seed);
      CHECK(d3.agree);
      CHECK(d3.degree_check);
    }
  }
  // L whose matrices all have a zero first row: det A(q) vanishes identically
  std::vector<Mat> basis;
  for (int k = 0; k < 3; ++k) {
    Mat w(3, 3);
    w(1, static_cast<std::size_t>(k)) = 1;
    w(2, static_cast<std::size_t>((k + 1) % 3)) = 1;
    basis.push_back(w);
  }
  const auto degenerate = check_duality(section_from_basis(3, 3, basis, 5));
  CHECK(degenerate.degenerate);
  CHECK_FALSE(degenerate.agree);
  CHECK_THROWS_AS(check_duality_DL(1, 2, 5, 0), InvalidParameters);
}

TEST_CASE("verification drivers") {
  VerifyOptions opt;
  opt.primes = {7};
  opt.seed = 1;
  const auto seg = verify_rank_locus(2, 2, 1, 4, Side::Y, opt);
  REQUIRE(seg.samples.size() == 1);
  CHECK(seg.samples[0].locus_points == 64);
  CHECK(seg.passed());
  CHECK_FALSE(seg.dimension_estimate);

  opt.primes = {3, 5, 7, 11};
  const auto quad = verify_rank_locus(2, 2, 1, 4, Side::Y, opt);
  REQUIRE(quad.dimension_estimate);
  CHECK(quad.dimension_estimate->dimension == 2);
  const auto xside = verify_rank_locus(2, 3, 1, 2, Side::X, opt);
  REQUIRE(xside.dimension_estimate);
  CHECK(xside.dimension_estimate->expected == 1);
  CHECK(xside.passed());
  CHECK_THROWS_AS(verify_rank_locus(2, 2, 1, 0, Side::Y, opt), InvalidParameters);

  opt.primes = {3, 5};
  const auto smooth = verify_smoothness(3, 3, 4, opt);
  CHECK(smooth.smooth_sample_result == std::optional<std::string>("smooth"));
  CHECK(smooth.passed());
  opt.primes = {3};
  const auto sing = verify_smoothness(3, 3, 7, opt);
  CHECK(sing.smooth_sample_result == std::optional<std::string>("expected-singular"));
  CHECK_FALSE(sing.passed());
  const auto exp = std::find_if(sing.checks.begin(), sing.checks.end(), [](const Check& c) { return c.name == "expected-singular"; });
  REQUIRE(exp != sing.checks.end());
  CHECK(exp->status == CheckStatus::Pass);

  opt.primes = {5};
  opt.trials = 10;
  const auto spr = verify_springer(3, 3, 1, 2, opt);
  CHECK(spr.passed());
  CHECK(spr.springer->ratio == 1.0);

  opt.primes = {3, 5};
  const auto dual = verify_duality(3, 3, opt);
  CHECK(dual.duality.size() == 10);
  CHECK(dual.passed());

  opt.primes = {5, 7};
  const auto hw = verify_hasse_weil(4, 4, 3, opt);
  CHECK(hw.passed());
  CHECK(hw.checks.size() == 2);
  CHECK_THROWS_AS(verify_hasse_weil(4, 4, 4, opt), InvalidParameters);
}
