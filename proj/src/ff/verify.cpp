#include "hpdet/ff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "hpdet/errors.hpp"
#include "hpdet/invariants.hpp"
#include "hpdet/parallel.hpp"

namespace hpdet::ff {
namespace {

std::uint64_t clamp_budget(std::uint64_t budget) { return std::min(budget, kHardBudget); }

// Rank by forward elimination, destroying `a`.
int rank_inplace(Mat& a, Elem p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = r;
    while (piv < a.rows && a(piv, c) == 0) ++piv;
    if (piv == a.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols; ++j) std::swap(a(piv, j), a(r, j));
    const Elem s = inv_mod(a(r, c), p);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      if (a(i, c) == 0) continue;
      const Elem f = a(i, c) * s % p;
      for (std::size_t j = c; j < a.cols; ++j) a(i, j) = (a(i, j) + (p - f) * a(r, j)) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

void evaluate_into(const FpMatrixPencil& pen, const std::vector<Elem>& x, Mat& out) {
  const Elem p = pen.p;
  for (std::size_t e = 0; e < out.a.size(); ++e) {
    const Elem* c = &pen.coeffs[e * pen.v];
    Elem acc = 0;
    for (std::size_t k = 0; k < pen.v; ++k) {
      if (x[k]) acc += c[k] * x[k] % p;
    }
    out.a[e] = acc % p;
  }
}

// Contiguous index ranges, several per worker so uneven strata balance out.
struct Chunks {
  std::uint64_t total, size, count;
  Chunks(std::uint64_t n) : total(n) {
    const std::uint64_t want = std::max<std::uint64_t>(1, 8ULL * thread_count());
    size = std::max<std::uint64_t>(1, (n + want - 1) / want);
    count = n == 0 ? 0 : (n + size - 1) / size;
  }
  std::uint64_t lo(std::uint64_t i) const { return i * size; }
  std::uint64_t hi(std::uint64_t i) const { return std::min(total, (i + 1) * size); }
};

// All k-subsets of {0..n-1} as bitmasks, in lexicographic order.
std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1U << i;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> bits(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

Elem minor_det(const Mat& a, std::uint32_t rows, std::uint32_t cols, Elem p) {
  const auto ri = bits(rows), ci = bits(cols);
  Mat s(ri.size(), ci.size());
  for (std::size_t i = 0; i < ri.size(); ++i)
    for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = a(static_cast<std::size_t>(ri[i]), static_cast<std::size_t>(ci[j]));
  return det(s, p);
}

void check_sizes(int m, int n) {
  if (m < 1 || n < 1) throw InvalidParameters("matrix sizes must be positive");
}

}  // namespace

std::uint64_t StratumCount::total() const {
  std::uint64_t t = 0;
  for (const auto& [r, n] : by_rank) t += n;
  return t;
}

std::uint64_t StratumCount::at_most(int r) const {
  std::uint64_t t = 0;
  for (const auto& [k, n] : by_rank)
    if (k <= r) t += n;
  return t;
}

StratumCount rank_strata_count(const FpMatrixPencil& pencil, std::uint64_t budget) {
  require_prime(pencil.p);
  check_sizes(pencil.m, pencil.n);
  if (pencil.v < 1) throw InvalidParameters("pencil needs at least one variable");
  const std::uint64_t total = projective_count(pencil.p, pencil.v, clamp_budget(budget));
  const Chunks chunks(total);
  const std::size_t width = static_cast<std::size_t>(std::min(pencil.m, pencil.n)) + 1;
  std::vector<std::vector<std::uint64_t>> local(chunks.count, std::vector<std::uint64_t>(width, 0));
  parallel_for(chunks.count, [&](std::size_t ci) {
    std::vector<Elem> x;
    Mat a(static_cast<std::size_t>(pencil.n), static_cast<std::size_t>(pencil.m));
    for (std::uint64_t i = chunks.lo(ci); i < chunks.hi(ci); ++i) {
      projective_point(i, pencil.p, pencil.v, x);
      evaluate_into(pencil, x, a);
      ++local[ci][static_cast<std::size_t>(rank_inplace(a, pencil.p))];
    }
  });
  StratumCount out{pencil.p, pencil.v, {}};
  for (std::size_t r = 0; r < width; ++r) {
    std::uint64_t s = 0;
    for (const auto& l : local) s += l[r];
    out.by_rank[static_cast<int>(r)] = s;
  }
  return out;
}

std::vector<std::vector<Elem>> rank_locus_points(const FpMatrixPencil& pencil, int r, std::uint64_t budget) {
  require_prime(pencil.p);
  if (pencil.v < 1) throw InvalidParameters("pencil needs at least one variable");
  const std::uint64_t total = projective_count(pencil.p, pencil.v, clamp_budget(budget));
  const Chunks chunks(total);
  std::vector<std::vector<std::vector<Elem>>> local(chunks.count);
  parallel_for(chunks.count, [&](std::size_t ci) {
    std::vector<Elem> x;
    Mat a(static_cast<std::size_t>(pencil.n), static_cast<std::size_t>(pencil.m));
    for (std::uint64_t i = chunks.lo(ci); i < chunks.hi(ci); ++i) {
      projective_point(i, pencil.p, pencil.v, x);
      evaluate_into(pencil, x, a);
      if (rank_inplace(a, pencil.p) <= r) local[ci].push_back(x);
    }
  });
  std::vector<std::vector<Elem>> out;
  for (auto& l : local)
    for (auto& x : l) out.push_back(std::move(x));
  return out;
}

DimensionEstimate dimension_estimate(const std::vector<Elem>& primes, const std::vector<std::uint64_t>& counts,
                                     int max_dim, int expected) {
  if (primes.size() < 2) throw InvalidParameters("dimension estimate needs at least two primes");
  if (primes.size() != counts.size()) throw InvalidParameters("one count per prime expected");
  DimensionEstimate out;
  out.expected = expected;
  // each prime votes for the d with #P^d(F_p) closest to N_p in log scale (-1 for no points);
  // an unlucky L at one prime is outvoted instead of skewing a joint fit
  auto log_proj = [](double p, int d) { return std::log((std::pow(p, d + 1) - 1.0) / (p - 1.0)); };
  std::map<int, std::size_t> votes;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (counts[i] == 0) {
      ++votes[-1];
      continue;
    }
    const double p = static_cast<double>(primes[i]);
    const double lc = std::log(static_cast<double>(counts[i]));
    int best_d = 0;
    for (int d = 1; d <= std::max(0, max_dim); ++d)
      if (std::abs(lc - log_proj(p, d)) < std::abs(lc - log_proj(p, best_d))) best_d = d;
    ++votes[best_d];
  }
  const auto top = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  if (2 * top->second <= primes.size()) {
    out.status = "inconclusive";
    return out;
  }
  if (top->first < 0) {
    out.status = "empty";
    out.matches = expected < 0;
    return out;
  }
  std::vector<double> dev;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (counts[i] > 0)
      dev.push_back(std::log(static_cast<double>(counts[i])) - log_proj(static_cast<double>(primes[i]), top->first));
  const double mean = std::accumulate(dev.begin(), dev.end(), 0.0) / static_cast<double>(dev.size());
  double var = 0.0;
  for (double e : dev) var += (e - mean) * (e - mean);
  out.spread = std::sqrt(var / static_cast<double>(dev.size()));
  out.status = "ok";
  out.dimension = top->first;
  out.matches = top->first == expected;
  return out;
}

int minors_jacobian_rank(const FpMatrixPencil& pencil, const std::vector<Elem>& x, int r) {
  const Elem p = pencil.p;
  const int m = pencil.m, n = pencil.n;
  if (r < 0) throw InvalidParameters("rank bound must be nonnegative");
  if (r >= std::min(m, n)) return 0;  // no (r+1)-minors
  if (n > 20 || m > 20) throw InvalidParameters("matrix too large for the minors Jacobian");
  Mat a(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  evaluate_into(pencil, x, a);
  {
    Mat t = a;
    if (rank_inplace(t, p) < r) return 0;  // every r-minor vanishes
  }
  const auto rows_r = subsets(n, r), cols_r = subsets(m, r);
  std::vector<int> row_index(1U << n, -1), col_index(1U << m, -1);
  for (std::size_t i = 0; i < rows_r.size(); ++i) row_index[rows_r[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < cols_r.size(); ++i) col_index[cols_r[i]] = static_cast<int>(i);
  std::vector<Elem> minors(rows_r.size() * cols_r.size());
  for (std::size_t i = 0; i < rows_r.size(); ++i)
    for (std::size_t j = 0; j < cols_r.size(); ++j) minors[i * cols_r.size() + j] = minor_det(a, rows_r[i], cols_r[j], p);

  const auto rows_s = subsets(n, r + 1), cols_s = subsets(m, r + 1);
  Mat jac(rows_s.size() * cols_s.size(), pencil.v);
  std::size_t row = 0;
  for (auto rs : rows_s) {
    const auto ri = bits(rs);
    for (auto cs : cols_s) {
      const auto cj = bits(cs);
      for (std::size_t u = 0; u < ri.size(); ++u) {
        for (std::size_t w = 0; w < cj.size(); ++w) {
          Elem cof = minors[static_cast<std::size_t>(row_index[rs & ~(1U << ri[u])]) * cols_r.size() +
                            static_cast<std::size_t>(col_index[cs & ~(1U << cj[w])])];
          if (cof == 0) continue;
          if ((u + w) % 2) cof = p - cof;
          for (std::size_t k = 0; k < pencil.v; ++k) {
            const Elem ck = pencil.coeff(ri[u], cj[w], k);
            if (ck) jac(row, k) = (jac(row, k) + cof * ck) % p;
          }
        }
      }
      ++row;
    }
  }
  return rank_inplace(jac, p);
}

JacobianReport jacobian_singular_test(const FpMatrixPencil& pencil, int r, std::uint64_t budget) {
  require_prime(pencil.p);
  if (r < 0 || r > std::min(pencil.m, pencil.n)) throw InvalidParameters("rank bound out of range");
  const auto pts = rank_locus_points(pencil, r, budget);
  JacobianReport out;
  out.locus_points = pts.size();
  out.expected_codim = (pencil.m - r) * (pencil.n - r);
  std::vector<int> ranks(pts.size(), 0);
  parallel_for(pts.size(), [&](std::size_t i) { ranks[i] = minors_jacobian_rank(pencil, pts[i], r); });
  for (int k : ranks) {
    out.codim_estimate = std::max(out.codim_estimate, k);
    if (k < out.expected_codim) ++out.singular_points;
  }
  return out;
}

SpringerReport springer_sample(const LinearSection& section, int r, int trials, std::uint64_t seed) {
  const Elem p = section.p;
  const int m = section.m, n = section.n;
  if (trials < 1) throw InvalidParameters("need at least one trial");
  if (r < 1 || r > m) throw InvalidParameters("need 1 <= r <= m");
  constexpr int kRetryCap = 100;
  auto gen = make_rng(seed, p, 0x5350'0000ULL);
  const auto mn = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  const std::size_t v = section.perp.size();
  SpringerReport out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
      // Lambda : U -> Q_lambda, r x m of full rank
      Mat lam(static_cast<std::size_t>(r), static_cast<std::size_t>(m));
      for (auto& e : lam.a) e = gen() % p;
      if (rank(lam, p) < static_cast<std::size_t>(r)) {
        ++out.redraws;
        continue;
      }
      // <L_k, N Lambda> = sum_{i,a} N_ia (L_k Lambda^T)_ia
      Mat eqs(section.basis.size(), static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
      for (std::size_t k = 0; k < section.basis.size(); ++k) {
        const Mat& lk = section.basis[k];
        for (int i = 0; i < n; ++i)
          for (int a = 0; a < r; ++a) {
            Elem s = 0;
            for (int j = 0; j < m; ++j) s = (s + lk(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * lam(static_cast<std::size_t>(a), static_cast<std::size_t>(j))) % p;
            eqs(k, static_cast<std::size_t>(i * r + a)) = s;
          }
      }
      const auto ker = nullspace(eqs, p);
      if (ker.empty()) {
        ++out.redraws;
        continue;
      }
      std::vector<Elem> nvec(static_cast<std::size_t>(n) * static_cast<std::size_t>(r), 0);
      while (std::all_of(nvec.begin(), nvec.end(), [](Elem e) { return e == 0; })) {
        std::fill(nvec.begin(), nvec.end(), 0);
        for (const auto& b : ker) {
          const Elem s = gen() % p;
          for (std::size_t i = 0; i < nvec.size(); ++i) nvec[i] = (nvec[i] + s * b[i]) % p;
        }
      }
      Mat mat(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          Elem s = 0;
          for (int a = 0; a < r; ++a) s = (s + nvec[static_cast<std::size_t>(i * r + a)] * lam(static_cast<std::size_t>(a), static_cast<std::size_t>(j))) % p;
          mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        }
      ++out.produced;
      bool ok = rank(mat, p) <= static_cast<std::size_t>(r);
      for (const auto& lk : section.basis) {
        Elem s = 0;
        for (std::size_t e = 0; e < mn; ++e) s = (s + lk.a[e] * mat.a[e]) % p;
        ok = ok && s == 0;
      }
      // coordinates in the L^perp pencil
      Mat aug(mn, v + 1);
      for (std::size_t e = 0; e < mn; ++e) {
        for (std::size_t k = 0; k < v; ++k) aug(e, k) = section.perp[k].a[e];
        aug(e, v) = mat.a[e];
      }
      std::vector<std::size_t> piv;
      row_reduce(aug, p, &piv);
      std::vector<Elem> x(v, 0);
      for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == v) ok = false;  // inconsistent: not in the span
        else x[piv[i]] = aug(i, v);
      }
      if (ok && v > 0) {
        const Mat back = section.lower().evaluate(x);
        ok = back.a == mat.a && rank(back, p) <= static_cast<std::size_t>(r);
      }
      if (ok) ++out.successes;
      normalize(x, p);
      out.points.push_back(std::move(x));
      break;
    }
  }
  out.ratio = out.produced ? static_cast<double>(out.successes) / out.produced : 0.0;
  return out;
}

SpringerReport springer_sample(int m, int n, int r, int c, Elem p, std::uint64_t seed, int trials) {
  if (r < 1 || r > m || m > n) throw InvalidParameters("need 1 <= r <= m <= n");
  return springer_sample(sample_section(m, n, c, p, seed), r, trials, seed);
}

Elem FpPolynomial::evaluate(const std::vector<Elem>& x) const {
  Elem out = 0;
  for (const auto& [e, c] : terms) {
    Elem t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * pow_mod(x[i], static_cast<std::uint64_t>(e[i]), p) % p;
    out = (out + t) % p;
  }
  return out;
}

int FpPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool FpPolynomial::homogeneous() const {
  const int d = degree();
  return std::all_of(terms.begin(), terms.end(),
                     [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

FpPolynomial duality_determinant(const LinearSection& section) {
  const Elem p = section.p;
  const int m = section.m;
  const int n = static_cast<int>(section.basis.size());
  if (n != section.n) throw InvalidParameters("the duality check needs c = n");
  if (n > 8) throw InvalidParameters("determinant expansion limited to n <= 8");
  // A_{k,i} = sum_j L_k[i][j] q_j
  auto linear = [&](int k, int i) {
    FpPolynomial f{p, static_cast<std::size_t>(m), {}};
    for (int j = 0; j < m; ++j) {
      const Elem c = section.basis[static_cast<std::size_t>(k)](static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!c) continue;
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      e[static_cast<std::size_t>(j)] = 1;
      f.terms[e] = c;
    }
    return f;
  };
  auto mul = [p](const FpPolynomial& a, const FpPolynomial& b) {
    FpPolynomial out{p, a.vars, {}};
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        Elem& slot = out.terms[e];
        slot = (slot + ca * cb) % p;
      }
    std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
    return out;
  };
  std::vector<std::vector<FpPolynomial>> entries(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(k)].push_back(linear(k, i));

  FpPolynomial det_poly{p, static_cast<std::size_t>(m), {}};
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    FpPolynomial term{p, static_cast<std::size_t>(m), {{std::vector<int>(static_cast<std::size_t>(m), 0), 1}}};
    for (int k = 0; k < n && !term.terms.empty(); ++k)
      term = mul(term, entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
    for (const auto& [e, c] : term.terms) {
      Elem& slot = det_poly.terms[e];
      slot = (slot + (inversions % 2 ? p - c : c)) % p;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(det_poly.terms, [](const auto& t) { return t.second == 0; });
  return det_poly;
}

DualityReport check_duality(const LinearSection& section) {
  const Elem p = section.p;
  const int m = section.m, n = section.n;
  DualityReport out;
  out.p = p;
  const FpPolynomial f = duality_determinant(section);
  if (f.terms.empty()) {
    out.degenerate = true;
    return out;
  }
  out.degree_check = f.homogeneous() && f.degree() == n;
  const std::uint64_t total = projective_count(p, static_cast<std::size_t>(m), kHardBudget);
  out.points = total;
  const auto mn = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  const std::size_t v = section.perp.size();
  std::vector<int> disagree(total, 0), on_locus(total, 0);
  parallel_for(total, [&](std::size_t idx) {
    std::vector<Elem> q;
    projective_point(idx, p, static_cast<std::size_t>(m), q);
    const bool det_zero = f.evaluate(q) == 0;
    // span{e_i q^T} meets L^perp iff the stacked bases are dependent
    Mat stack(v + static_cast<std::size_t>(n), mn);
    for (std::size_t k = 0; k < v; ++k)
      for (std::size_t e = 0; e < mn; ++e) stack(k, e) = section.perp[k].a[e];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) stack(v + static_cast<std::size_t>(i), static_cast<std::size_t>(i * m + j)) = q[static_cast<std::size_t>(j)];
    const bool drops = static_cast<std::size_t>(rank_inplace(stack, p)) < v + static_cast<std::size_t>(n);
    on_locus[idx] = det_zero;
    disagree[idx] = det_zero != drops;
  });
  out.locus_points = static_cast<std::uint64_t>(std::accumulate(on_locus.begin(), on_locus.end(), 0LL));
  out.agree = std::none_of(disagree.begin(), disagree.end(), [](int d) { return d != 0; });
  return out;
}

DualityReport check_duality_DL(int m, int n, Elem p, std::uint64_t seed, int max_attempts) {
  if (!(1 < m && m <= n)) throw InvalidParameters("duality check needs 1 < m <= n");
  require_prime(p);
  DualityReport out;
  for (int attempt = 0; attempt < std::max(1, max_attempts); ++attempt) {
    out = check_duality(sample_section(m, n, n, p, seed, static_cast<std::uint64_t>(attempt)));
    out.attempts = attempt + 1;
    if (!out.degenerate) break;
  }
  out.seed = seed;
  return out;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "inconclusive") return CheckStatus::Inconclusive;
  throw InvalidParameters("unknown check status: " + s);
}

bool SampleReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::vector<std::string> SampleReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) out.push_back(c.name);
  return out;
}

namespace {

void require_primes(const std::vector<Elem>& primes) {
  if (primes.empty()) throw InvalidParameters("no primes given");
  for (auto p : primes) require_prime(p);
}

SampleReport base_report(std::string kind, int m, int n, int r, int c, Side side, const VerifyOptions& opt) {
  SampleReport rep;
  rep.kind = std::move(kind);
  rep.m = m;
  rep.n = n;
  rep.r = r;
  rep.c = c;
  rep.side = side;
  rep.primes = opt.primes;
  rep.seed = opt.seed;
  return rep;
}

std::string at_p(const std::string& name, Elem p) { return name + "@p=" + std::to_string(p); }

}  // namespace

SampleReport verify_rank_locus(int m, int n, int r, int c, Side side, const VerifyOptions& opt) {
  HPDParams{m, n, r, c, side}.validate();
  require_primes(opt.primes);
  const int v = side == Side::Y ? c : m * n - c;
  if (v < 1) throw InvalidParameters("the pencil for this side is empty (v = 0)");
  const int bound = side == Side::Y ? m - r : r;
  const int expected = side == Side::Y ? dim_yl(m, n, r, c) : dim_xl(m, n, r, c);
  SampleReport rep = base_report("rank-locus", m, n, r, c, side, opt);

  for (int attempt = 0; attempt <= opt.max_reseeds; ++attempt) {
    rep.samples.clear();
    std::vector<std::uint64_t> counts;
    for (auto p : opt.primes) {
      const auto section = sample_section(m, n, c, p, opt.seed, static_cast<std::uint64_t>(attempt));
      PrimeSample s;
      s.p = p;
      s.stream = static_cast<std::uint64_t>(attempt);
      s.counts = rank_strata_count(side == Side::Y ? section.upper() : section.lower(), opt.budget);
      s.locus_rank = bound;
      s.locus_points = s.counts.at_most(bound);
      counts.push_back(s.locus_points);
      rep.samples.push_back(std::move(s));
    }
    if (opt.primes.size() < 2) break;
    rep.dimension_estimate = dimension_estimate(opt.primes, counts, v - 1, expected);
    if (rep.dimension_estimate->matches) break;
    if (attempt < opt.max_reseeds) {
      std::ostringstream msg;
      msg << "stream " << attempt << ": estimate "
          << (rep.dimension_estimate->dimension ? std::to_string(*rep.dimension_estimate->dimension)
                                                : rep.dimension_estimate->status)
          << " vs expected " << expected << ", reseeding";
      rep.log.push_back(msg.str());
    }
  }

  bool totals = true, nested = true;
  for (const auto& s : rep.samples) {
    totals = totals && s.counts.total() == projective_count(s.p, static_cast<std::size_t>(v), kHardBudget);
    for (int k = 0; k < std::min(m, n); ++k) nested = nested && s.counts.at_most(k) <= s.counts.at_most(k + 1);
  }
  rep.checks.push_back({"strata-total", totals ? CheckStatus::Pass : CheckStatus::Fail, "counts sum to #P^" + std::to_string(v - 1)});
  rep.checks.push_back({"strata-nested", nested ? CheckStatus::Pass : CheckStatus::Fail, ""});
  if (rep.dimension_estimate) {
    const auto& d = *rep.dimension_estimate;
    rep.checks.push_back({"dimension", d.matches ? CheckStatus::Pass : CheckStatus::Inconclusive,
                          "estimate " + (d.dimension ? std::to_string(*d.dimension) : d.status) + ", expected " +
                              std::to_string(expected)});
  }
  return rep;
}

SampleReport verify_smoothness(int m, int n, int c, const VerifyOptions& opt) {
  HPDParams{m, n, 1, c, Side::Y}.validate();
  require_primes(opt.primes);
  if (c < 1) throw InvalidParameters("smoothness needs c >= 1");
  const bool expect_smooth = c < 2 * n - 2 * m + 5;
  SampleReport rep = base_report("smoothness", m, n, 1, c, Side::Y, opt);
  std::uint64_t singular_total = 0;
  for (auto p : opt.primes) {
    PrimeSample s;
    for (int attempt = 0; attempt <= opt.max_reseeds; ++attempt) {
      const auto pencil = sample_section(m, n, c, p, opt.seed, static_cast<std::uint64_t>(attempt)).upper();
      s = PrimeSample{};
      s.p = p;
      s.stream = static_cast<std::uint64_t>(attempt);
      s.locus_rank = m - 1;
      s.counts = rank_strata_count(pencil, opt.budget);
      s.jacobian = jacobian_singular_test(pencil, m - 1, opt.budget);
      s.locus_points = s.jacobian->locus_points;
      if (!expect_smooth || s.jacobian->singular_points == 0) break;
      if (attempt < opt.max_reseeds)
        rep.log.push_back("p=" + std::to_string(p) + " stream " + std::to_string(attempt) + ": " +
                          std::to_string(s.jacobian->singular_points) + " singular points, reseeding");
    }
    const auto sing = s.jacobian->singular_points;
    singular_total += sing;
    rep.checks.push_back({at_p("smooth", p), sing == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                          std::to_string(sing) + " singular of " + std::to_string(s.locus_points) + " points" +
                              (expect_smooth ? "" : " (singular expected)")});
    rep.samples.push_back(std::move(s));
  }
  if (expect_smooth) {
    rep.smooth_sample_result = singular_total == 0 ? "smooth" : "singular";
  } else {
    rep.smooth_sample_result = singular_total > 0 ? "expected-singular" : "smooth";
    rep.checks.push_back({"expected-singular", singular_total > 0 ? CheckStatus::Pass : CheckStatus::Inconclusive,
                          "c >= 2n-2m+5"});
  }
  return rep;
}

SampleReport verify_springer(int m, int n, int r, int c, const VerifyOptions& opt) {
  if (!(0 < r && r <= m && m <= n)) throw InvalidParameters("need 0 < r <= m <= n");
  if (c < 0 || c > m * n) throw InvalidParameters("need 0 <= c <= mn");
  require_primes(opt.primes);
  const Elem p = opt.primes.front();
  SampleReport rep = base_report("springer", m, n, r, c, Side::X, opt);
  rep.primes = {p};
  const auto section = sample_section(m, n, c, p, opt.seed);
  const auto sp = springer_sample(section, r, opt.trials, opt.seed);
  rep.springer = sp;
  CheckStatus ratio = sp.produced == 0 ? CheckStatus::Inconclusive
                                       : (sp.successes == sp.produced ? CheckStatus::Pass : CheckStatus::Fail);
  rep.checks.push_back({"ratio", ratio, std::to_string(sp.successes) + "/" + std::to_string(sp.produced)});
  if (!section.perp.empty() && sp.produced > 0) {
    try {
      const auto pts = rank_locus_points(section.lower(), r, opt.budget);
      const std::set<std::vector<Elem>> locus(pts.begin(), pts.end());
      const bool inside = std::all_of(sp.points.begin(), sp.points.end(), [&](const auto& x) { return locus.count(x) > 0; });
      rep.checks.push_back({"in-stratum", inside ? CheckStatus::Pass : CheckStatus::Fail,
                            std::to_string(locus.size()) + " points in the rank <= " + std::to_string(r) + " locus"});
    } catch (const BudgetExceeded& e) {
      rep.checks.push_back({"in-stratum", CheckStatus::Inconclusive, e.what()});
    }
  }
  return rep;
}

SampleReport verify_duality(int m, int n, const VerifyOptions& opt) {
  HPDParams{m, n, 1, n, Side::X}.validate();
  require_primes(opt.primes);
  if (opt.seeds < 1) throw InvalidParameters("need at least one seed");
  SampleReport rep = base_report("duality", m, n, 1, n, Side::X, opt);
  for (auto p : opt.primes) {
    for (int s = 0; s < opt.seeds; ++s) {
      const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(s);
      auto d = check_duality_DL(m, n, p, seed, opt.max_reseeds + 1);
      const std::string name = "duality@p=" + std::to_string(p) + ",seed=" + std::to_string(seed);
      CheckStatus st = d.degenerate ? CheckStatus::Inconclusive
                                    : (d.agree && d.degree_check ? CheckStatus::Pass : CheckStatus::Fail);
      rep.checks.push_back({name, st, std::to_string(d.locus_points) + " points on D_L"});
      rep.duality.push_back(d);
    }
  }
  return rep;
}

SampleReport verify_hasse_weil(int m, int n, int c, const VerifyOptions& opt) {
  const HPDParams params{m, n, 1, c, Side::Y};
  params.validate();
  require_primes(opt.primes);
  if (dim_yl(m, n, 1, c) != 1) throw InvalidParameters("not a curve section: dim Y_L = " + std::to_string(dim_yl(m, n, 1, c)));
  if (c >= 2 * n - 2 * m + 5) throw InvalidParameters("curve section is not smooth for generic L (c >= 2n-2m+5)");
  const mpz_class g = curve_genus(params);
  SampleReport rep = base_report("hasse-weil", m, n, 1, c, Side::Y, opt);
  for (auto p : opt.primes) {
    PrimeSample s;
    bool smooth = false;
    for (int attempt = 0; attempt <= opt.max_reseeds; ++attempt) {
      const auto pencil = sample_section(m, n, c, p, opt.seed, static_cast<std::uint64_t>(attempt)).upper();
      s = PrimeSample{};
      s.p = p;
      s.stream = static_cast<std::uint64_t>(attempt);
      s.locus_rank = m - 1;
      s.counts = rank_strata_count(pencil, opt.budget);
      s.jacobian = jacobian_singular_test(pencil, m - 1, opt.budget);
      s.locus_points = s.jacobian->locus_points;
      smooth = s.jacobian->singular_points == 0;
      if (smooth) break;
      if (attempt < opt.max_reseeds)
        rep.log.push_back("p=" + std::to_string(p) + " stream " + std::to_string(attempt) + ": singular F_p-points, reseeding");
    }
    const mpz_class dev = mpz_class(static_cast<unsigned long>(s.locus_points)) - static_cast<unsigned long>(p) - 1;
    const bool ok = dev * dev <= 4 * g * g * static_cast<unsigned long>(p);
    std::ostringstream detail;
    detail << "N=" << s.locus_points << ", g=" << g.get_str();
    rep.checks.push_back({at_p("hasse-weil", p), smooth ? (ok ? CheckStatus::Pass : CheckStatus::Fail) : CheckStatus::Inconclusive,
                          detail.str()});
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace hpdet::ff
