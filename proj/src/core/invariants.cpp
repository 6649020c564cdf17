#include "hpdet/invariants.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "hpdet/chow/series.hpp"
#include "hpdet/errors.hpp"

namespace hpdet {

using chow::RationalSchubertElement;
using chow::RationalTowerElement;
using chow::SchubertElement;
using chow::TowerElement;

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class require_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw NonIntegralResult(std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

struct TowerClasses {
  RationalTowerElement todd;
  TowerElement chern;
};

// Todd and total Chern classes are the expensive part; keep one copy per tower.
const TowerClasses& tower_classes(const chow::TowerHandle& t) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<TowerClasses>> cache;
  const auto key = std::make_tuple(t->m(), t->n(), t->r(), t->side() == Side::X ? 0 : 1);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto made = std::make_unique<TowerClasses>(TowerClasses{chow::tangent_todd(t), chow::tangent_chern(t)});
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(made));
  return *it->second;
}

void require_section(const HPDParams& p) {
  p.validate();
  if (p.section_dim() < 0) {
    throw InvalidParameters("section of negative expected dimension " + std::to_string(p.section_dim()));
  }
}

// Coefficients of e^{aH} (1 - e^{-H})^k up to H^top.
std::vector<mpq_class> koszul_series(std::int64_t a, int k, int top) {
  const auto len = static_cast<std::size_t>(top + 1);
  std::vector<mpq_class> ea(len), one_minus(len, mpq_class(0));
  mpq_class ap = 1;
  for (std::size_t t = 0; t < len; ++t) {
    ea[t] = ap * chow::factorial_inverse(static_cast<int>(t));
    ap *= mpq_class(static_cast<long>(a));
  }
  for (std::size_t t = 1; t < len; ++t) {
    one_minus[t] = chow::factorial_inverse(static_cast<int>(t)) * mpq_class(t % 2 == 1 ? 1 : -1);
  }
  auto mul = [len](const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
    std::vector<mpq_class> z(len, mpq_class(0));
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) z[i + j] += x[i] * y[j];
    }
    return z;
  };
  std::vector<mpq_class> out = ea;
  for (int i = 0; i < k; ++i) out = mul(out, one_minus);
  return out;
}

}  // namespace

void HPDParams::validate() const {
  if (!(0 < r && r < m && m <= n)) {
    throw InvalidParameters("need 0 < r < m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
  }
  if (c < 0 || c > m * n) {
    throw InvalidParameters("need 0 <= c <= mn, got c=" + std::to_string(c));
  }
}

int HPDParams::tower_dim() const {
  return side == Side::X ? r * (n + m - r) - 1 : r * (m - r) + n * (m - r) - 1;
}

int HPDParams::codim() const { return side == Side::X ? c : m * n - c; }

int dim_xl(int m, int n, int r, int c) { return r * (n + m - r) - c - 1; }
int dim_yl(int m, int n, int r, int c) { return r * (m - n - r) + c - 1; }

mpz_class section_number(const HPDParams& params, int h_power, int p_power) {
  params.validate();
  if (h_power < 0 || p_power < 0 || h_power + p_power != params.section_dim()) return 0;
  const auto t = params.tower();
  const SchubertElement p = chow::column_class(t->grass(), 1);
  SchubertElement pj = SchubertElement::unit(t->grass());
  for (int i = 0; i < p_power; ++i) pj = pj * p;
  return chow::integrate_with_h_power(TowerElement::pullback(t, pj), params.codim() + h_power);
}

mpz_class degree_section(const HPDParams& params) {
  require_section(params);
  return section_number(params, params.section_dim(), 0);
}

DivisorClass canonical_class(const HPDParams& params) {
  params.validate();
  const std::int64_t shift = static_cast<std::int64_t>(params.c) - static_cast<std::int64_t>(params.n) * params.r;
  return {params.side == Side::X ? shift : -shift, params.n - params.m};
}

mpz_class euler_characteristic(const HPDParams& params, std::int64_t a, std::int64_t b) {
  require_section(params);
  const auto t = params.tower();
  const auto& td = tower_classes(t).todd;
  const auto bp = chow::to_rational(chow::column_class(t->grass(), 1)) * mpq_class(static_cast<long>(b));
  const auto tb = chow::multiply_pullback(td, chow::exp_nilpotent(bp));
  const auto series = koszul_series(a, params.codim(), t->dimension());
  mpq_class chi = 0;
  for (int k = 0; k <= t->dimension(); ++k) {
    if (series[static_cast<std::size_t>(k)] == 0) continue;
    chi += series[static_cast<std::size_t>(k)] * chow::integrate_with_h_power(tb, k);
  }
  return require_integer(chi, "Riemann-Roch output");
}

mpz_class euler_pairing(const HPDParams& params, std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  return euler_characteristic(params, a2 - a1, b2 - b1);
}

mpz_class euler_char_top(const HPDParams& params) {
  require_section(params);
  const auto t = params.tower();
  const int k = params.codim();
  // c(T_S) = c(T_tower) / (1 + H)^k restricted to S = H^k
  std::vector<mpz_class> inv(static_cast<std::size_t>(t->dimension() + 1));
  for (std::size_t i = 0; i < inv.size(); ++i) {
    inv[i] = binom(k + static_cast<long>(i) - 1, static_cast<long>(i));
    if (i % 2 == 1) inv[i] = -inv[i];
  }
  if (k == 0) {
    inv.assign(1, mpz_class(1));
  }
  const auto ct = chow::multiply_h_series(tower_classes(t).chern, inv).part(params.section_dim());
  return chow::integrate_with_h_power(ct, k);
}

mpz_class curve_genus(const HPDParams& params) {
  require_section(params);
  if (params.section_dim() != 1) {
    throw InvalidParameters("curve_genus needs a one-dimensional section, got dimension " +
                            std::to_string(params.section_dim()));
  }
  const mpz_class g = 1 - euler_characteristic(params, 0, 0);
  const DivisorClass k = canonical_class(params);
  const mpz_class deg_k = section_number(params, 1, 0) * static_cast<long>(k.h) +
                          section_number(params, 0, 1) * static_cast<long>(k.p);
  if (deg_k != 2 * g - 2) {
    throw NonIntegralResult("genus mismatch: 2g-2 = " + mpz_class(2 * g - 2).get_str() + " but deg K = " +
                            deg_k.get_str());
  }
  return g;
}

NonisoReport nonisomorphism_scan(int m, int n, int r, int c, std::int64_t lo, std::int64_t hi) {
  const HPDParams px{m, n, r, c, Side::X};
  const HPDParams py{m, n, r, c, Side::Y};
  px.validate();
  const int d = px.section_dim();
  if (d != py.section_dim() || d < 0) {
    throw InvalidParameters("dimension mismatch: dim X_L = " + std::to_string(d) + ", dim Y_L = " +
                            std::to_string(py.section_dim()));
  }
  if (lo > hi) throw InvalidParameters("empty range");
  NonisoReport rep;
  rep.m = m, rep.n = n, rep.r = r, rep.c = c;
  rep.dimension = d;
  rep.range_lo = lo, rep.range_hi = hi;
  for (int j = 0; j <= d; ++j) rep.deg_x_poly.push_back(binom(d, j) * section_number(px, d - j, j));
  rep.deg_y = degree_section(py);

  std::vector<mpz_class> f = rep.deg_x_poly;
  f[0] -= rep.deg_y;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) {
    rep.identically_equal = true;
    rep.cauchy_bound = 0;
    for (std::int64_t a = lo; a <= hi; ++a) rep.solutions_in_range.emplace_back(static_cast<long>(a));
    return rep;
  }
  // Cauchy: |root| <= 1 + max |f_i / f_lead|, rounded up.
  mpq_class worst = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    mpq_class q(abs(f[i]), abs(f.back()));
    q.canonicalize();
    if (q > worst) worst = q;
  }
  mpz_class bound = 1 + worst.get_num() / worst.get_den();
  if (worst.get_num() % worst.get_den() != 0) bound += 1;
  rep.cauchy_bound = f.size() == 1 ? mpz_class(0) : bound;

  auto eval = [&f](const mpz_class& a) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * a + *it;
    return acc;
  };
  if (f.size() > 1) {
    std::size_t low = 0;
    while (f[low] == 0) ++low;
    if (low > 0) rep.integer_solutions.emplace_back(0);
    // A nonzero integer root divides the lowest nonzero coefficient.
    const mpz_class c0 = abs(f[low]);
    const mpz_class limit = bound < c0 ? bound : c0;
    if (limit > 100000000) throw BudgetExceeded("root candidate range " + limit.get_str() + " too large");
    for (long a = 1; a <= limit.get_si(); ++a) {
      if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(a)) == 0) continue;
      for (long s : {-a, a}) {
        if (eval(mpz_class(s)) == 0) rep.integer_solutions.emplace_back(s);
      }
    }
    std::sort(rep.integer_solutions.begin(), rep.integer_solutions.end());
  }
  for (const auto& a : rep.integer_solutions) {
    if (a >= static_cast<long>(lo) && a <= static_cast<long>(hi)) rep.solutions_in_range.push_back(a);
  }
  return rep;
}

}  // namespace hpdet
