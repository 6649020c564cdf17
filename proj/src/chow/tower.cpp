#include "hpdet/chow/tower.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hpdet/chow/series.hpp"

namespace hpdet::chow {
namespace {

SchubertElement power(const SchubertElement& x, int k) {
  SchubertElement out = x.unit_like();
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

std::vector<SchubertElement> graded(const SchubertElement& total) {
  std::vector<SchubertElement> out;
  for (int k = 0; k <= total.max_degree(); ++k) out.push_back(total.part(k));
  return out;
}

SchubertElement alternate(const SchubertElement& total) {
  SchubertElement out = total.zero_like();
  for (int k = 0; k <= total.max_degree(); ++k) {
    if (k % 2 == 0) out += total.part(k); else out -= total.part(k);
  }
  return out;
}

mpz_class binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

std::string_view side_name(Side s) { return s == Side::X ? "X" : "Y"; }

Side parse_side(std::string_view s) {
  if (s == "X" || s == "x") return Side::X;
  if (s == "Y" || s == "y") return Side::Y;
  throw InvalidParameters("side must be X or Y, got '" + std::string(s) + "'");
}

TowerRing::TowerRing(int m, int n, int r, Side side)
    : m_(m), n_(n), r_(r), side_(side), grass_(grass_ring(m, r)), rank_(0), ch_(grass_) {
  if (!(0 < r && r < m && m <= n)) {
    throw InvalidParameters("need 0 < r < m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
  }
  const BundleTag base = side == Side::X ? BundleTag::Q : BundleTag::Udual;
  const BundleChern b = chern(base, m, r);
  rank_ = n * b.rank;
  chern_ = {rank_, graded(power(b.total(), n))};
  const SchubertElement inv = truncated_inverse(alternate(chern_.total()));
  segre_ = graded(inv);
  for (const auto& s : segre_) segre_q_.push_back(to_rational(s));
  ch_ = chern_character(base, m, r) * mpq_class(n);
}

TowerHandle tower_ring(int m, int n, int r, Side side) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, TowerHandle> cache;
  const auto key = std::make_tuple(m, n, r, side == Side::X ? 0 : 1);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto t = std::make_shared<const TowerRing>(m, n, r, side);
  std::lock_guard lock(mu);
  return cache.emplace(key, t).first->second;
}

RationalTowerElement to_rational(const TowerElement& x) {
  RationalTowerElement out(x.ring());
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) out[k] = to_rational(x[k]);
  return out;
}

TowerElement to_integer(const RationalTowerElement& x) {
  TowerElement out(x.ring());
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) out[k] = to_integer(x[k]);
  return out;
}

TowerElement tangent_chern(const TowerHandle& t) {
  const int e = t->rank();
  const auto& c = t->bundle_chern().parts;
  // sum_i c_i(E^dual) (1 + H)^{e - i}
  TowerPolynomial poly{t, std::vector<SchubertElement>(static_cast<std::size_t>(e + 1), SchubertElement(t->grass()))};
  for (int i = 0; i < static_cast<int>(c.size()) && i <= e; ++i) {
    SchubertElement ci = c[static_cast<std::size_t>(i)];
    if (i % 2 == 1) ci = -ci;
    for (int k = 0; k <= e - i; ++k) poly.coeffs[static_cast<std::size_t>(k)] += ci * binom(e - i, k);
  }
  const TowerElement rel = TowerElement::reduce(std::move(poly));
  return multiply_pullback(rel, chern(BundleTag::TangentG, t->m(), t->r()).total());
}

RationalTowerElement tangent_character(const TowerHandle& t) {
  std::vector<mpq_class> exp_h;
  for (int k = 0; k <= t->dimension(); ++k) exp_h.push_back(factorial_inverse(k));
  const auto ch_dual = RationalTowerElement::pullback(t, dual_character(t->bundle_character()));
  RationalTowerElement out = multiply_h_series(ch_dual, exp_h);
  out -= RationalTowerElement::unit(t);
  out += RationalTowerElement::pullback(t, chern_character(BundleTag::TangentG, t->m(), t->r()));
  return out;
}

RationalTowerElement tangent_todd(const TowerHandle& t) { return todd_from_character(tangent_character(t)); }

}  // namespace hpdet::chow
