#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hpdet/chow/chern.hpp"
#include "hpdet/chow/schubert.hpp"

namespace hpdet::chow {

enum class Side { X, Y };

std::string_view side_name(Side s);
Side parse_side(std::string_view s);

// Projective bundle P(E) -> G(m, r) in Grothendieck's convention (rank-one
// quotients of E), with
//   side X: E = V (x) Q        = Q^{+n},      rank e = n r
//   side Y: E = V^dual (x) U^dual = (U^dual)^{+n}, rank e = n (m - r)
// H is the tautological quotient line bundle class; P is the pullback of c_1(Q).
// The Chow ring is free over Chow(G) on 1, H, ..., H^{e-1} with
//   H^e = c_1(E) H^{e-1} - c_2(E) H^{e-2} + ... ,
// and pi_*(H^{e-1+k}) = s_k(E), the degree-k part of 1 / (1 - c_1 + c_2 - ...).
class TowerRing {
 public:
  // Throws InvalidParameters unless 0 < r < m <= n.
  TowerRing(int m, int n, int r, Side side);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  Side side() const { return side_; }
  const GrassHandle& grass() const { return grass_; }
  int rank() const { return rank_; }  // e
  int dimension() const { return grass_->dimension() + rank_ - 1; }

  const BundleChern& bundle_chern() const { return chern_; }
  // s_k(E) for k = 0 .. dim G.
  const std::vector<SchubertElement>& segre() const { return segre_; }
  const std::vector<RationalSchubertElement>& segre_rational() const { return segre_q_; }
  // Chern character of E, rational.
  const RationalSchubertElement& bundle_character() const { return ch_; }

  bool operator==(const TowerRing& o) const {
    return m_ == o.m_ && n_ == o.n_ && r_ == o.r_ && side_ == o.side_;
  }

 private:
  int m_, n_, r_;
  Side side_;
  GrassHandle grass_;
  int rank_;
  BundleChern chern_;
  std::vector<SchubertElement> segre_;
  std::vector<RationalSchubertElement> segre_q_;
  RationalSchubertElement ch_;
};

using TowerHandle = std::shared_ptr<const TowerRing>;

// Cached handle. Throws InvalidParameters unless 0 < r < m <= n.
TowerHandle tower_ring(int m, int n, int r, Side side);

namespace detail {
template <class Coeff>
const BasicSchubertElement<Coeff>& segre_of(const TowerRing& t, std::size_t k);
template <>
inline const SchubertElement& segre_of<mpz_class>(const TowerRing& t, std::size_t k) {
  return t.segre()[k];
}
template <>
inline const RationalSchubertElement& segre_of<mpq_class>(const TowerRing& t, std::size_t k) {
  return t.segre_rational()[k];
}
template <class Coeff>
BasicSchubertElement<Coeff> cast(const SchubertElement& x) {
  if constexpr (std::is_same_v<Coeff, mpz_class>) {
    return x;
  } else {
    return to_rational(x);
  }
}
}  // namespace detail

// Polynomial in H over Chow(G) with no bound on the H-degree; reduce() brings it
// into the normal form H^0 .. H^{e-1}.
template <class Coeff>
struct BasicTowerPolynomial {
  TowerHandle ring;
  std::vector<BasicSchubertElement<Coeff>> coeffs;  // coeffs[k] multiplies H^k
};

template <class Coeff>
class BasicTowerElement {
 public:
  using coeff_type = Coeff;
  using Grass = BasicSchubertElement<Coeff>;

  explicit BasicTowerElement(TowerHandle ring)
      : ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(ring_->rank()), Grass(ring_->grass())) {}

  static BasicTowerElement unit(const TowerHandle& ring) { return pullback(ring, Grass::unit(ring->grass())); }
  static BasicTowerElement pullback(const TowerHandle& ring, const Grass& x) {
    BasicTowerElement out(ring);
    out.coeffs_[0] = x;
    return out;
  }
  // H^k, reduced.
  static BasicTowerElement h_power(const TowerHandle& ring, int k) {
    BasicTowerPolynomial<Coeff> poly{ring, std::vector<Grass>(static_cast<std::size_t>(k + 1), Grass(ring->grass()))};
    poly.coeffs[static_cast<std::size_t>(k)] = Grass::unit(ring->grass());
    return reduce(poly);
  }
  static BasicTowerElement hyperplane(const TowerHandle& ring) { return h_power(ring, 1); }
  // P: pullback of c_1(Q).
  static BasicTowerElement p_class(const TowerHandle& ring) {
    return pullback(ring, detail::cast<Coeff>(column_class(ring->grass(), 1)));
  }

  // Rewrites all H-powers >= e with the Grothendieck relation.
  static BasicTowerElement reduce(BasicTowerPolynomial<Coeff> poly) {
    const TowerRing& t = *poly.ring;
    const int e = t.rank();
    const auto& c = t.bundle_chern().parts;
    for (int k = static_cast<int>(poly.coeffs.size()) - 1; k >= e; --k) {
      const Grass top = poly.coeffs[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      for (int i = 1; i <= e && i < static_cast<int>(c.size()); ++i) {
        Grass term = top * detail::cast<Coeff>(c[static_cast<std::size_t>(i)]);
        if (i % 2 == 1) poly.coeffs[static_cast<std::size_t>(k - i)] += term;
        else poly.coeffs[static_cast<std::size_t>(k - i)] -= term;
      }
    }
    BasicTowerElement out(poly.ring);
    for (int k = 0; k < e && k < static_cast<int>(poly.coeffs.size()); ++k) {
      out.coeffs_[static_cast<std::size_t>(k)] = poly.coeffs[static_cast<std::size_t>(k)];
    }
    return out;
  }

  const TowerHandle& ring() const { return ring_; }
  const std::vector<Grass>& coeffs() const { return coeffs_; }
  const Grass& operator[](std::size_t k) const { return coeffs_[k]; }
  Grass& operator[](std::size_t k) { return coeffs_[k]; }

  BasicTowerElement zero_like() const { return BasicTowerElement(ring_); }
  BasicTowerElement unit_like() const { return unit(ring_); }
  int max_degree() const { return ring_->dimension(); }
  bool is_zero() const {
    for (const auto& g : coeffs_) {
      if (!g.is_zero()) return false;
    }
    return true;
  }

  // Homogeneous component of total degree d.
  BasicTowerElement part(int d) const {
    BasicTowerElement out(ring_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k].part(d - static_cast<int>(k));
    return out;
  }

  BasicTowerElement& operator+=(const BasicTowerElement& o) {
    check_ring(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BasicTowerElement& operator-=(const BasicTowerElement& o) {
    check_ring(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  BasicTowerElement& operator*=(const Coeff& s) {
    for (auto& g : coeffs_) g *= s;
    return *this;
  }

  friend BasicTowerElement operator+(BasicTowerElement a, const BasicTowerElement& b) { return a += b; }
  friend BasicTowerElement operator-(BasicTowerElement a, const BasicTowerElement& b) { return a -= b; }
  friend BasicTowerElement operator*(BasicTowerElement a, const Coeff& s) { return a *= s; }
  friend BasicTowerElement operator*(const Coeff& s, BasicTowerElement a) { return a *= s; }

  friend BasicTowerElement operator*(const BasicTowerElement& a, const BasicTowerElement& b) {
    a.check_ring(b);
    const int dim = a.ring_->dimension();
    const std::size_t e = a.coeffs_.size();
    BasicTowerPolynomial<Coeff> poly{a.ring_, std::vector<Grass>(2 * e - 1, Grass(a.ring_->grass()))};
    for (std::size_t i = 0; i < e; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < e; ++j) {
        if (static_cast<int>(i + j) > dim || b.coeffs_[j].is_zero()) continue;
        poly.coeffs[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
      }
    }
    return reduce(std::move(poly));
  }

  friend bool operator==(const BasicTowerElement& a, const BasicTowerElement& b) {
    return *a.ring_ == *b.ring_ && a.coeffs_ == b.coeffs_;
  }

  // "coeff * s[lambda] * H^k" lines sorted by (k, lambda).
  std::string dump() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      for (const auto& [lambda, c] : sorted_terms(coeffs_[k])) {
        out += c.get_str() + " * s[" + lambda.to_string() + "] * H^" + std::to_string(k) + "\n";
      }
    }
    return out;
  }

 private:
  static std::vector<std::pair<Partition, Coeff>> sorted_terms(const Grass& g) {
    auto terms = g.terms();
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return terms;
  }
  void check_ring(const BasicTowerElement& o) const {
    if (!(*ring_ == *o.ring_)) throw RingMismatch("tower elements from different towers");
  }

  TowerHandle ring_;
  std::vector<Grass> coeffs_;
};

using TowerElement = BasicTowerElement<mpz_class>;
using RationalTowerElement = BasicTowerElement<mpq_class>;
using TowerPolynomial = BasicTowerPolynomial<mpz_class>;

RationalTowerElement to_rational(const TowerElement& x);
TowerElement to_integer(const RationalTowerElement& x);

// Integral over the tower: the Chow(G)-coefficient of H^{e-1}, integrated over G.
template <class Coeff>
Coeff integrate_tower(const BasicTowerElement<Coeff>& x) {
  return integrate_grass(x[static_cast<std::size_t>(x.ring()->rank() - 1)]);
}

// pi_* of an unreduced polynomial: sum_k a_k s_{k-e+1}(E). Independent of reduce().
template <class Coeff>
BasicSchubertElement<Coeff> pushforward(const BasicTowerPolynomial<Coeff>& poly) {
  const TowerRing& t = *poly.ring;
  const int e = t.rank();
  BasicSchubertElement<Coeff> out(t.grass());
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
    const int s = static_cast<int>(k) - e + 1;
    if (s < 0 || s > t.grass()->dimension()) continue;
    out.add_product(poly.coeffs[k], detail::segre_of<Coeff>(t, static_cast<std::size_t>(s)));
  }
  return out;
}

// Integral of H^k * x, computed through the pushforward (no product on the tower).
template <class Coeff>
Coeff integrate_with_h_power(const BasicTowerElement<Coeff>& x, int k) {
  BasicTowerPolynomial<Coeff> poly{x.ring(), std::vector<BasicSchubertElement<Coeff>>(
                                                 static_cast<std::size_t>(k) + x.coeffs().size(),
                                                 BasicSchubertElement<Coeff>(x.ring()->grass()))};
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) poly.coeffs[i + static_cast<std::size_t>(k)] = x[i];
  return integrate_grass(pushforward(poly));
}

// Multiply by a power series sum_k a_k H^k with scalar coefficients (truncated at the top degree).
template <class Coeff>
BasicTowerElement<Coeff> multiply_h_series(const BasicTowerElement<Coeff>& x, const std::vector<Coeff>& series) {
  const auto& t = x.ring();
  const std::size_t e = x.coeffs().size();
  const std::size_t len = std::min<std::size_t>(series.size(), static_cast<std::size_t>(t->dimension()) + 1);
  BasicTowerPolynomial<Coeff> poly{t, std::vector<BasicSchubertElement<Coeff>>(e + len, BasicSchubertElement<Coeff>(t->grass()))};
  for (std::size_t i = 0; i < e; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < len; ++k) {
      if (series[k] == 0) continue;
      poly.coeffs[i + k] += x[i] * series[k];
    }
  }
  return BasicTowerElement<Coeff>::reduce(std::move(poly));
}

// Multiply by a class pulled back from G.
template <class Coeff>
BasicTowerElement<Coeff> multiply_pullback(const BasicTowerElement<Coeff>& x, const BasicSchubertElement<Coeff>& g) {
  BasicTowerElement<Coeff> out = x.zero_like();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) out[i] = x[i] * g;
  return out;
}

// Total Chern class of the tangent bundle, via 0 -> O -> E^dual(H) -> T_rel -> 0.
TowerElement tangent_chern(const TowerHandle& t);
// Chern character and Todd class of the tangent bundle.
RationalTowerElement tangent_character(const TowerHandle& t);
RationalTowerElement tangent_todd(const TowerHandle& t);

}  // namespace hpdet::chow
