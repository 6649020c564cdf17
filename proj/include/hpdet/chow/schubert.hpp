#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hpdet/chow/grassmannian.hpp"
#include "hpdet/errors.hpp"

namespace hpdet::chow {

// Exact linear combination of Schubert classes on G(m, r).
// Coefficients are stored densely over the ring basis; a zero entry is an
// absent term.
template <class Coeff>
class BasicSchubertElement {
 public:
  using coeff_type = Coeff;

  explicit BasicSchubertElement(GrassHandle ring)
      : ring_(std::move(ring)), coeffs_(ring_->size(), Coeff(0)) {}

  static BasicSchubertElement unit(const GrassHandle& ring) { return basis(ring, ring->unit_index()); }
  static BasicSchubertElement basis(const GrassHandle& ring, std::size_t i) {
    BasicSchubertElement e(ring);
    e.coeffs_[i] = 1;
    return e;
  }
  // s[lambda]; zero when lambda does not fit the box.
  static BasicSchubertElement schubert(const GrassHandle& ring, const Partition& lambda) {
    BasicSchubertElement e(ring);
    if (auto i = ring->index_of(lambda)) e.coeffs_[*i] = 1;
    return e;
  }

  const GrassHandle& ring() const { return ring_; }
  BasicSchubertElement zero_like() const { return BasicSchubertElement(ring_); }
  BasicSchubertElement unit_like() const { return unit(ring_); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }
  const Coeff& coeff(const Partition& lambda) const {
    static const Coeff kZero(0);
    auto i = ring_->index_of(lambda);
    return i ? coeffs_[*i] : kZero;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  // Largest degree carried by the ring (the top degree of Chow(G)).
  int max_degree() const { return ring_->dimension(); }

  // Homogeneous component of the given degree.
  BasicSchubertElement part(int degree) const {
    BasicSchubertElement out(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (ring_->degree(i) == degree) out.coeffs_[i] = coeffs_[i];
    }
    return out;
  }

  // Nonzero terms in basis order (by degree, then partition).
  std::vector<std::pair<Partition, Coeff>> terms() const {
    std::vector<std::pair<Partition, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) out.emplace_back(ring_->partition(i), coeffs_[i]);
    }
    return out;
  }

  BasicSchubertElement& operator+=(const BasicSchubertElement& o) {
    check_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BasicSchubertElement& operator-=(const BasicSchubertElement& o) {
    check_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BasicSchubertElement& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  // this += a * b, without forming the product separately.
  void add_product(const BasicSchubertElement& a, const BasicSchubertElement& b) {
    check_ring(a);
    check_ring(b);
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        if (ring_->degree(i) + ring_->degree(j) > ring_->dimension()) continue;
        const Coeff ab = a.coeffs_[i] * b.coeffs_[j];
        for (const Term& t : ring_->product(i, j)) coeffs_[t.index] += ab * Coeff(static_cast<long>(t.coeff));
      }
    }
  }

  friend BasicSchubertElement operator+(BasicSchubertElement a, const BasicSchubertElement& b) { return a += b; }
  friend BasicSchubertElement operator-(BasicSchubertElement a, const BasicSchubertElement& b) { return a -= b; }
  friend BasicSchubertElement operator-(BasicSchubertElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend BasicSchubertElement operator*(BasicSchubertElement a, const Coeff& s) { return a *= s; }
  friend BasicSchubertElement operator*(const Coeff& s, BasicSchubertElement a) { return a *= s; }
  friend BasicSchubertElement operator*(const BasicSchubertElement& a, const BasicSchubertElement& b) {
    BasicSchubertElement out(a.ring_);
    out.add_product(a, b);
    return out;
  }

  friend bool operator==(const BasicSchubertElement& a, const BasicSchubertElement& b) {
    return *a.ring_ == *b.ring_ && a.coeffs_ == b.coeffs_;
  }

  // One "coeff * s[lambda]" line per nonzero term, in basis order.
  std::string dump() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      out += coeffs_[i].get_str() + " * s[" + ring_->partition(i).to_string() + "]\n";
    }
    return out;
  }

 private:
  void check_ring(const BasicSchubertElement& o) const {
    if (!(*ring_ == *o.ring_)) throw RingMismatch("Schubert elements from different Grassmannians");
  }

  GrassHandle ring_;
  std::vector<Coeff> coeffs_;
};

using SchubertElement = BasicSchubertElement<mpz_class>;
using RationalSchubertElement = BasicSchubertElement<mpq_class>;

inline RationalSchubertElement to_rational(const SchubertElement& x) {
  RationalSchubertElement out(x.ring());
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) out[i] = mpq_class(x[i]);
  return out;
}

// Integer view of a rational element; throws NonIntegralResult on a fraction.
SchubertElement to_integer(const RationalSchubertElement& x);

// Coefficient of the top class (the full rectangle).
template <class Coeff>
Coeff integrate_grass(const BasicSchubertElement<Coeff>& x) {
  return x[x.ring()->top_index()];
}

// s[1^k] = c_k(Q) and s[k] = c_k(U^dual).
SchubertElement column_class(const GrassHandle& ring, int k);
SchubertElement row_class(const GrassHandle& ring, int k);

}  // namespace hpdet::chow
