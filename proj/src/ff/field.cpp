#include "hpdet/ff/field.hpp"

#include <string>

#include "hpdet/errors.hpp"

namespace hpdet::ff {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw InvalidParameters("not a usable prime: " + std::to_string(p));
}

Elem pow_mod(Elem a, std::uint64_t e, Elem p) {
  Elem out = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) out = out * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return out;
}

Elem inv_mod(Elem a, Elem p) { return pow_mod(a, p - 2, p); }

std::size_t row_reduce(Mat& m, Elem p, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem s = inv_mod(m(r, c), p);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * s % p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = (m(i, j) + (p - f) * m(r, j)) % p;
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::size_t rank(Mat m, Elem p) {
  // forward elimination only
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem s = inv_mod(m(r, c), p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      const Elem f = m(i, c) * s % p;
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = (m(i, j) + (p - f) * m(r, j)) % p;
    }
    ++r;
  }
  return r;
}

Elem det(Mat m, Elem p) {
  const std::size_t n = m.rows;
  Elem d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = (p - d) % p;
    }
    d = d * m(c, c) % p;
    const Elem s = inv_mod(m(c, c), p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Elem f = m(i, c) * s % p;
      for (std::size_t j = c; j < n; ++j) m(i, j) = (m(i, j) + (p - f) * m(c, j)) % p;
    }
  }
  return d;
}

std::vector<std::vector<Elem>> nullspace(Mat m, Elem p) {
  std::vector<std::size_t> piv;
  row_reduce(m, p, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Elem> x(m.cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = (p - m(i, f)) % p;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::uint64_t projective_count(Elem p, std::size_t v, std::uint64_t cap) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < v; ++i) {
    total += pw;
    if (total > cap) {
      throw BudgetExceeded("P^" + std::to_string(v - 1) + "(F_" + std::to_string(p) + ") has more than " +
                           std::to_string(cap) + " points");
    }
    if (i + 1 < v) {
      if (pw > cap) {
        throw BudgetExceeded("P^" + std::to_string(v - 1) + "(F_" + std::to_string(p) + ") has more than " +
                             std::to_string(cap) + " points");
      }
      pw *= p;
    }
  }
  return total;
}

void projective_point(std::uint64_t index, Elem p, std::size_t v, std::vector<Elem>& out) {
  out.assign(v, 0);
  // points with leading 1 in position l come in blocks of p^{v-1-l}, last position first
  std::size_t lead = v - 1;
  std::uint64_t block = 1;
  for (;;) {
    if (index < block) break;
    index -= block;
    --lead;
    block *= p;
  }
  out[lead] = 1;
  for (std::size_t j = v; j-- > lead + 1;) {
    out[j] = index % p;
    index /= p;
  }
}

bool normalize(std::vector<Elem>& x, Elem p) {
  for (auto v : x) {
    if (v != 0) {
      const Elem s = inv_mod(v, p);
      for (auto& y : x) y = y * s % p;
      return true;
    }
  }
  return false;
}

}  // namespace hpdet::ff
