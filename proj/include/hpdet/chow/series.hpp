#pragma once

// Truncated power-series operations on graded, nilpotent-above-degree-0
// Chow elements with rational coefficients. `Elem` needs part(k),
// max_degree(), zero_like(), unit_like(), ring operations and scaling by
// mpq_class. Truncation is at Elem::max_degree().

#include <gmpxx.h>

#include <vector>

namespace hpdet::chow {

// Rational coefficients of log(t / (1 - e^{-t})) = sum_{k>=1} tau_k t^k, for k <= n.
std::vector<mpq_class> todd_log_coefficients(int n);

inline mpq_class factorial_inverse(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return mpq_class(mpz_class(1), f);
}

template <class Elem>
Elem exp_nilpotent(const Elem& x) {
  Elem out = x.unit_like();
  Elem power = x.unit_like();
  for (int k = 1; k <= x.max_degree(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power * factorial_inverse(k);
  }
  return out;
}

// 1 / x for x with degree-0 part equal to 1.
template <class Elem>
Elem truncated_inverse(const Elem& x) {
  const Elem nil = x.unit_like() - x;  // x = 1 - nil
  Elem out = x.unit_like();
  Elem power = x.unit_like();
  for (int k = 1; k <= x.max_degree(); ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

// Chern character from the graded pieces c_0 = 1, c_1, ..., via Newton's identities.
template <class Elem>
Elem chern_to_character(const std::vector<Elem>& chern, const mpq_class& rank) {
  const Elem& one = chern.front();
  const int top = one.max_degree();
  auto e = [&](int k) { return k < static_cast<int>(chern.size()) ? chern[static_cast<std::size_t>(k)] : one.zero_like(); };
  std::vector<Elem> p;  // power sums p_k
  p.push_back(one * rank);
  for (int k = 1; k <= top; ++k) {
    Elem pk = e(k) * mpq_class((k % 2 == 1) ? k : -k);
    for (int i = 1; i < k; ++i) {
      Elem t = e(i) * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) pk += t; else pk -= t;
    }
    p.push_back(pk);
  }
  Elem ch = one.zero_like();
  for (int k = 0; k <= top; ++k) ch += p[static_cast<std::size_t>(k)] * factorial_inverse(k);
  return ch;
}

// Graded Chern classes c_0..c_top from a Chern character.
template <class Elem>
std::vector<Elem> character_to_chern(const Elem& ch) {
  const int top = ch.max_degree();
  std::vector<Elem> p;  // p_k = k! ch_k
  mpz_class fact = 1;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) fact *= k;
    p.push_back(ch.part(k) * mpq_class(fact));
  }
  std::vector<Elem> e;
  e.push_back(ch.unit_like());
  for (int k = 1; k <= top; ++k) {
    Elem acc = ch.zero_like();
    for (int i = 1; i <= k; ++i) {
      Elem t = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2 == 1) acc += t; else acc -= t;
    }
    e.push_back(acc * mpq_class(1, k));
  }
  return e;
}

// Todd class exp(sum_k tau_k * k! * ch_k) of a bundle with the given Chern character.
template <class Elem>
Elem todd_from_character(const Elem& ch) {
  const int top = ch.max_degree();
  const auto tau = todd_log_coefficients(top);
  Elem log_td = ch.zero_like();
  mpz_class fact = 1;
  for (int k = 1; k <= top; ++k) {
    fact *= k;
    log_td += ch.part(k) * (tau[static_cast<std::size_t>(k)] * mpq_class(fact));
  }
  return exp_nilpotent(log_td);
}

// Dual bundle: ch_k picks up (-1)^k.
template <class Elem>
Elem dual_character(const Elem& ch) {
  Elem out = ch.zero_like();
  for (int k = 0; k <= ch.max_degree(); ++k) {
    if (k % 2 == 0) out += ch.part(k); else out -= ch.part(k);
  }
  return out;
}

}  // namespace hpdet::chow
