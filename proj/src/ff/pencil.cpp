#include "hpdet/ff/pencil.hpp"

#include <string>

#include "hpdet/errors.hpp"

namespace hpdet::ff {
namespace {

Mat flatten_rows(const std::vector<Mat>& mats, int m, int n) {
  const auto mn = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  Mat out(mats.size(), mn);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t e = 0; e < mn; ++e) out(k, e) = mats[k].a[e];
  return out;
}

void check_shape(int m, int n) {
  if (m < 1 || n < 1) throw InvalidParameters("matrix sizes must be positive");
}

}  // namespace

Mat FpMatrixPencil::evaluate(const std::vector<Elem>& x) const {
  Mat out(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (std::size_t e = 0; e < out.a.size(); ++e) {
    const Elem* c = &coeffs[e * v];
    Elem acc = 0;
    for (std::size_t k = 0; k < v; ++k) acc += c[k] * x[k] % p;
    out.a[e] = acc % p;
  }
  return out;
}

Mat FpMatrixPencil::slice(std::size_t k) const {
  Mat out(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (std::size_t e = 0; e < out.a.size(); ++e) out.a[e] = coeffs[e * v + k];
  return out;
}

std::mt19937_64 make_rng(std::uint64_t seed, Elem p, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

FpMatrixPencil sample_pencil(int m, int n, std::size_t v, Elem p, std::uint64_t seed) {
  require_prime(p);
  check_shape(m, n);
  if (v < 1) throw InvalidParameters("pencil needs at least one variable");
  auto gen = make_rng(seed, p, 0);
  FpMatrixPencil out{p, m, n, v, {}};
  out.coeffs.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(n) * v);
  for (auto& c : out.coeffs) c = gen() % p;
  return out;
}

FpMatrixPencil pencil_from_basis(int m, int n, const std::vector<Mat>& basis, Elem p) {
  FpMatrixPencil out{p, m, n, basis.size(), {}};
  const auto mn = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  out.coeffs.assign(mn * basis.size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t e = 0; e < mn; ++e) out.coeffs[e * basis.size() + k] = basis[k].a[e];
  return out;
}

bool injective(const FpMatrixPencil& pencil) {
  std::vector<Mat> mats;
  for (std::size_t k = 0; k < pencil.v; ++k) mats.push_back(pencil.slice(k));
  return rank(flatten_rows(mats, pencil.m, pencil.n), pencil.p) == pencil.v;
}

LinearSection section_from_basis(int m, int n, const std::vector<Mat>& basis, Elem p) {
  require_prime(p);
  check_shape(m, n);
  const Mat rows = flatten_rows(basis, m, n);
  if (rank(rows, p) != basis.size()) throw InvalidParameters("section basis is linearly dependent");
  LinearSection out{p, m, n, basis, {}};
  for (auto& x : nullspace(rows, p)) {
    Mat w(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    w.a = std::move(x);
    out.perp.push_back(std::move(w));
  }
  return out;
}

LinearSection sample_section(int m, int n, int c, Elem p, std::uint64_t seed, std::uint64_t stream) {
  require_prime(p);
  check_shape(m, n);
  if (c < 0 || c > m * n) throw InvalidParameters("need 0 <= c <= mn, got c=" + std::to_string(c));
  auto gen = make_rng(seed, p, stream);
  for (;;) {
    std::vector<Mat> basis;
    for (int k = 0; k < c; ++k) {
      Mat w(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      for (auto& e : w.a) e = gen() % p;
      basis.push_back(std::move(w));
    }
    if (rank(flatten_rows(basis, m, n), p) == static_cast<std::size_t>(c)) return section_from_basis(m, n, basis, p);
  }
}

}  // namespace hpdet::ff
