#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hpdet/chow/partition.hpp"

namespace hpdet::chow {

// One entry of a structure-constant row: coefficient of basis element `index`.
struct Term {
  std::uint32_t index;
  std::int64_t coeff;
};
using SparseRow = std::vector<Term>;

// Chow ring of the Grassmannian G(m, r) of r-dimensional quotients of an
// m-dimensional space, on the Schubert basis.
//
// Basis classes s[lambda] are indexed by partitions in the box with r rows and
// m - r columns. With this convention
//   c(Q)      = sum_k s[1^k]      (columns, k <= r)
//   c(U^dual) = sum_k s[k]        (rows,    k <= m - r)
// where 0 -> U -> U (x) O -> Q -> 0 is the tautological sequence.
//
// Products are computed with the Pieri rule: every Schubert class is first
// rewritten on the complete-homogeneous basis h_alpha = s[a1] s[a2] ...
// (a unitriangular change of basis), and multiplication by h_alpha is then an
// iterated horizontal-strip expansion. Classes leaving the box vanish, which is
// compatible with products because their span is an ideal.
class GrassmannRing {
 public:
  // Throws InvalidParameters unless 0 < r < m.
  GrassmannRing(int m, int r);

  int m() const { return m_; }
  int r() const { return r_; }
  int rows() const { return r_; }
  int cols() const { return m_ - r_; }
  int dimension() const { return r_ * (m_ - r_); }
  std::size_t size() const { return basis_.size(); }

  const std::vector<Partition>& basis() const { return basis_; }
  const Partition& partition(std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::size_t> index_of(const Partition& p) const;
  std::size_t unit_index() const { return 0; }
  std::size_t top_index() const { return basis_.size() - 1; }
  std::size_t complement_index(std::size_t i) const { return complement_[i]; }

  // Indices nu with nu / basis[i] a horizontal strip of k boxes inside the box.
  const std::vector<std::size_t>& pieri(std::size_t i, int k) const;

  // sigma_mu = sum_alpha h_expansion(mu)[alpha] * h_alpha, alpha indexed by basis.
  const std::vector<std::pair<std::size_t, std::int64_t>>& h_expansion(std::size_t mu) const {
    return h_expansion_[mu];
  }

  // Structure constants of sigma_i * sigma_j. Uses a cached full table when the
  // ring is small; otherwise computes the row on demand.
  const SparseRow& product(std::size_t i, std::size_t j) const;

  bool operator==(const GrassmannRing& o) const { return m_ == o.m_ && r_ == o.r_; }

 private:
  std::vector<std::int64_t> times_h_alpha(std::size_t i, std::size_t alpha) const;
  SparseRow compute_product(std::size_t i, std::size_t j) const;
  void build_table() const;

  int m_;
  int r_;
  std::vector<Partition> basis_;
  std::vector<int> degrees_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::size_t> complement_;
  // pieri_[k][i]
  std::vector<std::vector<std::vector<std::size_t>>> pieri_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> h_expansion_;

  mutable std::once_flag table_once_;
  mutable std::vector<SparseRow> table_;  // row i * size() + j
  mutable std::mutex lazy_mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseRow> lazy_;
};

using GrassHandle = std::shared_ptr<const GrassmannRing>;

// Shared, cached ring handle for G(m, r). Throws InvalidParameters unless 0 < r < m.
GrassHandle grass_ring(int m, int r);

}  // namespace hpdet::chow
