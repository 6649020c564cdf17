#include "hpdet/chow/grassmannian.hpp"

#include <functional>
#include <string>

#include "hpdet/errors.hpp"

namespace hpdet::chow {
namespace {

constexpr std::size_t kTableLimit = 80;

std::vector<std::vector<int>> horizontal_strips(const Partition& lambda, int rows, int cols, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> nu(static_cast<std::size_t>(rows));
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == rows) {
      if (remaining == 0) out.push_back(nu);
      return;
    }
    const int lo = lambda[static_cast<std::size_t>(i)];
    const int hi = (i == 0) ? cols : lambda[static_cast<std::size_t>(i - 1)];
    for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
      nu[static_cast<std::size_t>(i)] = v;
      rec(i + 1, remaining - (v - lo));
    }
  };
  rec(0, k);
  return out;
}

}  // namespace

GrassmannRing::GrassmannRing(int m, int r) : m_(m), r_(r) {
  if (m <= 0 || r <= 0 || r >= m) {
    throw InvalidParameters("Grassmannian G(m,r) requires 0 < r < m, got m=" + std::to_string(m) +
                            " r=" + std::to_string(r));
  }
  basis_ = box_partitions(rows(), cols());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(basis_[i], i);
    degrees_.push_back(basis_[i].size());
  }
  for (const auto& p : basis_) complement_.push_back(index_.at(p.complement(rows(), cols())));

  pieri_.resize(static_cast<std::size_t>(cols()) + 1);
  for (int k = 0; k <= cols(); ++k) {
    auto& table = pieri_[static_cast<std::size_t>(k)];
    table.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (auto& nu : horizontal_strips(basis_[i], rows(), cols(), k)) {
        table[i].push_back(index_.at(Partition(std::move(nu))));
      }
    }
  }

  // Kostka rows: h_alpha = sum_nu K[nu][alpha] sigma_nu, obtained by Pieri from 1.
  const std::size_t n = basis_.size();
  std::vector<std::vector<std::int64_t>> kostka(n);
  for (std::size_t a = 0; a < n; ++a) kostka[a] = times_h_alpha(unit_index(), a);

  // Invert the unitriangular system. Within a fixed size, nu dominating mu
  // implies nu > mu lexicographically, so process each size class from the
  // lexicographically largest partition down.
  h_expansion_.assign(n, {});
  std::vector<std::vector<std::int64_t>> dense(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t mu_plus = n; mu_plus-- > 0;) {
    const std::size_t mu = mu_plus;
    auto& row = dense[mu];
    row[mu] = 1;
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (nu == mu || kostka[mu][nu] == 0) continue;
      // kostka[mu][nu] is the coefficient of sigma_nu in h_mu; nu is processed already.
      for (std::size_t a = 0; a < n; ++a) row[a] -= kostka[mu][nu] * dense[nu][a];
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (row[a] != 0) h_expansion_[mu].emplace_back(a, row[a]);
    }
  }
}

std::optional<std::size_t> GrassmannRing::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& GrassmannRing::pieri(std::size_t i, int k) const {
  static const std::vector<std::size_t> kEmpty;
  if (k < 0 || k > cols()) return kEmpty;
  return pieri_[static_cast<std::size_t>(k)][i];
}

std::vector<std::int64_t> GrassmannRing::times_h_alpha(std::size_t i, std::size_t alpha) const {
  std::vector<std::int64_t> cur(basis_.size(), 0);
  cur[i] = 1;
  for (int part : basis_[alpha].parts()) {
    std::vector<std::int64_t> next(basis_.size(), 0);
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s] == 0) continue;
      for (std::size_t t : pieri(s, part)) next[t] += cur[s];
    }
    cur = std::move(next);
  }
  return cur;
}

SparseRow GrassmannRing::compute_product(std::size_t i, std::size_t j) const {
  std::vector<std::int64_t> acc(basis_.size(), 0);
  for (const auto& [alpha, coeff] : h_expansion_[j]) {
    const auto partial = times_h_alpha(i, alpha);
    for (std::size_t t = 0; t < partial.size(); ++t) acc[t] += coeff * partial[t];
  }
  SparseRow row;
  for (std::size_t t = 0; t < acc.size(); ++t) {
    if (acc[t] != 0) row.push_back({static_cast<std::uint32_t>(t), acc[t]});
  }
  return row;
}

void GrassmannRing::build_table() const {
  const std::size_t n = basis_.size();
  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    // sigma_i * h_alpha for every alpha, each from its prefix (alpha minus its last part).
    std::vector<std::vector<std::int64_t>> by_alpha(n);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& parts = basis_[a].parts();
      if (parts.empty()) {
        by_alpha[a].assign(n, 0);
        by_alpha[a][i] = 1;
        continue;
      }
      const Partition prefix(std::vector<int>(parts.begin(), parts.end() - 1));
      const auto& base = by_alpha[index_.at(prefix)];
      std::vector<std::int64_t> next(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        if (base[s] == 0) continue;
        for (std::size_t t : pieri(s, parts.back())) next[t] += base[s];
      }
      by_alpha[a] = std::move(next);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::int64_t> acc(n, 0);
      for (const auto& [alpha, coeff] : h_expansion_[j]) {
        const auto& partial = by_alpha[alpha];
        for (std::size_t t = 0; t < n; ++t) acc[t] += coeff * partial[t];
      }
      auto& row = table_[i * n + j];
      for (std::size_t t = 0; t < n; ++t) {
        if (acc[t] != 0) row.push_back({static_cast<std::uint32_t>(t), acc[t]});
      }
    }
  }
}

const SparseRow& GrassmannRing::product(std::size_t i, std::size_t j) const {
  if (basis_.size() > kTableLimit) {
    std::lock_guard<std::mutex> lock(lazy_mu_);
    auto it = lazy_.find({i, j});
    if (it == lazy_.end()) it = lazy_.emplace(std::make_pair(i, j), compute_product(i, j)).first;
    return it->second;
  }
  std::call_once(table_once_, [this] { build_table(); });
  return table_[i * basis_.size() + j];
}

GrassHandle grass_ring(int m, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GrassHandle> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, r});
  if (it != cache.end()) return it->second;
  auto handle = std::make_shared<const GrassmannRing>(m, r);
  cache.emplace(std::make_pair(m, r), handle);
  return handle;
}

}  // namespace hpdet::chow
