#include "hpdet/sod.hpp"

#include <map>

#include "hpdet/errors.hpp"
#include "hpdet/parallel.hpp"

namespace hpdet {
namespace {

mpz_class binom(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string twist_suffix(std::int64_t j) {
  if (j == 0) return "";
  if (j == 1) return "(H)";
  if (j == -1) return "(-H)";
  return "(" + std::to_string(j) + "H)";
}

LedgerBlock block(const std::string& base, std::int64_t j, const mpz_class& size) {
  return {base + twist_suffix(j), size.get_si(), {j, 0}, true};
}

LedgerBlock central() { return {"C_L", 0, {0, 0}, false}; }

}  // namespace

mpz_class Ledger::total() const {
  mpz_class t = 0;
  for (const auto& b : blocks) {
    if (b.counted) t += b.generator_count;
  }
  return t;
}

Ledger lefschetz_ledger(int m, int n, int r, Side side) {
  HPDParams{m, n, r, 0, side}.validate();
  const mpz_class size = binom(m, r);
  Ledger out;
  if (side == Side::X) {
    out.name = "X";
    for (int j = 0; j < n * r; ++j) out.blocks.push_back(block("A", j, size));
  } else {
    out.name = "Y";
    for (int j = 1 - n * (m - r); j <= 0; ++j) out.blocks.push_back(block("B", j, size));
  }
  return out;
}

std::pair<Ledger, Ledger> hpd_section_ledger(int m, int n, int r, int c) {
  HPDParams{m, n, r, c, Side::X}.validate();
  const mpz_class size = binom(m, r);
  Ledger x{"X_L", {central()}};
  Ledger y{"Y_L", {}};
  const int nr = n * r;
  if (c < nr) {
    for (int j = 1; j <= nr - c; ++j) x.blocks.push_back(block("A", j, size));
  } else if (c > nr) {
    for (int j = nr - c; j <= -1; ++j) y.blocks.push_back(block("B", j, size));
  }
  y.blocks.push_back(central());
  return {x, y};
}

std::string line_bundle_label(const DivisorClass& d) {
  if (d.h == 0 && d.p == 0) return "O";
  auto term = [](std::int64_t k, const char* sym, bool first) {
    std::string s;
    if (k == 0) return s;
    if (k < 0) s += "-";
    else if (!first) s += "+";
    const std::int64_t a = k < 0 ? -k : k;
    if (a != 1) s += std::to_string(a);
    return s + sym;
  };
  return "O(" + term(d.h, "H", true) + term(d.p, "P", d.h == 0) + ")";
}

bool GramMatrix::unitriangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != entries.size()) return false;
    if (entries[i][i] != 1) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i][j] != 0) return false;
    }
  }
  return true;
}

mpz_class GramMatrix::determinant() const {
  // fraction-free Bareiss elimination
  auto a = entries;
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

GramMatrix gram_matrix(const HPDParams& params, const std::vector<DivisorClass>& collection) {
  if (collection.empty()) throw InvalidParameters("empty collection");
  params.validate();
  const std::size_t n = collection.size();
  // chi(E_i, E_j) only depends on the difference of twists.
  std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> chi;
  for (const auto& a : collection)
    for (const auto& b : collection) chi[{b.h - a.h, b.p - a.p}] = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> keys;
  for (const auto& [k, v] : chi) keys.push_back(k);
  std::vector<mpz_class> values(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) {
    values[i] = euler_characteristic(params, keys[i].first, keys[i].second);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) chi[keys[i]] = values[i];

  GramMatrix g;
  g.params = params;
  for (std::size_t i = 0; i < n; ++i) {
    g.labels.push_back(line_bundle_label(collection[i]));
    g.twists.emplace_back(collection[i]);
    std::vector<mpz_class> cls(n, mpz_class(0));
    cls[i] = 1;
    g.classes.push_back(std::move(cls));
    std::vector<mpz_class> row;
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(chi[{collection[j].h - collection[i].h, collection[j].p - collection[i].p}]);
    }
    g.entries.push_back(std::move(row));
  }
  return g;
}

MutationDirection parse_mutation_direction(std::string_view s) {
  if (s == "left") return MutationDirection::Left;
  if (s == "right") return MutationDirection::Right;
  throw InvalidParameters("direction must be left or right, got '" + std::string(s) + "'");
}

GramMatrix mutate(const GramMatrix& g, std::size_t i, MutationDirection dir) {
  const std::size_t n = g.size();
  if (i + 1 >= n) throw InvalidParameters("mutation index " + std::to_string(i) + " out of range");
  if (!g.unitriangular()) throw InvalidParameters("mutation needs a unitriangular Gram matrix");
  const mpz_class e = g.entries[i][i + 1];
  // new objects as combinations of the old ones: rows of t
  std::vector<std::vector<mpz_class>> t(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (std::size_t k = 0; k < n; ++k) t[k][k] = 1;
  t[i][i] = 0, t[i + 1][i + 1] = 0;
  GramMatrix out = g;
  if (dir == MutationDirection::Left) {
    t[i][i] = e, t[i][i + 1] = -1;  // L
    t[i + 1][i] = 1;                // E_i
    out.labels[i] = "L_{" + g.labels[i] + "}" + g.labels[i + 1];
    out.labels[i + 1] = g.labels[i];
    out.twists[i] = std::nullopt;
    out.twists[i + 1] = g.twists[i];
  } else {
    t[i][i + 1] = 1;                   // E_{i+1}
    t[i + 1][i + 1] = e, t[i + 1][i] = -1;  // R
    out.labels[i] = g.labels[i + 1];
    out.labels[i + 1] = "R_{" + g.labels[i + 1] + "}" + g.labels[i];
    out.twists[i] = g.twists[i + 1];
    out.twists[i + 1] = std::nullopt;
  }
  // entries' = t G t^T, classes' = t classes; only rows/columns i, i+1 change
  auto combine_rows = [&](const std::vector<std::vector<mpz_class>>& m, std::size_t row) {
    std::vector<mpz_class> r(m[0].size(), mpz_class(0));
    for (std::size_t k : {i, i + 1}) {
      if (t[row][k] == 0) continue;
      for (std::size_t c = 0; c < r.size(); ++c) r[c] += t[row][k] * m[k][c];
    }
    return r;
  };
  for (std::size_t row : {i, i + 1}) out.classes[row] = combine_rows(g.classes, row);
  std::vector<std::vector<mpz_class>> half = g.entries;  // t G
  for (std::size_t row : {i, i + 1}) half[row] = combine_rows(g.entries, row);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col : {i, i + 1}) {
      mpz_class v = 0;
      for (std::size_t k : {i, i + 1}) v += half[r][k] * t[col][k];
      out.entries[r][col] = v;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (col != i && col != i + 1) out.entries[r][col] = half[r][col];
    }
  }
  return out;
}

AdditivityCheck hh_additivity_check(int m, int n, int r, int c) {
  const HPDParams px{m, n, r, c, Side::X};
  const HPDParams py{m, n, r, c, Side::Y};
  px.validate();
  if (px.section_dim() < 0 || py.section_dim() < 0) {
    throw InvalidParameters("additivity check needs both sections nonempty");
  }
  AdditivityCheck out;
  out.chi_top_x = euler_char_top(px);
  out.chi_top_y = euler_char_top(py);
  out.lhs = out.chi_top_y - out.chi_top_x;
  out.rhs = binom(m, r) * (c - n * r);
  out.pass = out.lhs == out.rhs;
  return out;
}

MutationReplay mutation_replay(int d, int k) {
  if (d < 3 || d > k) throw InvalidParameters("need 3 <= d <= k");
  if (k + 1 > d * d) throw InvalidParameters("need k + 1 <= d^2");
  const HPDParams params{d, d, 1, k + 1, Side::Y};
  std::vector<DivisorClass> collection;
  for (int j = d - k; j <= 0; ++j)
    for (int i = 0; i < d; ++i) collection.push_back({j, j + i});  // O(j, j+i) = jH + (j+i)Q
  MutationReplay out;
  out.initial = gram_matrix(params, collection);
  GramMatrix g = out.initial;
  std::size_t front = 0;
  for (std::size_t pos = 0; pos < g.size(); ++pos) {
    const auto& tw = g.twists[pos];
    if (!tw || tw->h != tw->p) continue;
    for (std::size_t i = pos; i > front; --i) {
      g = mutate(g, i - 1, MutationDirection::Right);
      out.steps.push_back(i - 1);
    }
    ++front;
  }
  out.final = g;
  while (out.diagonal_prefix < g.size() && g.twists[out.diagonal_prefix] &&
         g.twists[out.diagonal_prefix]->h == g.twists[out.diagonal_prefix]->p) {
    ++out.diagonal_prefix;
  }
  out.residual = g.size() - out.diagonal_prefix;
  return out;
}

}  // namespace hpdet
