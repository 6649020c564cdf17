#include "hpdet/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "hpdet/errors.hpp"
#include "hpdet/parallel.hpp"

namespace hpdet {
namespace {

mpz_class binom(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void check_classify_params(int m, int n, int r, int c) {
  HPDParams{m, n, r, c, Side::X}.validate();
  if (c < 1) throw InvalidParameters("need c >= 1, got c=" + std::to_string(c));
}

}  // namespace

std::string_view direction_name(FunctorDirection d) {
  switch (d) {
    case FunctorDirection::YToX: return "Y_to_X";
    case FunctorDirection::Equivalence: return "equivalence";
    case FunctorDirection::XToY: return "X_to_Y";
  }
  return "?";
}

FunctorDirection parse_direction(std::string_view s) {
  if (s == "Y_to_X") return FunctorDirection::YToX;
  if (s == "equivalence") return FunctorDirection::Equivalence;
  if (s == "X_to_Y") return FunctorDirection::XToY;
  throw InvalidParameters("unknown functor direction '" + std::string(s) + "'");
}

SegreRow segre_row(int m, int n, int c) {
  check_classify_params(m, n, 1, c);
  SegreRow row;
  row.m = m, row.n = n, row.c = c;
  if (c < m) row.regime = "c<m";
  else if (c < n) row.regime = "m<=c<n";
  else if (c == n) row.regime = "c=n";
  else row.regime = "n<c";
  row.fano_x = c < m;
  row.rational_x = c < n;
  row.rational_y = c > n;
  row.fano_y = n < c && n == m;
  row.fano_visitor_y = c < m;
  row.fano_visitor_x = n < c && n == m;
  row.cy = c == n && n == m;
  row.smooth_zl_generic = c < 2 * n - 2 * m + 5;
  row.birational_pair = c == n;
  return row;
}

SectionReport classify(int m, int n, int r, int c, bool with_degrees) {
  check_classify_params(m, n, r, c);
  SectionReport rep;
  rep.m = m, rep.n = n, rep.r = r, rep.c = c;
  rep.dim_xl = dim_xl(m, n, r, c);
  rep.dim_yl = dim_yl(m, n, r, c);
  rep.empty_x = rep.dim_xl < 0;
  rep.empty_y = rep.dim_yl < 0;
  rep.canonical_x = canonical_class({m, n, r, c, Side::X});
  rep.canonical_y = canonical_class({m, n, r, c, Side::Y});
  const int nr = n * r;
  rep.functor_direction = c < nr ? FunctorDirection::YToX : c == nr ? FunctorDirection::Equivalence : FunctorDirection::XToY;
  rep.complement_blocks = std::abs(c - nr);
  const mpz_class kapranov = binom(m, r);
  rep.complement_count = kapranov * rep.complement_blocks;
  rep.tower_exceptional_x = kapranov * nr;
  rep.tower_exceptional_y = kapranov * (n * (m - r));
  rep.cy = m == n && c == nr;
  rep.rational_x = nr > c;
  rep.rational_y = c > nr;
  rep.nef_canonical_x = c > nr || (c == nr && n != m);
  rep.nef_canonical_y = c < nr || (c == nr && n != m);
  rep.canonical_birational_x = c > nr || (c == nr && n > m);
  rep.canonical_birational_y = c < nr || (c == nr && n > m);
  rep.fano_candidate_x = c < nr && m == n;
  rep.fano_candidate_y = c > nr && m == n;
  rep.fano_needs_lower_rank_empty = r > 1 && (rep.fano_candidate_x || rep.fano_candidate_y);
  rep.weak_fano_visitor_y = n == m && c < nr;
  rep.weak_fano_visitor_x = n == m && c > nr;
  if (r == 1) rep.segre = segre_row(m, n, c);
  if (with_degrees) {
    if (!rep.empty_x) rep.degree_x = degree_section({m, n, r, c, Side::X});
    if (!rep.empty_y) rep.degree_y = degree_section({m, n, r, c, Side::Y});
  }
  return rep;
}

SweepFilter parse_filter(std::string_view s) {
  if (s == "all") return SweepFilter::All;
  if (s == "cy") return SweepFilter::CY;
  if (s == "equivalence") return SweepFilter::Equivalence;
  if (s == "fano_candidate") return SweepFilter::FanoCandidate;
  if (s == "curve") return SweepFilter::Curve;
  throw InvalidParameters("unknown filter '" + std::string(s) + "'");
}

std::string_view filter_name(SweepFilter f) {
  switch (f) {
    case SweepFilter::All: return "all";
    case SweepFilter::CY: return "cy";
    case SweepFilter::Equivalence: return "equivalence";
    case SweepFilter::FanoCandidate: return "fano_candidate";
    case SweepFilter::Curve: return "curve";
  }
  return "?";
}

bool passes(const SectionReport& rep, SweepFilter f) {
  switch (f) {
    case SweepFilter::All: return true;
    case SweepFilter::CY: return rep.cy && !rep.empty_x && !rep.empty_y;
    case SweepFilter::Equivalence: return rep.functor_direction == FunctorDirection::Equivalence;
    case SweepFilter::FanoCandidate:
      return (rep.fano_candidate_x && !rep.empty_x) || (rep.fano_candidate_y && !rep.empty_y) ||
             (rep.segre && rep.segre->fano_x && !rep.empty_x);
    case SweepFilter::Curve: return rep.dim_xl == 1 || rep.dim_yl == 1;
  }
  return false;
}

std::vector<SectionReport> sweep(const SweepRange& range, SweepFilter filter, bool with_degrees) {
  if (range.m_lo > range.m_hi || range.n_lo > range.n_hi || range.r_lo > range.r_hi || range.c_lo > range.c_hi) {
    throw InvalidParameters("empty sweep range");
  }
  std::vector<std::tuple<int, int, int, int>> tuples;
  for (int m = std::max(2, range.m_lo); m <= range.m_hi; ++m)
    for (int n = std::max(m, range.n_lo); n <= range.n_hi; ++n)
      for (int r = std::max(1, range.r_lo); r <= std::min(m - 1, range.r_hi); ++r)
        for (int c = std::max(1, range.c_lo); c <= std::min(m * n, range.c_hi); ++c) tuples.emplace_back(m, n, r, c);

  std::vector<std::optional<SectionReport>> slots(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    const auto [m, n, r, c] = tuples[i];
    SectionReport rep = classify(m, n, r, c, false);
    if (!passes(rep, filter)) return;
    if (with_degrees) rep = classify(m, n, r, c, true);
    slots[i] = std::move(rep);
  });
  std::vector<SectionReport> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

ResidualReport residual_counts(int d, int k) {
  if (d < 3 || d > k) {
    throw InvalidParameters("need 3 <= d <= k for a Fano determinantal hypersurface, got d=" + std::to_string(d) +
                            " k=" + std::to_string(k));
  }
  ResidualReport rep;
  rep.d = d, rep.k = k;
  rep.fano_index = k - d + 1;
  rep.total_exceptional = mpz_class(d) * rep.fano_index;
  rep.residual_exceptional = mpz_class(d - 1) * rep.fano_index;
  rep.dual_section = HPDParams{d, d, 1, k + 1, Side::X};
  rep.dual_section_dim = dim_xl(d, d, 1, k + 1);
  rep.dual_section_empty = rep.dual_section_dim < 0;
  return rep;
}

}  // namespace hpdet
