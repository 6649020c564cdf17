#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpdet/invariants.hpp"

namespace hpdet {

enum class FunctorDirection { YToX, Equivalence, XToY };

std::string_view direction_name(FunctorDirection d);  // "Y_to_X", "equivalence", "X_to_Y"
FunctorDirection parse_direction(std::string_view s);

// The r = 1 row: P^{n-1} x P^{m-1} sections against determinantal sections.
struct SegreRow {
  int m = 0, n = 0, c = 0;
  std::string regime;  // "c<m", "m<=c<n", "c=n", "n<c"
  bool fano_x = false;           // c < m
  bool rational_x = false;       // c < n
  bool rational_y = false;       // c > n
  bool fano_y = false;           // n < c and n = m
  bool fano_visitor_y = false;   // c < m
  bool fano_visitor_x = false;   // n < c and n = m
  bool cy = false;               // c = n = m
  bool smooth_zl_generic = false;  // c < 2n - 2m + 5
  bool birational_pair = false;  // c = n
  bool operator==(const SegreRow&) const = default;
};

struct SectionReport {
  int m = 0, n = 0, r = 0, c = 0;
  int dim_xl = 0, dim_yl = 0;
  bool empty_x = false, empty_y = false;
  DivisorClass canonical_x, canonical_y;
  FunctorDirection functor_direction = FunctorDirection::Equivalence;
  int complement_blocks = 0;         // |c - nr|
  mpz_class complement_count = 0;    // |c - nr| binom(m, r)
  mpz_class tower_exceptional_x = 0; // nr binom(m, r)
  mpz_class tower_exceptional_y = 0; // n(m - r) binom(m, r)
  bool cy = false;                   // cy_x = cy_y: m = n and c = nr
  bool rational_x = false, rational_y = false;
  bool nef_canonical_x = false, nef_canonical_y = false;
  bool canonical_birational_x = false, canonical_birational_y = false;
  bool fano_candidate_x = false, fano_candidate_y = false;
  // The Fano conclusion also needs the rank <= r-1 part of the section to be
  // empty; never checked here (automatically true for r = 1).
  bool fano_needs_lower_rank_empty = false;
  bool weak_fano_visitor_x = false, weak_fano_visitor_y = false;
  std::optional<SegreRow> segre;
  std::optional<mpz_class> degree_x, degree_y;  // filled on request for nonempty sections

  bool cy_x() const { return cy; }
  bool cy_y() const { return cy; }
  bool operator==(const SectionReport&) const = default;
};

// Throws InvalidParameters unless 0 < r < m <= n and 1 <= c <= mn.
SectionReport classify(int m, int n, int r, int c, bool with_degrees = false);

SegreRow segre_row(int m, int n, int c);

enum class SweepFilter { All, CY, Equivalence, FanoCandidate, Curve };
SweepFilter parse_filter(std::string_view s);
std::string_view filter_name(SweepFilter f);

struct SweepRange {
  int m_lo = 2, m_hi = 2;
  int n_lo = 2, n_hi = 2;  // n is further clipped to n >= m
  int r_lo = 1, r_hi = 1;  // clipped to 0 < r < m
  int c_lo = 1, c_hi = 1;  // clipped to 1 <= c <= mn
  bool operator==(const SweepRange&) const = default;
};

bool passes(const SectionReport& rep, SweepFilter f);

// Reports for every valid tuple in the box passing the filter, sorted by (m, n, r, c).
// Throws InvalidParameters when a range is empty (lo > hi).
std::vector<SectionReport> sweep(const SweepRange& range, SweepFilter filter, bool with_degrees = false);

struct ResidualReport {
  int d = 0, k = 0;
  int fano_index = 0;            // k - d + 1
  mpz_class total_exceptional;   // d (k - d + 1)
  mpz_class residual_exceptional;  // (d - 1)(k - d + 1)
  HPDParams dual_section;        // (m, n, r, c) = (d, d, 1, k + 1), side X
  int dual_section_dim = 0;
  bool dual_section_empty = false;
  bool operator==(const ResidualReport&) const = default;
};

// Degree-d determinantal hypersurface in P^k. Throws InvalidParameters unless 3 <= d <= k.
ResidualReport residual_counts(int d, int k);

}  // namespace hpdet
