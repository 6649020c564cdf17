#pragma once

// Finite-field experiments on determinantal linear sections. Everything here is
// experimental evidence over F_p; nothing is certified in characteristic 0.
//
// Side Y (Z^L): the pencil is L itself (v = c), rank <= m - r, expected dimension dim_yl.
// Side X (Z_L): the pencil is L^perp (v = mn - c), rank <= r, expected dimension dim_xl.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpdet/chow/tower.hpp"
#include "hpdet/ff/pencil.hpp"

namespace hpdet::ff {

using chow::Side;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kHardBudget = 100'000'000;

struct StratumCount {
  Elem p = 0;
  std::size_t v = 0;
  std::map<int, std::uint64_t> by_rank;  // rank -> points with exactly that rank

  std::uint64_t total() const;
  std::uint64_t at_most(int r) const;
  bool operator==(const StratumCount&) const = default;
};

// Exhaustive count over P^{v-1}(F_p). Throws BudgetExceeded when the space has
// more than `budget` points (budget is clamped to the hard cap).
StratumCount rank_strata_count(const FpMatrixPencil& pencil, std::uint64_t budget = kDefaultBudget);

// Points of the rank <= r locus, in enumeration order.
std::vector<std::vector<Elem>> rank_locus_points(const FpMatrixPencil& pencil, int r,
                                                 std::uint64_t budget = kDefaultBudget);

struct DimensionEstimate {
  std::string status;              // "ok", "empty" or "inconclusive"
  std::optional<int> dimension;    // set when status == "ok"
  int expected = 0;
  bool matches = false;            // ok and equal, or empty and expected < 0
  double spread = 0.0;             // sd of log(N_p / #P^d) over primes with points, chosen d
  bool operator==(const DimensionEstimate&) const = default;
};

// counts[i] = number of points of the locus over primes[i] (at least two primes).
// Each prime votes for the d in [0, max_dim] with #P^d(F_p) nearest N_p (log scale),
// or for empty when N_p = 0; a strict majority decides, otherwise inconclusive.
DimensionEstimate dimension_estimate(const std::vector<Elem>& primes, const std::vector<std::uint64_t>& counts,
                                     int max_dim, int expected);

struct JacobianReport {
  std::uint64_t locus_points = 0;
  std::uint64_t singular_points = 0;
  int expected_codim = 0;  // (m - r)(n - r)
  int codim_estimate = 0;  // largest Jacobian rank seen on the locus
  bool operator==(const JacobianReport&) const = default;
};

// Rank of the Jacobian of all (r+1)-minors at x (a point of the pencil).
int minors_jacobian_rank(const FpMatrixPencil& pencil, const std::vector<Elem>& x, int r);

// Flags points of the rank <= r locus where the Jacobian of the (r+1)-minors
// has rank below (m - r)(n - r).
JacobianReport jacobian_singular_test(const FpMatrixPencil& pencil, int r, std::uint64_t budget = kDefaultBudget);

struct SpringerReport {
  int trials = 0;
  int produced = 0;     // trials that found a nonzero matrix
  int successes = 0;    // produced matrices passing every check
  int redraws = 0;      // quotients redrawn because the fibre was zero
  double ratio = 0.0;   // successes / produced
  std::vector<std::vector<Elem>> points;  // pencil coordinates of the produced matrices, normalized
  bool operator==(const SpringerReport&) const = default;
};

// Samples a random rank-r quotient U -> Q_lambda (an r x m matrix Lambda),
// solves for M = N Lambda in L^perp and checks rank(M) <= r, the equations of
// the section and membership in the Z_L pencil. Allows r = m.
SpringerReport springer_sample(const LinearSection& section, int r, int trials, std::uint64_t seed);
SpringerReport springer_sample(int m, int n, int r, int c, Elem p, std::uint64_t seed, int trials);

// Homogeneous polynomial over F_p, exponent vector -> coefficient (nonzero).
struct FpPolynomial {
  Elem p = 0;
  std::size_t vars = 0;
  std::map<std::vector<int>, Elem> terms;

  Elem evaluate(const std::vector<Elem>& x) const;
  int degree() const;  // -1 for zero
  bool homogeneous() const;
};

// det of the n x n matrix A(q) with A(q)_{k,i} = (L_k q)_i, a form of degree n on P(U).
FpPolynomial duality_determinant(const LinearSection& section);

struct DualityReport {
  Elem p = 0;
  std::uint64_t seed = 0;
  int attempts = 1;               // L drawn this many times (degenerate draws are redrawn)
  bool degenerate = false;        // the last draw was still degenerate
  bool agree = false;             // {det = 0} equals the rank-drop locus pointwise
  bool degree_check = false;      // nonzero form, homogeneous of degree n
  std::uint64_t points = 0;       // points of P^{m-1}(F_p)
  std::uint64_t locus_points = 0; // points of D_L
  bool operator==(const DualityReport&) const = default;
};

// r = 1, c = n. D_L: det A(q) = 0. D^L: the span of {w q^T} meets L^perp,
// computed as a rank of the stacked bases.
DualityReport check_duality(const LinearSection& section);
DualityReport check_duality_DL(int m, int n, Elem p, std::uint64_t seed, int max_attempts = 6);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string status_name(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  bool operator==(const Check&) const = default;
};

struct PrimeSample {
  Elem p = 0;
  std::uint64_t stream = 0;  // RNG stream used for L
  StratumCount counts;
  int locus_rank = 0;
  std::uint64_t locus_points = 0;
  std::optional<JacobianReport> jacobian;
  bool operator==(const PrimeSample&) const = default;
};

struct SampleReport {
  std::string kind;  // rank-locus, smoothness, springer, duality, hasse-weil
  int m = 0, n = 0, r = 0, c = 0;
  Side side = Side::Y;
  std::vector<Elem> primes;
  std::uint64_t seed = 0;
  std::vector<PrimeSample> samples;
  std::optional<DimensionEstimate> dimension_estimate;
  std::optional<std::string> smooth_sample_result;  // "smooth", "singular", "expected-singular"
  std::optional<SpringerReport> springer;
  std::vector<DualityReport> duality;
  std::vector<Check> checks;
  std::vector<std::string> log;

  bool passed() const;  // no failed check
  std::vector<std::string> failures() const;
  bool operator==(const SampleReport&) const = default;
};

struct VerifyOptions {
  std::vector<Elem> primes{3, 5, 7, 11};
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  int max_reseeds = 5;
  int trials = 20;  // springer
  int seeds = 5;    // duality: independent L per prime
};

// Exact strata per prime and a dimension estimate for the chosen side.
SampleReport verify_rank_locus(int m, int n, int r, int c, Side side, const VerifyOptions& opt);

// r = 1 on side Y: singular F_p-points of Z^L. The lemma predicts smoothness
// exactly when c < 2n - 2m + 5.
SampleReport verify_smoothness(int m, int n, int c, const VerifyOptions& opt);

// Springer consistency on side X, first prime only.
SampleReport verify_springer(int m, int n, int r, int c, const VerifyOptions& opt);

// D^L = D_L for r = 1, c = n over every prime, opt.seeds draws each.
SampleReport verify_duality(int m, int n, const VerifyOptions& opt);

// Curve sections (r = 1, side Y, dim 1): (N - p - 1)^2 <= 4 g^2 p with g from
// Riemann-Roch. Draws with singular F_p-points are reseeded.
SampleReport verify_hasse_weil(int m, int n, int c, const VerifyOptions& opt);

}  // namespace hpdet::ff
