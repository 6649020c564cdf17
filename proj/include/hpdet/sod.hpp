#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hpdet/invariants.hpp"

namespace hpdet {

struct LedgerBlock {
  std::string label;
  std::int64_t generator_count = 0;  // exceptional generators; 0 for the uncounted C_L block
  DivisorClass twist;
  bool counted = true;
  bool operator==(const LedgerBlock&) const = default;
};

struct Ledger {
  std::string name;
  std::vector<LedgerBlock> blocks;
  mpz_class total() const;  // sum over counted blocks
  bool operator==(const Ledger&) const = default;
};

// Rectangular Lefschetz decomposition of the tower:
//   X: A, A(H), ..., A((nr-1)H)
//   Y: B((1-n(m-r))H), ..., B(-H), B
// each block generated by binom(m, r) exceptional objects.
Ledger lefschetz_ledger(int m, int n, int r, Side side);

// Decompositions of the two sections around the shared block C_L:
//   c < nr: X_L = <C_L, A(H), ..., A((nr-c)H)>,  Y_L = <C_L>
//   c > nr: X_L = <C_L>,  Y_L = <B((nr-c)H), ..., B(-H), C_L>
std::pair<Ledger, Ledger> hpd_section_ledger(int m, int n, int r, int c);

std::string line_bundle_label(const DivisorClass& d);  // "O(2H-P)", "O"

struct GramMatrix {
  HPDParams params;
  std::vector<std::string> labels;
  // Twist of each object when it is still a line bundle of the input collection.
  std::vector<std::optional<DivisorClass>> twists;
  // K-theory class of each object in terms of the input collection.
  std::vector<std::vector<mpz_class>> classes;
  std::vector<std::vector<mpz_class>> entries;  // entries[i][j] = chi(E_i, E_j)

  std::size_t size() const { return entries.size(); }
  bool unitriangular() const;
  mpz_class determinant() const;
  bool operator==(const GramMatrix&) const = default;
};

// chi(E_i, E_j) for line bundles E_i = O(h_i H + p_i P) on the section.
GramMatrix gram_matrix(const HPDParams& params, const std::vector<DivisorClass>& collection);

enum class MutationDirection { Left, Right };
MutationDirection parse_mutation_direction(std::string_view s);

// Mutation of the pair (E_i, E_{i+1}) with e = chi(E_i, E_{i+1}):
//   left:  (E_i, E_{i+1}) -> (L, E_i),      [L] = e [E_i] - [E_{i+1}]
//   right: (E_i, E_{i+1}) -> (E_{i+1}, R),  [R] = e [E_{i+1}] - [E_i]
// Throws InvalidParameters for an index out of range or a non-unitriangular matrix.
GramMatrix mutate(const GramMatrix& g, std::size_t i, MutationDirection dir);

struct AdditivityCheck {
  mpz_class chi_top_x, chi_top_y;
  mpz_class lhs;  // chi_top(Y_L) - chi_top(X_L)
  mpz_class rhs;  // (c - nr) binom(m, r)
  bool pass = false;
  bool operator==(const AdditivityCheck&) const = default;
};

// Throws InvalidParameters when either section is empty.
AdditivityCheck hh_additivity_check(int m, int n, int r, int c);

// Replays the mutation argument for a Fano determinantal hypersurface of
// degree d in P^k on its resolution Y_L, (m, n, r, c) = (d, d, 1, k + 1):
// start from the blocks O(j, j), ..., O(j, j + d - 1), j = d - k .. 0, with
// O(a, b) = aH + bQ (each block is B(jH) twisted by jQ), and move every
// diagonal O(t, t) to the front with right mutations.
struct MutationReplay {
  GramMatrix initial;
  GramMatrix final;
  std::vector<std::size_t> steps;   // right-mutation indices, in order
  std::size_t diagonal_prefix = 0;  // leading objects that are diagonal line bundles
  std::size_t residual = 0;         // objects after the diagonal block
  bool operator==(const MutationReplay&) const = default;
};
MutationReplay mutation_replay(int d, int k);

}  // namespace hpdet
