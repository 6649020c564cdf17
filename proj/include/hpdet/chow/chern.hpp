#pragma once

#include <string_view>
#include <vector>

#include "hpdet/chow/schubert.hpp"

namespace hpdet::chow {

enum class BundleTag { Q, U, Qdual, Udual, TangentG };

// Total Chern class as graded pieces: parts[k] = c_k, parts[0] = 1.
struct BundleChern {
  int rank = 0;
  std::vector<SchubertElement> parts;

  SchubertElement total() const;
  const SchubertElement& c(int k) const { return parts.at(static_cast<std::size_t>(k)); }
};

// Tautological bundles on G(m, r) and its tangent bundle U^dual (x) Q.
// c(U) is the truncated inverse of c(Q); the tangent bundle goes through Chern
// characters (ch(U) = m - ch(Q), duals negate odd degrees).
BundleChern chern(BundleTag tag, int m, int r);

// Chern character of a tautological bundle, rational coefficients.
RationalSchubertElement chern_character(BundleTag tag, int m, int r);

BundleTag parse_bundle_tag(std::string_view name);

}  // namespace hpdet::chow
