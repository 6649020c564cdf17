#include "hpdet/chow/chern.hpp"

#include <string>

#include "hpdet/chow/series.hpp"

namespace hpdet::chow {
namespace {

std::vector<SchubertElement> graded(const SchubertElement& total) {
  std::vector<SchubertElement> out;
  for (int k = 0; k <= total.max_degree(); ++k) out.push_back(total.part(k));
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

SchubertElement dual_total(const SchubertElement& total) {
  SchubertElement out = total.zero_like();
  for (int k = 0; k <= total.max_degree(); ++k) {
    if (k % 2 == 0) out += total.part(k); else out -= total.part(k);
  }
  return out;
}

SchubertElement chern_q_total(const GrassHandle& ring) {
  SchubertElement c = SchubertElement::unit(ring);
  for (int k = 1; k <= ring->r(); ++k) c += column_class(ring, k);
  return c;
}

}  // namespace

SchubertElement to_integer(const RationalSchubertElement& x) {
  SchubertElement out(x.ring());
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x[i].get_den() != 1) {
      throw NonIntegralResult("non-integral coefficient " + x[i].get_str() + " on s" +
                              x.ring()->partition(i).to_string());
    }
    out[i] = x[i].get_num();
  }
  return out;
}

SchubertElement column_class(const GrassHandle& ring, int k) {
  return SchubertElement::schubert(ring, Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)));
}

SchubertElement row_class(const GrassHandle& ring, int k) {
  if (k == 0) return SchubertElement::unit(ring);
  return SchubertElement::schubert(ring, Partition({k}));
}

SchubertElement BundleChern::total() const {
  SchubertElement out = parts.front().zero_like();
  for (const auto& p : parts) out += p;
  return out;
}

RationalSchubertElement chern_character(BundleTag tag, int m, int r) {
  const GrassHandle ring = grass_ring(m, r);
  switch (tag) {
    case BundleTag::Q: {
      const auto c = graded(chern_q_total(ring));
      std::vector<RationalSchubertElement> rc;
      for (const auto& p : c) rc.push_back(to_rational(p));
      return chern_to_character(rc, mpq_class(r));
    }
    case BundleTag::Qdual:
      return dual_character(chern_character(BundleTag::Q, m, r));
    case BundleTag::U:
      return RationalSchubertElement::unit(ring) * mpq_class(m) - chern_character(BundleTag::Q, m, r);
    case BundleTag::Udual:
      return dual_character(chern_character(BundleTag::U, m, r));
    case BundleTag::TangentG:
      return chern_character(BundleTag::Udual, m, r) * chern_character(BundleTag::Q, m, r);
  }
  throw InvalidParameters("unknown bundle tag");
}

BundleChern chern(BundleTag tag, int m, int r) {
  const GrassHandle ring = grass_ring(m, r);
  switch (tag) {
    case BundleTag::Q:
      return {r, graded(chern_q_total(ring))};
    case BundleTag::U:
      return {m - r, graded(truncated_inverse(chern_q_total(ring)))};
    case BundleTag::Qdual:
      return {r, graded(dual_total(chern_q_total(ring)))};
    case BundleTag::Udual:
      return {m - r, graded(dual_total(truncated_inverse(chern_q_total(ring))))};
    case BundleTag::TangentG: {
      const auto parts = character_to_chern(chern_character(BundleTag::TangentG, m, r));
      std::vector<SchubertElement> ints;
      for (const auto& p : parts) ints.push_back(to_integer(p));
      while (ints.size() > 1 && ints.back().is_zero()) ints.pop_back();
      return {r * (m - r), ints};
    }
  }
  throw InvalidParameters("unknown bundle tag");
}

BundleTag parse_bundle_tag(std::string_view name) {
  if (name == "Q") return BundleTag::Q;
  if (name == "U") return BundleTag::U;
  if (name == "Qdual") return BundleTag::Qdual;
  if (name == "Udual") return BundleTag::Udual;
  if (name == "tangentG") return BundleTag::TangentG;
  throw InvalidParameters("unknown bundle tag '" + std::string(name) + "'");
}

}  // namespace hpdet::chow
