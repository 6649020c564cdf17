#pragma once

// JSON, CSV and Markdown renderings of the report types. JSON documents carry
// "schema_version" and round-trip: the from_json functions invert to_json.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "hpdet/classify.hpp"
#include "hpdet/ff/verify.hpp"
#include "hpdet/invariants.hpp"
#include "hpdet/sod.hpp"

namespace hpdet::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Markdown };
Format parse_format(std::string_view s);  // json, csv, md

// Summary of the numeric invariants of one section.
struct InvariantsReport {
  HPDParams params;
  int dimension = 0;
  mpz_class degree;
  DivisorClass canonical;
  std::optional<mpz_class> chi_top;  // nonempty sections
  std::optional<mpz_class> chi_o;    // nonempty sections
  std::optional<mpz_class> genus;    // curves
  bool operator==(const InvariantsReport&) const = default;
};
InvariantsReport invariants_report(const HPDParams& params);

struct DegreeReport {
  int m = 0, n = 0, r = 0;
  mpz_class degree_x, degree_y;
  bool operator==(const DegreeReport&) const = default;
};

struct SweepReport {
  SweepRange range;
  SweepFilter filter = SweepFilter::All;
  std::vector<SectionReport> rows;
  bool operator==(const SweepReport&) const = default;
};

struct LedgerReport {
  int m = 0, n = 0, r = 0;
  std::optional<int> c;  // set for the section ledgers
  std::vector<Ledger> ledgers;
  bool operator==(const LedgerReport&) const = default;
};

struct MutationReport {
  GramMatrix before;
  std::size_t index = 0;
  MutationDirection direction = MutationDirection::Right;
  GramMatrix after;
  bool operator==(const MutationReport&) const = default;
};

struct AdditivityReport {
  int m = 0, n = 0, r = 0, c = 0;
  AdditivityCheck check;
  bool operator==(const AdditivityReport&) const = default;
};

// Plain values; used inside the documents below.
Json to_json(const mpz_class& z);  // number when it fits in int64, else decimal string
mpz_class mpz_from_json(const Json& j);

// Documents (with schema_version and kind).
Json to_json(const SectionReport& r);
Json to_json(const SweepReport& r);
Json to_json(const InvariantsReport& r);
Json to_json(const DegreeReport& r);
Json to_json(const NonisoReport& r);
Json to_json(const ResidualReport& r);
Json to_json(const LedgerReport& r);
Json to_json(const GramMatrix& g);
Json to_json(const MutationReport& r);
Json to_json(const AdditivityReport& r);
Json to_json(const MutationReplay& r);
Json to_json(const ff::SampleReport& r);

// Throw InvalidParameters on a malformed document or a schema_version mismatch.
SectionReport section_from_json(const Json& j);
SweepReport sweep_from_json(const Json& j);
InvariantsReport invariants_from_json(const Json& j);
DegreeReport degree_from_json(const Json& j);
NonisoReport noniso_from_json(const Json& j);
ResidualReport residual_from_json(const Json& j);
LedgerReport ledger_from_json(const Json& j);
GramMatrix gram_from_json(const Json& j);
MutationReport mutation_from_json(const Json& j);
AdditivityReport additivity_from_json(const Json& j);
MutationReplay replay_from_json(const Json& j);
ff::SampleReport sample_from_json(const Json& j);

// Rendered text, newline terminated. JSON is pretty-printed with two spaces.
// CSV follows RFC 4180 (header row, CRLF, quoted fields where needed).
template <class T>
std::string render(const T& r, Format f);

// RFC 4180 table from a header and rows.
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

// The raw strata of a sample as CSV with columns p, rank, count.
std::string strata_csv(const ff::SampleReport& r);

}  // namespace hpdet::report
