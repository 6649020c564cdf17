#include "hpdet/report.hpp"

#include <sstream>

#include "hpdet/errors.hpp"

namespace hpdet::report {
namespace {

using ff::CheckStatus;
using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
};

Json doc(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void expect_doc(const Json& j, const char* kind) {
  if (!j.is_object()) throw InvalidParameters("report document must be a JSON object");
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw InvalidParameters("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  if (j.value("kind", std::string()) != kind) throw InvalidParameters(std::string("expected a \"") + kind + "\" report");
}

// nlohmann errors become InvalidParameters
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidParameters(std::string("malformed report: ") + e.what());
  }
}

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(int v) { return std::to_string(v); }

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? str(*v) : "";
}

Json divisor_json(const DivisorClass& d) { return Json{{"h", d.h}, {"p", d.p}}; }
DivisorClass divisor_from_json(const Json& j) { return {j.at("h").get<std::int64_t>(), j.at("p").get<std::int64_t>()}; }

Json opt_json(const std::optional<mpz_class>& v) { return v ? to_json(*v) : Json(nullptr); }
Json opt_json(const std::optional<DivisorClass>& v) { return v ? divisor_json(*v) : Json(nullptr); }

Json params_json(const HPDParams& p) {
  return Json{{"m", p.m}, {"n", p.n}, {"r", p.r}, {"c", p.c}, {"side", std::string(chow::side_name(p.side))}};
}
HPDParams params_from_json(const Json& j) {
  return {j.at("m").get<int>(), j.at("n").get<int>(), j.at("r").get<int>(), j.at("c").get<int>(),
          chow::parse_side(j.at("side").get<std::string>())};
}

Json mpz_vector(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}
std::vector<mpz_class> mpz_vector_from(const Json& j) {
  std::vector<mpz_class> out;
  for (const auto& e : j) out.push_back(mpz_from_json(e));
  return out;
}

std::string join(const std::vector<mpz_class>& v, const char* sep = ";") {
  std::string out;
  for (const auto& z : v) out += (out.empty() ? "" : sep) + z.get_str();
  return out;
}

// SectionReport

Json segre_json(const SegreRow& s) {
  return Json{{"m", s.m},
              {"n", s.n},
              {"c", s.c},
              {"regime", s.regime},
              {"fano_x", s.fano_x},
              {"rational_x", s.rational_x},
              {"rational_y", s.rational_y},
              {"fano_y", s.fano_y},
              {"fano_visitor_y", s.fano_visitor_y},
              {"fano_visitor_x", s.fano_visitor_x},
              {"cy", s.cy},
              {"smooth_zl_generic", s.smooth_zl_generic},
              {"birational_pair", s.birational_pair}};
}

SegreRow segre_from(const Json& j) {
  SegreRow s;
  s.m = j.at("m");
  s.n = j.at("n");
  s.c = j.at("c");
  s.regime = j.at("regime");
  s.fano_x = j.at("fano_x");
  s.rational_x = j.at("rational_x");
  s.rational_y = j.at("rational_y");
  s.fano_y = j.at("fano_y");
  s.fano_visitor_y = j.at("fano_visitor_y");
  s.fano_visitor_x = j.at("fano_visitor_x");
  s.cy = j.at("cy");
  s.smooth_zl_generic = j.at("smooth_zl_generic");
  s.birational_pair = j.at("birational_pair");
  return s;
}

void section_fields(Json& j, const SectionReport& r) {
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["c"] = r.c;
  j["dim_xl"] = r.dim_xl;
  j["dim_yl"] = r.dim_yl;
  j["empty_x"] = r.empty_x;
  j["empty_y"] = r.empty_y;
  j["canonical_x"] = divisor_json(r.canonical_x);
  j["canonical_y"] = divisor_json(r.canonical_y);
  j["functor_direction"] = std::string(direction_name(r.functor_direction));
  j["complement_blocks"] = r.complement_blocks;
  j["complement_count"] = to_json(r.complement_count);
  j["tower_exceptional_x"] = to_json(r.tower_exceptional_x);
  j["tower_exceptional_y"] = to_json(r.tower_exceptional_y);
  j["cy"] = r.cy;
  j["rational_x"] = r.rational_x;
  j["rational_y"] = r.rational_y;
  j["nef_canonical_x"] = r.nef_canonical_x;
  j["nef_canonical_y"] = r.nef_canonical_y;
  j["canonical_birational_x"] = r.canonical_birational_x;
  j["canonical_birational_y"] = r.canonical_birational_y;
  j["fano_candidate_x"] = r.fano_candidate_x;
  j["fano_candidate_y"] = r.fano_candidate_y;
  j["fano_needs_lower_rank_empty"] = r.fano_needs_lower_rank_empty;
  j["weak_fano_visitor_x"] = r.weak_fano_visitor_x;
  j["weak_fano_visitor_y"] = r.weak_fano_visitor_y;
  j["segre"] = r.segre ? segre_json(*r.segre) : Json(nullptr);
  if (r.degree_x || r.degree_y)
    j["degrees"] = Json{{"x", opt_json(r.degree_x)}, {"y", opt_json(r.degree_y)}};
  else
    j["degrees"] = nullptr;
}

Json section_row(const SectionReport& r) {
  Json j = Json::object();
  section_fields(j, r);
  return j;
}

std::optional<mpz_class> opt_mpz(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return mpz_from_json(j);
}

SectionReport section_row_from(const Json& j) {
  SectionReport r;
  r.m = j.at("m");
  r.n = j.at("n");
  r.r = j.at("r");
  r.c = j.at("c");
  r.dim_xl = j.at("dim_xl");
  r.dim_yl = j.at("dim_yl");
  r.empty_x = j.at("empty_x");
  r.empty_y = j.at("empty_y");
  r.canonical_x = divisor_from_json(j.at("canonical_x"));
  r.canonical_y = divisor_from_json(j.at("canonical_y"));
  r.functor_direction = parse_direction(j.at("functor_direction").get<std::string>());
  r.complement_blocks = j.at("complement_blocks");
  r.complement_count = mpz_from_json(j.at("complement_count"));
  r.tower_exceptional_x = mpz_from_json(j.at("tower_exceptional_x"));
  r.tower_exceptional_y = mpz_from_json(j.at("tower_exceptional_y"));
  r.cy = j.at("cy");
  r.rational_x = j.at("rational_x");
  r.rational_y = j.at("rational_y");
  r.nef_canonical_x = j.at("nef_canonical_x");
  r.nef_canonical_y = j.at("nef_canonical_y");
  r.canonical_birational_x = j.at("canonical_birational_x");
  r.canonical_birational_y = j.at("canonical_birational_y");
  r.fano_candidate_x = j.at("fano_candidate_x");
  r.fano_candidate_y = j.at("fano_candidate_y");
  r.fano_needs_lower_rank_empty = j.at("fano_needs_lower_rank_empty");
  r.weak_fano_visitor_x = j.at("weak_fano_visitor_x");
  r.weak_fano_visitor_y = j.at("weak_fano_visitor_y");
  if (!j.at("segre").is_null()) r.segre = segre_from(j.at("segre"));
  if (const auto& d = j.at("degrees"); !d.is_null()) {
    r.degree_x = opt_mpz(d.at("x"));
    r.degree_y = opt_mpz(d.at("y"));
  }
  return r;
}

std::string fano_word(bool fano, bool needs_lower) { return fano ? (needs_lower ? "Fano*" : "Fano") : ""; }

// Table 1 shape: parameters, dimensions, functor, complement, canonical classes, flags.
Table section_table(const std::vector<SectionReport>& rows) {
  Table t{{"m", "n", "r", "c", "dim_xl", "dim_yl", "functor_direction", "complement_blocks", "complement_count",
           "canonical_x", "canonical_y", "cy", "rational_x", "rational_y", "fano_candidate_x", "fano_candidate_y",
           "degree_x", "degree_y"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({str(r.m), str(r.n), str(r.r), str(r.c), str(r.dim_xl), str(r.dim_yl),
                      std::string(direction_name(r.functor_direction)), str(r.complement_blocks), str(r.complement_count),
                      line_bundle_label(r.canonical_x), line_bundle_label(r.canonical_y), str(r.cy), str(r.rational_x),
                      str(r.rational_y), str(r.fano_candidate_x), str(r.fano_candidate_y), opt_str(r.degree_x),
                      opt_str(r.degree_y)});
  }
  return t;
}

std::string dim_cell(int d) { return d < 0 ? "empty" : std::to_string(d); }

std::string md_section_rows(const std::vector<SectionReport>& rows) {
  Table t{{"(m,n,r,c)", "dim X_L", "dim Y_L", "HPD functor", "complement", "ω_X", "ω_Y", "X_L", "Y_L"}, {}};
  for (const auto& r : rows) {
    auto describe = [&](bool cy, bool rational, bool fano, bool nef) {
      std::vector<std::string> w;
      if (cy) w.push_back("CY");
      if (fano) w.push_back(fano_word(true, r.fano_needs_lower_rank_empty));
      if (rational) w.push_back("rational");
      if (nef && !cy) w.push_back("K nef");
      std::string out;
      for (const auto& s : w) out += (out.empty() ? "" : ", ") + s;
      return out;
    };
    std::ostringstream params;
    params << "(" << r.m << "," << r.n << "," << r.r << "," << r.c << ")";
    std::string comp = r.complement_blocks == 0 ? "" : str(r.complement_blocks) + " × " + str(r.tower_exceptional_x / (r.n * r.r));
    t.rows.push_back({params.str(), dim_cell(r.dim_xl), dim_cell(r.dim_yl), std::string(direction_name(r.functor_direction)), comp,
                      line_bundle_label(r.canonical_x), line_bundle_label(r.canonical_y),
                      r.empty_x ? "empty" : describe(r.cy, r.rational_x, r.fano_candidate_x, r.nef_canonical_x),
                      r.empty_y ? "empty" : describe(r.cy, r.rational_y, r.fano_candidate_y, r.nef_canonical_y)});
  }
  return markdown_table(t.header, t.rows);
}

// Table 2 shape: the r = 1 Segre row.
std::string md_segre(const SegreRow& s) {
  auto words = [](std::initializer_list<std::pair<bool, const char*>> flags) {
    std::string out;
    for (const auto& [on, w] : flags)
      if (on) out += (out.empty() ? "" : ", ") + std::string(w);
    return out.empty() ? std::string("-") : out;
  };
  Table t{{"c", "regime", "P^{n-1} × P^{m-1} side", "determinantal side"}, {}};
  t.rows.push_back({str(s.c), s.regime,
                    words({{s.fano_x, "Fano"}, {s.rational_x, "rational"}, {s.fano_visitor_x, "Fano visitor"}, {s.cy, "CY"}}),
                    words({{s.fano_y, "Fano"}, {s.rational_y, "rational"}, {s.fano_visitor_y, "Fano visitor"}, {s.cy, "CY"},
                           {s.smooth_zl_generic, "smooth"}, {s.birational_pair, "birational to the other side"}})});
  return markdown_table(t.header, t.rows);
}

// SampleReport pieces

Json strata_json(const ff::StratumCount& s) {
  Json a = Json::array();
  for (const auto& [r, c] : s.by_rank) a.push_back(Json{{"rank", r}, {"count", c}});
  return Json{{"p", s.p}, {"v", s.v}, {"by_rank", a}};
}
ff::StratumCount strata_from(const Json& j) {
  ff::StratumCount s;
  s.p = j.at("p");
  s.v = j.at("v");
  for (const auto& e : j.at("by_rank")) s.by_rank[e.at("rank").get<int>()] = e.at("count").get<std::uint64_t>();
  return s;
}

Json jacobian_json(const ff::JacobianReport& r) {
  return Json{{"locus_points", r.locus_points},
              {"singular_points", r.singular_points},
              {"expected_codim", r.expected_codim},
              {"codim_estimate", r.codim_estimate}};
}
ff::JacobianReport jacobian_from(const Json& j) {
  return {j.at("locus_points"), j.at("singular_points"), j.at("expected_codim"), j.at("codim_estimate")};
}

Json dimension_json(const ff::DimensionEstimate& d) {
  return Json{{"status", d.status},
              {"dimension", d.dimension ? Json(*d.dimension) : Json(nullptr)},
              {"expected", d.expected},
              {"matches", d.matches},
              {"spread", d.spread}};
}
ff::DimensionEstimate dimension_from(const Json& j) {
  ff::DimensionEstimate d;
  d.status = j.at("status");
  if (!j.at("dimension").is_null()) d.dimension = j.at("dimension").get<int>();
  d.expected = j.at("expected");
  d.matches = j.at("matches");
  d.spread = j.at("spread");
  return d;
}

Json springer_json(const ff::SpringerReport& s) {
  return Json{{"trials", s.trials},     {"produced", s.produced}, {"successes", s.successes},
              {"redraws", s.redraws},   {"ratio", s.ratio},       {"points", s.points}};
}
ff::SpringerReport springer_from(const Json& j) {
  ff::SpringerReport s;
  s.trials = j.at("trials");
  s.produced = j.at("produced");
  s.successes = j.at("successes");
  s.redraws = j.at("redraws");
  s.ratio = j.at("ratio");
  s.points = j.at("points").get<std::vector<std::vector<ff::Elem>>>();
  return s;
}

Json duality_json(const ff::DualityReport& d) {
  return Json{{"p", d.p},
              {"seed", d.seed},
              {"attempts", d.attempts},
              {"degenerate", d.degenerate},
              {"agree", d.agree},
              {"degree_check", d.degree_check},
              {"points", d.points},
              {"locus_points", d.locus_points}};
}
ff::DualityReport duality_from(const Json& j) {
  ff::DualityReport d;
  d.p = j.at("p");
  d.seed = j.at("seed");
  d.attempts = j.at("attempts");
  d.degenerate = j.at("degenerate");
  d.agree = j.at("agree");
  d.degree_check = j.at("degree_check");
  d.points = j.at("points");
  d.locus_points = j.at("locus_points");
  return d;
}

// Gram and ledger pieces

Json gram_body(const GramMatrix& g) {
  Json twists = Json::array();
  for (const auto& t : g.twists) twists.push_back(opt_json(t));
  Json classes = Json::array(), entries = Json::array();
  for (const auto& c : g.classes) classes.push_back(mpz_vector(c));
  for (const auto& e : g.entries) entries.push_back(mpz_vector(e));
  return Json{{"params", params_json(g.params)}, {"labels", g.labels},
              {"twists", twists},                {"classes", classes},
              {"entries", entries},              {"unitriangular", g.unitriangular()},
              {"determinant", g.size() ? to_json(g.determinant()) : Json(1)}};
}
GramMatrix gram_body_from(const Json& j) {
  GramMatrix g;
  g.params = params_from_json(j.at("params"));
  g.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& t : j.at("twists")) {
    if (t.is_null()) g.twists.emplace_back(std::nullopt);
    else g.twists.emplace_back(divisor_from_json(t));
  }
  for (const auto& c : j.at("classes")) g.classes.push_back(mpz_vector_from(c));
  for (const auto& e : j.at("entries")) g.entries.push_back(mpz_vector_from(e));
  return g;
}

Table gram_table(const GramMatrix& g) {
  Table t{{"object"}, {}};
  for (const auto& l : g.labels) t.header.push_back(l);
  for (std::size_t i = 0; i < g.size(); ++i) {
    Row row{g.labels[i]};
    for (const auto& e : g.entries[i]) row.push_back(e.get_str());
    t.rows.push_back(row);
  }
  return t;
}

Json ledger_json(const Ledger& l) {
  Json blocks = Json::array();
  for (const auto& b : l.blocks)
    blocks.push_back(Json{{"label", b.label}, {"generator_count", b.generator_count}, {"twist", divisor_json(b.twist)}, {"counted", b.counted}});
  return Json{{"name", l.name}, {"blocks", blocks}, {"total", to_json(l.total())}};
}
Ledger ledger_from(const Json& j) {
  Ledger l;
  l.name = j.at("name");
  for (const auto& b : j.at("blocks"))
    l.blocks.push_back({b.at("label"), b.at("generator_count"), divisor_from_json(b.at("twist")), b.at("counted")});
  return l;
}

std::string direction_word(MutationDirection d) { return d == MutationDirection::Left ? "left" : "right"; }

// Tables for the remaining types

Table table_of(const SectionReport& r) { return section_table({r}); }
Table table_of(const SweepReport& r) { return section_table(r.rows); }

Table table_of(const InvariantsReport& r) {
  return {{"m", "n", "r", "c", "side", "dimension", "degree", "canonical", "chi_top", "chi_o", "genus"},
          {{str(r.params.m), str(r.params.n), str(r.params.r), str(r.params.c), std::string(chow::side_name(r.params.side)),
            str(r.dimension), str(r.degree), line_bundle_label(r.canonical), opt_str(r.chi_top), opt_str(r.chi_o), opt_str(r.genus)}}};
}

Table table_of(const DegreeReport& r) {
  return {{"m", "n", "r", "degree_x", "degree_y"}, {{str(r.m), str(r.n), str(r.r), str(r.degree_x), str(r.degree_y)}}};
}

Table table_of(const NonisoReport& r) {
  return {{"m", "n", "r", "c", "dimension", "deg_x_poly", "deg_y", "cauchy_bound", "integer_solutions", "range",
           "solutions_in_range", "identically_equal"},
          {{str(r.m), str(r.n), str(r.r), str(r.c), str(r.dimension), join(r.deg_x_poly), str(r.deg_y), str(r.cauchy_bound),
            join(r.integer_solutions), std::to_string(r.range_lo) + ".." + std::to_string(r.range_hi), join(r.solutions_in_range),
            str(r.identically_equal)}}};
}

Table table_of(const ResidualReport& r) {
  const auto& s = r.dual_section;
  return {{"d", "k", "fano_index", "total_exceptional", "residual_exceptional", "dual_section", "dual_section_dim",
           "dual_section_empty"},
          {{str(r.d), str(r.k), str(r.fano_index), str(r.total_exceptional), str(r.residual_exceptional),
            "(" + str(s.m) + "," + str(s.n) + "," + str(s.r) + "," + str(s.c) + ")", str(r.dual_section_dim),
            str(r.dual_section_empty)}}};
}

Table table_of(const LedgerReport& r) {
  Table t{{"ledger", "block", "label", "generators", "twist", "counted"}, {}};
  for (const auto& l : r.ledgers) {
    for (std::size_t i = 0; i < l.blocks.size(); ++i) {
      const auto& b = l.blocks[i];
      t.rows.push_back({l.name, std::to_string(i), b.label, std::to_string(b.generator_count), line_bundle_label(b.twist), str(b.counted)});
    }
  }
  return t;
}

Table table_of(const GramMatrix& g) { return gram_table(g); }
Table table_of(const MutationReport& r) { return gram_table(r.after); }
Table table_of(const MutationReplay& r) { return gram_table(r.final); }

Table table_of(const AdditivityReport& r) {
  return {{"m", "n", "r", "c", "chi_top_x", "chi_top_y", "lhs", "rhs", "pass"},
          {{str(r.m), str(r.n), str(r.r), str(r.c), str(r.check.chi_top_x), str(r.check.chi_top_y), str(r.check.lhs),
            str(r.check.rhs), str(r.check.pass)}}};
}

Table table_of(const ff::SampleReport& r) {
  Table t{{"check", "status", "detail"}, {}};
  for (const auto& c : r.checks) t.rows.push_back({c.name, ff::status_name(c.status), c.detail});
  return t;
}

std::string params_line(int m, int n, int r, int c) {
  std::ostringstream s;
  s << "(m, n, r, c) = (" << m << ", " << n << ", " << r << ", " << c << ")";
  return s.str();
}

// Markdown documents

std::string markdown_of(const SectionReport& r) {
  std::string out = "## " + params_line(r.m, r.n, r.r, r.c) + "\n\n" + md_section_rows({r});
  if (r.degree_x || r.degree_y)
    out += "\nDegrees: X_L " + opt_str(r.degree_x) + ", Y_L " + opt_str(r.degree_y) + "\n";
  if (r.segre) out += "\n" + md_segre(*r.segre);
  return out;
}

std::string markdown_of(const SweepReport& r) {
  return "## sweep (" + std::string(filter_name(r.filter)) + "), " + std::to_string(r.rows.size()) + " rows\n\n" +
         md_section_rows(r.rows);
}

std::string markdown_of(const ff::SampleReport& r) {
  std::string out = "## verify " + r.kind + ", " + params_line(r.m, r.n, r.r, r.c) + ", side " +
                    std::string(chow::side_name(r.side)) + "\n\nExperimental evidence over finite fields, seed " +
                    std::to_string(r.seed) + ".\n\n";
  const auto t = table_of(r);
  out += markdown_table(t.header, t.rows);
  if (!r.samples.empty()) {
    Table s{{"p", "rank", "count"}, {}};
    for (const auto& sm : r.samples)
      for (const auto& [rk, c] : sm.counts.by_rank) s.rows.push_back({std::to_string(sm.p), std::to_string(rk), std::to_string(c)});
    out += "\n" + markdown_table(s.header, s.rows);
  }
  if (r.dimension_estimate) {
    const auto& d = *r.dimension_estimate;
    out += "\nDimension estimate: " + (d.dimension ? std::to_string(*d.dimension) : d.status) + " (expected " +
           std::to_string(d.expected) + ")\n";
  }
  for (const auto& l : r.log) out += "\n- " + l;
  if (!r.log.empty()) out += "\n";
  return out;
}

std::string markdown_of(const LedgerReport& r) {
  Table summary{{"ledger", "blocks", "generators per block", "total"}, {}};
  for (const auto& l : r.ledgers) {
    std::int64_t counted = 0, per = 0;
    for (const auto& b : l.blocks) {
      if (!b.counted) continue;
      ++counted;
      per = b.generator_count;
    }
    summary.rows.push_back({l.name, std::to_string(counted), std::to_string(per), str(l.total())});
  }
  const auto t = table_of(r);
  return markdown_table(summary.header, summary.rows) + "\n" + markdown_table(t.header, t.rows);
}

template <class T>
std::string markdown_of(const T& r) {
  const auto t = table_of(r);
  return markdown_table(t.header, t.rows);
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Markdown;
  throw InvalidParameters("unknown format: " + std::string(s) + " (json, csv, md)");
}

InvariantsReport invariants_report(const HPDParams& params) {
  params.validate();
  InvariantsReport r;
  r.params = params;
  r.dimension = params.section_dim();
  // the degree does not depend on c; take it on the whole tower
  HPDParams tower = params;
  tower.c = params.side == Side::X ? 0 : params.m * params.n;
  r.degree = degree_section(tower);
  r.canonical = canonical_class(params);
  if (r.dimension >= 0) {
    r.chi_top = euler_char_top(params);
    r.chi_o = euler_characteristic(params, 0, 0);
  }
  if (r.dimension == 1) r.genus = curve_genus(params);
  return r;
}

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidParameters("not an integer: " + j.get<std::string>());
    return z;
  }
  throw InvalidParameters("expected an integer");
}

Json to_json(const SectionReport& r) {
  Json j = doc("classify");
  section_fields(j, r);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j = doc("sweep");
  j["filter"] = std::string(filter_name(r.filter));
  j["range"] = Json{{"m", {r.range.m_lo, r.range.m_hi}},
                    {"n", {r.range.n_lo, r.range.n_hi}},
                    {"r", {r.range.r_lo, r.range.r_hi}},
                    {"c", {r.range.c_lo, r.range.c_hi}}};
  j["rows"] = Json::array();
  for (const auto& s : r.rows) j["rows"].push_back(section_row(s));
  return j;
}

Json to_json(const InvariantsReport& r) {
  Json j = doc("invariants");
  j["params"] = params_json(r.params);
  j["dimension"] = r.dimension;
  j["degree"] = to_json(r.degree);
  j["canonical"] = divisor_json(r.canonical);
  j["chi_top"] = opt_json(r.chi_top);
  j["chi_o"] = opt_json(r.chi_o);
  j["genus"] = opt_json(r.genus);
  return j;
}

Json to_json(const DegreeReport& r) {
  Json j = doc("degree");
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["degree_x"] = to_json(r.degree_x);
  j["degree_y"] = to_json(r.degree_y);
  return j;
}

Json to_json(const NonisoReport& r) {
  Json j = doc("noniso");
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["c"] = r.c;
  j["dimension"] = r.dimension;
  j["deg_x_poly"] = mpz_vector(r.deg_x_poly);
  j["deg_y"] = to_json(r.deg_y);
  j["cauchy_bound"] = to_json(r.cauchy_bound);
  j["integer_solutions"] = mpz_vector(r.integer_solutions);
  j["range"] = {r.range_lo, r.range_hi};
  j["solutions_in_range"] = mpz_vector(r.solutions_in_range);
  j["identically_equal"] = r.identically_equal;
  return j;
}

Json to_json(const ResidualReport& r) {
  Json j = doc("residual");
  j["d"] = r.d;
  j["k"] = r.k;
  j["fano_index"] = r.fano_index;
  j["total_exceptional"] = to_json(r.total_exceptional);
  j["residual_exceptional"] = to_json(r.residual_exceptional);
  j["dual_section"] = params_json(r.dual_section);
  j["dual_section_dim"] = r.dual_section_dim;
  j["dual_section_empty"] = r.dual_section_empty;
  return j;
}

Json to_json(const LedgerReport& r) {
  Json j = doc("ledger");
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["c"] = r.c ? Json(*r.c) : Json(nullptr);
  j["ledgers"] = Json::array();
  for (const auto& l : r.ledgers) j["ledgers"].push_back(ledger_json(l));
  return j;
}

Json to_json(const GramMatrix& g) {
  Json j = doc("gram");
  j.update(gram_body(g));
  return j;
}

Json to_json(const MutationReport& r) {
  Json j = doc("mutation");
  j["before"] = gram_body(r.before);
  j["index"] = r.index;
  j["direction"] = direction_word(r.direction);
  j["after"] = gram_body(r.after);
  return j;
}

Json to_json(const AdditivityReport& r) {
  Json j = doc("additivity");
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["c"] = r.c;
  j["chi_top_x"] = to_json(r.check.chi_top_x);
  j["chi_top_y"] = to_json(r.check.chi_top_y);
  j["lhs"] = to_json(r.check.lhs);
  j["rhs"] = to_json(r.check.rhs);
  j["pass"] = r.check.pass;
  return j;
}

Json to_json(const MutationReplay& r) {
  Json j = doc("replay");
  j["initial"] = gram_body(r.initial);
  j["final"] = gram_body(r.final);
  j["steps"] = r.steps;
  j["diagonal_prefix"] = r.diagonal_prefix;
  j["residual"] = r.residual;
  return j;
}

Json to_json(const ff::SampleReport& r) {
  Json j = doc("verify");
  j["verification"] = r.kind;
  j["note"] = "experimental evidence over finite fields";
  j["m"] = r.m;
  j["n"] = r.n;
  j["r"] = r.r;
  j["c"] = r.c;
  j["side"] = std::string(chow::side_name(r.side));
  j["primes"] = r.primes;
  j["seed"] = r.seed;
  j["samples"] = Json::array();
  for (const auto& s : r.samples) {
    j["samples"].push_back(Json{{"p", s.p},
                                {"stream", s.stream},
                                {"counts", strata_json(s.counts)},
                                {"locus_rank", s.locus_rank},
                                {"locus_points", s.locus_points},
                                {"jacobian", s.jacobian ? jacobian_json(*s.jacobian) : Json(nullptr)}});
  }
  j["dimension_estimate"] = r.dimension_estimate ? dimension_json(*r.dimension_estimate) : Json(nullptr);
  j["smooth_sample_result"] = r.smooth_sample_result ? Json(*r.smooth_sample_result) : Json(nullptr);
  j["springer"] = r.springer ? springer_json(*r.springer) : Json(nullptr);
  j["duality"] = Json::array();
  for (const auto& d : r.duality) j["duality"].push_back(duality_json(d));
  j["checks"] = Json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(Json{{"name", c.name}, {"status", ff::status_name(c.status)}, {"detail", c.detail}});
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  j["log"] = r.log;
  return j;
}

SectionReport section_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "classify");
    return section_row_from(j);
  });
}

SweepReport sweep_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "sweep");
    SweepReport r;
    r.filter = parse_filter(j.at("filter").get<std::string>());
    const auto& g = j.at("range");
    r.range = {g.at("m")[0], g.at("m")[1], g.at("n")[0], g.at("n")[1], g.at("r")[0], g.at("r")[1], g.at("c")[0], g.at("c")[1]};
    for (const auto& row : j.at("rows")) r.rows.push_back(section_row_from(row));
    return r;
  });
}

InvariantsReport invariants_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "invariants");
    InvariantsReport r;
    r.params = params_from_json(j.at("params"));
    r.dimension = j.at("dimension");
    r.degree = mpz_from_json(j.at("degree"));
    r.canonical = divisor_from_json(j.at("canonical"));
    r.chi_top = opt_mpz(j.at("chi_top"));
    r.chi_o = opt_mpz(j.at("chi_o"));
    r.genus = opt_mpz(j.at("genus"));
    return r;
  });
}

DegreeReport degree_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "degree");
    return DegreeReport{j.at("m"), j.at("n"), j.at("r"), mpz_from_json(j.at("degree_x")), mpz_from_json(j.at("degree_y"))};
  });
}

NonisoReport noniso_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "noniso");
    NonisoReport r;
    r.m = j.at("m");
    r.n = j.at("n");
    r.r = j.at("r");
    r.c = j.at("c");
    r.dimension = j.at("dimension");
    r.deg_x_poly = mpz_vector_from(j.at("deg_x_poly"));
    r.deg_y = mpz_from_json(j.at("deg_y"));
    r.cauchy_bound = mpz_from_json(j.at("cauchy_bound"));
    r.integer_solutions = mpz_vector_from(j.at("integer_solutions"));
    r.range_lo = j.at("range")[0];
    r.range_hi = j.at("range")[1];
    r.solutions_in_range = mpz_vector_from(j.at("solutions_in_range"));
    r.identically_equal = j.at("identically_equal");
    return r;
  });
}

ResidualReport residual_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "residual");
    ResidualReport r;
    r.d = j.at("d");
    r.k = j.at("k");
    r.fano_index = j.at("fano_index");
    r.total_exceptional = mpz_from_json(j.at("total_exceptional"));
    r.residual_exceptional = mpz_from_json(j.at("residual_exceptional"));
    r.dual_section = params_from_json(j.at("dual_section"));
    r.dual_section_dim = j.at("dual_section_dim");
    r.dual_section_empty = j.at("dual_section_empty");
    return r;
  });
}

LedgerReport ledger_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "ledger");
    LedgerReport r;
    r.m = j.at("m");
    r.n = j.at("n");
    r.r = j.at("r");
    if (!j.at("c").is_null()) r.c = j.at("c").get<int>();
    for (const auto& l : j.at("ledgers")) r.ledgers.push_back(ledger_from(l));
    return r;
  });
}

GramMatrix gram_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "gram");
    return gram_body_from(j);
  });
}

MutationReport mutation_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "mutation");
    MutationReport r;
    r.before = gram_body_from(j.at("before"));
    r.index = j.at("index");
    r.direction = parse_mutation_direction(j.at("direction").get<std::string>());
    r.after = gram_body_from(j.at("after"));
    return r;
  });
}

AdditivityReport additivity_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "additivity");
    AdditivityReport r;
    r.m = j.at("m");
    r.n = j.at("n");
    r.r = j.at("r");
    r.c = j.at("c");
    r.check.chi_top_x = mpz_from_json(j.at("chi_top_x"));
    r.check.chi_top_y = mpz_from_json(j.at("chi_top_y"));
    r.check.lhs = mpz_from_json(j.at("lhs"));
    r.check.rhs = mpz_from_json(j.at("rhs"));
    r.check.pass = j.at("pass");
    return r;
  });
}

MutationReplay replay_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "replay");
    MutationReplay r;
    r.initial = gram_body_from(j.at("initial"));
    r.final = gram_body_from(j.at("final"));
    r.steps = j.at("steps").get<std::vector<std::size_t>>();
    r.diagonal_prefix = j.at("diagonal_prefix");
    r.residual = j.at("residual");
    return r;
  });
}

ff::SampleReport sample_from_json(const Json& j) {
  return guarded([&] {
    expect_doc(j, "verify");
    ff::SampleReport r;
    r.kind = j.at("verification");
    r.m = j.at("m");
    r.n = j.at("n");
    r.r = j.at("r");
    r.c = j.at("c");
    r.side = chow::parse_side(j.at("side").get<std::string>());
    r.primes = j.at("primes").get<std::vector<ff::Elem>>();
    r.seed = j.at("seed");
    for (const auto& s : j.at("samples")) {
      ff::PrimeSample ps;
      ps.p = s.at("p");
      ps.stream = s.at("stream");
      ps.counts = strata_from(s.at("counts"));
      ps.locus_rank = s.at("locus_rank");
      ps.locus_points = s.at("locus_points");
      if (!s.at("jacobian").is_null()) ps.jacobian = jacobian_from(s.at("jacobian"));
      r.samples.push_back(std::move(ps));
    }
    if (!j.at("dimension_estimate").is_null()) r.dimension_estimate = dimension_from(j.at("dimension_estimate"));
    if (!j.at("smooth_sample_result").is_null()) r.smooth_sample_result = j.at("smooth_sample_result").get<std::string>();
    if (!j.at("springer").is_null()) r.springer = springer_from(j.at("springer"));
    for (const auto& d : j.at("duality")) r.duality.push_back(duality_from(d));
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name"), ff::parse_status(c.at("status").get<std::string>()), c.at("detail")});
    r.log = j.at("log").get<std::vector<std::string>>();
    return r;
  });
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + field(r[i]);
    out += "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto cell = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '|') out += '\\';
      out += ch == '\n' ? ' ' : ch;
    }
    return out;
  };
  std::string out = "|";
  for (const auto& h : header) out += " " + cell(h) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) {
    out += "|";
    for (const auto& c : r) out += " " + cell(c) + " |";
    out += "\n";
  }
  return out;
}

std::string strata_csv(const ff::SampleReport& r) {
  std::vector<Row> rows;
  for (const auto& s : r.samples)
    for (const auto& [rk, c] : s.counts.by_rank) rows.push_back({std::to_string(s.p), std::to_string(rk), std::to_string(c)});
  return csv_table({"p", "rank", "count"}, rows);
}

template <class T>
std::string render(const T& r, Format f) {
  switch (f) {
    case Format::Json: return to_json(r).dump(2) + "\n";
    case Format::Csv: {
      const auto t = table_of(r);
      return csv_table(t.header, t.rows);
    }
    case Format::Markdown: return markdown_of(r);
  }
  return {};
}

template std::string render(const SectionReport&, Format);
template std::string render(const SweepReport&, Format);
template std::string render(const InvariantsReport&, Format);
template std::string render(const DegreeReport&, Format);
template std::string render(const NonisoReport&, Format);
template std::string render(const ResidualReport&, Format);
template std::string render(const LedgerReport&, Format);
template std::string render(const GramMatrix&, Format);
template std::string render(const MutationReport&, Format);
template std::string render(const AdditivityReport&, Format);
template std::string render(const MutationReplay&, Format);
template std::string render(const ff::SampleReport&, Format);

}  // namespace hpdet::report
