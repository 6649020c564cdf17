#include "hpdet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "hpdet/errors.hpp"
#include "hpdet/report.hpp"

namespace hpdet::cli {
namespace {

using report::Format;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes{3, 5, 7, 11};
  std::uint64_t budget = ff::kDefaultBudget;
  int trials = 20;
  int seeds = 5;
  bool with_degrees = false;
  std::string config;
  std::string strata_csv;
};

// "a" or "a:b"
std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InvalidParameters("bad range: " + s + " (expected LO:HI)");
  }
}

std::vector<DivisorClass> parse_bundles(const std::string& s) {
  std::vector<DivisorClass> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw InvalidParameters("bad bundle \"" + item + "\" (expected h,p)");
    try {
      out.push_back({std::stoll(item.substr(0, comma)), std::stoll(item.substr(comma + 1))});
    } catch (const std::exception&) {
      throw InvalidParameters("bad bundle \"" + item + "\" (expected h,p)");
    }
  }
  if (out.empty()) throw InvalidParameters("empty bundle list");
  return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidParameters(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

// Config values fill options not given on the command line, searching the
// selected subcommand chain from the innermost outwards.
void apply_config(CLI::App& app, const std::map<std::string, std::string>& cfg) {
  std::vector<CLI::App*> chain{&app};
  while (true) {
    auto subs = chain.back()->get_subcommands();
    if (subs.empty()) break;
    chain.push_back(subs.front());
  }
  for (const auto& [key, value] : cfg) {
    if (key == "config") continue;
    CLI::Option* opt = nullptr;
    for (auto it = chain.rbegin(); it != chain.rend() && !opt; ++it) opt = (*it)->get_option_no_throw("--" + key);
    if (!opt) throw InvalidParameters("unknown config key: " + key);
    if (opt->count() > 0) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") opt->add_result("true");
    } else {
      opt->add_result(value);
    }
    opt->run_callback();
  }
}

template <class T>
int emit(const T& rep, const Globals& g, std::ostream& out) {
  out << report::render(rep, report::parse_format(g.format));
  return kOk;
}

struct Params {
  int m = 0, n = 0, r = 0, c = 0;
  std::string side = "X";
};

void need(const CLI::App* sub, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (sub->get_option(std::string("--") + name)->count() == 0)
      throw InvalidParameters(sub->get_name() + ": missing " + name);
  }
}

ff::VerifyOptions verify_options(const Globals& g) {
  if (g.budget > ff::kHardBudget) throw InvalidParameters("budget above the hard cap of 10^8");
  if (g.primes.empty()) throw InvalidParameters("empty prime list");
  ff::VerifyOptions o;
  o.primes = g.primes;
  o.seed = g.seed;
  o.budget = g.budget;
  o.trials = g.trials;
  o.seeds = g.seeds;
  return o;
}

int emit_sample(const ff::SampleReport& rep, const Globals& g, std::ostream& out, std::ostream& err) {
  if (!g.strata_csv.empty()) {
    std::ofstream f(g.strata_csv, std::ios::binary);
    if (!f) throw InvalidParameters("cannot write " + g.strata_csv);
    f << report::strata_csv(rep);
  }
  emit(rep, g, out);
  if (!rep.passed()) {
    for (const auto& name : rep.failures()) err << "failed: " << name << "\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numeric invariants and finite-field checks for linear sections of determinantal varieties", "hpdet"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--primes,--p", g.primes, "primes, comma separated")->delimiter(',');
  app.add_option("--budget", g.budget, "enumeration budget in points (at most 10^8)");
  app.add_option("--trials", g.trials, "Springer sampler trials")->check(CLI::PositiveNumber);
  app.add_option("--seeds", g.seeds, "duality draws per prime")->check(CLI::PositiveNumber);
  app.add_flag("--with-degrees", g.with_degrees, "include section degrees");
  app.add_option("--config", g.config, "key=value file; flags override it");

  std::function<int()> action;
  Params p;
  auto positional4 = [&](CLI::App* sub, bool with_side) {
    sub->add_option("m,--m", p.m);
    sub->add_option("n,--n", p.n);
    sub->add_option("r,--r", p.r);
    sub->add_option("c,--c", p.c);
    if (with_side) sub->add_option("--side", p.side, "X or Y")->check(CLI::IsMember({"X", "Y"}));
  };
  auto params = [&](CLI::App* sub, Side default_side) {
    need(sub, {"m", "n", "r", "c"});
    const bool has_side = sub->get_option_no_throw("--side") && sub->get_option("--side")->count() > 0;
    return HPDParams{p.m, p.n, p.r, p.c, has_side ? chow::parse_side(p.side) : default_side};
  };

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "HPD functor, complement and flags of one section pair");
  positional4(classify_cmd, false);
  classify_cmd->callback([&] {
    action = [&] {
      need(classify_cmd, {"m", "n", "r", "c"});
      return emit(classify(p.m, p.n, p.r, p.c, g.with_degrees), g, out);
    };
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "classify every tuple in a box");
  std::string sm = "2:4", sn = "2:4", sr = "1:3", sc = "1:100", filter = "all";
  sweep_cmd->add_option("--m", sm, "LO:HI");
  sweep_cmd->add_option("--n", sn, "LO:HI");
  sweep_cmd->add_option("--r", sr, "LO:HI");
  sweep_cmd->add_option("--c", sc, "LO:HI");
  sweep_cmd->add_option("--filter", filter, "all, cy, equivalence, fano_candidate, curve");
  sweep_cmd->callback([&] {
    action = [&] {
      report::SweepReport rep;
      const auto [m0, m1] = parse_range(sm);
      const auto [n0, n1] = parse_range(sn);
      const auto [r0, r1] = parse_range(sr);
      const auto [c0, c1] = parse_range(sc);
      rep.range = {m0, m1, n0, n1, r0, r1, c0, c1};
      rep.filter = parse_filter(filter);
      rep.rows = sweep(rep.range, rep.filter, g.with_degrees);
      return emit(rep, g, out);
    };
  });

  // degree
  auto* degree_cmd = app.add_subcommand("degree", "degrees of the two towers in their linear spans");
  degree_cmd->add_option("m,--m", p.m);
  degree_cmd->add_option("n,--n", p.n);
  degree_cmd->add_option("r,--r", p.r);
  degree_cmd->callback([&] {
    action = [&] {
      need(degree_cmd, {"m", "n", "r"});
      report::DegreeReport rep{p.m, p.n, p.r, degree_section({p.m, p.n, p.r, 0, Side::X}),
                               degree_section({p.m, p.n, p.r, p.m * p.n, Side::Y})};
      return emit(rep, g, out);
    };
  });

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "numeric invariants of sections");
  inv_cmd->require_subcommand(1);
  auto* inv_section = inv_cmd->add_subcommand("section", "dimension, degree, canonical class, Euler characteristics, genus");
  positional4(inv_section, true);
  inv_section->callback([&] {
    action = [&] { return emit(report::invariants_report(params(inv_section, Side::X)), g, out); };
  });
  auto* inv_noniso = inv_cmd->add_subcommand("noniso", "integer a with int (H + aP)^D on X_L equal to deg Y_L");
  positional4(inv_noniso, false);
  std::string noniso_range = "-1000:1000";
  inv_noniso->add_option("--range", noniso_range, "LO:HI scanned explicitly");
  inv_noniso->callback([&] {
    action = [&] {
      need(inv_noniso, {"m", "n", "r", "c"});
      const auto [lo, hi] = parse_range(noniso_range);
      return emit(nonisomorphism_scan(p.m, p.n, p.r, p.c, lo, hi), g, out);
    };
  });
  auto* inv_residual = inv_cmd->add_subcommand("residual", "exceptional counts for a determinantal hypersurface of degree d in P^k");
  int rd = 0, rk = 0;
  inv_residual->add_option("d,--d", rd)->required();
  inv_residual->add_option("k,--k", rk)->required();
  inv_residual->callback([&] { action = [&] { return emit(residual_counts(rd, rk), g, out); }; });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "finite-field experiments (evidence, not proof)");
  verify_cmd->require_subcommand(1);
  auto add_verify = [&](const char* name, const char* help, bool rc, bool side) {
    auto* sub = verify_cmd->add_subcommand(name, help);
    sub->add_option("--m", p.m);
    sub->add_option("--n", p.n);
    if (rc) {
      sub->add_option("--r", p.r);
      sub->add_option("--c", p.c);
    }
    if (side) sub->add_option("--side", p.side, "X or Y")->check(CLI::IsMember({"X", "Y"}));
    sub->add_option("--strata-csv", g.strata_csv, "write the raw strata (p, rank, count) to this file");
    return sub;
  };
  auto* v_rank = add_verify("rank-locus", "exact rank strata and a dimension estimate", true, true);
  v_rank->callback([&] {
    action = [&] {
      need(v_rank, {"m", "n", "c"});
      const int r = v_rank->get_option("--r")->count() ? p.r : 1;
      const Side side = v_rank->get_option("--side")->count() ? chow::parse_side(p.side) : Side::Y;
      return emit_sample(ff::verify_rank_locus(p.m, p.n, r, p.c, side, verify_options(g)), g, out, err);
    };
  });
  auto* v_smooth = add_verify("smoothness", "singular F_p-points of the r = 1 determinantal section", true, false);
  v_smooth->callback([&] {
    action = [&] {
      need(v_smooth, {"m", "n", "c"});
      if (v_smooth->get_option("--r")->count() && p.r != 1) throw InvalidParameters("smoothness is checked for r = 1 only");
      return emit_sample(ff::verify_smoothness(p.m, p.n, p.c, verify_options(g)), g, out, err);
    };
  });
  auto* v_springer = add_verify("springer", "matrices factoring through a random quotient", true, false);
  v_springer->callback([&] {
    action = [&] {
      need(v_springer, {"m", "n", "r", "c"});
      return emit_sample(ff::verify_springer(p.m, p.n, p.r, p.c, verify_options(g)), g, out, err);
    };
  });
  auto* v_duality = add_verify("duality", "the two determinantal loci for r = 1, c = n", false, false);
  v_duality->callback([&] {
    action = [&] {
      need(v_duality, {"m", "n"});
      return emit_sample(ff::verify_duality(p.m, p.n, verify_options(g)), g, out, err);
    };
  });
  auto* v_hw = add_verify("hasse-weil", "point counts of curve sections against the Hasse-Weil bound", true, false);
  v_hw->callback([&] {
    action = [&] {
      need(v_hw, {"m", "n", "c"});
      return emit_sample(ff::verify_hasse_weil(p.m, p.n, p.c, verify_options(g)), g, out, err);
    };
  });

  // sod
  auto* sod_cmd = app.add_subcommand("sod", "semiorthogonal decomposition bookkeeping");
  sod_cmd->require_subcommand(1);
  auto* s_ledger = sod_cmd->add_subcommand("ledger", "Lefschetz blocks of the towers, or of the sections when c is given");
  positional4(s_ledger, false);
  s_ledger->callback([&] {
    action = [&] {
      need(s_ledger, {"m", "n", "r"});
      report::LedgerReport rep{p.m, p.n, p.r, std::nullopt, {}};
      if (s_ledger->get_option("--c")->count()) {
        rep.c = p.c;
        auto [x, y] = hpd_section_ledger(p.m, p.n, p.r, p.c);
        rep.ledgers = {x, y};
      } else {
        rep.ledgers = {lefschetz_ledger(p.m, p.n, p.r, Side::X), lefschetz_ledger(p.m, p.n, p.r, Side::Y)};
      }
      return emit(rep, g, out);
    };
  });
  std::string bundles, direction = "right";
  std::size_t index = 0;
  auto* s_gram = sod_cmd->add_subcommand("gram", "Euler pairings of line bundles hH + pP on a section");
  positional4(s_gram, true);
  s_gram->add_option("--bundles", bundles, "h,p;h,p;...")->required();
  s_gram->callback([&] { action = [&] { return emit(gram_matrix(params(s_gram, Side::X), parse_bundles(bundles)), g, out); }; });
  auto* s_mutate = sod_cmd->add_subcommand("mutate", "mutate a pair of neighbours in a line-bundle collection");
  positional4(s_mutate, true);
  s_mutate->add_option("--bundles", bundles, "h,p;h,p;...")->required();
  s_mutate->add_option("--index", index, "mutate objects index and index+1")->required();
  s_mutate->add_option("--direction", direction, "left or right");
  s_mutate->callback([&] {
    action = [&] {
      report::MutationReport rep;
      rep.before = gram_matrix(params(s_mutate, Side::X), parse_bundles(bundles));
      rep.index = index;
      rep.direction = parse_mutation_direction(direction);
      rep.after = mutate(rep.before, index, rep.direction);
      return emit(rep, g, out);
    };
  });
  auto* s_add = sod_cmd->add_subcommand("additivity", "chi_top(Y_L) - chi_top(X_L) against (c - nr) binom(m, r)");
  positional4(s_add, false);
  s_add->callback([&] {
    action = [&] {
      need(s_add, {"m", "n", "r", "c"});
      report::AdditivityReport rep{p.m, p.n, p.r, p.c, hh_additivity_check(p.m, p.n, p.r, p.c)};
      emit(rep, g, out);
      return rep.check.pass ? kOk : kCheckFailed;
    };
  });
  auto* s_replay = sod_cmd->add_subcommand("replay", "mutation replay for a determinantal hypersurface of degree d in P^k");
  s_replay->add_option("d,--d", rd)->required();
  s_replay->add_option("k,--k", rk)->required();
  s_replay->callback([&] { action = [&] { return emit(mutation_replay(rd, rk), g, out); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes them reversed
  try {
    app.parse(argv);
    if (!g.config.empty()) apply_config(app, read_config(g.config));
    if (g.budget > ff::kHardBudget) throw InvalidParameters("budget above the hard cap of 10^8");
    return action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace hpdet::cli
