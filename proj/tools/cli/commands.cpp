#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/verify.hpp"
#include "mstpoly/census.hpp"
#include "mstpoly/coefficients.hpp"
#include "mstpoly/enumeration.hpp"
#include "mstpoly/expectation.hpp"
#include "mstpoly/graph.hpp"
#include "mstpoly/monte_carlo.hpp"

namespace mstpoly::cli {

namespace {

enum class Format { kJson, kPlain };

struct CliConfig {
  std::string path;
  std::vector<std::string> gen;
  int cap = kDefaultEdgeCap;
  unsigned threads = 0;
  Format format = Format::kJson;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  double z = 4.0;
  int max_n = 7;
  int digits = 10;
  std::string route = "all";
  bool experimental = false;
  std::vector<std::string> gen_spec;  // positional spec of the gen subcommand
};

/// Input problems that are not exceptions of the core library.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const CliConfig& cfg, std::istream& in) {
  const bool has_path = !cfg.path.empty();
  const bool has_gen = !cfg.gen.empty();
  if (has_path == has_gen) throw InputError("give exactly one graph source: a file, '-', or --gen <kind> <params...>");
  if (has_gen) return generate(parse_generator_spec(cfg.gen));

  std::string text;
  if (cfg.path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(cfg.path);
    if (!file) throw InputError("cannot open " + cfg.path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw InputError((cfg.path == "-" ? std::string("<stdin>") : cfg.path) + ":" + e.what());
  }
}

EnumerationOptions enumeration_options(const CliConfig& cfg) { return {cfg.cap, cfg.threads}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_compute(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const MstExpectation e = expected_mst_length(g, enumeration_options(cfg));
  if (cfg.format == Format::kJson) {
    emit(out, expectation_json(e, cfg.digits));
  } else {
    out << expectation_plain(e, cfg.digits);
  }
  return kExitOk;
}

int cmd_coeffs(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg, in);
  if (!is_connected(g)) throw DisconnectedGraph();
  std::vector<Route> which;
  if (cfg.route == "all") {
    which.assign(kAllRoutes.begin(), kAllRoutes.end());
  } else {
    which.push_back(parse_route(cfg.route));
  }
  const RankTable table = build_rank_table(g, enumeration_options(cfg));
  const SubgraphCensus census = take_census(g);
  RouteCoefficients routes;
  for (Route r : which) {
    CoefficientVector v = route_coefficients(r, g, table, census);
    switch (r) {
      case Route::kDirect: routes.direct = std::move(v); break;
      case Route::kAlternating: routes.alternating = std::move(v); break;
      case Route::kRank: routes.rank = std::move(v); break;
      case Route::kReduced: routes.reduced = std::move(v); break;
      case Route::kStructural: routes.structural = std::move(v); break;
    }
  }

  if (cfg.format == Format::kJson) {
    emit(out, json{{"n", g.n()}, {"m", g.m()}, {"a", routes_json(routes, which)}});
  } else {
    for (Route r : which) {
      out << route_name(r) << ":";
      for (const auto& c : routes.get(r).a) out << " " << (c ? c->str() : std::string("-"));
      out << "\n";
    }
  }

  if (which.size() > 1) {
    const auto mismatches = route_disagreements(routes);
    if (!mismatches.empty()) {
      for (const auto& s : mismatches) err << "route disagreement: " << s << "\n";
      return kExitRouteDisagreement;
    }
  }
  return kExitOk;
}

int cmd_census(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const SubgraphCensus census = take_census(g);
  if (cfg.format == Format::kJson) {
    emit(out, census_json(census));
  } else {
    out << census_plain(census);
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const VerifyReport report = run_verification(g, enumeration_options(cfg), cfg.experimental);
  if (cfg.format == Format::kJson) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json experimental = json::array();
    for (const auto& r : report.experimental) {
      experimental.push_back({{"i", r.i}, {"lhs", integer_json(r.lhs)}, {"c_i", integer_json(r.c_i)}, {"holds", r.holds}});
    }
    emit(out, json{{"n", report.n},
                   {"m", report.m},
                   {"checks", checks},
                   {"experimental", experimental},
                   {"all_pass", report.all_pass()}});
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    for (const auto& r : report.experimental) {
      out << "INFO cycle-identity i=" << r.i << " " << (r.holds ? "holds" : "does not hold") << " (" << r.lhs
          << " vs c_i = " << r.c_i << ")\n";
    }
  }
  if (report.route_failure()) return kExitRouteDisagreement;
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const McEstimate est = simulate(g, cfg.trials, cfg.seed, cfg.threads);
  std::optional<McComparison> cmp;
  if (g.m() <= cfg.cap) {
    cmp = compare(expected_mst_length(g, enumeration_options(cfg)).expectation, est, cfg.z);
  }
  if (cfg.format == Format::kJson) {
    emit(out, simulation_json(est, cmp));
  } else {
    out << simulation_plain(est, cmp);
  }
  return (!cmp || cmp->pass) ? kExitOk : kExitCheckFailed;
}

int cmd_kn_table(const CliConfig& cfg, std::ostream& out) {
  const auto rows = kn_table(cfg.max_n, enumeration_options(cfg));
  if (cfg.format == Format::kJson) {
    emit(out, kn_table_json(rows, cfg.digits));
  } else {
    out << kn_table_plain(rows, cfg.digits);
  }
  return kExitOk;
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
  const Graph g = generate(parse_generator_spec(cfg.gen_spec));
  if (cfg.format == Format::kJson) {
    emit(out, graph_json(g));
  } else {
    out << "# " << cfg.gen_spec.front();
    for (std::size_t i = 1; i < cfg.gen_spec.size(); ++i) out << " " << cfg.gen_spec[i];
    out << "\n" << format_graph(g);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact expected minimum spanning tree length under i.i.d. uniform [0,1] edge weights", "mstpoly"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"plain", Format::kPlain}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.path, "Edge-list file, or - for stdin");
    sub->add_option("--gen", cfg.gen, "Generated graph: complete N | bipartite A B | cycle N | path N")
        ->expected(2, 3);
  };
  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Largest edge count to enumerate")->check(CLI::Range(0, kHardEdgeCap));
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "Decimal digits in rendered values")->check(CLI::Range(0, 200));
  };

  auto* compute = app.add_subcommand("compute", "Exact E[L(G)] with the integrand polynomial");
  add_graph(compute);
  add_enum(compute);
  add_output(compute);
  add_digits(compute);

  auto* coeffs = app.add_subcommand("coeffs", "Integrand coefficients along one or all routes");
  add_graph(coeffs);
  add_enum(coeffs);
  add_output(coeffs);
  coeffs->add_option("--route", cfg.route, "direct|eq2|rank|reduced|structural|all")
      ->check(CLI::IsMember({"direct", "eq2", "rank", "reduced", "structural", "all"}));

  auto* census = app.add_subcommand("census", "Cycle, chord, and clique counts");
  add_graph(census);
  add_output(census);

  auto* verify = app.add_subcommand("verify", "Run every cross-check on one graph");
  add_graph(verify);
  add_enum(verify);
  add_output(verify);
  verify->add_flag("--experimental", cfg.experimental, "Also report the cycle identity beyond length 6");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate, compared with the exact value when feasible");
  add_graph(sim);
  add_enum(sim);
  add_output(sim);
  sim->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", cfg.seed, "Generator seed");
  sim->add_option("--z", cfg.z, "Pass threshold in standard errors")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("kn-table", "Exact E[L(K_n)] for n = 2..max-n");
  add_enum(table);
  add_output(table);
  add_digits(table);
  table->add_option("--max-n", cfg.max_n, "Largest complete graph")->check(CLI::Range(2, 11));

  auto* gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen->add_option("spec", cfg.gen_spec, "complete N | bipartite A B | cycle N | path N")->required()->expected(2, 3);
  add_output(gen);
  gen->callback([&] {
    if (!gen->count("--format")) cfg.format = Format::kPlain;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*compute) return cmd_compute(cfg, in, out);
    if (*coeffs) return cmd_coeffs(cfg, in, out, err);
    if (*census) return cmd_census(cfg, in, out);
    if (*verify) return cmd_verify(cfg, in, out);
    if (*sim) return cmd_simulate(cfg, in, out);
    if (*table) return cmd_kn_table(cfg, out);
    if (*gen) return cmd_gen(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap up to " << kHardEdgeCap << " to proceed)\n";
    return kExitCapRefused;
  } catch (const RouteDisagreement& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitRouteDisagreement;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "; the expected MST length needs a connected graph\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitRouteDisagreement;
  }
  return kExitInputError;
}

}  // namespace mstpoly::cli
