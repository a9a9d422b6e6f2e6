#include "hexmetric_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>

#include <CLI11.hpp>

#include "hexmetric/errors.hpp"
#include "hexmetric/polytope.hpp"
#include "hexmetric/realize.hpp"
#include "hexmetric/solver.hpp"
#include "hexmetric_cli/io.hpp"

namespace hexmetric::cli {

namespace {

struct Options {
  std::string file;
  std::string z_file;
  std::string lengths_file;
  std::string json_out;
  std::string vertices_out;
  double tol = 1e-10;
  int max_iter = 100;
  int samples = 21;
  int segments = 3;
  unsigned seed = 1;
  std::size_t enumerate_limit = 10000;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_validate(const Options& o, std::ostream& out) {
  const HexComplex cx = load_complex(o.file);
  out << "hexagons=" << cx.hexagon_count() << " edges=" << cx.edge_count()
      << " xarcs=" << cx.xarc_count() << " chi=" << cx.euler_characteristic()
      << " boundary=" << cx.boundary_components().size() << '\n';
  const auto& comps = cx.boundary_components();
  for (std::size_t b = 0; b < comps.size(); ++b) {
    out << "boundary " << b << ": arcs";
    for (int a : comps[b].arcs) out << ' ' << a;
    out << "; edges";
    for (int e : comps[b].cycle.edges) out << ' ' << cx.edge(e).label;
    out << '\n';
  }
  return kOk;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  const HexComplex cx = load_complex(o.file);
  const ECoordinate z{load_coords(o.z_file, cx, "z")};
  const PolytopeReport report = check_feasibility(cx, z);
  emit(out, report_json(cx, report));
  return report.feasible ? kOk : kInfeasible;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const HexComplex cx = load_complex(o.file);
  const ECoordinate z{load_coords(o.z_file, cx, "z")};
  SolveConfig cfg;
  cfg.gradient_tolerance = o.tol;
  cfg.consistency_tolerance = o.tol;
  cfg.max_iterations = o.max_iter;

  Solution sol;
  try {
    sol = maximize(cx, z, cfg);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    emit(out, json{{"feasibility", report_json(cx, e.report())}});
    return kInfeasible;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    emit(out, json{{"report", report_json(cx, e.report())}});
    return kNotConverged;
  }

  const HyperbolicMetric metric = extract_metric(cx, sol.t, cfg);
  // Verification runs at 1e-8, or looser if the caller asked for a looser solve.
  const double verify_tol = std::max(1e-8, 10.0 * o.tol);
  const VerificationReport verification = verify_metric(cx, metric, verify_tol);

  json doc = metric_json(cx, metric);
  doc["report"] = report_json(cx, sol.report);
  doc["verification"] = verification_json(verification);
  if (!o.json_out.empty()) {
    write_json_file(o.json_out, doc);
    out << "converged in " << sol.report.iterations << " iterations; wrote " << o.json_out
        << '\n';
  } else {
    emit(out, doc);
  }
  if (!o.vertices_out.empty()) write_json_file(o.vertices_out, vertices_json(cx, metric));
  if (!verification.passed) {
    for (const auto& f : verification.failures) err << "verification: " << f << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_forward(const Options& o, std::ostream& out) {
  const HexComplex cx = load_complex(o.file);
  const std::vector<double> lengths = load_coords(o.lengths_file, cx, "lengths");
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (!(lengths[static_cast<std::size_t>(e)] > 0.0)) {
      throw InputError("length of edge '" + cx.edge(e).label + "' is not positive");
    }
  }
  const ForwardResult fwd = forward_map(cx, lengths);
  json doc;
  doc["z"] = coord_map(cx, fwd.z.values);
  doc["boundary_lengths"] = fwd.boundary_lengths;
  doc["x"] = fwd.x.values;
  emit(out, doc);
  return kOk;
}

// Largest step along d from s that keeps every pairwise t-sum positive,
// capped at `cap`. The margin is concave in the step, so bisection applies.
double max_step(const HexComplex& cx, const ECoordinate& z, const std::vector<double>& s,
                const std::vector<double>& d, double cap) {
  auto margin_at = [&](double a) {
    std::vector<double> p(s);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += a * d[i];
    return domain_margin(cx, t_from_shifts(cx, z, p));
  };
  if (margin_at(cap) > 0.0) return cap;
  double lo = 0.0;
  double hi = cap;
  for (int k = 0; k < 100; ++k) {
    const double mid = 0.5 * (lo + hi);
    (margin_at(mid) > 0.0 ? lo : hi) = mid;
  }
  return lo;
}

int cmd_energy_profile(const Options& o, std::ostream& out) {
  const HexComplex cx = load_complex(o.file);
  const ECoordinate z{load_coords(o.z_file, cx, "z")};
  if (o.samples < 0 || o.segments < 0) throw InputError("sample counts must be nonnegative");
  const InteriorPoint start = interior_point(cx, z);

  out << "segment,s,V\n";
  if (o.samples == 0) return kOk;
  out << std::setprecision(17);
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal;
  const std::size_t m = start.shifts.size();
  for (int seg = 0; seg < o.segments; ++seg) {
    std::vector<double> d(m);
    double norm = 0.0;
    for (double& v : d) {
      v = normal(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (double& v : d) v = norm > 0.0 ? v / norm : 0.0;
    // Stay a tenth of the way short of the domain boundary.
    const double length = 0.9 * max_step(cx, z, start.shifts, d, 10.0);
    for (int i = 0; i < o.samples; ++i) {
      const double u = o.samples == 1 ? 0.0 : static_cast<double>(i) / (o.samples - 1);
      std::vector<double> p(start.shifts);
      for (std::size_t k = 0; k < m; ++k) p[k] += u * length * d[k];
      out << seg << ',' << u << ',' << energy(cx, t_from_shifts(cx, z, p)) << '\n';
    }
  }
  return kOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  const HexComplex cx = load_complex(o.file);
  json doc;
  json equalities = json::array();
  const auto& comps = cx.boundary_components();
  for (std::size_t b = 0; b < comps.size(); ++b) {
    json eq = cycle_json(cx, comps[b].cycle);
    eq["boundary"] = b;
    equalities.push_back(eq);
  }
  const FundamentalCycles cycles = cx.enumerate_fundamental_cycles(o.enumerate_limit);
  json inequalities = json::array();
  for (const EdgeCycle& c : cycles.cycles) inequalities.push_back(cycle_json(cx, c));
  doc["equalities"] = equalities;
  doc["inequalities"] = inequalities;
  doc["truncated"] = cycles.truncated;
  emit(out, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic metrics on hexagon-triangulated surfaces from E-coordinates"};
  app.name(args.empty() ? "hexmetric" : args[0]);
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a triangulation file and summarize it");
  validate->add_option("file", o.file, "Triangulation JSON")->required();

  auto* feasible = app.add_subcommand("feasible", "Decide feasibility of an E-coordinate");
  feasible->add_option("file", o.file, "Triangulation JSON")->required();
  feasible->add_option("--z", o.z_file, "E-coordinate JSON")->required();

  auto* solve = app.add_subcommand("solve", "Compute the hyperbolic metric with given E-coordinate");
  solve->add_option("file", o.file, "Triangulation JSON")->required();
  solve->add_option("--z", o.z_file, "E-coordinate JSON")->required();
  solve->add_option("--tol", o.tol, "Gradient and edge-consistency tolerance")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", o.max_iter, "Newton iteration limit")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--json-out", o.json_out, "Write the result here instead of stdout");
  solve->add_option("--vertices-out", o.vertices_out, "Write realized hexagon vertices here");

  auto* forward = app.add_subcommand("forward", "Edge lengths to E-coordinate and boundary lengths");
  forward->add_option("file", o.file, "Triangulation JSON")->required();
  forward->add_option("--lengths", o.lengths_file, "Edge-length JSON")->required();

  auto* profile = app.add_subcommand("energy-profile", "Sample the energy along random segments (CSV)");
  profile->add_option("file", o.file, "Triangulation JSON")->required();
  profile->add_option("--z", o.z_file, "E-coordinate JSON")->required();
  profile->add_option("--samples", o.samples, "Samples per segment")->required();
  profile->add_option("--segments", o.segments, "Number of segments");
  profile->add_option("--seed", o.seed, "Random seed");

  auto* polytope = app.add_subcommand("polytope", "List the equalities and inequalities cutting out the feasible set");
  polytope->add_option("file", o.file, "Triangulation JSON")->required();
  polytope->add_option("--enumerate-limit", o.enumerate_limit, "Maximum number of cycles");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("hexmetric");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (feasible->parsed()) return cmd_feasible(o, out);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (forward->parsed()) return cmd_forward(o, out);
    if (profile->parsed()) return cmd_energy_profile(o, out);
    if (polytope->parsed()) return cmd_polytope(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace hexmetric::cli
