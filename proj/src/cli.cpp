#include "tribo/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "tribo/errors.hpp"
#include "tribo/forbidden.hpp"
#include "tribo/orbit.hpp"
#include "tribo/recurrence.hpp"
#include "tribo/stability.hpp"

namespace tribo {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Value optional_index(const std::optional<long>& n) {
  return n ? Value(*n) : Value(std::monostate{});
}

struct OutputOptions {
  std::string format = "human";
  int precision = 12;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: human, csv, json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    cmd->add_option("--precision", precision, "Significant digits of decimal renderings")
        ->check(CLI::Range(1, 40));
  }
};

struct EquationOptions {
  std::string alpha;
  std::string beta;
  std::string gamma;
  bool permissive = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-a,--alpha", alpha, "alpha (p/q or decimal)")->required();
    cmd->add_option("-b,--beta", beta, "beta (p/q or decimal)")->required();
    cmd->add_option("-g,--gamma", gamma, "gamma (p/q or decimal), nonzero")->required();
    cmd->add_flag("--permissive", permissive, "Allow negative parameters");
  }

  EquationParams build() const {
    return EquationParams(parse_rational(alpha), parse_rational(beta), parse_rational(gamma),
                          permissive ? Admissibility::Permissive : Admissibility::Strict);
  }

  void echo(OutputRecord& record, const EquationParams& eq) const {
    record.params.push_back({"alpha", eq.alpha()});
    record.params.push_back({"beta", eq.beta()});
    record.params.push_back({"gamma", eq.gamma()});
    if (eq.outside_standard_domain()) {
      record.verdicts.push_back({"warning", std::string("parameters outside the nonnegative domain")});
    }
  }
};

struct InitialOptions {
  std::string x_m1 = "1";
  std::string x_0 = "1";

  void attach(CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--x-1", x_m1, "Initial value x_{-1}");
    auto* b = cmd->add_option("--x0", x_0, "Initial value x_0");
    if (required) {
      a->required();
      b->required();
    }
  }
};

// --- sequence ----------------------------------------------------------------

struct SequenceCommand {
  std::string kind;
  std::string rst;
  long from = 0;
  long to = 10;
  OutputOptions output;

  void attach(CLI::App* cmd) {
    auto* k = cmd->add_option("--kind", kind,
                              "tribonacci, padovan, padovan-perrin, narayana, jacobsthal3");
    auto* c = cmd->add_option("--rst", rst, "Coefficients r,s,t of V_{n+3} = rV_{n+2} + sV_{n+1} + tV_n");
    k->excludes(c);
    cmd->add_option("--from", from, "First index (may be negative)");
    cmd->add_option("--to", to, "Last index");
    output.attach(cmd);
  }

  OutputRecord run() const {
    if (kind.empty() == rst.empty()) throw std::invalid_argument("give exactly one of --kind or --rst");
    if (from > to) throw std::invalid_argument("--from must not exceed --to");

    OutputRecord record;
    record.command = "sequence";
    record.precision = output.precision;
    if (!kind.empty()) {
      const SpecialSequence seq = make_special(parse_named_sequence(kind));
      record.params.push_back({"kind", std::string(name_of(seq.kind))});
      record.params.push_back({"shift", seq.shift});
      record.params.push_back({"r", seq.params.r});
      record.params.push_back({"s", seq.params.s});
      record.params.push_back({"t", seq.params.t});
      record.params.push_back({"from", from});
      record.params.push_back({"to", to});
      const auto a = coefficient_window(seq.params, from - seq.shift, to - seq.shift);
      for (long m = from; m <= to; ++m) {
        record.rows.push_back({{"n", m}, {"value", a[static_cast<std::size_t>(m - from)].a}});
      }
    } else {
      const auto parts = split(rst, ',');
      if (parts.size() != 3) throw std::invalid_argument("--rst expects three values r,s,t");
      const RecurrenceParams params{parse_rational(parts[0]), parse_rational(parts[1]),
                                    parse_rational(parts[2])};
      record.params.push_back({"r", params.r});
      record.params.push_back({"s", params.s});
      record.params.push_back({"t", params.t});
      record.params.push_back({"from", from});
      record.params.push_back({"to", to});
      const SequenceWindow v = v_window(params, from, to);
      for (long n = from; n <= to; ++n) record.rows.push_back({{"n", n}, {"value", v[n]}});
    }
    return record;
  }
};

// --- orbit -------------------------------------------------------------------

struct OrbitCommand {
  EquationOptions equation;
  InitialOptions initial;
  long n = 10;
  std::string mode = "iterate";
  OutputOptions output;

  void attach(CLI::App* cmd) {
    equation.attach(cmd);
    initial.attach(cmd, true);
    cmd->add_option("-n", n, "Number of steps")->check(CLI::NonNegativeNumber);
    cmd->add_option("--mode", mode, "iterate, closed or compare")
        ->check(CLI::IsMember({"iterate", "closed", "compare"}));
    output.attach(cmd);
  }

  int run(OutputRecord& record) const {
    const EquationParams eq = equation.build();
    const Rational x_m1 = parse_rational(initial.x_m1);
    const Rational x_0 = parse_rational(initial.x_0);
    record.command = "orbit";
    record.precision = output.precision;
    equation.echo(record, eq);
    record.params.push_back({"x_m1", x_m1});
    record.params.push_back({"x_0", x_0});
    record.params.push_back({"n", n});
    record.params.push_back({"mode", mode});

    auto status = [&](const std::optional<long>& singular) {
      return singular ? "singular at n=" + std::to_string(*singular)
                      : "regular through n=" + std::to_string(n);
    };

    if (mode == "iterate") {
      const Orbit orbit = iterate(eq, x_m1, x_0, n);
      for (long k = 1; k <= orbit.last_index(); ++k) {
        record.rows.push_back({{"n", k}, {"x", orbit.x(k)}});
      }
      record.verdicts.push_back({"singular_at", optional_index(orbit.singular_at)});
      record.verdicts.push_back({"status", status(orbit.singular_at)});
      return kExitOk;
    }

    if (mode == "closed") {
      const ClosedForm closed(eq, x_m1, x_0, n);
      std::optional<long> singular;
      for (long k = 1; k <= n; ++k) {
        if (is_zero(closed.denominator(k))) {
          singular = k;
          break;
        }
        record.rows.push_back({{"n", k}, {"x", closed.value(k)}});
      }
      record.verdicts.push_back({"singular_at", optional_index(singular)});
      record.verdicts.push_back({"status", status(singular)});
      return kExitOk;
    }

    const OrbitComparison cmp = compare_orbit(eq, x_m1, x_0, n);
    for (const auto& v : cmp.indices) {
      record.rows.push_back({{"n", v.n}, {"iterate", v.iterated}, {"closed", v.closed}, {"equal", v.equal}});
    }
    record.verdicts.push_back(
        {"agree", std::to_string(cmp.agree_count()) + "/" + std::to_string(cmp.compared())});
    record.verdicts.push_back({"iterate_singular_at", optional_index(cmp.iterate_singular_at)});
    record.verdicts.push_back({"closed_singular_at", optional_index(cmp.closed_singular_at)});
    record.verdicts.push_back({"singularity_agrees", cmp.singularity_agrees()});
    record.verdicts.push_back({"all_agree", cmp.all_agree()});
    return cmp.all_agree() ? kExitOk : kExitMismatch;
  }
};

// --- stability ---------------------------------------------------------------

struct StabilityCommand {
  EquationOptions equation;
  OutputOptions output;

  void attach(CLI::App* cmd) {
    equation.attach(cmd);
    output.attach(cmd);
  }

  OutputRecord run() const {
    const EquationParams eq = equation.build();
    OutputRecord record;
    record.command = "stability";
    record.precision = output.precision;
    equation.echo(record, eq);
    Row row = stability_fields(eq);
    for (const auto& f : row) {
      if (f.key == "classification" || f.key == "local_verdict") record.verdicts.push_back(f);
    }
    record.rows.push_back(std::move(row));
    return record;
  }
};

// --- forbidden ---------------------------------------------------------------

struct ForbiddenCommand {
  EquationOptions equation;
  InitialOptions initial;
  long horizon = kDefaultHorizon;
  OutputOptions output;

  void attach(CLI::App* cmd) {
    equation.attach(cmd);
    initial.attach(cmd, true);
    cmd->add_option("--horizon", horizon, "Largest index scanned")->check(CLI::PositiveNumber);
    output.attach(cmd);
  }

  OutputRecord run() const {
    const EquationParams eq = equation.build();
    const Rational x_m1 = parse_rational(initial.x_m1);
    const Rational x_0 = parse_rational(initial.x_0);
    OutputRecord record;
    record.command = "forbidden";
    record.precision = output.precision;
    equation.echo(record, eq);
    record.params.push_back({"x_m1", x_m1});
    record.params.push_back({"x_0", x_0});
    record.params.push_back({"horizon", horizon});

    const ForbiddenComparison cmp = compare_forbidden(eq, x_m1, x_0, horizon);
    auto describe = [&](const std::optional<ForbiddenHit>& hit) {
      return hit ? "hit at n=" + std::to_string(hit->index)
                 : "none within horizon " + std::to_string(horizon);
    };
    record.verdicts.push_back({"formula", describe(cmp.formula)});
    record.verdicts.push_back({"operational", describe(cmp.operational)});
    record.verdicts.push_back(
        {"formula_index", optional_index(cmp.formula ? std::optional<long>(cmp.formula->index) : std::nullopt)});
    record.verdicts.push_back({"operational_index",
                               optional_index(cmp.operational ? std::optional<long>(cmp.operational->index)
                                                              : std::nullopt)});
    record.verdicts.push_back({"agreement", std::string(name_of(cmp.agreement))});
    record.verdicts.push_back({"disagreement", cmp.agreement != ForbiddenAgreement::Agree});
    record.verdicts.push_back({"note", cmp.note});
    return record;
  }
};

// --- sweep -------------------------------------------------------------------

struct SweepCommand {
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string steps = "1";
  bool convergence = false;
  InitialOptions initial;
  double tol = 1e-8;
  long n_max = 400;
  unsigned threads = 0;
  bool permissive = false;
  OutputOptions output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "alpha range lo:hi or a single value")->required();
    cmd->add_option("--beta", beta, "beta range lo:hi or a single value")->required();
    cmd->add_option("--gamma", gamma, "gamma range lo:hi or a single value")->required();
    cmd->add_option("--steps", steps, "Grid points per axis: N or Na,Nb,Ng");
    cmd->add_flag("--convergence", convergence, "Also iterate from (x_{-1}, x_0) and report convergence");
    initial.attach(cmd, false);
    cmd->add_option("--tol", tol, "Convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--n-max", n_max, "Iteration budget for --convergence")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
    cmd->add_flag("--permissive", permissive, "Allow negative parameters");
    output.attach(cmd);
  }

  OutputRecord run() const {
    std::vector<long> counts;
    for (const auto& part : split(steps, ',')) {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument("--steps values must be positive integers");
      counts.push_back(v);
    }
    if (counts.size() == 1) counts = {counts[0], counts[0], counts[0]};
    if (counts.size() != 3) throw std::invalid_argument("--steps expects N or Na,Nb,Ng");

    const GridAxis a = parse_axis(alpha, counts[0]);
    const GridAxis b = parse_axis(beta, counts[1]);
    const GridAxis g = parse_axis(gamma, counts[2]);
    for (const auto& point : g.points()) {
      if (is_zero(point)) throw std::invalid_argument("gamma grid contains 0");
    }

    SweepOptions options;
    options.convergence = convergence;
    options.x_m1 = parse_rational(initial.x_m1);
    options.x_0 = parse_rational(initial.x_0);
    options.tol = tol;
    options.n_max = n_max;
    options.threads = threads;
    options.mode = permissive ? Admissibility::Permissive : Admissibility::Strict;

    OutputRecord record;
    record.command = "sweep";
    record.precision = output.precision;
    record.params.push_back({"alpha", alpha});
    record.params.push_back({"beta", beta});
    record.params.push_back({"gamma", gamma});
    record.params.push_back({"steps", std::to_string(counts[0]) + "," + std::to_string(counts[1]) +
                                          "," + std::to_string(counts[2])});
    if (convergence) {
      record.params.push_back({"x_m1", options.x_m1});
      record.params.push_back({"x_0", options.x_0});
      record.params.push_back({"tol", tol});
      record.params.push_back({"n_max", n_max});
    }
    record.rows = sweep_rows(a, b, g, options);
    long errors = 0;
    for (const auto& row : record.rows) {
      for (const auto& f : row) errors += f.key == "error" ? 1 : 0;
    }
    record.verdicts.push_back({"points", static_cast<long>(record.rows.size())});
    record.verdicts.push_back({"errors", errors});
    return record;
  }
};

// --- selftest ----------------------------------------------------------------

struct SelftestCommand {
  std::uint64_t seed = 1;
  long count = 50;
  long n_max = 60;
  OutputOptions output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--count", count, "Random instances")->check(CLI::PositiveNumber);
    cmd->add_option("-n,--n-max", n_max, "Steps per instance")->check(CLI::PositiveNumber);
    output.attach(cmd);
  }

  int run(OutputRecord& record) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(1, 8);
    auto positive = [&] {
      const long d = den(rng);
      return Rational(std::uniform_int_distribution<long>(1, 3 * d)(rng), d);
    };
    auto initial = [&] {
      const long d = den(rng);
      return Rational(std::uniform_int_distribution<long>(-5 * d, 5 * d)(rng), d);
    };

    long agreeing = 0;
    for (long i = 0; i < count; ++i) {
      Rational a = positive(), b = positive(), g = positive();
      a.canonicalize();
      b.canonicalize();
      g.canonicalize();
      Rational x = initial(), y = initial();
      x.canonicalize();
      y.canonicalize();
      const EquationParams eq(a, b, g);
      agreeing += compare_orbit(eq, x, y, n_max).all_agree() ? 1 : 0;
    }
    record.command = "selftest";
    record.precision = output.precision;
    record.params.push_back({"seed", static_cast<long>(seed)});
    record.params.push_back({"count", count});
    record.params.push_back({"n_max", n_max});
    record.verdicts.push_back({"agreeing", agreeing});
    record.verdicts.push_back({"mismatches", count - agreeing});
    return agreeing == count ? kExitOk : kExitMismatch;
  }
};

}  // namespace

std::vector<Rational> GridAxis::points() const {
  if (steps < 1) throw std::invalid_argument("grid axis needs at least one step");
  std::vector<Rational> out;
  if (steps == 1) return {lo};
  const Rational step = (hi - lo) / (steps - 1);
  for (long i = 0; i < steps; ++i) out.push_back(lo + step * i);
  return out;
}

GridAxis parse_axis(const std::string& text, long steps) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_rational(parts[0]), parse_rational(parts[0]), steps};
  if (parts.size() != 2) throw std::invalid_argument("range must be lo:hi or a single value");
  return {parse_rational(parts[0]), parse_rational(parts[1]), steps};
}

Row stability_fields(const EquationParams& eq) {
  const StabilityReport report = classify_stability(eq);
  return {
      {"mu", report.mu},
      {"p", report.p},
      {"q", report.q},
      {"clark_sum", report.clark_sum},
      {"paper_rouche_value", report.paper_rouche_value},
      {"lambda_modulus_1", report.lambda_moduli[0]},
      {"lambda_modulus_2", report.lambda_moduli[1]},
      {"mu_phi", mu_phi(eq)},
      {"equilibrium_real_roots", report.equilibrium.all_real ? 3L : 1L},
      {"classification", std::string(name_of(report.classification))},
      {"local_verdict", std::string(name_of(report.local_verdict))},
  };
}

std::vector<Row> sweep_rows(const GridAxis& alpha, const GridAxis& beta, const GridAxis& gamma,
                            const SweepOptions& options) {
  struct Point {
    Rational a, b, g;
  };
  std::vector<Point> grid;
  for (const auto& a : alpha.points()) {
    for (const auto& b : beta.points()) {
      for (const auto& g : gamma.points()) grid.push_back({a, b, g});
    }
  }

  std::vector<Row> rows(grid.size());
  auto evaluate = [&](std::size_t i) {
    const Point& pt = grid[i];
    Row row{{"alpha", pt.a}, {"beta", pt.b}, {"gamma", pt.g}};
    try {
      const EquationParams eq(pt.a, pt.b, pt.g, options.mode);
      for (auto& f : stability_fields(eq)) row.push_back(std::move(f));
      if (options.convergence) {
        const ConvergenceReport conv =
            global_convergence_check(eq, options.x_m1, options.x_0, options.tol, options.n_max);
        row.push_back({"converged_at", optional_index(conv.first_within_tol)});
        row.push_back({"final_gap", conv.final_gap});
      }
    } catch (const std::exception& e) {
      row.push_back({"error", std::string(e.what())});
    }
    rows[i] = std::move(row);
  };

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(grid.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Tribonacci sequences and the difference equation "
               "x_{n+1} = gamma / (x_n (x_{n-1} + alpha) + beta)",
               "tribo"};
  app.require_subcommand(1);

  SequenceCommand sequence;
  OrbitCommand orbit;
  StabilityCommand stability;
  ForbiddenCommand forbidden;
  SweepCommand sweep;
  SelftestCommand selftest;

  auto* seq_cmd = app.add_subcommand("sequence", "Print V_n or a named sequence over an index window");
  sequence.attach(seq_cmd);
  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate, evaluate the closed form, or compare both");
  orbit.attach(orbit_cmd);
  auto* stab_cmd = app.add_subcommand("stability", "Equilibrium, linearization and stability verdicts");
  stability.attach(stab_cmd);
  auto* forb_cmd = app.add_subcommand("forbidden", "Formula-based and operational singularity detection");
  forbidden.attach(forb_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "Stability (and convergence) over a parameter grid");
  sweep.attach(sweep_cmd);
  auto* self_cmd = app.add_subcommand("selftest", "Randomized closed-form versus iteration check");
  selftest.attach(self_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("tribo");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    OutputRecord record;
    int code = kExitOk;
    std::string format = "human";
    if (*seq_cmd) {
      record = sequence.run();
      format = sequence.output.format;
    } else if (*orbit_cmd) {
      code = orbit.run(record);
      format = orbit.output.format;
    } else if (*stab_cmd) {
      record = stability.run();
      format = stability.output.format;
    } else if (*forb_cmd) {
      record = forbidden.run();
      format = forbidden.output.format;
    } else if (*sweep_cmd) {
      record = sweep.run();
      format = sweep.output.format;
    } else if (*self_cmd) {
      code = selftest.run(record);
      format = selftest.output.format;
    }
    write_record(out, record, parse_format(format));
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace tribo
