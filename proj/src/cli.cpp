#include "prolate/cli.hpp"

#include "prolate/errors.hpp"
#include "prolate/report_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace prolate::cli {

using nlohmann::json;

const char* to_string(Command c) {
  switch (c) {
  case Command::spectrum:
    return "spectrum";
  case Command::eigenfunction:
    return "eigenfunction";
  case Command::asymptotics:
    return "asymptotics";
  case Command::plunge:
    return "plunge";
  case Command::net:
    return "net";
  case Command::trace:
    return "trace";
  case Command::slepian:
    return "slepian";
  }
  return "spectrum";
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw UsageError(fmt::format("--a-grid expects start:stop:step, got '{}'", text));
  double start, stop, step;
  try {
    std::size_t used = 0;
    const std::string s0 = text.substr(0, first);
    const std::string s1 = text.substr(first + 1, second - first - 1);
    const std::string s2 = text.substr(second + 1);
    start = std::stod(s0, &used);
    if (used != s0.size())
      throw std::invalid_argument(s0);
    stop = std::stod(s1, &used);
    if (used != s1.size())
      throw std::invalid_argument(s1);
    step = std::stod(s2, &used);
    if (used != s2.size())
      throw std::invalid_argument(s2);
  } catch (const std::logic_error&) {
    throw UsageError(fmt::format("--a-grid has a non-numeric field: '{}'", text));
  }
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(stop))
    throw UsageError(fmt::format("--a-grid needs step > 0 and stop >= start, got '{}'", text));
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000)
    throw UsageError(fmt::format("--a-grid '{}' expands to {} points", text, count));
  std::vector<double> out;
  for (long i = 0; i < count; ++i)
    out.push_back(start + static_cast<double>(i) * step);
  return out;
}

void validate(const RunConfig& c) {
  if (c.a_values.empty())
    throw UsageError("one of --a or --a-grid is required");
  const bool single_only = c.command == Command::eigenfunction || c.command == Command::slepian;
  if (single_only && c.a_values.size() != 1)
    throw UsageError(fmt::format("{} takes a single --a", to_string(c.command)));
  for (double a : c.a_values) {
    if (!std::isfinite(a))
      throw UsageError("a must be finite");
    if (c.command == Command::eigenfunction) {
      if (a < 0.0)
        throw UsageError(fmt::format("eigenfunction needs a >= 0, got {}", a));
    } else if (c.command == Command::slepian) {
      if (!(a > 0.5))
        throw UsageError(fmt::format("slepian needs a > 1/2, got {}", a));
    } else if (!(a > 0.0)) {
      throw UsageError(fmt::format("{} needs a > 0, got {}", to_string(c.command), a));
    }
  }
  if (c.k_max && *c.k_max < 0)
    throw UsageError("--k-max must be nonnegative");
  if (c.k && *c.k < 0)
    throw UsageError("--k must be nonnegative");
  switch (c.command) {
  case Command::eigenfunction:
    if (!c.k)
      throw UsageError("eigenfunction requires --k");
    if (c.grid_size < 2)
      throw UsageError("--grid-size must be at least 2");
    break;
  case Command::plunge:
    if (!c.epsilon || !(*c.epsilon > 0.0 && *c.epsilon < 0.5))
      throw UsageError("plunge requires --epsilon in (0, 1/2)");
    break;
  case Command::net:
    if (!c.kappa || !(*c.kappa > 0.0))
      throw UsageError("net requires --kappa > 0");
    break;
  case Command::asymptotics:
    if (c.regime == Regime::transition)
      for (double a : c.a_values)
        for (double b : c.b_values)
          if (!(a * a + b * std::log(2.0 * a) >= 0.0))
            throw UsageError(fmt::format("a^2 + b ln(2a) < 0 for a = {}, b = {}", a, b));
    break;
  case Command::slepian:
    if (c.b_values.size() > 1)
      throw UsageError("slepian takes a single --b");
    break;
  default:
    break;
  }
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Spectrum of the truncated Fourier operator via prolate spheroidal functions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<double> a_single;
  std::string a_grid;
  std::string format;
  std::string output;
  std::string domain = "unit";
  std::string regime = "small_a_sigma";
  std::vector<double> bs;
  int k_max = -1;
  int k = -1;
  double epsilon = 0.0;
  double kappa = 0.0;
  std::map<CLI::App*, Command> commands;

  auto add = [&](const char* name, const char* help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* a_opt = sub->add_option("--a", a_single, "bandwidth parameter a");
    auto* g_opt = sub->add_option("--a-grid", a_grid, "sweep start:stop:step");
    a_opt->excludes(g_opt);
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "write the report to this file");
    commands[sub] = cmd;
    return sub;
  };

  auto* spectrum = add("spectrum", "eigenvalue table gamma, mu, sigma, lambda", Command::spectrum);
  spectrum->add_option("--k-max", k_max, "largest index");
  spectrum->add_flag("--oracle", cfg.oracle, "cross-check sigma with the Nystrom oracle");

  auto* eig = add("eigenfunction", "sample g_k(t,a) and e_k(at,a) on [-1,1]",
                  Command::eigenfunction);
  eig->add_option("--k", k, "eigenindex")->required();
  eig->add_option("--grid-size", cfg.grid_size, "number of grid points");

  auto* asym = add("asymptotics", "computed spectrum against the asymptotic laws",
                   Command::asymptotics);
  asym->add_option("--regime", regime, "small_a_sigma, small_a_lambda, large_a_deficit, transition")
      ->check(CLI::IsMember({"small_a_sigma", "small_a_lambda", "large_a_deficit", "transition"}));
  asym->add_option("--k-max", k_max, "largest index");
  asym->add_option("--b", bs, "transition offsets b");

  auto* plunge = add("plunge", "counts in the plunge region and their bounds", Command::plunge);
  plunge->add_option("--epsilon", epsilon, "threshold in (0, 1/2)")->required();
  plunge->add_option("--k-max", k_max, "largest index");

  auto* net = add("net", "kappa-net check on [0,1], residue classes or the cross", Command::net);
  net->add_option("--kappa", kappa, "net radius")->required();
  net->add_option("--domain", domain, "unit, residue or cross")
      ->check(CLI::IsMember({"unit", "unit_interval", "residue", "residue_classes", "cross"}));
  net->add_option("--k-max", k_max, "largest index");

  auto* trace = add("trace", "trace identity and the sum sigma(1-sigma) bound", Command::trace);
  trace->add_option("--k-max", k_max, "largest index");

  auto* slep = add("slepian", "root of the transition equation", Command::slepian);
  slep->add_option("--b", bs, "transition offset b (default 0)");
  slep->add_option("--k", k, "eigenindex (default k(a,b))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = commands.at(chosen);
  if (a_single) {
    cfg.a_values = {*a_single};
  } else if (!a_grid.empty()) {
    cfg.a_values = parse_grid(a_grid);
    cfg.a_grid = true;
  }
  const bool csv_default = cfg.command == Command::spectrum ||
                           cfg.command == Command::eigenfunction ||
                           cfg.command == Command::asymptotics;
  cfg.format = format.empty() ? (csv_default ? OutputFormat::csv : OutputFormat::json)
                              : (format == "csv" ? OutputFormat::csv : OutputFormat::json);
  if (!output.empty())
    cfg.output_path = output;
  auto given = [&](const char* name) {
    const auto* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--k-max"))
    cfg.k_max = k_max;
  if (given("--k"))
    cfg.k = k;
  if (cfg.command == Command::plunge)
    cfg.epsilon = epsilon;
  if (cfg.command == Command::net) {
    cfg.kappa = kappa;
    cfg.domain = net_domain_from_string(domain);
  }
  if (cfg.command == Command::asymptotics)
    cfg.regime = regime_from_string(regime);
  cfg.b_values = bs;
  if (cfg.b_values.empty() && cfg.command == Command::asymptotics)
    cfg.b_values = {-1.0, 0.0, 1.0};
  if (cfg.b_values.empty() && cfg.command == Command::slepian)
    cfg.b_values = {0.0};

  validate(cfg);
  return cfg;
}

namespace {

void warn_flags(const SpectrumTable& t, std::ostream& err) {
  for (const auto& e : t.entries) {
    if (e.flags & kFlagNearTie)
      err << fmt::format("warning: gamma_{}({}) is within 1e-12 of its neighbour; even parity "
                         "ordered first\n",
                         e.k, t.a);
    if (e.flags & kFlagNormalizationFallback)
      err << fmt::format("warning: g_{}(., {}) uses unit L2 normalization\n", e.k, t.a);
  }
}

int default_k_max(const RunConfig& c, double a) { return c.k_max.value_or(trace_k_max(a)); }

// Emits one JSON value per grid point: the bare object for a single a, an
// array for a sweep.
void emit_json(std::ostream& os, const std::vector<json>& records, bool grid) {
  const json out = grid ? json(records) : records.front();
  os << out.dump(2) << '\n';
}

void run_command(const RunConfig& c, std::ostream& os, std::ostream& err) {
  const bool csv = c.format == OutputFormat::csv;
  const auto opts = solver_options_from_env();
  std::vector<json> records;
  bool header = true;

  switch (c.command) {
  case Command::spectrum:
    for (double a : c.a_values) {
      const auto t = spectrum_table(a, default_k_max(c, a), c.oracle, opts);
      warn_flags(t, err);
      if (csv)
        write_spectrum_csv(os, t, header, c.a_grid);
      else
        records.push_back(to_json(t));
      header = false;
    }
    break;
  case Command::eigenfunction: {
    const double a = c.a_values.front();
    const auto fns = compute_prolate(a, *c.k, opts);
    const auto& pf = fns.back();
    if (csv) {
      write_eigenfunction_csv(os, pf, c.grid_size);
    } else {
      json rows = json::array();
      const int last = c.grid_size - 1;
      for (int j = 0; j < c.grid_size; ++j) {
        const double t = static_cast<double>(2 * j - last) / last;
        const double g = prolate_eval(pf, t);
        const double e = a > 0.0 ? eigenfunction_on_big_interval(pf, a * t) : g;
        rows.push_back({{"t", t}, {"g", g}, {"e", e}});
      }
      records.push_back({{"a", a}, {"k", *c.k}, {"gamma", pf.gamma}, {"samples", rows}});
    }
    break;
  }
  case Command::asymptotics:
    for (double a : c.a_values) {
      AsymptoticReport rep;
      switch (c.regime) {
      case Regime::small_a_sigma:
      case Regime::small_a_lambda:
        rep = small_a_report(c.regime, a, c.k_max.value_or(3));
        break;
      case Regime::large_a_deficit:
        rep = large_a_deficit_report(a, c.k_max.value_or(0));
        break;
      case Regime::transition:
        rep = transition_report(a, c.b_values);
        break;
      }
      if (csv)
        write_asymptotic_csv(os, rep, header);
      else
        records.push_back(to_json(rep));
      header = false;
    }
    break;
  case Command::plunge:
    for (double a : c.a_values) {
      const auto t = spectrum_table(a, default_k_max(c, a), false, opts);
      const auto rep = plunge_counts(t, *c.epsilon);
      if (csv)
        write_plunge_csv(os, rep, header);
      else
        records.push_back(to_json(rep));
      header = false;
    }
    break;
  case Command::net:
    for (double a : c.a_values) {
      const auto t = spectrum_table(a, default_k_max(c, a), false, opts);
      NetReport rep;
      switch (c.domain) {
      case NetDomain::unit_interval:
        rep = sigma_net_check(t, *c.kappa);
        break;
      case NetDomain::residue_classes:
        rep = residue_net_check(t, *c.kappa);
        break;
      case NetDomain::cross:
        rep = cross_net_check(t, *c.kappa);
        break;
      }
      if (csv) {
        write_net_csv(os, rep, a, header);
      } else {
        auto j = to_json(rep);
        j["a"] = a;
        j["k_max"] = t.k_max;
        records.push_back(std::move(j));
      }
      header = false;
    }
    break;
  case Command::trace:
    for (double a : c.a_values) {
      const auto t = spectrum_table(a, default_k_max(c, a), false, opts);
      const auto rep = trace_check(t);
      if (csv)
        write_trace_csv(os, rep, header);
      else
        records.push_back(to_json(rep));
      header = false;
    }
    break;
  case Command::slepian: {
    const double a = c.a_values.front();
    auto tp = transition_point(a, c.b_values.front(), false);
    if (c.k)
      tp.k = *c.k;
    tp.delta = slepian_delta(a, tp.k);
    if (csv) {
      write_transition_csv(os, tp, true);
    } else {
      auto j = to_json(tp);
      const auto t = spectrum_table(a, tp.k, false, opts);
      j["computed_sigma"] = t.entries.back().sigma;
      records.push_back(std::move(j));
    }
    break;
  }
  }
  if (!csv)
    emit_json(os, records, c.a_grid);
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output_path) {
      std::ostringstream buffer;
      run_command(config, buffer, err);
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file)
        throw Error(fmt::format("cannot open '{}' for writing", *config.output_path));
      file << buffer.str();
      if (!file)
        throw Error(fmt::format("failed writing '{}'", *config.output_path));
    } else {
      run_command(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (!cfg)
    return 0;
  return run(*cfg, out, err);
}

} // namespace prolate::cli
