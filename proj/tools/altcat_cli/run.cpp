#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "altcat_cli/cli.hpp"

namespace altcat::cli {
namespace {

struct RawOptions {
  unsigned max_g = 10;
  std::size_t order = 21;
  std::vector<std::string> routes;
  std::string n4 = "16";
  std::string n5 = "16";
  std::string format = "text";
  std::string output;
  std::string suite = "all";
  unsigned schubert_cap = 12;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& text, const char* flag) {
  Integer value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw UsageError(std::string(flag) + " expects an integer, got '" + text + "'");
  }
  return value;
}

void add_output_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--output", raw.output, "Write to PATH instead of standard output");
}

void add_multipliers(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--n4", raw.n4, "Coefficient of sigma_4 in the degeneration class");
  sub->add_option("--n5", raw.n5, "Coefficient of sigma_{3,1} in the degeneration class");
  sub->add_option("--schubert-cap", raw.schubert_cap, "Largest g the Schubert route may evaluate");
}

RunConfig to_config(Command command, const RawOptions& raw, bool routes_given) {
  RunConfig config;
  config.command = command;
  config.max_g = raw.max_g;
  config.order = raw.order;
  config.n4 = parse_integer(raw.n4, "--n4");
  config.n5 = parse_integer(raw.n5, "--n5");
  config.format = raw.format == "json" ? Format::json : raw.format == "csv" ? Format::csv : Format::text;
  if (!raw.output.empty()) config.output = raw.output;
  config.schubert_cap = raw.schubert_cap;
  config.suite = *parse_suite(raw.suite);
  if (routes_given) {
    config.routes.clear();
    for (const auto& name : raw.routes) {
      const auto route = parse_route(name);
      if (!route) throw UsageError("unknown route '" + name + "'");
      config.routes.push_back(*route);
    }
  } else if (command == Command::series) {
    config.routes = {Route::genfun};
  }
  if (command == Command::series) {
    for (Route r : config.routes) {
      if (r != Route::genfun && r != Route::lagrange) {
        throw UsageError("series accepts the genfun and lagrange routes only");
      }
    }
  }
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating Catalan numbers: tables, series and exact verification suites", "altcat"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* table = app.add_subcommand("table", "A_g by one or more routes, with an agreement flag");
  table->add_option("--max-g", raw.max_g, "Largest g");
  table->add_option("--routes", raw.routes, "closed, coeff_form, schubert, genfun, lagrange")->delimiter(',');
  add_multipliers(table, raw);
  add_output_options(table, raw);

  auto* series = app.add_subcommand("series", "Coefficients of the generating series");
  series->add_option("--order", raw.order, "Highest power of w");
  series->add_option("--routes", raw.routes, "genfun, lagrange")->delimiter(',');
  add_output_options(series, raw);

  auto* verify = app.add_subcommand("verify", "Run the exact verification suites");
  verify->add_option("--suite", raw.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "covers", "weierstrass", "identities", "schubert"}));
  verify->add_option("--max-g", raw.max_g, "Largest g for the identity and Schubert loops");
  add_output_options(verify, raw);

  auto* schub = app.add_subcommand("schubert", "Intersection numbers on G(2,2g+2)");
  schub->add_option("--g", raw.max_g, "Genus g")->required();
  add_multipliers(schub, raw);
  add_output_options(schub, raw);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "altcat: " << e.what() << '\n';
    return kUsage;
  }

  const std::map<CLI::App*, Command> commands{
      {table, Command::table}, {series, Command::series}, {verify, Command::verify}, {schub, Command::schubert}};
  CLI::App* chosen = app.get_subcommands().front();
  const bool routes_given = chosen->get_option_no_throw("--routes") != nullptr &&
                            chosen->get_option("--routes")->count() > 0;

  try {
    if (chosen == verify && verify->get_option("--max-g")->count() == 0) raw.max_g = 30;
    const RunConfig config = to_config(commands.at(chosen), raw, routes_given);
    Emission emission;
    switch (config.command) {
      case Command::table: emission = cmd_table(config); break;
      case Command::series: emission = cmd_series(config); break;
      case Command::verify: emission = cmd_verify(config); break;
      case Command::schubert: emission = cmd_schubert(config); break;
    }
    const std::string text = render(emission, config.format);
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file) {
        err << "altcat: cannot open " << *config.output << " for writing\n";
        return kUsage;
      }
      file << text;
    } else {
      out << text;
    }
    return emission.status();
  } catch (const UsageError& e) {
    err << "altcat: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceCapError& e) {
    err << "altcat: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "altcat: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace altcat::cli
