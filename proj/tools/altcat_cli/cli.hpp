#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altcat/covers/check.hpp"
#include "altcat/exact/rational.hpp"
#include "altcat/sequence/routes.hpp"
#include "altcat/verify/suites.hpp"

namespace altcat::cli {

enum class Command { table, series, verify, schubert };
enum class Format { text, json, csv };

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResourceCap = 3 };

struct RunConfig {
  Command command = Command::table;
  unsigned max_g = 10;
  std::size_t order = 21;
  std::vector<Route> routes{Route::closed};
  Integer n4 = 16;
  Integer n5 = 16;
  Format format = Format::text;
  std::optional<std::string> output;
  Suite suite = Suite::all;
  unsigned schubert_cap = 12;
};

/// One emitted record. Table and schubert rows are keyed by g; series rows
/// by the power of w, with g attached at odd powers.
struct Row {
  std::optional<std::size_t> index;
  std::optional<unsigned> g;
  std::vector<std::pair<std::string, std::string>> values;
  bool agree = true;
};

struct Emission {
  std::string command;
  std::vector<std::string> header;
  std::vector<Row> rows;
  std::vector<covers::CheckResult> checks;

  /// 0 when every agreement flag and check holds, 1 otherwise.
  int status() const;
};

class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Emission cmd_table(const RunConfig& config);
Emission cmd_series(const RunConfig& config);
Emission cmd_verify(const RunConfig& config);
Emission cmd_schubert(const RunConfig& config);

std::string render(const Emission& emission, Format format);

/// Parses args (without the program name), runs the command and writes the
/// rendered result to `out` or to --output. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altcat::cli
