#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace lue::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 2,
  kNumericalError = 3,
  kNonConvergence = 4,
};

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Manifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::string version;
  bool has_seed = false;
  unsigned long long seed = 0;
  std::string timestamp;  // ISO 8601 UTC; SOURCE_DATE_EPOCH when set
};

// Default worker count: LUE_THREADS if set and positive, else 1.
unsigned default_threads();

std::string format_double(double v);  // 17 significant digits
std::string csv_quote(const std::string& field);
void write_csv(std::ostream& out, const Manifest& manifest, const Table& table);
void write_json(std::ostream& out, const Manifest& manifest, const Table& table);
std::string manifest_json(const Manifest& manifest);

// Runs one command line (argv[0] excluded).  Results go to `out` unless
// --out names a file; diagnostics go to `err`.  Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lue::cli
