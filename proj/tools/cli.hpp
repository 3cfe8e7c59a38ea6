#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "chartherm/asymmetry.hpp"
#include "chartherm/genus.hpp"

namespace chartherm::cli {

enum class Command { kSeries, kGenus, kThermo, kDensity, kVerify, kAsymmetry, kIndexIntegral };

/// kText is the human form used by series and genus when no format is given.
enum class Format { kText, kCsv, kJson };

/// `a:b:n`, n points from a to b inclusive; log spacing needs a, b > 0.
struct Grid {
  double first = 0.0;
  double last = 0.0;
  int count = 1;
  bool logspace = false;
};

/// Throws UsageError on malformed text or n < 1.
Grid parse_grid(const std::string& text, bool logspace);
std::vector<double> grid_points(const Grid& grid);

enum class VerifySuite { kAll, kBetaUL, kPartitionAHat, kLAHatCosh, kAsymmetry, kTraceFunctorial };

struct RunConfig {
  Command command = Command::kSeries;
  Format format = Format::kText;
  std::optional<std::filesystem::path> output;

  // series, genus
  GenusKind kind = GenusKind::kL;
  int order = kDefaultSeriesOrder;
  int degree = 3;
  std::optional<int> num_roots;
  std::optional<std::filesystem::path> manifold;
  TwistPower twist = TwistPower::kHalfRealDimension;

  // thermo, verify, asymmetry
  Grid x_grid{0.01, 20.0, 200, false};
  double hbar_omega = 1.0;
  std::optional<std::filesystem::path> spectrum;

  // density
  double x = 1.0;
  int levels = 10;
  Grid q_grid{-8.0, 8.0, 400, false};

  // verify
  VerifySuite suite = VerifySuite::kAll;
  int modes = 100000;

  // asymmetry, index-integral
  double beta = 1.0;
  double hbar = 1.0;
  ChNormalization normalization = ChNormalization::kPaper;
  double tol = 1e-8;
};

/// Bad flags or inputs; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv without the program name. On failure (or --help) returns
/// nullopt and sets exit_code: 0 for help, 2 for bad flags. Usage text goes
/// to `out` for help and `err` otherwise.
std::optional<RunConfig> parse_args(std::span<const std::string> args, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Runs one command. 0 on success, 1 on non-convergence or a failed verify,
/// 2 on invalid input. The artifact goes to config.output if set (relative
/// paths resolve against $CHARTHERM_OUTPUT_DIR), else to `out`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace chartherm::cli
