#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsets/cli/manifest.hpp"

namespace wsets::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Bad flags or parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  int exit_code = kPass;
  std::string output;  // ends with a newline
};

/// A file argument already read by the caller.
struct InputFile {
  std::string path;
  std::string contents;
};

struct ConstructArgs {
  std::string object;  // multiplicity | scaling-set | wavelet-set | sigma | coefficients
  int d = 2;
  int k = 3;
  Variant variant = Variant::base;
  bool printed_coefficients = false;
};
CommandResult cmd_construct(const ConstructArgs& a);

inline const std::vector<std::string> kAllChecks{"waveletset", "merrill",  "consistency",
                                                  "involutive", "unitary", "characterization"};

struct VerifyArgs {
  std::optional<InputFile> input;
  std::optional<int> d;
  std::optional<int> k;
  Variant variant = Variant::base;
  std::vector<std::string> checks;  // empty: every check the input supports
  bool printed_coefficients = false;
};
CommandResult cmd_verify(const VerifyArgs& a);

struct InterpolateArgs {
  std::optional<int> d;
  std::optional<int> k;
  std::optional<InputFile> w1;
  std::optional<InputFile> w2;
};
CommandResult cmd_interpolate(const InterpolateArgs& a);

CommandResult cmd_classify(const InputFile& input);

struct PlotArgs {
  InputFile input;
  long resolution = 512;
};
CommandResult cmd_plot(const PlotArgs& a);

struct ConvergeArgs {
  long steps = 8;
  bool json = false;
};
CommandResult cmd_converge(const ConvergeArgs& a);

struct GridArgs {
  std::vector<int> ds{2, 3, 4, 5};
  std::vector<int> ks{2, 3, 4, 5, 6};
  bool json = false;
};
CommandResult cmd_grid(const GridArgs& a);

/// Parses argv and runs one subcommand, writing to stdout/stderr.
int run(int argc, char** argv);

}  // namespace wsets::cli
