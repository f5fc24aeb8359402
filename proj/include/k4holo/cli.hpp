#ifndef K4HOLO_CLI_HPP
#define K4HOLO_CLI_HPP

#include "k4holo/errors.hpp"
#include "k4holo/toral.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace k4holo::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

enum class Format { json, markdown, plain };

struct CliConfig {
  std::string subcommand;
  Format format = Format::plain;
  int verbosity = 0;
  std::string output_path; // empty: stdout
  unsigned jobs = 1;
};

class UsageError : public Error {
public:
  UsageError(const std::string& message, std::string token)
      : Error(message + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

private:
  std::string token_;
};

/// Default modulus for specs without "m=": $K4HOLO_MODULUS, else 4.
int default_modulus();

/// Character syntax:
///   chi [m=M] [e1,e3,e4,e5,e6,e2]      exponents on alpha1,3,4,5,6 then alpha2
///   su6sp1 [m=M] d=[d1,...,d6] y=Y     diagonal element of SU(6) x Sp(1)
///   <label> | <group>/<label>          element of a builtin group, e.g. x4
/// Throws UsageError naming the offending token.
TorusCharacter parse_character(const std::string& spec, int modulus);

/// Splits "x1,x2" and repeated arguments into labels.
std::vector<std::string> split_labels(const std::vector<std::string>& args);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace k4holo::cli

#endif
