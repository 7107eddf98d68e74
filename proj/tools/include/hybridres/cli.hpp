#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridres/errors.hpp"
#include "hybridres/ideal.hpp"
#include "hybridres/monomial_order.hpp"

namespace hybridres::cli {

enum ExitCode : int { kOk = 0, kParseOrIo = 2, kDomain = 3, kUsage = 64 };

class IoError : public Error {
 public:
  using Error::Error;
};

/// Parsed ideal file:
///
///   # comment
///   ring: x, y, z
///   order: negdegrevlex z,y,x     (optional; default local, declared order)
///   gen: x^5 + y^11
///   gen: z^9 + x^9
struct IdealFile {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::localDefault(1);
  Ideal ideal;
};

/// Throws ParseError with the file line and column.
IdealFile parseIdealFile(std::string_view text);
/// Throws IoError if the file cannot be read.
IdealFile loadIdealFile(const std::string& path);

/// "negdegrevlex" / "ds", "degrevlex" / "dp", "lex" / "lp", optionally
/// followed by a variable list from largest to smallest.
MonomialOrder parseOrdering(std::string_view text, const Ring& ring);

struct RunResult {
  int exitCode = kOk;
  std::string out;
  std::string err;
};

/// Runs one subcommand; `args` excludes the program name.
RunResult runCommand(const std::vector<std::string>& args);

/// Embedded fixture text of a demo ("ex61", "ex62").
std::string demoFixture(const std::string& name);
/// Full report for a demo; throws std::invalid_argument on unknown names.
std::string demoScenario(const std::string& name, bool json);

}  // namespace hybridres::cli
