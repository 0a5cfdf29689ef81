#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tower::cli {

enum class Format { Plain, JsonLines };

inline constexpr unsigned kDefaultPrecision = 30;
inline constexpr unsigned kMaxPrecision = 200;

struct Options {
  unsigned precision = kDefaultPrecision;
  Format format = Format::Plain;
};

/// Throws PrecisionCap above kMaxPrecision.
void check_precision(unsigned precision);

/// Each command writes its report to `out` and returns the process exit code.
/// Library errors propagate as tower::Error.
int cmd_eval(const std::string& expression, const Options& options, std::ostream& out);
/// Exit code 2 when the operands cannot be told apart at the precision.
int cmd_cmp(const std::string& lhs, const std::string& rhs, const Options& options, std::ostream& out);
/// `path` of "-" reads the relation from `in`.
int cmd_relcheck(const std::string& path, const Options& options, std::istream& in, std::ostream& out);
/// `pair p q`, `unpair r`, `dyadic n`, `dyadic-index d`.
int cmd_enum(const std::string& what, const std::vector<std::string>& args, const Options& options, std::ostream& out);

}  // namespace tower::cli
