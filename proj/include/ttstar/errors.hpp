#pragma once

#include <stdexcept>
#include <string>

namespace ttstar {

// Base class for everything the library throws on bad input.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed concrete syntax. Positions are 1-based.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

// Identifier that is neither a declared constant nor a resolvable variable.
struct UnknownConstant : ParseError {
  std::string name;
  UnknownConstant(const std::string& name_, int line_, int col_)
      : ParseError("unknown constant '" + name_ + "'", line_, col_),
        name(name_) {}
};

// Ill-typed construction; carries a rendering of the offending subterm.
struct TypeError : Error {
  std::string subconstruction;
  TypeError(const std::string& msg, std::string sub = {})
      : Error(sub.empty() ? msg : msg + " in '" + sub + "'"),
        subconstruction(std::move(sub)) {}
};

// A rule application whose schema or side conditions do not hold.
struct RuleError : Error {
  explicit RuleError(const std::string& msg) : Error(msg) {}
};

// A derivation with a failing node; `path` is a dotted child-index trail
// from the root, e.g. "1.2".
struct ProofError : Error {
  std::string path;
  ProofError(const std::string& path_, const std::string& msg)
      : Error("node " + path_ + ": " + msg), path(path_) {}
};

// An enumeration (tables, assignments) that exceeds the configured budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Cyclic or runaway re-entry of the execution constant.
struct EvalDepthExceeded : Error {
  explicit EvalDepthExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace ttstar
