#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "theta/braid.hpp"
#include "theta/sl2.hpp"
#include "theta/theta_suite.hpp"

namespace theta::cli {

inline constexpr int kSchemaVersion = 1;

/// Syntax error in a word or matrix; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Word grammar: `s<i>` / `S<i>` generators and inverses, whitespace
/// separated; `( ... )^m` for integer powers (also `x^m` on a single letter);
/// `a b c` / `A B C` as s1 s2 s3 and inverses when strands == 4; `f<i>` /
/// `F<i>` as s<i> / S<i> when theta_aliases is set.
braid::BraidWord parse_word(std::string_view text, int strands,
                            bool theta_aliases = false);

/// `[[t1,t2],[t3,t4]]` with optional whitespace. Throws ParseError on bad
/// syntax and std::domain_error if the determinant is not 1.
sl2::UniMatrix2 parse_matrix(std::string_view text);

/// A set of experiment records emitted together.
struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::vector<suite::Report> experiments;

  suite::Status status() const;
  /// 0 unless some check failed, then 1.
  int exit_code() const;
  suite::Json to_json() const;
  std::string to_text() const;
};

enum class Format { Text, Json };

/// A validated command line.
struct Command {
  std::string verb;  // nf, eq, roots, theta-verify, theta-roots,
                     // hyperelliptic, separation, report
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> strands;
  int power = 2;
  long bound = 50;
  int m_max = 10;
  std::string engine = "symplectic";
  Format format = Format::Text;
  bool mod_center = false;
  std::vector<std::string> words;
  std::optional<std::string> matrix;
  std::optional<std::string> output;
};

/// Thrown by parse_command for invalid command lines.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates arguments (without the program name). Help requests
/// are reported as a Command with verb "help" and the text in words[0].
Command parse_command(const std::vector<std::string>& args);

/// Dispatches a validated command; returns the exit code.
int execute(const Command& command, std::ostream& out, std::ostream& err);

/// Runs one command line (without the program name). Exit codes: 0 when
/// every check passes (inconclusive allowed), 1 when any check fails, 2 on
/// usage errors. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace theta::cli
