#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "syzlab/errors.hpp"

namespace syzlab::dsl {

struct Span {
  int line = 1;
  int column = 1;
};

std::string format_span(const Span& s);

/// Syntax or scoping error; the message starts with "line L, column C: ".
class ParseError : public UsageError {
 public:
  ParseError(Span span, const std::string& message, std::vector<std::string> expected = {});

  const Span& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
};

enum class ExprKind {
  /// Polynomial text; a lone identifier may also name a binding or symbol.
  Poly,
  Call,
  IdealLit,
  List,
  /// coker <matrix> [twists [..]]; args[0] is the matrix list.
  Coker,
};

struct Expr {
  ExprKind kind = ExprKind::Poly;
  /// Poly: normalized text. Call: function name.
  std::string text;
  std::vector<Expr> args;
  std::optional<std::vector<int>> twists;
  /// Identifiers appearing in a Poly.
  std::vector<std::string> identifiers;
  Span span;

  bool is_identifier() const { return kind == ExprKind::Poly && identifiers.size() == 1 && identifiers[0] == text; }
  /// Structural equality; spans are ignored.
  bool operator==(const Expr& other) const;
};

enum class StmtKind { Ring, Ideal, Module, Let, Command };

struct Stmt {
  StmtKind kind = StmtKind::Command;
  std::string name;
  Span span;
  // ring
  std::uint32_t prime = 0;
  std::vector<std::string> variables;
  std::vector<Expr> relations;
  // ideal / module / let / command
  Expr value;

  bool operator==(const Stmt& other) const;
};

struct SessionAST {
  std::vector<Stmt> statements;

  bool operator==(const SessionAST& other) const { return statements == other.statements; }
};

/// Parses and scope-checks a session.
SessionAST parse_session(std::string_view text);

std::string print_expr(const Expr& e);
std::string print_stmt(const Stmt& s);
/// One statement per line; parse_session(print_session(a)) == a.
std::string print_session(const SessionAST& ast);

/// FNV-1a hash of the canonical session text.
std::uint64_t session_hash(const SessionAST& ast);

struct SessionConfig {
  /// Overrides the characteristic of every declared ring when set.
  std::optional<std::uint32_t> prime;
  std::string order = "grevlex";
  int res_bound = 10;
  int hom_bound = 10;
  int degree_bound = 12;
  int degree_cap = 40;
  int eta_bound = 100;
  /// Regular-sequence search seed; derived from the session text when unset.
  std::optional<std::uint64_t> seed;
  bool use_cache = true;
  std::optional<std::filesystem::path> cache_dir;
};

struct Provenance {
  std::uint32_t prime = 0;
  std::string order;
  int res_bound = 0;
  int hom_bound = 0;
  int degree_bound = 0;
  int degree_cap = 0;
  int eta_bound = 0;
  std::uint64_t seed = 0;

  bool operator==(const Provenance&) const = default;
};

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  std::string kind;
  Json result;
  Provenance provenance;
  Span span;
  /// Resolution-cache hits during this command.
  std::uint64_t cache_hits = 0;
  double wall_time_ms = 0;

  /// Timing and cache counters vary between runs and are left out unless asked.
  Json to_json(bool include_volatile = false) const;
  static Report from_json(const Json& j);
  bool operator==(const Report& other) const;
};

/// Runs the statements in order. Engine errors are rethrown with the
/// command's position prefixed, keeping their type.
std::vector<Report> execute_session(const SessionAST& ast, const SessionConfig& config = {});

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(const std::string& name);
std::string render(const Report& report, Format format);
/// JSON output leaves out timing and cache counters unless include_volatile.
std::string render_all(const std::vector<Report>& reports, Format format, bool include_volatile = false);

}  // namespace syzlab::dsl
