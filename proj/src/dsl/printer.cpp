#include "syzlab/dsl.hpp"

namespace syzlab::dsl {

namespace {

std::string join(const std::vector<Expr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_expr(items[i]);
  }
  return out;
}

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Poly: return e.text;
    case ExprKind::Call: return e.text + "(" + join(e.args) + ")";
    case ExprKind::IdealLit: return "(" + join(e.args) + ")";
    case ExprKind::List: return "[" + join(e.args) + "]";
    case ExprKind::Coker: {
      std::string out = "coker " + print_expr(e.args.at(0));
      if (e.twists) {
        out += " twists [";
        for (std::size_t i = 0; i < e.twists->size(); ++i) {
          if (i > 0) out += ", ";
          out += std::to_string((*e.twists)[i]);
        }
        out += "]";
      }
      return out;
    }
  }
  return "";
}

std::string print_stmt(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Ring: {
      std::string out = "ring " + s.name + " = GF(" + std::to_string(s.prime) + ")[";
      for (std::size_t i = 0; i < s.variables.size(); ++i) {
        if (i > 0) out += ", ";
        out += s.variables[i];
      }
      out += "]";
      if (!s.relations.empty()) out += "/(" + join(s.relations) + ")";
      return out + ";";
    }
    case StmtKind::Ideal: return "ideal " + s.name + " = " + print_expr(s.value) + ";";
    case StmtKind::Module: return "module " + s.name + " = " + print_expr(s.value) + ";";
    case StmtKind::Let: return "let " + s.name + " = " + print_expr(s.value) + ";";
    case StmtKind::Command: return print_expr(s.value) + ";";
  }
  return "";
}

std::string print_session(const SessionAST& ast) {
  std::string out;
  for (const auto& s : ast.statements) out += print_stmt(s) + "\n";
  return out;
}

std::uint64_t session_hash(const SessionAST& ast) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : print_session(ast)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace syzlab::dsl
