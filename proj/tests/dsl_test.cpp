#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "syzlab/dsl.hpp"
#include "syzlab/homological.hpp"

using namespace syzlab;
using namespace syzlab::dsl;

namespace {

namespace fs = std::filesystem;

std::vector<fs::path> session_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(SYZLAB_SESSION_DIR)) {
    if (e.path().extension() == ".syz") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Report> run(const std::string& text, SessionConfig config = {}) {
  return execute_session(parse_session(text), config);
}

std::string parse_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("syzlab-dsl-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

const char* kExample =
    "ring R = GF(32003)[x,y,z,w]/(x*y);\n"
    "ideal a = (y, z, w);\n"
    "module M = coker [[x]];\n"
    "module N = coker [[y]];\n"
    "depth(a, R);\n"
    "depth(a, M);\n"
    "tor(M, N, 4);\n";

// Random sessions for the round-trip property.
class SessionGen {
 public:
  explicit SessionGen(std::uint64_t seed) : rng_(seed) {}

  std::string session() {
    vars_ = {"x", "y", "z"};
    vars_.resize(pick(1, 3));
    modules_.clear();
    ideals_.clear();
    std::string out = "ring R = GF(" + std::to_string(primes()[pick(0, 3)]) + ")[";
    for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? "," : "") + vars_[i];
    out += "]";
    if (pick(0, 1)) out += "/(" + monomial() + ")";
    out += ";\n";
    int n = pick(1, 8);
    for (int i = 0; i < n; ++i) out += statement(i);
    return out;
  }

 private:
  static const std::vector<int>& primes() {
    static const std::vector<int> p{2, 3, 101, 32003};
    return p;
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  const std::string& var() { return vars_[static_cast<std::size_t>(pick(0, static_cast<int>(vars_.size()) - 1))]; }

  std::string monomial() {
    std::string m = var();
    if (pick(0, 2) == 0) m += "^" + std::to_string(pick(2, 4));
    if (pick(0, 1)) m += "*" + var();
    return m;
  }
  std::string term() {
    switch (pick(0, 4)) {
      case 0: return std::to_string(pick(2, 9)) + "*" + monomial();
      case 1: return "(" + var() + " + " + var() + ")^" + std::to_string(pick(1, 3));
      case 2: return "(" + var() + " - " + monomial() + ")";
      default: return monomial();
    }
  }
  std::string poly() {
    std::string p = pick(0, 5) == 0 ? "-" + term() : term();
    int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) p += (pick(0, 1) ? " + " : " - ") + term();
    return p;
  }
  std::string module_expr() {
    if (!modules_.empty() && pick(0, 2) == 0) return modules_[static_cast<std::size_t>(pick(0, static_cast<int>(modules_.size()) - 1))];
    switch (pick(0, 4)) {
      case 0: return "k";
      case 1: return "R";
      case 2: return "syzygy(k, " + std::to_string(pick(0, 3)) + ")";
      case 3: return "twist(k, " + std::to_string(pick(-3, 3)) + ")";
      default: return "sum(k, R)";
    }
  }
  std::string ideal_expr(bool allow_name = true) {
    if (allow_name && !ideals_.empty() && pick(0, 1)) return ideals_.back();
    std::string out = "(" + poly();
    int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) out += ", " + poly();
    return out + ")";
  }
  std::string statement(int i) {
    std::string name = "V" + std::to_string(i);
    switch (pick(0, 6)) {
      case 0: {
        std::string row = "[" + var() + "]";
        std::string tw = pick(0, 1) ? " twists [" + std::to_string(pick(-2, 2)) + ", " + std::to_string(pick(-2, 2)) + "]" : "";
        modules_.push_back(name);
        return "module " + name + " = coker [" + row + ", [" + monomial() + "]]" + tw + ";\n";
      }
      case 1: {
        // declarations take a literal; names are aliased with let
        std::string value = ideal_expr(false);
        ideals_.push_back(name);
        return "ideal " + name + " = " + value + ";\n";
      }
      case 2: {
        std::string value = "quotient(" + ideal_expr() + ")";
        modules_.push_back(name);
        return "let " + name + " = " + value + ";\n";
      }
      case 3: return "depth(" + ideal_expr() + ", " + module_expr() + ");\n";
      case 4: return "betti(resolve(" + module_expr() + ", " + std::to_string(pick(0, 5)) + "));\n";
      case 5: return "tor(" + module_expr() + ", " + module_expr() + ");\n";
      default: return "verify_splitting(" + module_expr() + ", 1, [" + poly() + "], cor44);\n";
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
  std::vector<std::string> modules_;
  std::vector<std::string> ideals_;
};

}  // namespace

TEST_CASE("parser: three statements") {
  auto ast = parse_session("ring R = GF(32003)[x,y]/(x*y); module M = coker [[x]]; depth((x+y), M);");
  REQUIRE(ast.statements.size() == 3);
  CHECK(ast.statements[0].kind == StmtKind::Ring);
  CHECK(ast.statements[0].prime == 32003);
  CHECK(ast.statements[0].variables == std::vector<std::string>{"x", "y"});
  CHECK(ast.statements[1].kind == StmtKind::Module);
  CHECK(ast.statements[2].kind == StmtKind::Command);
  CHECK(ast.statements[2].value.text == "depth");
  CHECK(ast.statements[2].value.args[0].kind == ExprKind::IdealLit);
}

TEST_CASE("parser: scoping and prime errors carry positions") {
  CHECK(parse_error("module M = coker [[x]];") == "line 1, column 1: no active ring");
  CHECK(parse_error("ring R = GF(4)[x];") == "line 1, column 13: 4 is not prime");
  CHECK(parse_error("ring R = GF(5)[x];\n  betti(N);") == "line 2, column 9: undeclared identifier 'N'");
  CHECK(parse_error("ring R = GF(5)[x];\ndepth((q), R);") == "line 2, column 8: undeclared identifier 'q'");
  CHECK(parse_error("ring R = GF(5)[x];\ndepth((x + q^2), R);").find("'q' is not a variable of ring R") != std::string::npos);
  CHECK(parse_error("ring R = GF(5)[x];\nfrobnicate(R);").find("unknown command 'frobnicate'") != std::string::npos);
  CHECK(parse_error("ring R = GF(5)[x,x];").find("declared twice") != std::string::npos);

  std::string wrong_ring = parse_error("ring R = GF(5)[x]; module M = coker [[x]];\nring S = GF(5)[x];\nbetti(M);");
  CHECK(wrong_ring.find("line 3") == 0);
  CHECK(wrong_ring.find("M belongs to ring R, not the active ring S") != std::string::npos);

  try {
    parse_session("ring R = GF(5)[x,y];\ndepth((x) k);");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 11);
    CHECK(e.expected() == std::vector<std::string>{"','", "')'"});
  }
  CHECK_THROWS_AS(parse_session("ring R = GF(5)[x]"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = GF(5)[x]; betti(k) $"), ParseError);
}

TEST_CASE("parser: parenthesized polynomials versus ideal literals") {
  auto ast = parse_session("ring R = GF(7)[x,y]; depth((x+y)^2, R); depth((x, y^2), R); depth((x) * y, R);");
  CHECK(ast.statements[1].value.args[0].kind == ExprKind::Poly);
  CHECK(ast.statements[2].value.args[0].kind == ExprKind::IdealLit);
  CHECK(ast.statements[2].value.args[0].args.size() == 2);
  CHECK(ast.statements[3].value.args[0].kind == ExprKind::Poly);
}

TEST_CASE("executor: example session reproduces depths and Tor vanishing") {
  auto reports = run(kExample);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].result["depth"] == 2);
  CHECK(reports[1].result["depth"] == 3);
  const Json& mods = reports[2].result["modules"];
  REQUIRE(mods.size() == 5);
  CHECK(mods[1]["length"] == 0);
  CHECK(mods[1]["zero"] == true);
  CHECK(mods[2]["zero"] == false);

  // Same numbers straight from the engine.
  RingPtr R = fixtures::ring({"x", "y", "z", "w"}, {"x*y"});
  Ideal a(R, {fixtures::poly(R, "y"), fixtures::poly(R, "z"), fixtures::poly(R, "w")});
  auto M = fixtures::quotient(R, {"x"});
  CHECK(depth(a, M).depth == reports[1].result["depth"].get<int>());
  auto direct = tor(M, fixtures::quotient(R, {"y"}), 4);
  for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i].is_zero() == mods[i]["zero"].get<bool>());
}

TEST_CASE("executor: Betti totals of k over the node") {
  auto reports = run("ring R = GF(32003)[x,y]/(x*y);\nbetti(resolve(k,10));");
  REQUIRE(reports.size() == 1);
  std::vector<std::int64_t> want{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2};
  CHECK(reports[0].result["betti"]["totals"].get<std::vector<std::int64_t>>() == want);
}

TEST_CASE("executor: empty session") {
  CHECK(run("").empty());
  CHECK(run("  # nothing here\n// or here\n").empty());
  CHECK(render_all({}, Format::Json) == "[]\n");
}

TEST_CASE("executor: coker twist inference") {
  auto r = run("ring R = GF(5)[x,y];\ntwist(coker [[x, y^2]], 0);\ntwist(coker [[x, 0], [0, y^3]], 0);\n"
               "twist(coker [[x], [y]] twists [2, 2], 0);");
  CHECK(r[0].result["generators"] == Json::array({0}));
  CHECK(r[0].result["relation_degrees"] == Json::array({1, 2}));
  // separate blocks each start at degree 0
  CHECK(r[1].result["generators"] == Json::array({0, 0}));
  CHECK(r[2].result["generators"] == Json::array({2, 2}));

  CHECK_THROWS_AS(run("ring R = GF(5)[x,y];\nmodule M = coker [[x, y^2], [y, x]];"), UsageError);
  CHECK_THROWS_AS(run("ring R = GF(5)[x,y];\nmodule M = coker [[x + y^2]];"), UsageError);
  CHECK_THROWS_AS(run("ring R = GF(5)[x,y];\nmodule M = coker [[x], [y]] twists [0];"), UsageError);
}

TEST_CASE("executor: inferred twists match the explicit minimal assignment") {
  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 25; ++trial) {
    int nr = pick(1, 3), nc = pick(1, 3);
    std::vector<int> rd(nr), cd(nc);
    for (auto& d : rd) d = pick(0, 2);
    rd[static_cast<std::size_t>(pick(0, nr - 1))] = 0;
    for (auto& d : cd) d = 3 + pick(0, 1);
    std::string matrix = "[";
    for (int i = 0; i < nr; ++i) {
      matrix += i ? ", [" : "[";
      for (int j = 0; j < nc; ++j) {
        int deg = cd[j] - rd[i];
        std::string entry;
        // the first column stays nonzero so every row sits in one block
        if (j > 0 && pick(0, 3) == 0) {
          entry = "0";
        } else {
          for (int t = 0; t < deg; ++t) entry += (t ? "*" : "") + vars[static_cast<std::size_t>(pick(0, 2))];
        }
        matrix += (j ? ", " : "") + entry;
      }
      matrix += "]";
    }
    matrix += "]";
    std::string twists = "[";
    for (int i = 0; i < nr; ++i) twists += (i ? ", " : "") + std::to_string(rd[i]);
    twists += "]";
    auto inferred = run("ring R = GF(101)[x,y,z];\ntwist(coker " + matrix + ", 0);");
    auto explicit_ = run("ring R = GF(101)[x,y,z];\ntwist(coker " + matrix + " twists " + twists + ", 0);");
    CAPTURE(matrix);
    CHECK(inferred[0].result == explicit_[0].result);
  }
}

TEST_CASE("executor: errors keep their type and gain the command position") {
  try {
    run("ring R = GF(5)[x,y];\n\nverify_splitting(coker [[x]], 1, [x], lemma42);");
    FAIL("expected a usage error");
  } catch (const ParseError&) {
    FAIL("not a parse error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("line 3, column 1: ") == 0);
    CHECK(std::string(e.what()).find("hypothesis failed") != std::string::npos);
  }
  SessionConfig tight;
  tight.degree_cap = 6;
  CHECK_THROWS_AS(run("ring R = GF(5)[x,y,z];\nideal I = (x^5+y^5+z^5, x^4*y+z^5, x*y*z^3+y^5);\n"
                      "betti(resolve(quotient(I)));",
                      tight),
                  ResourceError);
  CHECK_THROWS_AS(run("ring R = GF(5)[x];\nresolve(x);"), UsageError);
  CHECK_THROWS_AS(run("ring R = GF(5)[x];\nresolve(k, 1, 2, 3);"), UsageError);
  SessionConfig bad;
  bad.order = "revlex";
  CHECK_THROWS_AS(run("", bad), UsageError);
}

TEST_CASE("executor: prime override and provenance") {
  SessionConfig c;
  c.prime = 7;
  c.seed = 99;
  auto r = run("ring R = GF(32003)[x,y];\nbetti(resolve(k));", c);
  CHECK(r[0].provenance.prime == 7);
  CHECK(r[0].provenance.seed == 99);
  CHECK(r[0].provenance.order == "grevlex");
  // without a seed the session text decides it
  auto a = run(kExample), b = run(kExample);
  CHECK(a[0].provenance.seed == session_hash(parse_session(kExample)));
  CHECK(a[0].provenance.seed == b[0].provenance.seed);
}

TEST_CASE("render: Betti grid rows and totals") {
  auto r = run("ring S = GF(32003)[x,y];\nbetti(resolve(k, 10));");
  std::string text = render(r[0], Format::Text);
  CHECK(text.find("\n0: 1 2 1\n") != std::string::npos);
  CHECK(text.find("\ntotal: 1 2 1\n") != std::string::npos);
  CHECK(render(r[0], Format::Csv) == "i,j,beta\n0,0,1\n1,1,2\n2,2,1\n");

  auto twisted = run("ring S = GF(32003)[x,y];\nbetti(resolve(quotient((x^2, y^2))));");
  std::string grid = render(twisted[0], Format::Text);
  CHECK(grid.find("0: 1 . .\n1: . 2 .\n2: . . 1\ntotal: 1 2 1\n") != std::string::npos);
}

TEST_CASE("render: depth and eta JSON") {
  auto r = run(kExample);
  CHECK(r[0].result.dump() == R"({"depth":2,"witness_index":2,"vanishing":[0,1]})");

  auto e = run("ring R = GF(32003)[x,y]/(x*y);\neta(coker [[x]], coker [[y]]);");
  Json head;
  for (const char* key : {"value", "exact", "period"}) head[key] = e[0].result[key];
  CHECK(head.dump() == R"({"value":"1/2","exact":true,"period":2})");
  // the result object itself leads with the same keys
  CHECK(e[0].result.dump().rfind(R"({"value":"1/2","exact":true,"period":2,)", 0) == 0);
}

TEST_CASE("render: CSV flattens non-table results") {
  auto r = run(kExample);
  std::string csv = render(r[0], Format::Csv);
  CHECK(csv == "path,value\n/depth,2\n/witness_index,2\n/vanishing/0,0\n/vanishing/1,1\n");
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("reports: JSON round trip") {
  for (const auto& file : session_files()) {
    CAPTURE(file);
    for (const auto& r : run(slurp(file))) {
      CHECK(Report::from_json(r.to_json()) == r);
      Report back = Report::from_json(Json::parse(r.to_json(true).dump()));
      CHECK(back == r);
      CHECK(back.cache_hits == r.cache_hits);
      CHECK(back.to_json(true).dump() == r.to_json(true).dump());
      CHECK_FALSE(r.to_json().contains("wall_time_ms"));
    }
  }
}

TEST_CASE("round trip: printing then parsing the fixture sessions") {
  auto files = session_files();
  REQUIRE(files.size() >= 5);
  for (const auto& file : files) {
    CAPTURE(file);
    SessionAST ast = parse_session(slurp(file));
    std::string printed = print_session(ast);
    SessionAST again = parse_session(printed);
    CHECK(again == ast);
    CHECK(print_session(again) == printed);
  }
}

TEST_CASE("round trip: random sessions") {
  SessionGen gen(20240611);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = gen.session();
    CAPTURE(text);
    SessionAST ast = parse_session(text);
    std::string printed = print_session(ast);
    CHECK(parse_session(printed) == ast);
    CHECK(print_session(parse_session(printed)) == printed);
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("determinism: identical sessions give identical JSON") {
  for (const auto& file : session_files()) {
    CAPTURE(file);
    std::string text = slurp(file);
    CHECK(render_all(run(text), Format::Json) == render_all(run(text), Format::Json));
    CHECK(render_all(run(text), Format::Text) == render_all(run(text), Format::Text));
  }
}

TEST_CASE("cache transparency: on, off and on disk agree") {
  fs::path dir = scratch_dir("cache");
  std::uint64_t warm_hits = 0;
  for (const auto& file : session_files()) {
    CAPTURE(file);
    std::string text = slurp(file);
    SessionConfig off;
    off.use_cache = false;
    SessionConfig disk;
    disk.cache_dir = dir;
    std::string base = render_all(run(text, off), Format::Json);
    CHECK(render_all(run(text), Format::Json) == base);
    CHECK(render_all(run(text, disk), Format::Json) == base);
    auto warm = run(text, disk);
    for (const auto& r : warm) warm_hits += r.cache_hits;
    CHECK(render_all(warm, Format::Json) == base);
  }
  CHECK(warm_hits > 0);
  fs::remove_all(dir);
}
