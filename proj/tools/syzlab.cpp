#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "syzlab/dsl.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw syzlab::UsageError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzlab: syzygies, resolutions and homological invariants over graded quotient rings"};
  app.require_subcommand(1);

  syzlab::dsl::SessionConfig config;
  std::string file;
  std::string json_path;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool timings = false;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;

  CLI::App* run = app.add_subcommand("run", "execute a session file ('-' reads stdin)");
  run->add_option("file", file, "session file")->required();
  auto* prime_opt = run->add_option("--prime", prime, "override the characteristic of every ring");
  run->add_option("--order", config.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  run->add_option("--res-bound", config.res_bound, "default resolution length")->check(CLI::NonNegativeNumber);
  run->add_option("--hom-bound", config.hom_bound, "default Tor/Ext index bound")->check(CLI::NonNegativeNumber);
  run->add_option("--degree-bound", config.degree_bound, "Hilbert function degree window")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--degree-cap", config.degree_cap, "Groebner degree cap")->check(CLI::NonNegativeNumber);
  run->add_option("--eta-bound", config.eta_bound, "default eta truncation")->check(CLI::NonNegativeNumber);
  auto* seed_opt = run->add_option("--seed", seed, "regular-sequence search seed");
  run->add_option("--json", json_path, "also write the JSON report list here");
  run->add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json", "csv"}));
  run->add_option("--cache-dir", cache_dir, "on-disk resolution cache");
  run->add_flag("--no-cache", no_cache, "disable the resolution cache");
  run->add_flag("--timings", timings, "add wall time and cache hits to JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (prime_opt->count() > 0) config.prime = prime;
  if (seed_opt->count() > 0) config.seed = seed;
  config.use_cache = !no_cache;
  if (!cache_dir.empty() && !no_cache) config.cache_dir = cache_dir;

  try {
    auto ast = syzlab::dsl::parse_session(read_input(file));
    auto reports = syzlab::dsl::execute_session(ast, config);
    std::cout << syzlab::dsl::render_all(reports, *syzlab::dsl::parse_format(format), timings);
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw syzlab::UsageError("cannot write " + json_path);
      out << syzlab::dsl::render_all(reports, syzlab::dsl::Format::Json, timings);
    }
    return 0;
  } catch (const syzlab::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const syzlab::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const syzlab::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
