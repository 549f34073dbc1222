// Acceptance gate: one PASS/FAIL line per criterion, with pinned limits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "syzlab/homological.hpp"
#include "syzlab/lab.hpp"

using namespace syzlab;
using fixtures::poly;
using fixtures::quotient;

namespace {

constexpr double kEtaTolerance = 0.05;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Ideal ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(R, g));
  return Ideal(R, ps);
}

RingPtr example_ring() { return fixtures::ring({"x", "y", "z", "w"}, {"x*y"}); }
RingPtr node() { return fixtures::ring({"x", "y"}, {"x*y"}); }

// Tor_i(R/(x), R/(y)) over k[x,y]/(xy): the complex k[x] <-x- k[x] <-0- k[x] <-x- ...
// has homology k in even degrees and 0 in odd degrees.
std::int64_t node_tor_length(int i) { return i % 2 == 0 ? 1 : 0; }

Outcome example_depths() {
  Outcome o;
  auto R = example_ring();
  Ideal a = ideal(R, {"y", "z", "w"});
  auto M = quotient(R, {"x"});
  int dr = depth(a, PresentedModule::free(R, {0})).depth;
  int dm = depth(a, M).depth;
  auto t = tor(M, quotient(R, {"y"}), 2);
  o.require(dr == 2, "depth(a,R)=" + std::to_string(dr));
  o.require(dm == 3, "depth(a,R/(x))=" + std::to_string(dm));
  o.require(t[1].length.has_value() && *t[1].length == 0, "length Tor_1 != 0");
  o.require(!t[2].is_zero(), "Tor_2 = 0");
  if (o.ok) o.detail = "depth(a,R)=2, depth(a,R/(x))=3, len Tor_1=0, Tor_2!=0";
  return o;
}

Outcome audit_equality() {
  Outcome o;
  auto R = example_ring();
  auto r = audit_depth_inequality(ideal(R, {"y", "z", "w"}), quotient(R, {"y"}), 1);
  o.require(r.verdict == Verdict::Holds, "verdict " + to_string(r.verdict));
  o.require(r.equality, "not an equality");
  o.require(r.module_depth && r.module_depth->depth == 3, "depth(a, Omega N) != 3");
  o.require(r.bound() == 3, "bound != 3");
  o.require(r.recheck(), "certificates do not recheck");
  if (o.ok) o.detail = "holds with equality 3 <= 3";
  return o;
}

Outcome node_betti() {
  Outcome o;
  auto R = node();
  auto totals = betti_table(minimal_resolution(PresentedModule::residue_field(R), 10)).totals();
  // Poincare series of k over a quadric hypersurface in two variables: (1+t)/(1-t).
  std::vector<std::int64_t> want{1};
  for (int i = 1; i <= 10; ++i) want.push_back(2);
  o.require(totals == want, "totals differ from 1,2,2,...,2");
  if (o.ok) o.detail = "totals 1,2,2,2,2,2,2,2,2,2,2";
  return o;
}

Outcome eta_fixture() {
  Outcome o;
  auto R = node();
  auto est = eta_estimate(quotient(R, {"x"}), quotient(R, {"y"}), 100);
  o.require(est.defined && est.exact, "no exact value");
  o.require(est.exact_value == Rational::make(1, 2), "exact value " + est.value_text());
  o.require(est.period == 2, "period not 2");
  o.require(est.lengths.size() == 101, "wrong number of Tor lengths");
  std::int64_t sum = 0;
  for (int i = 0; i <= 100 && i < static_cast<int>(est.lengths.size()); ++i) {
    bool match = est.lengths[i] && *est.lengths[i] == node_tor_length(i);
    o.require(match, "length Tor_" + std::to_string(i));
    if (!match) break;
    sum += (i % 2 == 0 ? 1 : -1) * node_tor_length(i);
  }
  // raw partial sum at n = 100, from the hand-derived lengths
  double raw = static_cast<double>(sum) / 100.0;
  o.require(std::abs(est.last_estimate() - raw) < 1e-12, "estimate disagrees with the partial sum");
  o.require(std::abs(est.last_estimate() - 0.5) <= kEtaTolerance, "raw estimate off by more than 0.05");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "exact 1/2, raw S_100/100 = %.4f", est.last_estimate());
    o.detail = buf;
  }
  return o;
}

Outcome splitting_forms() {
  Outcome o;
  auto R = node();
  auto N = quotient(R, {"x"});
  RegularSequence x;
  x.elements.push_back(poly(R, "x+y"));
  for (auto form : {SplittingForm::Lemma42, SplittingForm::Cor44}) {
    auto r = verify_cut_syzygy_splitting(N, 1, x, form);
    o.require(r.verdict() && r.comparison.betti_equal && r.comparison.hilbert_equal, to_string(form) + " not equivalent");
    o.require(r.recheck(), to_string(form) + " does not recheck");
  }
  auto p = verify_cut_syzygy_splitting(N, 1, x, SplittingForm::Prop28);
  o.require(p.verdict() && p.recheck(), "prop28 not reconciled");
  o.require(p.free_part == std::vector<std::pair<int, std::int64_t>>{{1, 1}}, "free part is not R(-1)");
  // HS(right) - HS(left) = HS(R(-1)), degree by degree
  auto shifted = hilbert_function(PresentedModule::free(R, {1}), 12);
  for (int d = 0; d <= 12; ++d) {
    if (p.right.series.value(d) - p.left.series.value(d) != shifted.series.value(d)) {
      o.require(false, "series difference at degree " + std::to_string(d));
      break;
    }
  }
  if (o.ok) o.detail = "lemma42, cor44, prop28 equivalent; free part R(-1)";
  return o;
}

Outcome period_one() {
  Outcome o;
  auto R = node();
  auto N = direct_sum(quotient(R, {"x"}), quotient(R, {"y"}));
  auto per = detect_periodicity(N, 10);
  o.require(per.period == 1, "period not 1");
  auto est = eta_estimate(N, quotient(R, {"x"}), 100);
  o.require(est.start == 1, "start index f != 1");
  o.require(est.defined, "eta undefined");
  o.require(std::abs(est.value) <= kEtaTolerance, "eta not within 0.05 of 0");
  o.require(std::abs(est.last_estimate()) <= kEtaTolerance, "raw estimate not within 0.05 of 0");
  if (o.ok) o.detail = "period 1 (twist " + std::to_string(per.twist) + "), f = 1, eta = " + est.value_text();
  return o;
}

// The property suites live in the unit test binaries; each is run by name.
Outcome property_suites() {
  struct Suite {
    const char* label;
    const char* binary;
    const char* test_case;
  };
  const std::vector<Suite> suites{
      {"a", SYZLAB_GROEBNER_TEST, "membership agrees with the linear-algebra oracle"},
      {"b", SYZLAB_HOMOLOGICAL_TEST, "depth agrees with Koszul homology on random ideals"},
      {"c", SYZLAB_RESOLUTION_TEST, "resolutions are minimal complexes and exact in low degrees"},
      {"d", SYZLAB_RESOLUTION_TEST, "Hilbert series is additive on syzygy sequences"},
      {"e", SYZLAB_HOMOLOGICAL_TEST, "regular sequences drop depth by their length"},
      {"f", SYZLAB_HOMOLOGICAL_TEST, "Tor is balanced"},
      {"g", SYZLAB_HOMOLOGICAL_TEST, "finite projective dimension modules satisfy the depth bound"},
      {"g", SYZLAB_LAB_TEST, "finite projective dimension over hypersurfaces: rigid and depth bounded"},
  };
  Outcome o;
  std::string passed;
  for (const auto& s : suites) {
    // An unmatched filter also exits 0, so the summary must show one passing case.
    std::string cmd = std::string("\"") + s.binary + "\" --test-case=\"" + s.test_case + "\" 2>&1";
    std::string out;
    int rc = -1;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
      char buf[512];
      while (std::fgets(buf, sizeof buf, pipe)) out += buf;
      rc = pclose(pipe);
    }
    static const std::regex summary(R"(test cases:\s*(\d+)\s*\|\s*(\d+) passed\s*\|\s*(\d+) failed)");
    std::smatch m;
    bool ran = std::regex_search(out, m, summary) && m[1] == "1" && m[2] == "1" && m[3] == "0";
    if (rc != 0 || !ran) {
      o.require(false, std::string("(") + s.label + ") " + s.test_case);
    } else if (passed.find(s.label) == std::string::npos) {
      passed += passed.empty() ? s.label : std::string(",") + s.label;
    }
  }
  if (o.ok) o.detail = "suites " + passed + " pass";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "depths and Tor over k[x,y,z,w]/(xy)", 10, example_depths},
      {2, "depth inequality audit, n = 1", 10, audit_equality},
      {3, "Betti totals of k over k[x,y]/(xy)", 5, node_betti},
      {4, "eta(R/(x), R/(y)) at bound 100", 30, eta_fixture},
      {5, "splitting verifiers on k[x,y]/(xy), N = R/(x)", 10, splitting_forms},
      {6, "period one forces eta zero", 30, period_one},
      {7, "property suites (a)-(g)", 300, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_s;
    bool pass = o.ok && in_time;
    if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
    std::printf("criterion %d: %s  %s  [%.2fs / %.0fs]  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
