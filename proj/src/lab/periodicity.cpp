#include <cmath>

#include "lab_internal.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/lab.hpp"

namespace syzlab {

namespace {

bool same_ideal(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

bool shifted_betti_equal(const BettiTable& later, const BettiTable& earlier, int s) {
  if (later.entries.size() != earlier.entries.size()) return false;
  for (const auto& [key, beta] : earlier.entries) {
    if (later.at(key.first, key.second + s) != beta) return false;
  }
  return true;
}

// Least-squares polynomial fit of the given degree; returns max |error|.
double fit_residual(const std::vector<double>& xs, const std::vector<double>& ys, int degree) {
  int k = degree + 1;
  std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t p = 0; p < xs.size(); ++p) {
    std::vector<double> pw(2 * k, 1.0);
    for (int e = 1; e < 2 * k; ++e) pw[e] = pw[e - 1] * xs[p];
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) a[r][c] += pw[r + c];
      a[r][k] += pw[r] * ys[p];
    }
  }
  for (int c = 0; c < k; ++c) {
    int piv = c;
    for (int r = c + 1; r < k; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    if (std::abs(a[c][c]) < 1e-12) return INFINITY;
    for (int r = 0; r < k; ++r) {
      if (r == c) continue;
      double q = a[r][c] / a[c][c];
      for (int cc = c; cc <= k; ++cc) a[r][cc] -= q * a[c][cc];
    }
  }
  double worst = 0;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    double v = 0, pw = 1;
    for (int e = 0; e < k; ++e) {
      v += a[e][k] / a[e][e] * pw;
      pw *= xs[p];
    }
    worst = std::max(worst, std::abs(v - ys[p]));
  }
  return worst;
}

}  // namespace

PeriodicityReport detect_periodicity(const PresentedModule& n, int bound) {
  if (bound < 4) throw UsageError("periodicity bound must be at least 4");
  PeriodicityReport r;
  r.bound = bound;
  Resolution res = minimal_resolution(n, bound + 1);
  if (res.complete()) {
    r.projective_dimension = res.projective_dimension();
    r.note = "finite projective dimension " + std::to_string(*r.projective_dimension) +
             ": syzygies vanish, no periodicity";
    return r;
  }

  std::vector<ModuleSignature> sig;
  std::vector<int> lowest;
  for (int i = 0; i <= bound; ++i) {
    sig.push_back(lab::syzygy_signature(res, i, kDefaultHilbertBound));
    const auto& degs = res.free_degrees(i);
    lowest.push_back(*std::min_element(degs.begin(), degs.end()));
  }
  std::vector<std::optional<Ideal>> ann(bound + 1);
  auto annihilator_of = [&](int i) -> const Ideal& {
    if (!ann[i]) ann[i] = annihilator(lab::syzygy_from(res, i));
    return *ann[i];
  };

  int window = std::max(4, bound / 3);
  for (int d = 1; 2 * d <= bound; ++d) {
    int s = lowest[bound] - lowest[bound - d];
    auto matches = [&](int i) {
      return shifted_betti_equal(sig[i + d].presentation, sig[i].presentation, s) &&
             sig[i + d].series == sig[i].series.shifted(s) && same_ideal(annihilator_of(i + d), annihilator_of(i));
    };
    int start = bound - d + 1;
    while (start > 0 && matches(start - 1)) --start;
    int matched = bound - d - start + 1;
    if (matched < std::min(window, bound - d + 1)) continue;
    r.period = d;
    r.start = start;
    r.twist = -s;
    return r;
  }
  r.note = "no period up to " + std::to_string(bound / 2);
  return r;
}

ComplexityEstimate complexity_estimate(const PresentedModule& m, int bound) {
  if (bound < 6) throw UsageError("complexity bound must be at least 6");
  Resolution res = minimal_resolution(m, bound);
  ComplexityEstimate c;
  c.totals = betti_table(res).totals();
  if (res.complete()) return c;
  std::vector<double> xs, ys;
  for (int i = bound / 2; i <= bound; ++i) {
    xs.push_back(i);
    ys.push_back(static_cast<double>(c.totals[i]));
  }
  int best = 0;
  double best_residual = INFINITY;
  for (int degree = 0; degree <= 4 && degree + 1 < static_cast<int>(xs.size()); ++degree) {
    double residual = fit_residual(xs, ys, degree);
    if (residual < best_residual - 1e-9) {
      best = degree;
      best_residual = residual;
    }
    if (residual < 0.5) break;
  }
  c.complexity = best + 1;
  c.residual = best_residual;
  return c;
}

VanishingReport check_vanishing_propagation(const PresentedModule& b, const PresentedModule& a, int m, int bound,
                                            const LabOptions& options) {
  b.ring()->require_same(a.ring());
  const RingPtr& ring = a.ring();
  if (m < 1) throw UsageError("Ext index must be at least 1");
  if (is_zero_module(a)) throw UsageError("A must be nonzero");
  int hb = options.hilbert_bound;
  PresentedModule r_free = PresentedModule::free(ring, {0});
  PresentedModule t = transpose(syzygy_module(b, m));
  auto tors = tor(t, a, 2, hb);
  VanishingReport v{m,
                    ext(b, a, m, hb)[m],
                    ext(b, r_free, m, hb)[m],
                    tors[1],
                    tors[2],
                    false,
                    false,
                    false,
                    false,
                    std::nullopt,
                    {}};
  v.hypothesis = v.ext_b_a.is_zero();
  v.conclusion = v.ext_b_r.is_zero();

  // Tor_2(T, A) -> Ext^m(B, R) (x) A -> Ext^m(B, A) -> Tor_1(T, A) -> 0.
  bool onto_tor1 = !v.hypothesis || v.tor1.is_zero();
  bool middle = !(v.hypothesis && v.tor2.is_zero()) || v.conclusion;
  bool iso = !v.conclusion || v.hypothesis == v.tor1.is_zero();
  v.consistent = onto_tor1 && middle && iso;
  if (!onto_tor1) v.notes.push_back("Ext^m(B, A) = 0 but Tor_1(T, A) != 0");
  if (!middle) v.notes.push_back("Ext^m(B, A) = 0 and Tor_2(T, A) = 0 but Ext^m(B, R) != 0");
  if (!iso) v.notes.push_back("Ext^m(B, R) = 0 but Ext^m(B, A) and Tor_1(T, A) differ in vanishing");

  // T torsionless <=> Ext^1(Tr T, R) = 0, making T a first syzygy.
  v.first_syzygy = is_zero_module(t) || ext(transpose(t), r_free, 1, hb)[1].is_zero();
  int r = v.first_syzygy ? 1 : 0;
  v.notes.push_back(std::string("Tr Omega^m B is ") + (v.first_syzygy ? "" : "not ") +
                    "torsionless (Ext^1 of its transpose into R " + (v.first_syzygy ? "vanishes" : "is nonzero") +
                    "); r = " + std::to_string(r));
  PresentedModule omega_a = syzygy_module(a, r);
  if (!is_zero_module(omega_a)) {
    v.rigidity = probe_tor_rigidity(omega_a, 1, {PresentedModule::residue_field(ring), b}, std::max(bound, 2));
    v.notes.push_back(std::string("Omega^r A Tor-rigid: ") +
                      (v.rigidity->violation_found() ? "violation found" : "probed, no violation (not a proof)"));
  }
  if (!v.hypothesis) v.notes.push_back("Ext^m(B, A) != 0: the lemma's hypothesis fails, vacuous");
  return v;
}

}  // namespace syzlab
