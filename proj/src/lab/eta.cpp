#include <cmath>
#include <numeric>

#include "syzlab/errors.hpp"
#include "syzlab/lab.hpp"

namespace syzlab {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvariantError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string EtaEstimate::value_text() const {
  if (!defined) return "undefined";
  if (exact) return exact_value.to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

namespace {

std::int64_t sign(int i) { return i % 2 == 0 ? 1 : -1; }

// Smallest d <= w/2 with len_i = len_{i+d} across the last w indices.
std::optional<int> length_period(const std::vector<std::int64_t>& len, int first, int last, int w) {
  int lo = std::max(first, last - w + 1);
  for (int d = 1; 2 * d <= last - lo + 1; ++d) {
    bool ok = true;
    for (int i = lo; i + d <= last && ok; ++i) ok = len[i] == len[i + d];
    if (ok) return d;
  }
  return std::nullopt;
}

}  // namespace

EtaEstimate eta_estimate(const PresentedModule& m, const PresentedModule& n, int bound) {
  m.ring()->require_same(n.ring());
  const RingPtr& ring = m.ring();
  if (!ring->is_complete_intersection()) throw UsageError("eta needs a complete intersection ring");
  if (bound < 4) throw UsageError("eta bound must be at least 4");
  EtaEstimate e;
  e.codim = ring->codim();
  e.bound = bound;
  for (const auto& h : tor(m, n, bound)) e.lengths.push_back(h.length);

  // Finiteness must persist over the whole periodicity window; a single
  // finite length at the end says nothing about the tail.
  int w = std::max(4, bound / 3);
  int f = bound + 1;
  while (f > 0 && e.lengths[f - 1].has_value()) --f;
  if (f > bound - w + 1) {
    e.note = "eta undefined at this bound: Tor_" + std::to_string(f - 1) + " has infinite length";
    return e;
  }
  e.start = f;
  e.defined = true;

  std::vector<std::int64_t> len(bound + 1, 0);
  for (int i = f; i <= bound; ++i) len[i] = *e.lengths[i];
  std::int64_t partial = 0;
  for (int i = f; i <= bound; ++i) {
    partial += sign(i) * len[i];
    if (i >= 1) e.estimates.emplace_back(i, static_cast<double>(partial) / std::pow(double(i), e.codim));
  }

  e.period = length_period(len, f, bound, w);
  if (e.period) {
    for (int i = bound - *e.period + 1; i <= bound; ++i) e.stable_lengths.push_back(len[i]);
  }
  e.value = e.last_estimate();
  if (e.period && e.codim == 1 && *e.period <= 2) {
    // Over a full period of (-1)^i len_i, i.e. 2d terms, the sum grows by a
    // fixed amount; eta is that amount per index.
    int d = *e.period;
    std::int64_t block = 0;
    for (int i = bound - 2 * d + 1; i <= bound; ++i) block += sign(i) * len[i];
    e.exact = true;
    e.exact_value = Rational::make(block, 2 * d);
    e.value = e.exact_value.value();
  }

  if (e.estimates.size() >= 2) {
    std::size_t back = std::min<std::size_t>(static_cast<std::size_t>(w), e.estimates.size() - 1);
    double delta = e.estimates.back().second - e.estimates[e.estimates.size() - 1 - back].second;
    e.trend = std::abs(delta) < 1e-12 ? "flat" : (delta > 0 ? "increasing" : "decreasing");
  } else {
    e.trend = "flat";
  }
  return e;
}

EtaAdditivityReport eta_additivity_check(const PresentedModule& sub, const PresentedModule& middle,
                                         const PresentedModule& quotient, const Matrix& f, const Matrix& g,
                                         const PresentedModule& n, int bound) {
  const RingPtr& ring = middle.ring();
  for (const auto* p : {&sub, &quotient, &n}) ring->require_same(p->ring());
  auto fail = [](const std::string& why) { throw UsageError("not a short exact sequence: " + why); };
  if (f.row_degrees() != middle.generator_degrees() || f.col_degrees() != sub.generator_degrees()) {
    fail("the first map does not match the generators of M' and M");
  }
  if (g.row_degrees() != quotient.generator_degrees() || g.col_degrees() != middle.generator_degrees()) {
    fail("the second map does not match the generators of M and M''");
  }
  GroebnerBasis middle_rel = relation_basis(middle);
  for (const auto& c : product(f, sub.presentation()).columns()) {
    if (!middle_rel.contains(c)) fail("the first map is not well defined");
  }
  GroebnerBasis quotient_rel = relation_basis(quotient);
  for (const auto& c : product(g, middle.presentation()).columns()) {
    if (!quotient_rel.contains(c)) fail("the second map is not well defined");
  }
  for (const auto& c : product(g, f).columns()) {
    if (!quotient_rel.contains(c)) fail("the composite is not zero");
  }
  if (!is_zero_module(PresentedModule(g.concat(quotient.presentation())))) fail("the second map is not onto");
  // With g onto and g f = 0, these two series identities give im f = ker g
  // and ker f = 0.
  HilbertSeries hs_sub = hilbert_series(sub);
  HilbertSeries hs_mid = hilbert_series(middle);
  HilbertSeries hs_quo = hilbert_series(quotient);
  if (!(hs_mid == hs_sub + hs_quo)) fail("Hilbert series are not additive");
  if (!(hilbert_series(PresentedModule(f.concat(middle.presentation()))) == hs_quo)) {
    fail("the image of the first map is not the kernel of the second");
  }

  EtaAdditivityReport r;
  r.sub = eta_estimate(sub, n, bound);
  r.middle = eta_estimate(middle, n, bound);
  r.quotient = eta_estimate(quotient, n, bound);
  for (const auto* e : {&r.sub, &r.middle, &r.quotient}) {
    if (!e->defined) throw UsageError("eta is not defined for every pair: " + e->note);
  }
  r.tolerance = 3.0 / bound;
  r.exact_comparison = r.sub.exact && r.middle.exact && r.quotient.exact;
  if (r.exact_comparison) {
    Rational a = r.middle.exact_value, b = r.sub.exact_value, c = r.quotient.exact_value;
    Rational diff = Rational::make(a.num * b.den * c.den - b.num * a.den * c.den - c.num * a.den * b.den,
                                   a.den * b.den * c.den);
    r.difference = diff.value();
    r.holds = diff.num == 0;
  } else {
    r.difference = r.middle.value - r.sub.value - r.quotient.value;
    r.holds = std::abs(r.difference) <= r.tolerance;
  }
  return r;
}

}  // namespace syzlab
