#include <algorithm>

#include "lab_internal.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/lab.hpp"

namespace syzlab {

ModuleSignature module_signature(const PresentedModule& m, int hilbert_bound) {
  Resolution res = minimal_resolution(m, 1);
  return ModuleSignature{betti_table(res), hilbert_series(m), hilbert_function(m, hilbert_bound)};
}

SignatureComparison compare_signatures(const ModuleSignature& a, const ModuleSignature& b) {
  return {a.presentation == b.presentation, a.series == b.series && a.hilbert.values == b.hilbert.values &&
                                                a.hilbert.first_degree == b.hilbert.first_degree};
}

bool betti_hilbert_equivalent(const PresentedModule& a, const PresentedModule& b, int hilbert_bound) {
  a.ring()->require_same(b.ring());
  return compare_signatures(module_signature(a, hilbert_bound), module_signature(b, hilbert_bound)).equivalent();
}

namespace lab {

ModuleSignature syzygy_signature(const Resolution& res, int n, int hilbert_bound) {
  ModuleSignature s;
  s.presentation.length = 1;
  if (n <= res.length()) {
    for (int j : res.free_degrees(n)) ++s.presentation.entries[{0, j}];
  }
  if (n + 1 <= res.length()) {
    for (int j : res.free_degrees(n + 1)) ++s.presentation.entries[{1, j}];
  }
  PresentedModule m = syzygy_from(res, n);
  s.series = hilbert_series(m);
  s.hilbert = hilbert_function(m, hilbert_bound);
  return s;
}

PresentedModule syzygy_from(const Resolution& res, int n) {
  if (n == 0) return res.presentation();
  if (n + 1 > res.length()) throw InvariantError("resolution too short for the requested syzygy");
  return PresentedModule(res.differential(n + 1));
}

HilbertSeries free_series(const HilbertSeries& ring_series, const std::vector<std::pair<int, std::int64_t>>& parts) {
  HilbertSeries total;
  for (const auto& [j, rank] : parts) {
    HilbertSeries chunk = ring_series.shifted(j);
    for (auto& c : chunk.numerator.coeffs) c *= rank;
    total = total + chunk;
  }
  return total;
}

}  // namespace lab

std::optional<std::vector<std::pair<int, std::int64_t>>> peel_free_part(const HilbertSeries& diff,
                                                                         const RingPtr& ring) {
  std::vector<std::pair<int, std::int64_t>> out;
  HilbertSeries rest = diff;
  const HilbertSeries& base = ring->series();
  for (int step = 0; step < 256; ++step) {
    if (rest.is_zero()) return out;
    // A free module's series has dimension dim R; anything else cannot peel.
    if (rest.dimension != base.dimension) return std::nullopt;
    int j = rest.numerator.offset;
    std::int64_t c = rest.value(j);
    if (c <= 0) return std::nullopt;
    rest = rest - lab::free_series(base, {{j, c}});
    out.emplace_back(j, c);
  }
  return std::nullopt;
}

bool RigidityReport::recheck() const {
  std::optional<RigidityWitness> found;
  for (std::size_t k = 0; k < tor_zero.size() && !found; ++k) {
    const auto& z = tor_zero[k];
    if (static_cast<int>(z.size()) != bound + 1) return false;
    for (int t = 0; t + order <= bound && !found; ++t) {
      bool window = true;
      for (int i = t + 1; i <= t + order; ++i) window = window && z[i];
      if (!window) continue;
      for (int i = t + order + 1; i <= bound; ++i) {
        if (!z[i]) {
          found = RigidityWitness{k, t, i};
          break;
        }
      }
    }
  }
  if (found.has_value() != witness.has_value()) return false;
  if (!found) return true;
  return found->test == witness->test && found->t == witness->t && found->violation == witness->violation;
}

RigidityReport probe_tor_rigidity(const PresentedModule& m, int n, const std::vector<PresentedModule>& tests,
                                  int bound) {
  if (n < 1) throw UsageError("rigidity order must be at least 1");
  if (bound <= n) throw UsageError("probe bound must exceed the rigidity order");
  RigidityReport r{m, n, bound, tests, {}, std::nullopt};
  for (const auto& t : tests) {
    m.ring()->require_same(t.ring());
    std::vector<bool> zero;
    for (const auto& h : tor(m, t, bound)) zero.push_back(h.is_zero());
    r.tor_zero.push_back(std::move(zero));
  }
  for (std::size_t k = 0; k < r.tor_zero.size() && !r.witness; ++k) {
    const auto& z = r.tor_zero[k];
    for (int t = 0; t + n <= bound && !r.witness; ++t) {
      if (!std::all_of(z.begin() + t + 1, z.begin() + t + n + 1, [](bool b) { return b; })) continue;
      for (int i = t + n + 1; i <= bound; ++i) {
        if (!z[i]) {
          r.witness = RigidityWitness{k, t, i};
          break;
        }
      }
    }
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

std::string to_string(SplittingForm f) {
  switch (f) {
    case SplittingForm::Prop28: return "prop28";
    case SplittingForm::Cor44: return "cor44";
    case SplittingForm::Lemma42: return "lemma42";
  }
  return "?";
}

}  // namespace syzlab
