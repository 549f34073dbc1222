#include "syzlab/errors.hpp"
#include "syzlab/lab.hpp"

namespace syzlab {

std::optional<int> InequalityReport::bound() const {
  if (!ring_depth) return std::nullopt;
  return ring_depth->depth + n;
}

bool InequalityReport::recheck() const {
  if (is_zero_module(module)) return verdict == Verdict::Vacuous && !module_depth;
  if (!ring_depth || !module_depth) return false;
  if (!ring_depth->recheck() || !module_depth->recheck()) return false;
  bool holds = module_depth->depth <= ring_depth->depth + n;
  if (verdict != (holds ? Verdict::Holds : Verdict::Violated)) return false;
  return equality == (module_depth->depth == ring_depth->depth + n);
}

InequalityReport audit_depth_inequality(const Ideal& a, const PresentedModule& n_module, int n,
                                        const LabOptions& options) {
  a.ring()->require_same(n_module.ring());
  if (n < 0) throw UsageError("syzygy index must be non-negative");
  if (!a.is_proper()) throw UsageError("ideal " + a.format() + " is not proper");
  if (is_zero_module(n_module)) throw UsageError("base module is zero");
  const RingPtr& ring = a.ring();

  PresentedModule m = syzygy_module(n_module, n);
  InequalityReport r{a, n_module, n, m, std::nullopt, std::nullopt, Verdict::Vacuous, false, std::nullopt, {}};
  r.ring_depth = depth(a, PresentedModule::free(ring, {0}));
  int m_depth = r.ring_depth->depth;
  if (is_zero_module(m)) {
    r.notes.push_back("Omega^" + std::to_string(n) + " N is zero: the inequality is vacuous");
    return r;
  }
  r.module_depth = depth(a, m);
  int lhs = r.module_depth->depth;
  r.verdict = lhs <= m_depth + n ? Verdict::Holds : Verdict::Violated;
  r.equality = lhs == m_depth + n;

  // N is (n+1)-Tor-rigid: only probed against R/a and k.
  int probe_bound = std::max(options.hom_bound, n + 2);
  r.rigidity = probe_tor_rigidity(n_module, n + 1,
                                  {a.quotient(), PresentedModule::residue_field(ring)}, probe_bound);
  std::string order = std::to_string(n + 1);
  if (r.rigidity->violation_found()) {
    const auto& w = *r.rigidity->witness;
    r.notes.push_back("N is not " + order + "-Tor-rigid: test " + std::to_string(w.test) + ", t = " +
                      std::to_string(w.t) + ", Tor_" + std::to_string(w.violation) + " != 0");
  } else {
    r.notes.push_back("N " + order + "-Tor-rigid: probed against R/a and k up to Tor_" +
                      std::to_string(probe_bound) + ", no violation (not a proof)");
  }
  if (n >= 1) {
    r.notes.push_back(std::string("depth(a, R) >= n: ") + (m_depth >= n ? "checked" : "fails"));
    r.notes.push_back("N locally free on X~^" + std::to_string(n - 1) + "(R): not verified");
    r.notes.push_back("M satisfies (S~_" + std::to_string(n) + "): not verified");
  }
  return r;
}

}  // namespace syzlab
