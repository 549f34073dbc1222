#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/homological.hpp"
#include "syzlab/module.hpp"
#include "syzlab/resolution.hpp"

namespace syzlab {

/// Betti table of a minimal presentation plus the exact Hilbert series.
struct ModuleSignature {
  BettiTable presentation;
  HilbertSeries series;
  HilbertFunction hilbert;
};

ModuleSignature module_signature(const PresentedModule& m, int hilbert_bound = kDefaultHilbertBound);

/// Equal signatures are a necessary condition for isomorphism, not a proof.
struct SignatureComparison {
  bool betti_equal = false;
  bool hilbert_equal = false;

  bool equivalent() const { return betti_equal && hilbert_equal; }
};

SignatureComparison compare_signatures(const ModuleSignature& a, const ModuleSignature& b);
bool betti_hilbert_equivalent(const PresentedModule& a, const PresentedModule& b,
                              int hilbert_bound = kDefaultHilbertBound);

struct RigidityWitness {
  std::size_t test = 0;
  int t = 0;
  /// First i > t + n with Tor_i != 0.
  int violation = 0;
};

struct RigidityReport {
  PresentedModule module;
  int order = 1;
  int bound = 0;
  std::vector<PresentedModule> tests;
  /// tor_zero[k][i]: Tor_i(M, tests[k]) = 0 for 0 <= i <= bound.
  std::vector<std::vector<bool>> tor_zero;
  std::optional<RigidityWitness> witness;

  bool violation_found() const { return witness.has_value(); }
  /// Re-derives the outcome from tor_zero.
  bool recheck() const;
};

/// Looks for t with Tor_{t+1..t+n}(M, N) = 0 but a later Tor_i(M, N) != 0,
/// i <= bound. Finding none is evidence, not a proof, of n-Tor-rigidity.
RigidityReport probe_tor_rigidity(const PresentedModule& m, int n, const std::vector<PresentedModule>& tests,
                                  int bound);

enum class Verdict { Holds, Violated, Vacuous };

std::string to_string(Verdict v);

struct LabOptions {
  /// Highest Tor/Ext index used by probes.
  int hom_bound = kDefaultResolutionBound;
  int hilbert_bound = kDefaultHilbertBound;
};

struct InequalityReport {
  Ideal ideal;
  PresentedModule base;
  int n = 0;
  /// Omega^n of base.
  PresentedModule module;
  std::optional<DepthCertificate> ring_depth;
  std::optional<DepthCertificate> module_depth;
  Verdict verdict = Verdict::Vacuous;
  bool equality = false;
  std::optional<RigidityReport> rigidity;
  std::vector<std::string> notes;

  /// m + n, when depth(a, R) is known.
  std::optional<int> bound() const;
  /// Rechecks both certificates and the verdict they imply.
  bool recheck() const;
};

/// depth(a, Omega^n N) <= depth(a, R) + n on this instance.
InequalityReport audit_depth_inequality(const Ideal& a, const PresentedModule& n_module, int n,
                                        const LabOptions& options = {});

enum class SplittingForm { Prop28, Cor44, Lemma42 };

std::string to_string(SplittingForm f);

/// (Omega^syzygy_index X)(twist)^multiplicity, X = N or M = Omega^n N.
struct SplitSummand {
  int syzygy_index = 0;
  int twist = 0;
  int multiplicity = 1;
};

struct SplittingReport {
  SplittingForm form = SplittingForm::Lemma42;
  int n = 1;
  std::vector<Polynomial> sequence;
  std::string left_label;
  std::string right_label;
  ModuleSignature left;
  std::vector<SplitSummand> summands;
  ModuleSignature right;
  SignatureComparison comparison;
  /// Prop28 only: F = sum R(-j)^rank as (j, rank).
  std::vector<std::pair<int, std::int64_t>> free_part;
  bool reconciled = false;
  /// HS(R), kept so the free part can be re-derived.
  HilbertSeries ring_series;
  std::vector<std::string> hypotheses;

  bool verdict() const;
  /// Recomputes comparison and free part from the stored signatures.
  bool recheck() const;
};

/// Builds both sides of the cut-and-resolve identity for N, n and x, with
/// twist (i - n) * deg on the Omega^i summands (summed over the cut elements
/// for unequal degrees). Throws UsageError naming a failed hypothesis.
SplittingReport verify_cut_syzygy_splitting(const PresentedModule& n_module, int n, const RegularSequence& x,
                                            SplittingForm form, const LabOptions& options = {});

/// F such that HS(diff) = sum rank * HS(R(-j)); nullopt when no such
/// non-negative combination exists.
std::optional<std::vector<std::pair<int, std::int64_t>>> peel_free_part(const HilbertSeries& diff,
                                                                         const RingPtr& ring);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

struct EtaEstimate {
  int codim = 0;
  int bound = 0;
  /// length of Tor_i(M, N) for i = 0..bound; nullopt = infinite.
  std::vector<std::optional<std::int64_t>> lengths;
  std::optional<int> start;
  /// (n, S_n / n^c) for start <= n <= bound, n >= 1.
  std::vector<std::pair<int, double>> estimates;
  std::optional<int> period;
  std::vector<std::int64_t> stable_lengths;
  bool defined = false;
  bool exact = false;
  Rational exact_value;
  double value = 0;
  /// "increasing", "decreasing" or "flat" over the periodicity window.
  std::string trend;
  std::string note;

  std::string value_text() const;
  double last_estimate() const { return estimates.empty() ? 0.0 : estimates.back().second; }
};

/// Alternating Tor-length sums over a complete intersection of codimension c.
EtaEstimate eta_estimate(const PresentedModule& m, const PresentedModule& n, int bound);

struct EtaAdditivityReport {
  EtaEstimate sub;
  EtaEstimate middle;
  EtaEstimate quotient;
  bool exact_comparison = false;
  /// eta(M) - eta(M') - eta(M'').
  double difference = 0;
  double tolerance = 0;
  bool holds = false;
};

/// 0 -> M' -f-> M -g-> M'' -> 0; f and g map generators to generators.
EtaAdditivityReport eta_additivity_check(const PresentedModule& sub, const PresentedModule& middle,
                                         const PresentedModule& quotient, const Matrix& f, const Matrix& g,
                                         const PresentedModule& n, int bound);

struct PeriodicityReport {
  int bound = 0;
  std::optional<int> period;
  int start = 0;
  /// Omega^{n+d} N ~ (Omega^n N)(twist).
  int twist = 0;
  std::optional<int> projective_dimension;
  std::string note;

  bool periodic() const { return period.has_value(); }
};

/// Compares syzygies by Betti table, Hilbert series and annihilator.
PeriodicityReport detect_periodicity(const PresentedModule& n, int bound);

struct ComplexityEstimate {
  int complexity = 0;
  double residual = 0;
  std::vector<std::int64_t> totals;
};

ComplexityEstimate complexity_estimate(const PresentedModule& m, int bound);

struct VanishingReport {
  int m = 1;
  HomologyModule ext_b_a;
  HomologyModule ext_b_r;
  HomologyModule tor1;
  HomologyModule tor2;
  /// Ext^m(B, A) = 0.
  bool hypothesis = false;
  /// Ext^m(B, R) = 0.
  bool conclusion = false;
  bool consistent = false;
  /// Tr Omega^m B is torsionless, so a first syzygy.
  bool first_syzygy = false;
  std::optional<RigidityReport> rigidity;
  std::vector<std::string> notes;
};

VanishingReport check_vanishing_propagation(const PresentedModule& b, const PresentedModule& a, int m, int bound,
                                            const LabOptions& options = {});

}  // namespace syzlab
