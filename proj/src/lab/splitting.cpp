#include <map>

#include "lab_internal.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/lab.hpp"

namespace syzlab {

namespace {

std::string summand_label(const SplitSummand& s, const std::string& base) {
  std::string out = s.syzygy_index == 0 ? base : "Omega^" + std::to_string(s.syzygy_index) + " " + base;
  if (s.twist != 0) out = "(" + out + ")(" + std::to_string(s.twist) + ")";
  if (s.multiplicity > 1) out += "^" + std::to_string(s.multiplicity);
  return out;
}

// One summand per subset T of the n cut elements: index i = n - |T|, twist
// -(sum of deg x_j over T).
std::vector<SplitSummand> binomial_summands(const std::vector<int>& degrees, int index_offset) {
  std::size_t n = degrees.size();
  std::map<std::pair<int, int>, int> counts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = 0;
    int twist = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        ++size;
        twist -= degrees[j];
      }
    }
    ++counts[{static_cast<int>(n) - size + index_offset, twist}];
  }
  std::vector<SplitSummand> out;
  for (const auto& [key, mult] : counts) out.push_back({key.first, key.second, mult});
  return out;
}

void check_hypotheses(const PresentedModule& n_module, int n, const std::vector<Polynomial>& xs,
                      SplittingForm form, std::vector<std::string>& notes) {
  const RingPtr& ring = n_module.ring();
  if (n < 1) throw UsageError("hypothesis failed: n must be at least 1");
  if (is_zero_module(n_module)) throw UsageError("hypothesis failed: N must be nonzero");
  std::size_t want = form == SplittingForm::Lemma42 ? 1 : static_cast<std::size_t>(n);
  if (form == SplittingForm::Lemma42 && n != 1) throw UsageError("hypothesis failed: lemma42 takes n = 1");
  if (xs.size() != want) {
    throw UsageError("hypothesis failed: the sequence must have length " + std::to_string(want));
  }
  std::vector<Polynomial> prefix;
  for (const auto& x : xs) {
    if (x.is_zero() || !x.is_homogeneous() || x.degree() < 1) {
      throw UsageError("hypothesis failed: " + ring->poly().format(x) + " is not a homogeneous element of positive degree");
    }
    PresentedModule quotient = quotient_by(PresentedModule::free(ring, {0}), prefix);
    if (!is_regular_element(x, quotient)) {
      throw UsageError("hypothesis failed: the sequence is not regular on R at " + ring->poly().format(x));
    }
    prefix.push_back(x);
  }
  notes.push_back("sequence regular on R: checked");
  if (form == SplittingForm::Lemma42) {
    if (!is_regular_element(xs[0], n_module)) {
      throw UsageError("hypothesis failed: " + ring->poly().format(xs[0]) + " is a zero-divisor on N");
    }
    notes.push_back("x a non-zero-divisor on N: checked");
  }
  for (const auto& x : xs) {
    if (!annihilates_ext1(x, n_module)) {
      throw UsageError("hypothesis failed: " + ring->poly().format(x) + " does not annihilate Ext^1(N, Omega N)");
    }
  }
  notes.push_back("sequence annihilates Ext^1(N, Omega N): checked");
}

}  // namespace

bool SplittingReport::verdict() const {
  if (form == SplittingForm::Prop28) return reconciled && comparison.hilbert_equal;
  return comparison.equivalent();
}

bool SplittingReport::recheck() const {
  if (form == SplittingForm::Prop28) {
    if (!reconciled) return !comparison.hilbert_equal;
    for (const auto& [j, rank] : free_part) {
      if (rank <= 0) return false;
    }
    bool ok = left.series + lab::free_series(ring_series, free_part) == right.series;
    return ok == comparison.hilbert_equal;
  }
  SignatureComparison c = compare_signatures(left, right);
  return c.betti_equal == comparison.betti_equal && c.hilbert_equal == comparison.hilbert_equal;
}

SplittingReport verify_cut_syzygy_splitting(const PresentedModule& n_module, int n, const RegularSequence& x,
                                            SplittingForm form, const LabOptions& options) {
  const RingPtr& ring = n_module.ring();
  SplittingReport r;
  r.form = form;
  r.n = n;
  r.sequence = x.elements;
  check_hypotheses(n_module, n, x.elements, form, r.hypotheses);
  if (form != SplittingForm::Lemma42) {
    r.hypotheses.push_back("N (n+1)-Tor-rigid: not needed for the identity itself");
  }

  std::vector<int> degrees;
  for (const auto& e : x.elements) degrees.push_back(e.degree());

  Resolution res = minimal_resolution(n_module, 2 * n + 2);
  PresentedModule m = lab::syzygy_from(res, n);
  PresentedModule cut = quotient_by(form == SplittingForm::Lemma42 ? n_module : m, x.elements);

  std::string base;
  PresentedModule left = PresentedModule::zero(ring);
  int offset = 0;
  switch (form) {
    case SplittingForm::Lemma42:
      left = syzygy_module(cut, 1);
      r.left_label = "Omega^1(N/xN)";
      base = "N";
      break;
    case SplittingForm::Cor44:
      left = syzygy_module(cut, n);
      r.left_label = "Omega^" + std::to_string(n) + "(M/xM)";
      base = "M";
      offset = n;  // Omega^i M = Omega^{i+n} N
      break;
    case SplittingForm::Prop28:
      left = syzygy_module(cut, n - 1);
      r.left_label = n == 1 ? "M/xM" : "Omega^" + std::to_string(n - 1) + "(M/xM)";
      base = "N";
      offset = n - 1;
      break;
  }

  std::vector<SplitSummand> raw = binomial_summands(degrees, 0);
  PresentedModule right = PresentedModule::zero(ring);
  for (const auto& s : raw) {
    PresentedModule piece = twist(lab::syzygy_from(res, s.syzygy_index + offset), s.twist);
    for (int k = 0; k < s.multiplicity; ++k) right = direct_sum(right, piece);
    SplitSummand shown = s;
    if (form == SplittingForm::Prop28) shown.syzygy_index += offset;
    r.summands.push_back(shown);
  }
  for (const auto& s : r.summands) {
    if (!r.right_label.empty()) r.right_label += " + ";
    r.right_label += summand_label(s, base);
  }

  r.left = module_signature(left, options.hilbert_bound);
  r.right = module_signature(right, options.hilbert_bound);
  r.comparison = compare_signatures(r.left, r.right);
  r.ring_series = ring->series();
  if (form == SplittingForm::Prop28) {
    // 0 -> F -> right -> left -> 0 with F free.
    auto free_part = peel_free_part(r.right.series - r.left.series, ring);
    r.reconciled = free_part.has_value();
    if (free_part) {
      r.free_part = *free_part;
      r.comparison.hilbert_equal = r.left.series + lab::free_series(r.ring_series, r.free_part) == r.right.series;
    } else {
      r.comparison.hilbert_equal = false;
    }
  }
  return r;
}

}  // namespace syzlab
