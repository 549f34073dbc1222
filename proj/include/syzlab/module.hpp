#pragma once

#include <optional>
#include <vector>

#include "syzlab/groebner.hpp"
#include "syzlab/hilbert.hpp"
#include "syzlab/matrix.hpp"

namespace syzlab {

inline constexpr int kDefaultHilbertBound = 12;

/// Graded module coker(P). Generators are the rows of P, in degrees
/// P.row_degrees().
class PresentedModule {
 public:
  explicit PresentedModule(Matrix presentation) : presentation_(std::move(presentation)) {}

  static PresentedModule free(RingPtr ring, std::vector<int> degrees);
  static PresentedModule zero(RingPtr ring);
  /// k(-twist) = R / m, generated in degree `twist`.
  static PresentedModule residue_field(RingPtr ring, int twist = 0);
  /// R / (gens), generated in degree 0.
  static PresentedModule cyclic(RingPtr ring, const std::vector<Polynomial>& gens);

  const RingPtr& ring() const { return presentation_.ring(); }
  const Matrix& presentation() const { return presentation_; }
  const std::vector<int>& generator_degrees() const { return presentation_.row_degrees(); }
  std::size_t num_generators() const { return presentation_.rows(); }

 private:
  Matrix presentation_;
};

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
/// M(s): the degree-d piece of M(s) is the degree-(d+s) piece of M.
PresentedModule twist(const PresentedModule& m, int s);

/// Eliminates every unit entry by invertible row/column operations and drops
/// zero columns. The cokernel is unchanged up to isomorphism.
Matrix prune(const Matrix& p);
/// Pruned presentation whose columns are also a minimal generating set.
PresentedModule minimal_presentation(const PresentedModule& m);

/// Groebner basis of im(P) + I * F inside the generator free module F.
GroebnerBasis relation_basis(const PresentedModule& m);

HilbertSeries hilbert_series(const PresentedModule& m);
/// h(d) for d from min(0, lowest generator degree) to bound D past that
/// start (or past the lowest generator degree, whichever is later).
HilbertFunction hilbert_function(const PresentedModule& m, int bound = kDefaultHilbertBound);
bool is_zero_module(const PresentedModule& m);
/// Throws UsageError on the zero module.
int krull_dimension(const PresentedModule& m);
/// nullopt when the length is infinite.
std::optional<std::int64_t> module_length(const PresentedModule& m);

/// x * M = 0 for a ring element x.
bool annihilates(const Polynomial& x, const PresentedModule& m);

}  // namespace syzlab
