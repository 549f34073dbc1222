#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/resolution.hpp"

namespace syzlab {

/// Homogeneous ideal of a quotient ring, generators kept reduced and nonzero.
class Ideal {
 public:
  Ideal(RingPtr ring, const std::vector<Polynomial>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_proper() const;
  /// R / this, generated in degree 0.
  PresentedModule quotient() const;
  bool contains(const Polynomial& f) const;
  std::string format() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// (A : B) style helpers on ideals of the same ring.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Ann_R(M).
Ideal annihilator(const PresentedModule& m);

enum class HomologyKind { Tor, Ext };

struct HomologyModule {
  HomologyKind kind = HomologyKind::Tor;
  int index = 0;
  PresentedModule value;
  HilbertFunction hilbert;
  /// nullopt when the length is infinite.
  std::optional<std::int64_t> length;

  bool is_zero() const { return hilbert.identically_zero(); }
};

/// Homology at B of A -> B -> C, each a cokernel: B = coker(b_pres),
/// C = coker(c_pres); `in` maps the generators of A to those of B and `out`
/// maps B's generators to C's. Null `in`/`out` stand for zero maps.
PresentedModule complex_homology(const Matrix* in, const Matrix& b_pres, const Matrix* out, const Matrix* c_pres);

std::vector<HomologyModule> tor(const PresentedModule& m, const PresentedModule& n, int i_max,
                                int hilbert_bound = kDefaultHilbertBound);
std::vector<HomologyModule> ext(const PresentedModule& m, const PresentedModule& n, int i_max,
                                int hilbert_bound = kDefaultHilbertBound);
/// Ext^i(M, N) for a single i, from a resolution of M of length >= i + 1.
HomologyModule ext_from(const Resolution& res, const PresentedModule& n, int i,
                        int hilbert_bound = kDefaultHilbertBound);

struct DepthCertificate {
  Ideal ideal;
  PresentedModule module;
  int depth = 0;
  int witness_index = 0;
  /// Indices i < depth with Ext^i(R/a, M) = 0.
  std::vector<int> vanishing;
  HomologyModule witness;

  /// Recomputes the Ext modules and checks the stored claims.
  bool recheck() const;
};

/// inf{i : Ext^i(R/a, M) != 0}. UsageError when a is not proper or M = 0.
DepthCertificate depth(const Ideal& a, const PresentedModule& m);

/// M / (x_1..x_k) M.
PresentedModule quotient_by(const PresentedModule& m, const std::vector<Polynomial>& xs);

/// Multiplication by x is injective on M.
bool is_regular_element(const Polynomial& x, const PresentedModule& m);

/// Ext^1(N, Omega N).
HomologyModule ext1_syzygy(const PresentedModule& n, int hilbert_bound = kDefaultHilbertBound);
/// x * Ext^1(N, Omega N) = 0.
bool annihilates_ext1(const Polynomial& x, const PresentedModule& n);

struct RegularSequence {
  std::vector<Polynomial> elements;
  std::vector<PresentedModule> certified_on;

  /// Re-runs the nonzerodivisor checks along the chain.
  bool recheck() const;
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int trials_per_slot = 200;
  /// Degrees tried above the lowest generator degree of the target ideal.
  int extra_degrees = 2;
};

struct RegularSequenceSearch {
  std::optional<RegularSequence> sequence;
  /// Elements found before the search gave up.
  std::vector<Polynomial> partial;
  int trials = 0;
  std::string note;

  bool found() const { return sequence.has_value(); }
};

/// Homogeneous elements of a (and of Ann Ext^1(N, Omega N) when annihilate is
/// set), each regular on every module modulo the earlier ones.
RegularSequenceSearch find_regular_sequence(const Ideal& a, const std::vector<PresentedModule>& modules, int n,
                                            const std::optional<PresentedModule>& annihilate = std::nullopt,
                                            const SearchConfig& config = {});

}  // namespace syzlab
