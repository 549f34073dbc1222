#pragma once

#include <memory>
#include <string>
#include <vector>

#include "syzlab/groebner.hpp"
#include "syzlab/hilbert.hpp"
#include "syzlab/polynomial.hpp"

namespace syzlab {

class ResolutionCache;

struct RingOptions {
  ModuleExtension extension = ModuleExtension::TermOverPosition;
  int degree_cap = kDefaultDegreeCap;
  /// Shared memo for resolutions; null disables caching.
  std::shared_ptr<ResolutionCache> cache;
};

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// R = F_p[x_1..x_n] / I with I homogeneous.
class QuotientRing {
 public:
  static RingPtr create(PolyRing poly, std::vector<Polynomial> relations, RingOptions options = {});

  const PolyRing& poly() const { return poly_; }
  const PrimeField& field() const { return poly_.field(); }
  std::size_t nvars() const { return poly_.nvars(); }
  const RingOptions& options() const { return options_; }

  /// Minimal generators of I, in input order.
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced Groebner basis of I.
  const std::vector<Polynomial>& ideal_basis() const { return ideal_basis_; }

  int dimension() const { return dimension_; }
  bool is_complete_intersection() const { return complete_intersection_; }
  /// Number of relations when they form a regular sequence, otherwise -1.
  int codim() const { return complete_intersection_ ? static_cast<int>(relations_.size()) : -1; }

  Polynomial reduce(const Polynomial& f) const;
  GroebnerOptions groebner_options() const;
  /// Hilbert series of R itself.
  const HilbertSeries& series() const { return series_; }
  HilbertSeries free_series(const std::vector<int>& degrees) const;

  /// Throws UsageError unless other is this ring.
  void require_same(const RingPtr& other) const;
  /// Deterministic text form used for hashing and cache keys.
  std::string canonical() const;

 private:
  QuotientRing(PolyRing poly, RingOptions options);

  PolyRing poly_;
  RingOptions options_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> ideal_basis_;
  std::shared_ptr<IdealReducer> reducer_;
  int dimension_ = 0;
  bool complete_intersection_ = true;
  HilbertSeries series_;
};

}  // namespace syzlab
