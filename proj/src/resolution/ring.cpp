#include "syzlab/ring.hpp"

#include "syzlab/errors.hpp"

namespace syzlab {

QuotientRing::QuotientRing(PolyRing poly, RingOptions options)
    : poly_(std::move(poly)), options_(std::move(options)) {}

RingPtr QuotientRing::create(PolyRing poly, std::vector<Polynomial> relations, RingOptions options) {
  if (options.extension == ModuleExtension::Schreyer) {
    throw UsageError("a ring's default module order must be position-over-term or term-over-position");
  }
  std::shared_ptr<QuotientRing> R(new QuotientRing(std::move(poly), std::move(options)));
  for (auto& r : relations) {
    if (!r.is_homogeneous()) throw UsageError("relation " + R->poly_.format(r) + " is not homogeneous");
    if (r.is_zero()) continue;
    if (r.degree() == 0) throw UsageError("the relations generate the unit ideal");
  }
  FreeModule one{{0}};
  GroebnerOptions gopts = R->groebner_options();
  std::vector<FreeModuleElement> gens;
  for (const auto& r : relations) gens.push_back(FreeModuleElement{{r}});
  for (std::size_t i : minimal_generator_indices(R->poly_, one, gens, {}, gopts)) {
    R->relations_.push_back(relations[i]);
  }
  R->ideal_basis_ = ideal_groebner_basis(R->poly_, R->relations_, R->options_.degree_cap);
  R->reducer_ = std::make_shared<IdealReducer>(R->poly_, R->ideal_basis_);

  std::vector<Monomial> leads;
  for (const auto& g : R->ideal_basis_) leads.push_back(g.lead().mono);
  LaurentPoly n;
  n.coeffs = hilbert_numerator(R->nvars(), leads);
  R->series_ = HilbertSeries::from_numerator(n, static_cast<int>(R->nvars()));
  R->dimension_ = R->series_.dimension;
  R->complete_intersection_ =
      static_cast<int>(R->nvars()) - R->dimension_ == static_cast<int>(R->relations_.size());
  return R;
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (ideal_basis_.empty()) return f;
  return reducer_->reduce(f);
}

GroebnerOptions QuotientRing::groebner_options() const {
  return GroebnerOptions{ModuleOrder(poly_.order(), options_.extension), options_.degree_cap};
}

HilbertSeries QuotientRing::free_series(const std::vector<int>& degrees) const {
  HilbertSeries total;
  for (int d : degrees) total = total + series_.shifted(d);
  return total;
}

void QuotientRing::require_same(const RingPtr& other) const {
  if (other.get() != this) throw UsageError("objects belong to different rings");
}

std::string QuotientRing::canonical() const {
  std::string s = "GF(" + std::to_string(field().characteristic()) + ")[";
  for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + poly_.variables()[i];
  s += "]/(";
  for (std::size_t i = 0; i < relations_.size(); ++i) s += (i ? "," : "") + poly_.format(relations_[i]);
  s += ");order=" + poly_.order().name();
  s += ";ext=" + std::to_string(static_cast<int>(options_.extension));
  return s;
}

}  // namespace syzlab
