#include "syzlab/groebner.hpp"

#include <algorithm>

#include "engine.hpp"
#include "syzlab/errors.hpp"

namespace syzlab {

ModVec to_modvec(const FreeModuleElement& e, const ModuleOrder& order) {
  ModVec terms;
  for (std::uint32_t i = 0; i < e.components.size(); ++i) {
    for (const auto& t : e.components[i].terms()) terms.push_back({t.mono, i, t.coeff});
  }
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return terms;
}

FreeModuleElement from_modvec(const PolyRing& ring, const ModVec& v, std::size_t rank) {
  std::vector<std::vector<PolyTerm>> comps(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw InvariantError("module term outside the ambient rank");
    comps[t.comp].push_back({t.coeff, t.mono});
  }
  FreeModuleElement e;
  e.components.reserve(rank);
  for (auto& c : comps) e.components.push_back(ring.from_terms(std::move(c)));
  return e;
}

GroebnerBasis::GroebnerBasis(PolyRing ring, FreeModule ambient, ModuleOrder order,
                             std::vector<ModVec> elements, std::vector<Polynomial> ideal_basis,
                             bool reduced)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      ideal_basis_(std::move(ideal_basis)),
      reduced_(reduced) {
  auto red = std::make_shared<detail::Reducer>(ring_.field(), order_, ambient_.rank());
  for (const auto& e : elements_) red->add(e);
  reducer_ = std::move(red);
}

FreeModuleElement GroebnerBasis::element(std::size_t i) const {
  return from_modvec(ring_, elements_.at(i), ambient_.rank());
}

std::vector<FreeModuleElement> GroebnerBasis::element_list() const {
  std::vector<FreeModuleElement> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) out.push_back(element(i));
  return out;
}

bool GroebnerBasis::lead_divides(const Monomial& m, std::uint32_t comp) const {
  return reducer_->find_divisor(m, comp) >= 0;
}

ModVec GroebnerBasis::normal_form(const ModVec& v) const { return reducer_->reduce(v); }

FreeModuleElement GroebnerBasis::normal_form(const FreeModuleElement& e) const {
  if (e.components.size() != ambient_.rank()) throw UsageError("element is not in the ambient module");
  return from_modvec(ring_, normal_form(to_modvec(e, order_)), ambient_.rank());
}

namespace {

std::vector<int> generator_degrees(const FreeModule& ambient, const std::vector<FreeModuleElement>& gens,
                                   std::vector<FreeModuleElement>* kept) {
  std::vector<int> degs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = homogeneous_degree(ambient, g);
    if (!d) throw UsageError("generators must be homogeneous");
    degs.push_back(*d);
    kept->push_back(g);
  }
  return degs;
}

detail::EngineInput base_input(const PolyRing& ring, const FreeModule& ambient, const ModuleOrder& order,
                               const std::vector<Polynomial>& ideal_basis, int cap) {
  detail::EngineInput in;
  in.field = ring.field();
  in.nvars = ring.nvars();
  in.degrees = ambient.degrees;
  in.order = order;
  in.ideal_basis = ideal_basis;
  in.degree_cap = cap;
  return in;
}

}  // namespace

std::vector<Polynomial> ideal_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens,
                                             int degree_cap) {
  FreeModule ambient{{0}};
  ModuleOrder order(ring.order());
  detail::EngineInput in = base_input(ring, ambient, order, {}, degree_cap);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw UsageError("ideal generator " + ring.format(g) + " is not homogeneous");
    in.gens.push_back(to_modvec(FreeModuleElement{{g}}, order));
    in.gen_degrees.push_back(g.degree());
  }
  auto out = detail::run_engine(in);
  auto reduced = detail::interreduce(ring.field(), order, 1, out.basis);
  std::vector<Polynomial> result;
  for (const auto& v : reduced) result.push_back(from_modvec(ring, v, 1).components[0]);
  return result;
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& gb) {
  ModuleOrder order(ring.order());
  detail::Reducer red(ring.field(), order, 1);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    ModVec v = to_modvec(FreeModuleElement{{ring.monic(g)}}, order);
    red.add(std::move(v));
  }
  return from_modvec(ring, red.reduce(to_modvec(FreeModuleElement{{f}}, order)), 1).components[0];
}

struct IdealReducer::Impl {
  PolyRing ring;
  ModuleOrder order;
  detail::Reducer red;
  std::vector<Monomial> leads;
};

IdealReducer::IdealReducer(const PolyRing& ring, const std::vector<Polynomial>& gb)
    : impl_(new Impl{ring, ModuleOrder(ring.order()), detail::Reducer(ring.field(), ModuleOrder(ring.order()), 1), {}}) {
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    impl_->red.add(to_modvec(FreeModuleElement{{ring.monic(g)}}, impl_->order));
    impl_->leads.push_back(g.lead().mono);
  }
}

IdealReducer::~IdealReducer() = default;

Polynomial IdealReducer::reduce(const Polynomial& f) const {
  bool reducible = false;
  for (const auto& t : f.terms()) {
    for (const auto& l : impl_->leads) {
      if (l.divides(t.mono)) {
        reducible = true;
        break;
      }
    }
    if (reducible) break;
  }
  if (!reducible) return f;
  ModVec v = impl_->red.reduce(to_modvec(FreeModuleElement{{f}}, impl_->order));
  return from_modvec(impl_->ring, v, 1).components[0];
}

GroebnerBasis buchberger(const SubmodulePresentation& gens, const GroebnerOptions& options) {
  const PolyRing& ring = gens.ring;
  if (options.order.base() != ring.order()) {
    throw UsageError("module order must extend the ring's monomial order");
  }
  std::vector<Polynomial> ideal_basis = ideal_groebner_basis(ring, gens.quotient_relations, options.degree_cap);
  return submodule_basis(ring, gens.ambient, gens.generators, ideal_basis, options);
}

GroebnerBasis submodule_basis(const PolyRing& ring, const FreeModule& ambient,
                              const std::vector<FreeModuleElement>& gens,
                              const std::vector<Polynomial>& ideal_basis, const GroebnerOptions& options) {
  std::vector<FreeModuleElement> kept;
  auto degs = generator_degrees(ambient, gens, &kept);
  detail::EngineInput in = base_input(ring, ambient, options.order, ideal_basis, options.degree_cap);
  for (const auto& g : kept) in.gens.push_back(to_modvec(g, options.order));
  in.gen_degrees = degs;
  auto out = detail::run_engine(in);
  auto reduced = detail::interreduce(ring.field(), options.order, ambient.rank(), out.basis);
  return GroebnerBasis(ring, ambient, options.order, std::move(reduced), ideal_basis, true);
}

std::vector<FreeModuleElement> kernel(const PolyRing& ring, const FreeModule& ambient,
                                      const std::vector<FreeModuleElement>& gens,
                                      const std::vector<int>& gen_degrees,
                                      const std::vector<Polynomial>& ideal_basis,
                                      const GroebnerOptions& options) {
  if (gens.size() != gen_degrees.size()) throw UsageError("generator degree list has the wrong length");
  std::size_t m = ambient.rank();
  std::size_t r = gens.size();
  if (r == 0) return {};
  FreeModule aug;
  aug.degrees = ambient.degrees;
  aug.degrees.insert(aug.degrees.end(), gen_degrees.begin(), gen_degrees.end());
  ModuleOrder order = options.order.with_block(static_cast<std::uint32_t>(m));
  detail::EngineInput in = base_input(ring, aug, order, ideal_basis, options.degree_cap);
  in.mode = detail::EngineMode::Kernel;
  in.boundary = static_cast<std::uint32_t>(m);
  for (std::size_t j = 0; j < r; ++j) {
    if (gens[j].components.size() != m) throw UsageError("generator is not in the ambient module");
    FreeModuleElement e = gens[j];
    for (std::size_t k = 0; k < r; ++k) e.components.push_back(k == j ? ring.one() : ring.zero());
    in.gens.push_back(to_modvec(e, order));
  }
  in.gen_degrees = gen_degrees;
  auto out = detail::run_engine(in);
  std::vector<FreeModuleElement> result;
  for (const auto& v : out.kernel) {
    ModVec shifted;
    shifted.reserve(v.size());
    for (const auto& t : v) {
      if (t.comp < m) throw InvariantError("kernel element has a component outside the syzygy block");
      shifted.push_back({t.mono, static_cast<std::uint32_t>(t.comp - m), t.coeff});
    }
    result.push_back(from_modvec(ring, shifted, r));
  }
  return result;
}

std::vector<std::size_t> minimal_generator_indices(const PolyRing& ring, const FreeModule& ambient,
                                                   const std::vector<FreeModuleElement>& gens,
                                                   const std::vector<Polynomial>& ideal_basis,
                                                   const GroebnerOptions& options) {
  detail::EngineInput in = base_input(ring, ambient, options.order, ideal_basis, options.degree_cap);
  in.mode = detail::EngineMode::MinimalGenerators;
  std::vector<std::size_t> index_map;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    auto d = homogeneous_degree(ambient, gens[j]);
    if (!d) throw UsageError("generators must be homogeneous");
    in.gens.push_back(to_modvec(gens[j], options.order));
    in.gen_degrees.push_back(*d);
    index_map.push_back(j);
  }
  auto out = detail::run_engine(in);
  std::vector<std::size_t> result;
  for (std::size_t g : out.minimal_inputs) result.push_back(index_map[g]);
  std::sort(result.begin(), result.end());
  return result;
}

SubmodulePresentation syzygy_basis(const GroebnerBasis& gb, int degree_cap) {
  std::vector<FreeModuleElement> gens;
  std::vector<int> degs;
  for (std::size_t i = 0; i < gb.elements().size(); ++i) {
    FreeModuleElement e = gb.element(i);
    bool relation = true;
    for (const auto& c : e.components) {
      if (!normal_form(gb.ring(), c, gb.ideal_basis()).is_zero()) relation = false;
    }
    if (relation) continue;
    gens.push_back(e);
    degs.push_back(*homogeneous_degree(gb.ambient(), e));
  }
  GroebnerOptions options{ModuleOrder(gb.ring().order()), degree_cap};
  SubmodulePresentation out{gb.ring(), FreeModule{degs}, {}, gb.ideal_basis()};
  out.generators = kernel(gb.ring(), gb.ambient(), gens, degs, gb.ideal_basis(), options);
  return out;
}

}  // namespace syzlab
