#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "syzlab/monomial.hpp"
#include "syzlab/polynomial.hpp"

namespace syzlab {

namespace detail {
class Reducer;
}

inline constexpr int kDefaultDegreeCap = 40;

/// One term c * m * e_comp of a free-module element.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;
};

/// Sparse free-module element, terms sorted descending in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

ModVec to_modvec(const FreeModuleElement& e, const ModuleOrder& order);
FreeModuleElement from_modvec(const PolyRing& ring, const ModVec& v, std::size_t rank);

/// Submodule of a graded free module over the polynomial ring, together with
/// generators of an ideal I. Membership is always modulo I * (ambient).
struct SubmodulePresentation {
  PolyRing ring;
  FreeModule ambient;
  std::vector<FreeModuleElement> generators;
  std::vector<Polynomial> quotient_relations;
};

struct GroebnerOptions {
  ModuleOrder order;
  int degree_cap = kDefaultDegreeCap;
};

class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, FreeModule ambient, ModuleOrder order, std::vector<ModVec> elements,
                std::vector<Polynomial> ideal_basis, bool reduced);

  const PolyRing& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }

  /// Module elements, including the lifted ideal relations h * e_k.
  const std::vector<ModVec>& elements() const { return elements_; }
  FreeModuleElement element(std::size_t i) const;
  std::vector<FreeModuleElement> element_list() const;
  /// Reduced Groebner basis of I in the base order.
  const std::vector<Polynomial>& ideal_basis() const { return ideal_basis_; }

  ModVec normal_form(const ModVec& v) const;
  FreeModuleElement normal_form(const FreeModuleElement& e) const;
  bool contains(const FreeModuleElement& e) const { return normal_form(e).is_zero(); }
  /// True when some basis lead term divides m * e_comp.
  bool lead_divides(const Monomial& m, std::uint32_t comp) const;

 private:
  PolyRing ring_;
  FreeModule ambient_;
  ModuleOrder order_;
  std::vector<ModVec> elements_;
  std::vector<Polynomial> ideal_basis_;
  bool reduced_;
  std::shared_ptr<const detail::Reducer> reducer_;
};

/// Reduced Groebner basis of the submodule plus I * (ambient). Deterministic.
/// Throws ResourceError when an S-pair exceeds the degree cap.
GroebnerBasis buchberger(const SubmodulePresentation& gens, const GroebnerOptions& options);

/// Same as buchberger, with the Groebner basis of I already known.
GroebnerBasis submodule_basis(const PolyRing& ring, const FreeModule& ambient,
                              const std::vector<FreeModuleElement>& gens,
                              const std::vector<Polynomial>& ideal_basis, const GroebnerOptions& options);

/// Reduced Groebner basis of an ideal of the polynomial ring.
std::vector<Polynomial> ideal_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens,
                                             int degree_cap = kDefaultDegreeCap);

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& gb);

/// Normal forms modulo a fixed ideal Groebner basis, prepared once.
class IdealReducer {
 public:
  IdealReducer(const PolyRing& ring, const std::vector<Polynomial>& gb);
  ~IdealReducer();
  IdealReducer(const IdealReducer&) = delete;
  IdealReducer& operator=(const IdealReducer&) = delete;

  Polynomial reduce(const Polynomial& f) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Generators of the syzygies among the elements of gb that are nonzero modulo
/// I, computed over S/I. The ambient carries the degrees of those elements.
SubmodulePresentation syzygy_basis(const GroebnerBasis& gb, int degree_cap = kDefaultDegreeCap);

/// Minimal homogeneous generators of the kernel of the map R(-deg g_j) -> ambient
/// sending e_j to g_j, where R = S / (ideal_basis). Generator degrees are
/// passed explicitly so zero columns keep their twist. Output elements are
/// reduced modulo I; the returned list is a minimal generating set.
std::vector<FreeModuleElement> kernel(const PolyRing& ring, const FreeModule& ambient,
                                      const std::vector<FreeModuleElement>& gens,
                                      const std::vector<int>& gen_degrees,
                                      const std::vector<Polynomial>& ideal_basis,
                                      const GroebnerOptions& options);

/// Indices of a minimal generating subset of gens for the image in
/// ambient / I * ambient, chosen greedily by degree then input order.
std::vector<std::size_t> minimal_generator_indices(const PolyRing& ring, const FreeModule& ambient,
                                                   const std::vector<FreeModuleElement>& gens,
                                                   const std::vector<Polynomial>& ideal_basis,
                                                   const GroebnerOptions& options);

}  // namespace syzlab
