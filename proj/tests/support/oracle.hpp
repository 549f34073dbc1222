#pragma once

// Brute-force graded linear algebra over F_p. Independent of the Groebner
// engine; used only to cross-check it.

#include <map>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace oracle {

using syzlab::Coeff;
using syzlab::FreeModule;
using syzlab::FreeModuleElement;
using syzlab::Monomial;
using syzlab::Polynomial;
using syzlab::PolyRing;
using syzlab::PrimeField;

using Row = std::vector<Coeff>;

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);
std::size_t rank(const PrimeField& F, std::vector<Row> rows);

/// Coordinates of the degree-D slice of a graded free module.
class Slice {
 public:
  Slice(const PolyRing& ring, const FreeModule& module, int degree);
  std::size_t dim() const { return index_.size(); }
  Row coords(const FreeModuleElement& e) const;
  /// All m * g with deg(m) chosen so the product lands in this slice.
  std::vector<Row> multiples(const FreeModuleElement& g) const;
  /// I * F in this slice.
  std::vector<Row> relation_rows(const std::vector<Polynomial>& ideal) const;

 private:
  const PolyRing& ring_;
  FreeModule module_;
  int degree_;
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index_;
};

/// f in <gens> + I*F, by linear algebra in the degree of f.
bool is_member(const PolyRing& ring, const FreeModule& module, const std::vector<FreeModuleElement>& gens,
               const std::vector<Polynomial>& ideal, const FreeModuleElement& f);

/// dim_k of (F / (<gens> + I F))_D.
std::size_t quotient_dim(const PolyRing& ring, const FreeModule& module,
                         const std::vector<FreeModuleElement>& gens, const std::vector<Polynomial>& ideal,
                         int degree);

/// dim_k of the degree-D part of the kernel of (S/I)^{r} -> F/IF, e_j -> g_j,
/// where e_j has degree gen_degrees[j].
std::size_t kernel_dim(const PolyRing& ring, const FreeModule& module,
                       const std::vector<FreeModuleElement>& gens, const std::vector<int>& gen_degrees,
                       const std::vector<Polynomial>& ideal, int degree);

/// Koszul homology of the generators f_1..f_g on M = coker(P) over S/I, where
/// P's columns live in `module`. Returns dim H_i(degree-d part) summed over
/// d <= max_degree, for i = 0..g.
std::vector<std::size_t> koszul_homology_dims(const PolyRing& ring, const std::vector<Polynomial>& ideal,
                                              const FreeModule& module,
                                              const std::vector<FreeModuleElement>& presentation,
                                              const std::vector<Polynomial>& f, int max_degree);

}  // namespace oracle
