#pragma once

// Internal Buchberger driver shared by the public Groebner entry points.

#include <cstdint>
#include <vector>

#include "syzlab/groebner.hpp"

namespace syzlab::detail {

/// Reduction helper over a growing list of monic elements.
class Reducer {
 public:
  Reducer(const PrimeField& field, const ModuleOrder& order, std::size_t rank)
      : field_(field), order_(order), by_comp_(rank) {}

  std::uint32_t add(ModVec v);
  const std::vector<ModVec>& elements() const { return elements_; }
  /// Index of the first element whose lead divides m * e_comp, or -1.
  int find_divisor(const Monomial& m, std::uint32_t comp) const;
  /// Full reduction. Result is not made monic.
  ModVec reduce(ModVec v) const;
  /// Only reduces until the lead term is irreducible.
  ModVec reduce_lead(ModVec v) const;

  /// f - c * m * g, where the lead of f cancels (g monic, c = lead coeff of f).
  /// Terms of f before `start` are dropped.
  ModVec subtract_multiple(const ModVec& f, std::size_t start, Coeff c, const Monomial& m,
                           const ModVec& g, std::size_t g_start) const;

  const PrimeField& field() const { return field_; }
  const ModuleOrder& order() const { return order_; }

 private:
  PrimeField field_;
  ModuleOrder order_;
  std::vector<ModVec> elements_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<std::uint32_t> masks_;
};

void make_monic(const PrimeField& field, ModVec& v);
ModVec sort_terms(const PrimeField& field, const ModuleOrder& order, ModVec terms);

enum class EngineMode {
  Plain,
  /// Records which inputs are needed to generate the submodule mod I.
  MinimalGenerators,
  /// Elimination run; elements that land in components >= boundary are new
  /// minimal generators of the intersection with that block.
  Kernel,
};

struct EngineInput {
  PrimeField field;
  std::size_t nvars = 0;
  std::vector<int> degrees;  // ambient twists
  ModuleOrder order;
  std::vector<ModVec> gens;
  std::vector<int> gen_degrees;
  std::vector<Polynomial> ideal_basis;  // monic reduced GB of I
  EngineMode mode = EngineMode::Plain;
  std::uint32_t boundary = 0;
  int degree_cap = kDefaultDegreeCap;
};

struct EngineOutput {
  std::vector<ModVec> basis;
  std::vector<std::size_t> minimal_inputs;
  std::vector<ModVec> kernel;
};

EngineOutput run_engine(const EngineInput& in);

/// Removes redundant elements and tail-reduces; keeps discovery order.
std::vector<ModVec> interreduce(const PrimeField& field, const ModuleOrder& order, std::size_t rank,
                                const std::vector<ModVec>& basis);

}  // namespace syzlab::detail
