#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/field.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab {

struct PolyTerm {
  Coeff coeff;
  Monomial mono;

  bool operator==(const PolyTerm&) const = default;
};

/// Terms sorted strictly descending in the owning ring's order, no zero
/// coefficients. Only PolyRing produces non-trivial values, which keeps the
/// representation canonical.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  const PolyTerm& lead() const { return terms_.front(); }

  /// Degree of the leading term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;
  /// Coefficient of the constant monomial (0 if absent).
  Coeff constant_term() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  bool operator==(const Polynomial&) const = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<PolyTerm> terms) : terms_(std::move(terms)) {}
  std::vector<PolyTerm> terms_;
};

/// F_p[x1..xn] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order = {});

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  /// Index of a variable by name, or -1.
  int variable_index(const std::string& name) const;

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(1); }
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial term(Coeff c, const Monomial& m) const;
  /// Sorts and combines arbitrary terms into canonical form.
  Polynomial from_terms(std::vector<PolyTerm> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, Coeff c) const;
  Polynomial mul_term(const Polynomial& f, Coeff c, const Monomial& m) const;
  Polynomial pow(const Polynomial& f, int e) const;
  /// f scaled so the leading coefficient is 1.
  Polynomial monic(const Polynomial& f) const;

  /// Re-sorts f for a different order (used when copying between rings).
  Polynomial reorder(const Polynomial& f) const { return from_terms(f.terms()); }

  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;
  /// Reads expressions built from +, -, *, ^, parentheses, integers and the
  /// ring's variables. Throws UsageError with the offending column.
  Polynomial parse(std::string_view text) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

enum class PolyOp { Add, Mul, Scale };

/// Single entry point for the three basic arithmetic operations. For Scale the
/// second operand must be a constant polynomial.
Polynomial poly_arith(const PolyRing& ring, PolyOp op, const Polynomial& f, const Polynomial& g);

/// Graded free module F = R(-a_1) + ... + R(-a_r); degrees[i] = a_i is the
/// internal degree of the i-th basis vector.
struct FreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  bool operator==(const FreeModule&) const = default;
};

struct FreeModuleElement {
  std::vector<Polynomial> components;

  bool is_zero() const;
  bool operator==(const FreeModuleElement&) const = default;
};

/// Common value of deg(term) + degrees[position] across all terms; nullopt when
/// the terms disagree or the element is zero.
std::optional<int> homogeneous_degree(const FreeModule& module, const FreeModuleElement& e);

}  // namespace syzlab
