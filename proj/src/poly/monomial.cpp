#include "syzlab/monomial.hpp"

#include <algorithm>

#include "syzlab/errors.hpp"

namespace syzlab {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents) {
  *this = from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw UsageError("exponent " + std::to_string(exponents[i]) + " out of range");
    }
    m.exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  m.degree_ = static_cast<std::uint16_t>(total);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  if (index >= nvars) throw UsageError("variable index out of range");
  m.exps_[index] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.nvars_ = std::max(nvars_, other.nvars_);
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) {
      throw ResourceError("exponent overflow: " + std::to_string(e) + " exceeds " +
                          std::to_string(kMaxExponent));
    }
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial m;
  m.nvars_ = std::max(nvars_, other.nvars_);
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  m.nvars_ = std::max(nvars_, other.nvars_);
  int total = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    total += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(total);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::divmask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] >= 1) mask |= 1u << i;
    if (exps_[i] >= 2) mask |= 1u << (i + 16);
  }
  return mask;
}

std::string MonomialOrder::name() const {
  return kind_ == MonomialOrderKind::Lex ? "lex" : "grevlex";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) {
    throw UsageError("monomials over " + std::to_string(a.nvars()) + " and " +
                     std::to_string(b.nvars()) + " variables are not comparable");
  }
  return compare_unchecked(a, b);
}

MonomialOrder parse_monomial_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder(MonomialOrderKind::GrevLex);
  if (name == "lex") return MonomialOrder(MonomialOrderKind::Lex);
  throw UsageError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

std::strong_ordering monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

ModuleOrder::ModuleOrder(MonomialOrder base, ModuleExtension ext) : base_(base), ext_(ext) {
  if (ext == ModuleExtension::Schreyer) {
    throw UsageError("use ModuleOrder::schreyer to build a Schreyer order");
  }
}

ModuleOrder ModuleOrder::schreyer(MonomialOrder base, std::vector<Monomial> component_monomials) {
  ModuleOrder order(base);
  order.ext_ = ModuleExtension::Schreyer;
  order.schreyer_ = std::move(component_monomials);
  return order;
}

ModuleOrder ModuleOrder::with_block(std::uint32_t boundary) const {
  ModuleOrder order = *this;
  order.block_ = boundary;
  return order;
}

}  // namespace syzlab
