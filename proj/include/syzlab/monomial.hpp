#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace syzlab {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// Exponent vector with every variable of degree 1. The degree is cached and
/// always equals the exponent sum.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  /// Throws ResourceError when an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Bit signature for quick non-divisibility rejection.
  std::uint32_t divmask() const;

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

  const std::array<std::uint8_t, kMaxVariables>& raw() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class MonomialOrderKind { Lex, GrevLex };

/// Total monomial order on a fixed variable set (x1 > x2 > ... > xn).
class MonomialOrder {
 public:
  constexpr MonomialOrder(MonomialOrderKind kind = MonomialOrderKind::GrevLex) : kind_(kind) {}

  MonomialOrderKind kind() const { return kind_; }
  std::string name() const;

  /// Throws UsageError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const {
    if (kind_ == MonomialOrderKind::GrevLex) {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = kMaxVariables; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrderKind kind_;
};

MonomialOrder parse_monomial_order(const std::string& name);

std::strong_ordering monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// How a monomial order is extended to terms m*e_i of a free module.
enum class ModuleExtension { PositionOverTerm, TermOverPosition, Schreyer };

/// Order on module terms (m, i). Lower component index is larger. An optional
/// block boundary b makes every component < b larger than every component >= b,
/// which turns the order into an elimination order for the first block.
class ModuleOrder {
 public:
  explicit ModuleOrder(MonomialOrder base = {}, ModuleExtension ext = ModuleExtension::TermOverPosition);
  /// Schreyer order: m*e_i compares as m*component_monomials[i], ties by index.
  static ModuleOrder schreyer(MonomialOrder base, std::vector<Monomial> component_monomials);

  ModuleOrder with_block(std::uint32_t boundary) const;

  const MonomialOrder& base() const { return base_; }
  ModuleExtension extension() const { return ext_; }
  std::uint32_t block_boundary() const { return block_; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                               std::uint32_t cb) const {
    if (block_ != kNoBlock) {
      bool a_high = ca < block_;
      bool b_high = cb < block_;
      if (a_high != b_high) return a_high ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    switch (ext_) {
      case ModuleExtension::PositionOverTerm:
        if (ca != cb) return cb <=> ca;
        return base_.compare_unchecked(a, b);
      case ModuleExtension::TermOverPosition: {
        auto c = base_.compare_unchecked(a, b);
        if (c != 0) return c;
        return cb <=> ca;
      }
      case ModuleExtension::Schreyer: {
        auto c = base_.compare_unchecked(a * schreyer_[ca], b * schreyer_[cb]);
        if (c != 0) return c;
        return cb <=> ca;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  static constexpr std::uint32_t kNoBlock = 0xffffffffu;
  MonomialOrder base_;
  ModuleExtension ext_;
  std::uint32_t block_ = kNoBlock;
  std::vector<Monomial> schreyer_;
};

}  // namespace syzlab
