#pragma once

#include <cstdint>
#include <vector>

#include "syzlab/monomial.hpp"

namespace syzlab {

/// Integer polynomial sum_k coeffs[k] t^(offset + k).
struct LaurentPoly {
  int offset = 0;
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  /// Drops zero coefficients at both ends.
  void normalize();
  bool operator==(const LaurentPoly& other) const;
};

/// Numerator N of HS(S / J) = N(t) / (1 - t)^nvars for a monomial ideal J.
std::vector<std::int64_t> hilbert_numerator(std::size_t nvars, std::vector<Monomial> gens);

/// Hilbert series stored in lowest terms: numerator / (1 - t)^dimension.
/// dimension is the Krull dimension; the zero module has dimension -1 and
/// numerator 0.
struct HilbertSeries {
  LaurentPoly numerator;
  int dimension = -1;

  /// Builds from N / (1 - t)^nvars and cancels factors of (1 - t).
  static HilbertSeries from_numerator(LaurentPoly n, int nvars);

  std::int64_t value(int degree) const;
  bool is_zero() const { return dimension < 0; }
  /// Sum of all values; only meaningful when dimension == 0.
  std::int64_t length() const;

  HilbertSeries operator+(const HilbertSeries& other) const;
  HilbertSeries operator-(const HilbertSeries& other) const;
  /// M(-s): every degree shifted up by s.
  HilbertSeries shifted(int s) const;
  bool operator==(const HilbertSeries& other) const {
    return dimension == other.dimension && numerator == other.numerator;
  }
};

/// Values h(d) on a window, plus the exact series they come from.
struct HilbertFunction {
  int first_degree = 0;
  std::vector<std::int64_t> values;
  HilbertSeries series;

  std::int64_t at(int d) const;
  bool identically_zero() const;
};

HilbertFunction sample(const HilbertSeries& s, int first_degree, int last_degree);

}  // namespace syzlab
