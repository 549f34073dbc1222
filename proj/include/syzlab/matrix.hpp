#pragma once

#include <string>
#include <vector>

#include "syzlab/ring.hpp"

namespace syzlab {

/// Homogeneous map  sum_j R(-col_degrees[j]) -> sum_i R(-row_degrees[i]).
/// Entry (i, j) is zero or homogeneous of degree col_degrees[j] - row_degrees[i],
/// and is kept reduced modulo the ring's relations.
class Matrix {
 public:
  Matrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees);
  static Matrix identity(RingPtr ring, const std::vector<int>& degrees);
  static Matrix from_columns(RingPtr ring, std::vector<int> row_degrees,
                             const std::vector<FreeModuleElement>& columns, std::vector<int> col_degrees);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  /// Stores the normal form of p; throws UsageError if the degree is wrong.
  void set(std::size_t i, std::size_t j, const Polynomial& p);

  FreeModuleElement column(std::size_t j) const;
  std::vector<FreeModuleElement> columns() const;
  FreeModule target() const { return FreeModule{row_degrees_}; }

  bool is_zero() const;
  /// Every entry lies in the maximal ideal.
  bool is_minimal() const;

  /// Hom(-, R) of this map; degrees negate.
  Matrix transpose_dual() const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  /// Matrix with the same target whose columns are this matrix's followed by other's.
  Matrix concat(const Matrix& other) const;
  Matrix scaled(const Polynomial& f, int degree) const;
  /// Same entries over an identical copy of the ring.
  Matrix rebind(RingPtr ring) const;

  std::string format() const;
  bool operator==(const Matrix& other) const;

 private:
  RingPtr ring_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<Polynomial> entries_;
};

/// A * B; requires A.col_degrees == B.row_degrees.
Matrix product(const Matrix& a, const Matrix& b);
/// Tensor product of maps, basis ordered (i, k) -> i * rows(B) + k.
Matrix kron(const Matrix& a, const Matrix& b);
/// Block diagonal.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Minimal homogeneous generators of ker(a), as the columns of a map into
/// the source of a.
Matrix kernel_matrix(const Matrix& a);

}  // namespace syzlab
