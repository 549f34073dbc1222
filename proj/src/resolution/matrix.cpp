#include "syzlab/matrix.hpp"

#include "syzlab/errors.hpp"

namespace syzlab {

Matrix::Matrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : ring_(std::move(ring)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size()) {}

Matrix Matrix::identity(RingPtr ring, const std::vector<int>& degrees) {
  Matrix m(ring, degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) m.entries_[i * degrees.size() + i] = ring->poly().one();
  return m;
}

Matrix Matrix::from_columns(RingPtr ring, std::vector<int> row_degrees,
                            const std::vector<FreeModuleElement>& columns, std::vector<int> col_degrees) {
  if (columns.size() != col_degrees.size()) throw UsageError("column degree list has the wrong length");
  Matrix m(std::move(ring), std::move(row_degrees), std::move(col_degrees));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].components.size() != m.rows()) throw UsageError("column has the wrong length");
    for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, j, columns[j].components[i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Polynomial& p) {
  Polynomial r = ring_->reduce(p);
  if (!r.is_zero()) {
    if (!r.is_homogeneous() || r.degree() != col_degrees_[j] - row_degrees_[i]) {
      throw UsageError("entry " + ring_->poly().format(r) + " at (" + std::to_string(i) + "," +
                       std::to_string(j) + ") does not have degree " +
                       std::to_string(col_degrees_[j] - row_degrees_[i]));
    }
  }
  entries_[i * cols() + j] = std::move(r);
}

FreeModuleElement Matrix::column(std::size_t j) const {
  FreeModuleElement e;
  e.components.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) e.components.push_back(at(i, j));
  return e;
}

std::vector<FreeModuleElement> Matrix::columns() const {
  std::vector<FreeModuleElement> out;
  out.reserve(cols());
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_minimal() const {
  for (const auto& e : entries_) {
    if (e.constant_term() != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose_dual() const {
  std::vector<int> rd, cd;
  for (int d : col_degrees_) rd.push_back(-d);
  for (int d : row_degrees_) cd.push_back(-d);
  Matrix t(ring_, rd, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) t.entries_[j * t.cols() + i] = at(i, j);
  }
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  std::vector<int> cd;
  for (auto j : idx) cd.push_back(col_degrees_.at(j));
  Matrix m(ring_, row_degrees_, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) m.entries_[i * m.cols() + k] = at(i, idx[k]);
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<int> rd;
  for (auto i : idx) rd.push_back(row_degrees_.at(i));
  Matrix m(ring_, rd, col_degrees_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[k * m.cols() + j] = at(idx[k], j);
  }
  return m;
}

Matrix Matrix::concat(const Matrix& other) const {
  ring_->require_same(other.ring_);
  if (row_degrees_ != other.row_degrees_) throw UsageError("cannot concatenate maps with different targets");
  std::vector<int> cd = col_degrees_;
  cd.insert(cd.end(), other.col_degrees_.begin(), other.col_degrees_.end());
  Matrix m(ring_, row_degrees_, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[i * m.cols() + j] = at(i, j);
    for (std::size_t j = 0; j < other.cols(); ++j) m.entries_[i * m.cols() + cols() + j] = other.at(i, j);
  }
  return m;
}

Matrix Matrix::scaled(const Polynomial& f, int degree) const {
  std::vector<int> cd;
  for (int d : col_degrees_) cd.push_back(d + degree);
  Matrix m(ring_, row_degrees_, cd);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    m.entries_[k] = ring_->reduce(ring_->poly().mul(entries_[k], f));
  }
  return m;
}

Matrix Matrix::rebind(RingPtr ring) const {
  if (ring->canonical() != ring_->canonical()) throw InvariantError("rebinding a matrix to a different ring");
  Matrix m = *this;
  m.ring_ = std::move(ring);
  return m;
}

std::string Matrix::format() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols(); ++j) s += (j ? ", " : "") + ring_->poly().format(at(i, j));
    s += "]";
  }
  return s + "]";
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && row_degrees_ == other.row_degrees_ && col_degrees_ == other.col_degrees_ &&
         entries_ == other.entries_;
}

Matrix product(const Matrix& a, const Matrix& b) {
  a.ring()->require_same(b.ring());
  if (a.col_degrees() != b.row_degrees()) throw UsageError("matrix product of incompatible maps");
  const PolyRing& P = a.ring()->poly();
  Matrix m(a.ring(), a.row_degrees(), b.col_degrees());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc = P.add(acc, P.mul(a.at(i, k), b.at(k, j)));
      }
      m.set(i, j, acc);
    }
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  a.ring()->require_same(b.ring());
  const PolyRing& P = a.ring()->poly();
  std::vector<int> rd, cd;
  for (int x : a.row_degrees()) {
    for (int y : b.row_degrees()) rd.push_back(x + y);
  }
  for (int x : a.col_degrees()) {
    for (int y : b.col_degrees()) cd.push_back(x + y);
  }
  Matrix m(a.ring(), rd, cd);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          m.set(i * b.rows() + k, j * b.cols() + l, P.mul(a.at(i, j), b.at(k, l)));
        }
      }
    }
  }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  a.ring()->require_same(b.ring());
  std::vector<int> rd = a.row_degrees(), cd = a.col_degrees();
  rd.insert(rd.end(), b.row_degrees().begin(), b.row_degrees().end());
  cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  Matrix m(a.ring(), rd, cd);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  }
  return m;
}

Matrix kernel_matrix(const Matrix& a) {
  const RingPtr& R = a.ring();
  std::vector<FreeModuleElement> syz;
  if (a.cols() > 0) {
    syz = kernel(R->poly(), a.target(), a.columns(), a.col_degrees(), R->ideal_basis(), R->groebner_options());
  }
  FreeModule source{a.col_degrees()};
  std::vector<int> degs;
  for (const auto& s : syz) {
    auto d = homogeneous_degree(source, s);
    if (!d) throw InvariantError("syzygy is not homogeneous");
    degs.push_back(*d);
  }
  return Matrix::from_columns(R, a.col_degrees(), syz, degs);
}

}  // namespace syzlab
