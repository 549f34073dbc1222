#include "syzlab/module.hpp"

#include <algorithm>

#include "syzlab/errors.hpp"

namespace syzlab {

PresentedModule PresentedModule::free(RingPtr ring, std::vector<int> degrees) {
  return PresentedModule(Matrix(std::move(ring), std::move(degrees), {}));
}

PresentedModule PresentedModule::zero(RingPtr ring) { return PresentedModule(Matrix(std::move(ring), {}, {})); }

PresentedModule PresentedModule::residue_field(RingPtr ring, int twist) {
  std::size_t n = ring->nvars();
  Matrix m(ring, {twist}, std::vector<int>(n, twist + 1));
  for (std::size_t i = 0; i < n; ++i) m.set(0, i, ring->poly().variable(i));
  return PresentedModule(std::move(m));
}

PresentedModule PresentedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<int> cd;
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    Polynomial r = ring->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw UsageError("ideal generator " + ring->poly().format(g) + " is not homogeneous");
    cd.push_back(r.degree());
    kept.push_back(r);
  }
  Matrix m(ring, {0}, cd);
  for (std::size_t j = 0; j < kept.size(); ++j) m.set(0, j, kept[j]);
  return PresentedModule(std::move(m));
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  return PresentedModule(direct_sum(a.presentation(), b.presentation()));
}

PresentedModule twist(const PresentedModule& m, int s) {
  const Matrix& p = m.presentation();
  std::vector<int> rd = p.row_degrees(), cd = p.col_degrees();
  for (int& d : rd) d -= s;
  for (int& d : cd) d -= s;
  Matrix t(p.ring(), rd, cd);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) t.set(i, j, p.at(i, j));
  }
  return PresentedModule(std::move(t));
}

Matrix prune(const Matrix& p) {
  const RingPtr& ring = p.ring();
  const PolyRing& P = ring->poly();
  const PrimeField& F = ring->field();
  std::size_t rows = p.rows(), cols = p.cols();
  std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = p.at(i, j);
  }
  std::vector<bool> row_alive(rows, true), col_alive(cols, true);
  for (;;) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = 0; j < cols && pr == rows; ++j) {
      if (!col_alive[j]) continue;
      for (std::size_t i = 0; i < rows; ++i) {
        if (row_alive[i] && a[i][j].constant_term() != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    Coeff inv = F.inv(a[pr][pc].constant_term());
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == pc || !col_alive[j] || a[pr][j].is_zero()) continue;
      // column j -= (a[pr][j] / u) * column pc
      Polynomial factor = P.scale(a[pr][j], inv);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!row_alive[i] || a[i][pc].is_zero()) continue;
        a[i][j] = ring->reduce(P.sub(a[i][j], P.mul(factor, a[i][pc])));
      }
    }
    row_alive[pr] = false;
    col_alive[pc] = false;
  }
  std::vector<int> rd, cd;
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_alive[i]) {
      ri.push_back(i);
      rd.push_back(p.row_degrees()[i]);
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (!col_alive[j]) continue;
    bool zero = true;
    for (auto i : ri) zero = zero && a[i][j].is_zero();
    if (zero) continue;
    ci.push_back(j);
    cd.push_back(p.col_degrees()[j]);
  }
  Matrix out(ring, rd, cd);
  for (std::size_t r = 0; r < ri.size(); ++r) {
    for (std::size_t c = 0; c < ci.size(); ++c) out.set(r, c, a[ri[r]][ci[c]]);
  }
  return out;
}

PresentedModule minimal_presentation(const PresentedModule& m) {
  Matrix p = prune(m.presentation());
  const RingPtr& ring = p.ring();
  auto keep = minimal_generator_indices(ring->poly(), p.target(), p.columns(), ring->ideal_basis(),
                                        ring->groebner_options());
  if (keep.size() == p.cols()) return PresentedModule(std::move(p));
  return PresentedModule(p.select_columns(keep));
}

GroebnerBasis relation_basis(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const Matrix& p = m.presentation();
  return submodule_basis(ring->poly(), p.target(), p.columns(), ring->ideal_basis(), ring->groebner_options());
}

HilbertSeries hilbert_series(const PresentedModule& m) {
  if (m.num_generators() == 0) return {};
  GroebnerBasis gb = relation_basis(m);
  const auto& degs = m.generator_degrees();
  std::vector<std::vector<Monomial>> leads(degs.size());
  for (const auto& e : gb.elements()) leads[e.front().comp].push_back(e.front().mono);
  int lo = *std::min_element(degs.begin(), degs.end());
  LaurentPoly total;
  total.offset = lo;
  for (std::size_t c = 0; c < degs.size(); ++c) {
    auto n = hilbert_numerator(m.ring()->nvars(), leads[c]);
    std::size_t shift = static_cast<std::size_t>(degs[c] - lo);
    if (total.coeffs.size() < n.size() + shift) total.coeffs.resize(n.size() + shift, 0);
    for (std::size_t k = 0; k < n.size(); ++k) total.coeffs[k + shift] += n[k];
  }
  return HilbertSeries::from_numerator(total, static_cast<int>(m.ring()->nvars()));
}

HilbertFunction hilbert_function(const PresentedModule& m, int bound) {
  if (bound < 0) throw UsageError("Hilbert degree bound must be non-negative");
  int start = 0;
  if (m.num_generators() > 0) start = *std::min_element(m.generator_degrees().begin(), m.generator_degrees().end());
  int lo = std::min(0, start);
  int hi = std::max(bound, start + bound);
  return sample(hilbert_series(m), lo, hi);
}

bool is_zero_module(const PresentedModule& m) {
  if (m.num_generators() == 0) return true;
  return hilbert_series(m).is_zero();
}

int krull_dimension(const PresentedModule& m) {
  HilbertSeries s = hilbert_series(m);
  if (s.is_zero()) throw UsageError("Krull dimension of the zero module is undefined");
  return s.dimension;
}

std::optional<std::int64_t> module_length(const PresentedModule& m) {
  HilbertSeries s = hilbert_series(m);
  if (s.is_zero()) return 0;
  if (s.dimension > 0) return std::nullopt;
  return s.length();
}

bool annihilates(const Polynomial& x, const PresentedModule& m) {
  if (m.num_generators() == 0) return true;
  Polynomial r = m.ring()->reduce(x);
  if (r.is_zero()) return true;
  GroebnerBasis gb = relation_basis(m);
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    FreeModuleElement e;
    for (std::size_t k = 0; k < m.num_generators(); ++k) e.components.push_back(k == i ? r : Polynomial());
    if (!gb.contains(e)) return false;
  }
  return true;
}

}  // namespace syzlab
