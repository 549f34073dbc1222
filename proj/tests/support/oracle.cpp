#include "support/oracle.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

std::size_t rank(const PrimeField& F, std::vector<Row> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    Coeff inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Coeff f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

Slice::Slice(const PolyRing& ring, const FreeModule& module, int degree)
    : ring_(ring), module_(module), degree_(degree) {
  for (std::size_t k = 0; k < module.rank(); ++k) {
    for (const auto& m : monomials_of_degree(ring.nvars(), degree - module.degrees[k])) {
      std::vector<int> key(m.raw().begin(), m.raw().begin() + ring.nvars());
      index_.emplace(std::make_pair(k, key), index_.size());
    }
  }
}

Row Slice::coords(const FreeModuleElement& e) const {
  Row row(dim(), 0);
  for (std::size_t k = 0; k < e.components.size(); ++k) {
    for (const auto& t : e.components[k].terms()) {
      std::vector<int> key(t.mono.raw().begin(), t.mono.raw().begin() + ring_.nvars());
      auto it = index_.find({k, key});
      if (it == index_.end()) throw std::logic_error("term outside the slice");
      row[it->second] = ring_.field().add(row[it->second], t.coeff);
    }
  }
  return row;
}

std::vector<Row> Slice::multiples(const FreeModuleElement& g) const {
  std::vector<Row> rows;
  if (g.is_zero()) return rows;
  auto deg = syzlab::homogeneous_degree(module_, g);
  if (!deg) throw std::logic_error("inhomogeneous element");
  for (const auto& m : monomials_of_degree(ring_.nvars(), degree_ - *deg)) {
    FreeModuleElement mg;
    for (const auto& c : g.components) mg.components.push_back(ring_.mul_term(c, 1, m));
    rows.push_back(coords(mg));
  }
  return rows;
}

std::vector<Row> Slice::relation_rows(const std::vector<Polynomial>& ideal) const {
  std::vector<Row> rows;
  for (std::size_t k = 0; k < module_.rank(); ++k) {
    for (const auto& h : ideal) {
      if (h.is_zero()) continue;
      FreeModuleElement e;
      for (std::size_t c = 0; c < module_.rank(); ++c) e.components.push_back(c == k ? h : ring_.zero());
      auto more = multiples(e);
      rows.insert(rows.end(), more.begin(), more.end());
    }
  }
  return rows;
}

namespace {

std::vector<Row> submodule_rows(const Slice& s, const std::vector<FreeModuleElement>& gens,
                                const std::vector<Polynomial>& ideal) {
  std::vector<Row> rows = s.relation_rows(ideal);
  for (const auto& g : gens) {
    auto more = s.multiples(g);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  return rows;
}

}  // namespace

bool is_member(const PolyRing& ring, const FreeModule& module, const std::vector<FreeModuleElement>& gens,
               const std::vector<Polynomial>& ideal, const FreeModuleElement& f) {
  if (f.is_zero()) return true;
  auto deg = syzlab::homogeneous_degree(module, f);
  if (!deg) throw std::logic_error("inhomogeneous element");
  Slice s(ring, module, *deg);
  auto rows = submodule_rows(s, gens, ideal);
  std::size_t r0 = rank(ring.field(), rows);
  rows.push_back(s.coords(f));
  return rank(ring.field(), rows) == r0;
}

std::size_t quotient_dim(const PolyRing& ring, const FreeModule& module,
                         const std::vector<FreeModuleElement>& gens, const std::vector<Polynomial>& ideal,
                         int degree) {
  Slice s(ring, module, degree);
  return s.dim() - rank(ring.field(), submodule_rows(s, gens, ideal));
}

std::size_t kernel_dim(const PolyRing& ring, const FreeModule& module,
                       const std::vector<FreeModuleElement>& gens, const std::vector<int>& gen_degrees,
                       const std::vector<Polynomial>& ideal, int degree) {
  std::size_t source = 0;
  FreeModule one{{0}};
  for (int a : gen_degrees) source += quotient_dim(ring, one, {}, ideal, degree - a);
  Slice s(ring, module, degree);
  auto rel = s.relation_rows(ideal);
  std::size_t r_rel = rank(ring.field(), rel);
  auto rows = submodule_rows(s, gens, ideal);
  std::size_t image = rank(ring.field(), rows) - r_rel;
  return source - image;
}

std::vector<std::size_t> koszul_homology_dims(const PolyRing& ring, const std::vector<Polynomial>& ideal,
                                              const FreeModule& module,
                                              const std::vector<FreeModuleElement>& presentation,
                                              const std::vector<Polynomial>& f, int max_degree) {
  const PrimeField& F = ring.field();
  std::size_t g = f.size();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(g + 1);
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < g; ++b) {
      if (mask & (1u << b)) s.push_back(b);
    }
    subsets[s.size()].push_back(s);
  }
  auto subset_degree = [&](const std::vector<std::size_t>& s) {
    int d = 0;
    for (auto b : s) d += f[b].degree();
    return d;
  };

  std::vector<std::size_t> result(g + 1, 0);
  int min_degree = 0;
  for (int a : module.degrees) min_degree = std::min(min_degree, a);
  for (int d = min_degree; d <= max_degree; ++d) {
    // blocks of A_i in internal degree d
    std::vector<std::vector<Slice>> slices(g + 1);
    std::vector<std::vector<std::size_t>> offsets(g + 1);
    std::vector<std::size_t> dims(g + 1, 0);
    for (std::size_t i = 0; i <= g; ++i) {
      for (const auto& s : subsets[i]) {
        slices[i].emplace_back(ring, module, d - subset_degree(s));
        offsets[i].push_back(dims[i]);
        dims[i] += slices[i].back().dim();
      }
    }
    auto u_rows = [&](std::size_t i) {
      std::vector<Row> rows;
      for (std::size_t b = 0; b < subsets[i].size(); ++b) {
        for (const auto& r : submodule_rows(slices[i][b], presentation, ideal)) {
          Row full(dims[i], 0);
          std::copy(r.begin(), r.end(), full.begin() + offsets[i][b]);
          rows.push_back(std::move(full));
        }
      }
      return rows;
    };
    // phi_i(A_i) rows in A_{i-1} coordinates
    auto phi_rows = [&](std::size_t i) {
      std::vector<Row> rows;
      for (std::size_t b = 0; b < subsets[i].size(); ++b) {
        const auto& s = subsets[i][b];
        int block_deg = d - subset_degree(s);
        for (std::size_t k = 0; k < module.rank(); ++k) {
          for (const auto& m : monomials_of_degree(ring.nvars(), block_deg - module.degrees[k])) {
            Row row(dims[i - 1], 0);
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
              std::vector<std::size_t> rest = s;
              rest.erase(rest.begin() + pos);
              std::size_t target = 0;
              while (subsets[i - 1][target] != rest) ++target;
              FreeModuleElement e;
              for (std::size_t c = 0; c < module.rank(); ++c) {
                e.components.push_back(c == k ? ring.mul_term(f[s[pos]], pos % 2 == 0 ? 1 : F.neg(1), m)
                                              : ring.zero());
              }
              Row local = slices[i - 1][target].coords(e);
              for (std::size_t x = 0; x < local.size(); ++x) {
                auto& cell = row[offsets[i - 1][target] + x];
                cell = F.add(cell, local[x]);
              }
            }
            rows.push_back(std::move(row));
          }
        }
      }
      return rows;
    };
    for (std::size_t i = 0; i <= g; ++i) {
      long long h = static_cast<long long>(dims[i]);
      if (i > 0) {
        auto rows = phi_rows(i);
        auto u = u_rows(i - 1);
        std::size_t ru = rank(F, u);
        rows.insert(rows.end(), u.begin(), u.end());
        h = h - static_cast<long long>(rank(F, rows)) + static_cast<long long>(ru);
      }
      if (i < g) {
        auto rows = phi_rows(i + 1);
        auto u = u_rows(i);
        rows.insert(rows.end(), u.begin(), u.end());
        h -= static_cast<long long>(rank(F, rows));
      } else {
        h -= static_cast<long long>(rank(F, u_rows(i)));
      }
      if (h < 0) throw std::logic_error("negative homology dimension");
      result[i] += static_cast<std::size_t>(h);
    }
  }
  return result;
}

}  // namespace oracle
