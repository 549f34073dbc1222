#include "syzlab/hilbert.hpp"

#include <algorithm>

namespace syzlab {

bool LaurentPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

void LaurentPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) {
    coeffs.clear();
    offset = 0;
    return;
  }
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  offset += static_cast<int>(lead);
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  LaurentPoly a = *this, b = other;
  a.normalize();
  b.normalize();
  return a.offset == b.offset && a.coeffs == b.coeffs;
}

namespace {

using Poly = std::vector<std::int64_t>;

void add_into(Poly& acc, const Poly& p, std::size_t shift, std::int64_t sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += sign * p[k];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Poly numerator_rec(std::size_t nvars, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
    }
  }
  if (coprime) {
    Poly acc{1};
    for (const auto& g : gens) {
      Poly next;
      add_into(next, acc, 0, 1);
      add_into(next, acc, static_cast<std::size_t>(g.degree()), -1);
      acc = std::move(next);
    }
    return acc;
  }
  // pivot on the variable occurring in the most generators:
  // HS(S/J) = HS(S/(J + x)) + t * HS(S/(J : x))
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens) count += g[v] > 0 ? 1 : 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  Monomial pivot = Monomial::variable(nvars, best);
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g[best] > 0 ? pivot.cofactor_in(g) : g);
  Poly acc;
  add_into(acc, numerator_rec(nvars, std::move(plus)), 0, 1);
  add_into(acc, numerator_rec(nvars, std::move(colon)), 1, 1);
  return acc;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LaurentPoly lift(const HilbertSeries& s, int dim) {
  // numerator times (1 - t)^(dim - s.dimension)
  LaurentPoly n = s.numerator;
  for (int k = s.dimension; k < dim; ++k) {
    std::vector<std::int64_t> next(n.coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < n.coeffs.size(); ++i) {
      next[i] += n.coeffs[i];
      next[i + 1] -= n.coeffs[i];
    }
    n.coeffs = std::move(next);
  }
  return n;
}

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign) {
  if (a.coeffs.empty()) {
    LaurentPoly r = b;
    for (auto& c : r.coeffs) c *= sign;
    return r;
  }
  if (b.coeffs.empty()) return a;
  int lo = std::min(a.offset, b.offset);
  int hi = std::max(a.offset + static_cast<int>(a.coeffs.size()), b.offset + static_cast<int>(b.coeffs.size()));
  LaurentPoly r;
  r.offset = lo;
  r.coeffs.assign(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.offset - lo + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.offset - lo + i] += sign * b.coeffs[i];
  return r;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::size_t nvars, std::vector<Monomial> gens) {
  auto p = numerator_rec(nvars, std::move(gens));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

HilbertSeries HilbertSeries::from_numerator(LaurentPoly n, int nvars) {
  n.normalize();
  HilbertSeries s;
  if (n.coeffs.empty()) return s;
  int dim = nvars;
  while (dim > 0) {
    std::int64_t at_one = 0;
    for (auto c : n.coeffs) at_one += c;
    if (at_one != 0) break;
    // N = (1 - t) Q  =>  Q_k = N_0 + ... + N_k
    std::vector<std::int64_t> q(n.coeffs.size() - 1);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < n.coeffs.size(); ++k) {
      run += n.coeffs[k];
      q[k] = run;
    }
    n.coeffs = std::move(q);
    n.normalize();
    --dim;
  }
  s.numerator = std::move(n);
  s.dimension = dim;
  return s;
}

std::int64_t HilbertSeries::value(int degree) const {
  if (dimension < 0) return 0;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < numerator.coeffs.size(); ++k) {
    int e = degree - numerator.offset - static_cast<int>(k);
    if (e < 0) continue;
    if (dimension == 0) {
      if (e == 0) total += numerator.coeffs[k];
    } else {
      total += numerator.coeffs[k] * binomial(e + dimension - 1, dimension - 1);
    }
  }
  return total;
}

std::int64_t HilbertSeries::length() const {
  std::int64_t total = 0;
  for (auto c : numerator.coeffs) total += c;
  return total;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& other) const {
  int dim = std::max({dimension, other.dimension, 0});
  return from_numerator(combine(lift(*this, dim), lift(other, dim), 1), dim);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& other) const {
  int dim = std::max({dimension, other.dimension, 0});
  return from_numerator(combine(lift(*this, dim), lift(other, dim), -1), dim);
}

HilbertSeries HilbertSeries::shifted(int s) const {
  HilbertSeries r = *this;
  if (!r.is_zero()) r.numerator.offset += s;
  return r;
}

std::int64_t HilbertFunction::at(int d) const {
  if (d >= first_degree && d < first_degree + static_cast<int>(values.size())) return values[d - first_degree];
  return series.value(d);
}

bool HilbertFunction::identically_zero() const { return series.is_zero(); }

HilbertFunction sample(const HilbertSeries& s, int first_degree, int last_degree) {
  HilbertFunction h;
  h.first_degree = first_degree;
  h.series = s;
  for (int d = first_degree; d <= last_degree; ++d) h.values.push_back(s.value(d));
  return h;
}

}  // namespace syzlab
