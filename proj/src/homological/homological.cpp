#include "syzlab/homological.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "syzlab/errors.hpp"

namespace syzlab {

// ---- ideals -----------------------------------------------------------------

Ideal::Ideal(RingPtr ring, const std::vector<Polynomial>& generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) {
    Polynomial r = ring_->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw UsageError("ideal generator " + ring_->poly().format(g) + " is not homogeneous");
    generators_.push_back(std::move(r));
  }
}

bool Ideal::is_proper() const {
  return std::none_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.degree() == 0; });
}

PresentedModule Ideal::quotient() const { return PresentedModule::cyclic(ring_, generators_); }

bool Ideal::contains(const Polynomial& f) const {
  Polynomial r = ring_->reduce(f);
  if (r.is_zero()) return true;
  return annihilates(r, quotient());
}

std::string Ideal::format() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + ring_->poly().format(generators_[i]);
  return s + ")";
}

namespace {

// First coordinates of the minimal kernel generators of m, as an ideal.
Ideal first_coordinates(const Matrix& m) {
  Matrix k = kernel_matrix(m);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < k.cols(); ++j) gens.push_back(k.at(0, j));
  return Ideal(m.ring(), gens);
}

Matrix first_rows(const Matrix& m, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  Matrix top = m.select_rows(idx);
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < top.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < count && zero; ++i) zero = top.at(i, j).is_zero();
    if (!zero) nonzero.push_back(j);
  }
  return top.select_columns(nonzero);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  a.ring()->require_same(b.ring());
  const RingPtr& R = a.ring();
  std::vector<int> cd{0};
  for (const auto& g : a.generators()) cd.push_back(g.degree());
  for (const auto& g : b.generators()) cd.push_back(g.degree());
  Matrix m(R, {0, 0}, cd);
  m.set(0, 0, R->poly().one());
  m.set(1, 0, R->poly().one());
  std::size_t c = 1;
  for (const auto& g : a.generators()) m.set(0, c++, g);
  for (const auto& g : b.generators()) m.set(1, c++, g);
  return first_coordinates(m);
}

Ideal annihilator(const PresentedModule& m) {
  const RingPtr& R = m.ring();
  if (is_zero_module(m)) return Ideal(R, {R->poly().one()});
  const Matrix& p = m.presentation();
  const auto& a = m.generator_degrees();
  std::size_t r = a.size();
  // r copies of F0, copy j shifted so that e_j sits in degree 0
  std::vector<int> rd, cd{0};
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) rd.push_back(a[k] - a[j]);
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (int c : p.col_degrees()) cd.push_back(c - a[j]);
  }
  Matrix big(R, rd, cd);
  for (std::size_t j = 0; j < r; ++j) {
    big.set(j * r + j, 0, R->poly().one());
    for (std::size_t c = 0; c < p.cols(); ++c) {
      for (std::size_t k = 0; k < r; ++k) big.set(j * r + k, 1 + j * p.cols() + c, p.at(k, c));
    }
  }
  return first_coordinates(big);
}

// ---- homology -----------------------------------------------------------------

PresentedModule complex_homology(const Matrix* in, const Matrix& b_pres, const Matrix* out, const Matrix* c_pres) {
  const RingPtr& R = b_pres.ring();
  std::size_t nb = b_pres.rows();
  if (nb == 0) return PresentedModule::zero(R);
  Matrix rel = b_pres;
  if (in != nullptr && in->cols() > 0) rel = in->concat(b_pres);
  if (out == nullptr || out->is_zero()) return minimal_presentation(PresentedModule(rel));

  // cycles: z in B0 with out(z) in im(c_pres)
  Matrix joint = c_pres != nullptr ? out->concat(*c_pres) : *out;
  Matrix z = first_rows(kernel_matrix(joint), nb);
  if (z.cols() == 0) return PresentedModule::zero(R);
  // relations among the cycles: combinations landing in im(in) + im(b_pres)
  Matrix h = first_rows(kernel_matrix(z.concat(rel)), z.cols());
  return minimal_presentation(PresentedModule(std::move(h)));
}

namespace {

std::vector<int> negated(const std::vector<int>& d) {
  std::vector<int> out;
  for (int x : d) out.push_back(-x);
  return out;
}

HomologyModule finish(HomologyKind kind, int index, PresentedModule value, int bound) {
  HilbertFunction h = hilbert_function(value, bound);
  std::optional<std::int64_t> len;
  if (h.series.is_zero()) {
    len = 0;
  } else if (h.series.dimension == 0) {
    len = h.series.length();
  }
  return HomologyModule{kind, index, std::move(value), std::move(h), len};
}

HomologyModule tor_from(const Resolution& res, const PresentedModule& n, int i, int bound) {
  if (res.length() < i + 1) throw InvariantError("resolution is shorter than the homology index needs");
  const RingPtr& R = res.ring();
  const Matrix& q = n.presentation();
  Matrix ig = Matrix::identity(R, q.row_degrees());
  Matrix b_pres = kron(Matrix::identity(R, res.free_degrees(i)), q);
  Matrix in = kron(res.differential(i + 1), ig);
  if (i == 0) return finish(HomologyKind::Tor, i, complex_homology(&in, b_pres, nullptr, nullptr), bound);
  Matrix out = kron(res.differential(i), ig);
  Matrix c_pres = kron(Matrix::identity(R, res.free_degrees(i - 1)), q);
  return finish(HomologyKind::Tor, i, complex_homology(&in, b_pres, &out, &c_pres), bound);
}

void check_pair(const PresentedModule& m, const PresentedModule& n, int i_max) {
  m.ring()->require_same(n.ring());
  if (i_max < 0) throw UsageError("homology index bound must be non-negative");
}

}  // namespace

HomologyModule ext_from(const Resolution& res, const PresentedModule& n, int i, int bound) {
  if (res.length() < i + 1) throw InvariantError("resolution is shorter than the homology index needs");
  const RingPtr& R = res.ring();
  const Matrix& q = n.presentation();
  Matrix ig = Matrix::identity(R, q.row_degrees());
  Matrix b_pres = kron(Matrix::identity(R, negated(res.free_degrees(i))), q);
  Matrix out = kron(res.differential(i + 1).transpose_dual(), ig);
  Matrix c_pres = kron(Matrix::identity(R, negated(res.free_degrees(i + 1))), q);
  if (i == 0) return finish(HomologyKind::Ext, i, complex_homology(nullptr, b_pres, &out, &c_pres), bound);
  Matrix in = kron(res.differential(i).transpose_dual(), ig);
  return finish(HomologyKind::Ext, i, complex_homology(&in, b_pres, &out, &c_pres), bound);
}

namespace {

// Twist a with N = k(-a), if N is a shifted residue field.
std::optional<int> residue_field_twist(const PresentedModule& n) {
  HilbertSeries s = hilbert_series(n);
  if (s.dimension != 0 || s.numerator.coeffs != std::vector<std::int64_t>{1}) return std::nullopt;
  return s.numerator.offset;
}

// Tor_i(M, k(-a)) = sum_j k(-j-a)^{beta_ij} for a minimal resolution of M.
std::vector<HomologyModule> tor_with_residue_field(const PresentedModule& m, int a, int i_max, int bound) {
  Resolution res = minimal_resolution(m, i_max);
  std::vector<HomologyModule> out;
  for (int i = 0; i <= i_max; ++i) {
    PresentedModule v = PresentedModule::zero(m.ring());
    for (int j : res.free_degrees(i)) v = direct_sum(v, PresentedModule::residue_field(m.ring(), j + a));
    out.push_back(finish(HomologyKind::Tor, i, std::move(v), bound));
  }
  return out;
}

}  // namespace

std::vector<HomologyModule> tor(const PresentedModule& m, const PresentedModule& n, int i_max, int bound) {
  check_pair(m, n, i_max);
  if (auto a = residue_field_twist(n)) return tor_with_residue_field(m, *a, i_max, bound);
  if (auto a = residue_field_twist(m)) return tor_with_residue_field(n, *a, i_max, bound);
  Resolution res = minimal_resolution(m, i_max + 1);
  std::vector<HomologyModule> out;
  for (int i = 0; i <= i_max; ++i) out.push_back(tor_from(res, n, i, bound));
  return out;
}

std::vector<HomologyModule> ext(const PresentedModule& m, const PresentedModule& n, int i_max, int bound) {
  check_pair(m, n, i_max);
  Resolution res = minimal_resolution(m, i_max + 1);
  std::vector<HomologyModule> out;
  for (int i = 0; i <= i_max; ++i) out.push_back(ext_from(res, n, i, bound));
  return out;
}

// ---- depth ------------------------------------------------------------------

DepthCertificate depth(const Ideal& a, const PresentedModule& m) {
  a.ring()->require_same(m.ring());
  if (!a.is_proper()) throw UsageError("depth needs a proper ideal, got the unit ideal");
  if (is_zero_module(m)) throw UsageError("depth of the zero module is undefined");
  int dim = a.ring()->dimension();
  Resolution res = minimal_resolution(a.quotient(), dim + 1);
  std::vector<int> vanishing;
  for (int i = 0; i <= dim; ++i) {
    HomologyModule e = ext_from(res, m, i);
    if (!e.is_zero()) return DepthCertificate{a, m, i, i, vanishing, std::move(e)};
    vanishing.push_back(i);
  }
  throw InvariantError("Ext^i(R/a, M) vanishes for every i up to dim R = " + std::to_string(dim));
}

bool DepthCertificate::recheck() const {
  Resolution res = minimal_resolution(ideal.quotient(), depth + 1);
  for (int i : vanishing) {
    if (i >= depth || !ext_from(res, module, i).is_zero()) return false;
  }
  if (static_cast<int>(vanishing.size()) != depth || witness_index != depth) return false;
  HomologyModule w = ext_from(res, module, depth);
  return !w.is_zero() && w.hilbert.series == witness.hilbert.series;
}

// ---- regular elements -----------------------------------------------------------

PresentedModule quotient_by(const PresentedModule& m, const std::vector<Polynomial>& xs) {
  const RingPtr& R = m.ring();
  Matrix p = m.presentation();
  Matrix id = Matrix::identity(R, m.generator_degrees());
  for (const auto& x : xs) {
    Polynomial r = R->reduce(x);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw UsageError("element " + R->poly().format(x) + " is not homogeneous");
    p = p.concat(id.scaled(r, r.degree()));
  }
  return PresentedModule(std::move(p));
}

bool is_regular_element(const Polynomial& x, const PresentedModule& m) {
  const RingPtr& R = m.ring();
  if (is_zero_module(m)) return true;
  Polynomial r = R->reduce(x);
  if (r.is_zero()) return false;
  if (!r.is_homogeneous()) throw UsageError("element " + R->poly().format(x) + " is not homogeneous");
  const Matrix& p = m.presentation();
  Matrix mult = Matrix::identity(R, m.generator_degrees()).scaled(r, r.degree());
  Matrix z = first_rows(kernel_matrix(mult.concat(p)), m.num_generators());
  if (z.cols() == 0) return true;
  GroebnerBasis gb = relation_basis(m);
  for (std::size_t j = 0; j < z.cols(); ++j) {
    if (!gb.contains(z.column(j))) return false;
  }
  return true;
}

HomologyModule ext1_syzygy(const PresentedModule& n, int bound) {
  Resolution res = minimal_resolution(n, 2);
  PresentedModule omega(res.differential(2));
  return ext_from(res, omega, 1, bound);
}

bool annihilates_ext1(const Polynomial& x, const PresentedModule& n) {
  HomologyModule e = ext1_syzygy(n);
  if (e.is_zero()) return true;
  return annihilates(x, e.value);
}

bool RegularSequence::recheck() const {
  std::vector<Polynomial> prefix;
  for (const auto& x : elements) {
    for (const auto& m : certified_on) {
      if (!is_regular_element(x, quotient_by(m, prefix))) return false;
    }
    prefix.push_back(x);
  }
  return true;
}

namespace {

void monomials(std::size_t nvars, int degree, std::vector<int>& e, std::size_t i, std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    e[i] = degree;
    out.push_back(Monomial::from_exponents(e));
    return;
  }
  for (int k = degree; k >= 0; --k) {
    e[i] = k;
    monomials(nvars, degree - k, e, i + 1, out);
  }
}

// Distinct (up to scalar) nonzero products m * g of degree d, g in the ideal.
std::vector<Polynomial> spanning_set(const Ideal& ideal, int d) {
  const RingPtr& R = ideal.ring();
  const PolyRing& P = R->poly();
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& g : ideal.generators()) {
    int k = d - g.degree();
    if (k < 0) continue;
    std::vector<Monomial> ms;
    std::vector<int> e(P.nvars(), 0);
    if (P.nvars() > 0) monomials(P.nvars(), k, e, 0, ms);
    for (const auto& m : ms) {
      Polynomial f = R->reduce(P.mul_term(g, 1, m));
      if (f.is_zero()) continue;
      f = P.monic(f);
      if (seen.insert(P.format(f)).second) out.push_back(f);
    }
  }
  return out;
}

std::uint64_t input_hash(const Ideal& target, const std::vector<PresentedModule>& modules, int n) {
  std::string s = target.ring()->canonical() + "|" + target.format() + "|" + std::to_string(n);
  for (const auto& m : modules) s += "|" + canonical_form(m);
  return std::stoull(sha256_hex(s).substr(0, 16), nullptr, 16);
}

}  // namespace

RegularSequenceSearch find_regular_sequence(const Ideal& a, const std::vector<PresentedModule>& modules, int n,
                                            const std::optional<PresentedModule>& annihilate,
                                            const SearchConfig& config) {
  if (n < 1) throw UsageError("regular sequence length must be at least 1");
  const RingPtr& R = a.ring();
  const PolyRing& P = R->poly();
  const PrimeField& F = R->field();
  for (const auto& m : modules) R->require_same(m.ring());
  std::vector<PresentedModule> base = modules;
  if (base.empty()) base.push_back(PresentedModule::free(R, {0}));

  RegularSequenceSearch result;
  Ideal target = a;
  if (annihilate) {
    R->require_same(annihilate->ring());
    target = intersect(a, annihilator(ext1_syzygy(*annihilate).value));
  }
  if (target.is_zero()) {
    result.note = "the ideal to search is zero";
    return result;
  }
  int dmin = target.generators().front().degree();
  for (const auto& g : target.generators()) dmin = std::min(dmin, g.degree());

  std::mt19937_64 rng(input_hash(target, base, n) ^ config.seed);
  std::vector<PresentedModule> current = base;
  for (int slot = 0; slot < n; ++slot) {
    std::optional<Polynomial> hit;
    int budget = config.trials_per_slot;
    int degrees = config.extra_degrees + 1;
    std::set<std::string> tried;
    for (int t = 0; t < degrees && !hit && budget > 0; ++t) {
      int allowance = budget / (degrees - t);
      int used = 0;
      auto basis = spanning_set(target, dmin + t);
      if (basis.empty()) continue;
      auto attempt = [&](const Polynomial& c) {
        ++used;
        ++result.trials;
        if (c.is_zero()) return false;
        Polynomial mc = P.monic(c);
        if (!tried.insert(P.format(mc)).second) return false;
        for (const auto& m : current) {
          if (!is_regular_element(mc, m)) return false;
        }
        hit = mc;
        return true;
      };
      std::size_t s = basis.size();
      auto combo = [&](auto coeff) {
        Polynomial c;
        for (std::size_t k = 0; k < s; ++k) c = P.add(c, P.scale(basis[k], F.reduce(coeff(k))));
        return c;
      };
      // deterministic patterns first: single elements, pairwise sums, ramps
      for (std::size_t k = 0; k < s && used < allowance && !hit; ++k) attempt(basis[k]);
      for (std::size_t i = 0; i < s && used < allowance && !hit; ++i) {
        for (std::size_t j = i + 1; j < s && used < allowance && !hit; ++j) attempt(P.add(basis[i], basis[j]));
      }
      if (used < allowance && !hit) attempt(combo([](std::size_t k) { return static_cast<std::int64_t>(k + 1); }));
      if (used < allowance && !hit) {
        attempt(combo([](std::size_t k) { return static_cast<std::int64_t>((k + 1) * (k + 1)); }));
      }
      while (used < allowance && !hit) {
        attempt(combo([&](std::size_t) { return static_cast<std::int64_t>(rng() % F.characteristic()); }));
      }
      budget -= used;
    }
    if (!hit) {
      result.note = "no regular element found for position " + std::to_string(slot + 1) + " after " +
                    std::to_string(config.trials_per_slot) + " trials";
      return result;
    }
    result.partial.push_back(*hit);
    for (auto& m : current) m = quotient_by(m, {*hit});
  }
  result.sequence = RegularSequence{result.partial, base};
  return result;
}

}  // namespace syzlab
