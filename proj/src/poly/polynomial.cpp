#include "syzlab/polynomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "syzlab/errors.hpp"

namespace syzlab {

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.empty()) throw UsageError("a ring needs at least one variable");
  if (vars_.size() > kMaxVariables) {
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v).second) throw UsageError("variable '" + v + "' declared twice");
  }
}

int PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Polynomial PolyRing::constant(std::int64_t c) const {
  Coeff r = field_.reduce(c);
  if (r == 0) return {};
  return Polynomial({{r, Monomial(nvars())}});
}

Polynomial PolyRing::variable(std::size_t i) const {
  return Polynomial({{1, Monomial::variable(nvars(), i)}});
}

Polynomial PolyRing::term(Coeff c, const Monomial& m) const {
  if (m.nvars() != nvars()) throw UsageError("monomial has the wrong number of variables");
  c = field_.reduce(c);
  if (c == 0) return {};
  return Polynomial({{c, m}});
}

Polynomial PolyRing::from_terms(std::vector<PolyTerm> terms) const {
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars()) throw UsageError("term has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(), [&](const PolyTerm& a, const PolyTerm& b) {
    return order_.compare_unchecked(a.mono, b.mono) > 0;
  });
  std::vector<PolyTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = field_.reduce(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, t.mono});
    }
  }
  return Polynomial(std::move(out));
}

namespace {

// Merge f + c*g where both are sorted descending.
std::vector<PolyTerm> merge_add(const PrimeField& F, const MonomialOrder& order,
                                const std::vector<PolyTerm>& f, const std::vector<PolyTerm>& g,
                                Coeff c) {
  std::vector<PolyTerm> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    auto cmp = order.compare_unchecked(f[i].mono, g[j].mono);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({F.mul(c, g[j].coeff), g[j].mono});
      ++j;
    } else {
      Coeff s = F.add(f[i].coeff, F.mul(c, g[j].coeff));
      if (s != 0) out.push_back({s, f[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({F.mul(c, g[j].coeff), g[j].mono});
  return out;
}

}  // namespace

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  return Polynomial(merge_add(field_, order_, f.terms_, g.terms_, 1));
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return Polynomial(merge_add(field_, order_, f.terms_, g.terms_, field_.neg(1)));
}

Polynomial PolyRing::neg(const Polynomial& f) const { return scale(f, field_.neg(1)); }

Polynomial PolyRing::scale(const Polynomial& f, Coeff c) const {
  c = field_.reduce(c);
  if (c == 0) return {};
  std::vector<PolyTerm> out = f.terms_;
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul_term(const Polynomial& f, Coeff c, const Monomial& m) const {
  c = field_.reduce(c);
  if (c == 0) return {};
  std::vector<PolyTerm> out;
  out.reserve(f.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : f.terms_) out.push_back({field_.mul(t.coeff, c), t.mono * m});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& big = f.size() <= g.size() ? g : f;
  std::vector<PolyTerm> acc;
  for (const auto& t : small.terms_) {
    std::vector<PolyTerm> shifted;
    shifted.reserve(big.size());
    for (const auto& u : big.terms_) shifted.push_back({field_.mul(t.coeff, u.coeff), u.mono * t.mono});
    acc = merge_add(field_, order_, acc, shifted, 1);
  }
  return Polynomial(std::move(acc));
}

Polynomial PolyRing::pow(const Polynomial& f, int e) const {
  if (e < 0) throw UsageError("negative exponent");
  Polynomial result = one();
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::monic(const Polynomial& f) const {
  if (f.is_zero()) return f;
  return scale(f, field_.inv(f.lead().coeff));
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::int64_t c = field_.balanced(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += format(t.mono);
    }
  }
  return out;
}

Polynomial poly_arith(const PolyRing& ring, PolyOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case PolyOp::Add:
      return ring.add(f, g);
    case PolyOp::Mul:
      return ring.mul(f, g);
    case PolyOp::Scale:
      if (!g.is_constant()) throw UsageError("scale expects a field element");
      return ring.scale(f, g.constant_term());
  }
  return {};
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> homogeneous_degree(const FreeModule& module, const FreeModuleElement& e) {
  if (e.components.size() != module.rank()) {
    throw UsageError("element has " + std::to_string(e.components.size()) +
                     " components but the free module has rank " + std::to_string(module.rank()));
  }
  std::optional<int> deg;
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    for (const auto& t : e.components[i].terms()) {
      int d = t.mono.degree() + module.degrees[i];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

}  // namespace syzlab
