#include "engine.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "syzlab/errors.hpp"

namespace syzlab::detail {

void make_monic(const PrimeField& field, ModVec& v) {
  if (v.empty() || v.front().coeff == 1) return;
  Coeff inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
}

ModVec sort_terms(const PrimeField& field, const ModuleOrder& order, ModVec terms) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  ModVec out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return out;
}

std::uint32_t Reducer::add(ModVec v) {
  auto idx = static_cast<std::uint32_t>(elements_.size());
  by_comp_[v.front().comp].push_back(idx);
  masks_.push_back(v.front().mono.divmask());
  elements_.push_back(std::move(v));
  return idx;
}

int Reducer::find_divisor(const Monomial& m, std::uint32_t comp) const {
  std::uint32_t mask = m.divmask();
  for (std::uint32_t idx : by_comp_[comp]) {
    if ((masks_[idx] & ~mask) != 0) continue;
    if (elements_[idx].front().mono.divides(m)) return static_cast<int>(idx);
  }
  return -1;
}

ModVec Reducer::subtract_multiple(const ModVec& f, std::size_t start, Coeff c, const Monomial& m,
                                  const ModVec& g, std::size_t g_start) const {
  ModVec out;
  out.reserve(f.size() - start + g.size());
  Coeff nc = field_.neg(c);
  std::size_t i = start + 1, j = g_start + 1;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = order_.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, field_.mul(nc, g[j].coeff)});
      ++j;
    } else {
      Coeff s = field_.add(f[i].coeff, field_.mul(nc, g[j].coeff));
      if (s != 0) out.push_back({f[i].mono, f[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].comp, field_.mul(nc, g[j].coeff)});
  return out;
}

ModVec Reducer::reduce(ModVec v) const {
  ModVec out;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const ModTerm& t = v[pos];
    int k = find_divisor(t.mono, t.comp);
    if (k < 0) {
      out.push_back(t);
      ++pos;
      continue;
    }
    const ModVec& g = elements_[k];
    Monomial q = g.front().mono.cofactor_in(t.mono);
    v = subtract_multiple(v, pos, t.coeff, q, g, 0);
    pos = 0;
  }
  return out;
}

ModVec Reducer::reduce_lead(ModVec v) const {
  while (!v.empty()) {
    int k = find_divisor(v.front().mono, v.front().comp);
    if (k < 0) break;
    const ModVec& g = elements_[k];
    Monomial q = g.front().mono.cofactor_in(v.front().mono);
    v = subtract_multiple(v, 0, v.front().coeff, q, g, 0);
  }
  return v;
}

namespace {

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  Monomial lcm;
  std::uint32_t comp;
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

class Engine {
 public:
  explicit Engine(const EngineInput& in) : in_(in), red_(in.field, in.order, in.degrees.size()) {}

  EngineOutput run() {
    std::size_t rank = in_.degrees.size();
    for (std::uint32_t k = 0; k < rank; ++k) {
      for (const auto& h : in_.ideal_basis) {
        ModVec v;
        v.reserve(h.size());
        for (const auto& t : h.terms()) v.push_back({t.mono, k, t.coeff});
        add_element(std::move(v), true);
      }
    }

    std::map<int, std::vector<std::size_t>> inputs;
    for (std::size_t g = 0; g < in_.gens.size(); ++g) {
      check_homogeneous(in_.gens[g], in_.gen_degrees[g]);
      inputs[in_.gen_degrees[g]].push_back(g);
    }

    while (!pairs_.empty() || !inputs.empty()) {
      int d = pairs_.empty() ? inputs.begin()->first : pairs_.begin()->first;
      if (!inputs.empty()) d = std::min(d, inputs.begin()->first);
      current_degree_ = d;

      std::vector<Pair> batch;
      if (auto it = pairs_.find(d); it != pairs_.end()) {
        batch = std::move(it->second);
        pairs_.erase(it);
      }
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        auto c = in_.order.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      for (const auto& p : batch) {
        if (first_phase(p)) process_pair(p, 1);
      }
      for (const auto& p : batch) {
        if (!first_phase(p)) process_pair(p, 2);
      }
      if (pairs_.count(d) != 0) throw InvariantError("S-pair created below the current degree");
      if (auto it = inputs.find(d); it != inputs.end()) {
        for (std::size_t g : it->second) process_input(g);
        inputs.erase(it);
      }
    }

    out_.basis = red_.elements();
    return std::move(out_);
  }

 private:
  bool first_phase(const Pair& p) const {
    if (in_.mode == EngineMode::Kernel) return p.comp >= in_.boundary;
    return true;
  }

  int element_degree(const ModVec& v) const {
    return v.front().mono.degree() + in_.degrees[v.front().comp];
  }

  void check_homogeneous(const ModVec& v, int degree) const {
    for (const auto& t : v) {
      if (t.mono.degree() + in_.degrees[t.comp] != degree) {
        throw UsageError("generator is not homogeneous of degree " + std::to_string(degree));
      }
    }
  }

  void add_element(ModVec v, bool relation) {
    std::uint32_t idx = red_.add(std::move(v));
    is_relation_.push_back(relation);
    const ModVec& e = red_.elements()[idx];
    std::uint32_t comp = e.front().comp;
    const Monomial& lead = e.front().mono;
    bool single = in_.degrees.size() == 1;
    for (std::uint32_t k = 0; k < idx; ++k) {
      const ModVec& o = red_.elements()[k];
      if (o.front().comp != comp) continue;
      if (relation && is_relation_[k]) continue;
      if (single && lead.coprime(o.front().mono)) continue;
      Pair p{k, idx, lead.lcm(o.front().mono), comp};
      int deg = p.lcm.degree() + in_.degrees[comp];
      pairs_[deg].push_back(p);
      pending_.insert(pair_key(k, idx));
    }
  }

  bool chain_redundant(const Pair& p) const {
    std::uint32_t mask = p.lcm.divmask();
    const auto& els = red_.elements();
    for (std::uint32_t k = 0; k < els.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModVec& e = els[k];
      if (e.front().comp != p.comp) continue;
      if ((e.front().mono.divmask() & ~mask) != 0) continue;
      if (!e.front().mono.divides(p.lcm)) continue;
      if (pending_.count(pair_key(p.i, k)) == 0 && pending_.count(pair_key(p.j, k)) == 0) return true;
    }
    return false;
  }

  void process_pair(const Pair& p, int phase) {
    pending_.erase(pair_key(p.i, p.j));
    if (chain_redundant(p)) return;
    if (p.lcm.degree() > in_.degree_cap) {
      throw ResourceError("S-pair of degree " + std::to_string(p.lcm.degree()) +
                          " exceeds the degree cap " + std::to_string(in_.degree_cap));
    }
    const ModVec& a = red_.elements()[p.i];
    const ModVec& b = red_.elements()[p.j];
    Monomial qa = a.front().mono.cofactor_in(p.lcm);
    Monomial qb = b.front().mono.cofactor_in(p.lcm);
    ModVec sa;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back({t.mono * qa, t.comp, t.coeff});
    ModVec s = red_.subtract_multiple(sa, 0, 1, qb, b, 0);
    ModVec r = red_.reduce(std::move(s));
    if (r.empty()) return;
    make_monic(in_.field, r);
    if (element_degree(r) != current_degree_) throw InvariantError("S-polynomial changed degree");
    if (phase == 2 && in_.mode == EngineMode::Kernel && r.front().comp >= in_.boundary) {
      out_.kernel.push_back(r);
    }
    add_element(std::move(r), false);
  }

  void process_input(std::size_t g) {
    if (in_.gens[g].empty()) return;
    ModVec r = red_.reduce(in_.gens[g]);
    if (r.empty()) return;
    make_monic(in_.field, r);
    if (in_.mode == EngineMode::MinimalGenerators) out_.minimal_inputs.push_back(g);
    if (in_.mode == EngineMode::Kernel && r.front().comp >= in_.boundary) out_.kernel.push_back(r);
    add_element(std::move(r), false);
  }

  const EngineInput& in_;
  Reducer red_;
  std::vector<bool> is_relation_;
  std::map<int, std::vector<Pair>> pairs_;
  std::unordered_set<std::uint64_t> pending_;
  int current_degree_ = 0;
  EngineOutput out_;
};

}  // namespace

EngineOutput run_engine(const EngineInput& in) {
  if (in.gen_degrees.size() != in.gens.size()) throw UsageError("generator degree list has the wrong length");
  return Engine(in).run();
}

std::vector<ModVec> interreduce(const PrimeField& field, const ModuleOrder& order, std::size_t rank,
                                const std::vector<ModVec>& basis) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModTerm& li = basis[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModTerm& lj = basis[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      // equal leads: keep the earlier one
      redundant = !(lj.mono == li.mono) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  Reducer red(field, order, rank);
  for (std::size_t i : keep) red.add(basis[i]);
  std::vector<ModVec> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) {
    ModVec tail(basis[i].begin() + 1, basis[i].end());
    ModVec reduced = red.reduce(std::move(tail));
    ModVec v;
    v.reserve(reduced.size() + 1);
    v.push_back(basis[i].front());
    v.insert(v.end(), reduced.begin(), reduced.end());
    make_monic(field, v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace syzlab::detail
