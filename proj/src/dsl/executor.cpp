#include <chrono>
#include <map>
#include <regex>

#include "syzlab/dsl.hpp"
#include "syzlab/lab.hpp"

namespace syzlab::dsl {

namespace {

struct Value {
  enum class Kind { Module, Ideal, Resolution, Integer, Poly, Symbol, List };
  Kind kind = Kind::Integer;
  std::optional<PresentedModule> module;
  std::optional<Ideal> ideal;
  std::optional<Resolution> res;
  std::int64_t integer = 0;
  std::optional<Polynomial> poly;
  std::string symbol;
  std::vector<Value> list;

  static Value of(PresentedModule m) {
    Value v;
    v.kind = Kind::Module;
    v.module = std::move(m);
    return v;
  }
  static Value of(Ideal i) {
    Value v;
    v.kind = Kind::Ideal;
    v.ideal = std::move(i);
    return v;
  }
  static Value of(Resolution r) {
    Value v;
    v.kind = Kind::Resolution;
    v.res = std::move(r);
    return v;
  }
};

Json betti_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, beta] : t.entries) entries.push_back({key.first, key.second, beta});
  return Json{{"length", t.length}, {"entries", entries}, {"totals", t.totals()}};
}

Json series_json(const HilbertSeries& s) {
  return Json{{"dimension", s.dimension}, {"offset", s.numerator.offset}, {"numerator", s.numerator.coeffs}};
}

Json hilbert_json(const HilbertFunction& h) {
  return Json{{"start", h.first_degree}, {"values", h.values}, {"series", series_json(h.series)}};
}

Json length_json(const std::optional<std::int64_t>& l) { return l ? Json(*l) : Json(nullptr); }

Json module_json(const PresentedModule& m, int degree_bound) {
  PresentedModule p = minimal_presentation(m);
  const Matrix& mat = p.presentation();
  const PolyRing& P = m.ring()->poly();
  Json rows = Json::array();
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < mat.cols(); ++j) row.push_back(P.format(mat.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"generators", mat.row_degrees()},
              {"relation_degrees", mat.col_degrees()},
              {"presentation", rows},
              {"hilbert", hilbert_json(hilbert_function(p, degree_bound))}};
}

Json homology_json(const std::vector<HomologyModule>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) {
    out.push_back(Json{{"index", h.index},
                       {"length", length_json(h.length)},
                       {"zero", h.is_zero()},
                       {"hilbert", hilbert_json(h.hilbert)}});
  }
  return Json{{"modules", out}};
}

Json rigidity_json(const RigidityReport& r) {
  Json witness = nullptr;
  if (r.witness) witness = Json{{"test", r.witness->test}, {"t", r.witness->t}, {"violation", r.witness->violation}};
  return Json{{"order", r.order},
              {"bound", r.bound},
              {"tests", r.tests.size()},
              {"violation", r.violation_found()},
              {"witness", witness},
              {"tor_zero", r.tor_zero}};
}

class Executor {
 public:
  explicit Executor(const SessionConfig& config) : config_(config) {
    if (config.use_cache) {
      cache_ = config.cache_dir ? std::make_shared<ResolutionCache>(*config.cache_dir)
                                : std::make_shared<ResolutionCache>();
    }
  }

  std::vector<Report> run(const SessionAST& ast) {
    std::vector<Report> out;
    for (const auto& s : ast.statements) {
      try {
        if (auto r = statement(s)) out.push_back(std::move(*r));
      } catch (const ResourceError& e) {
        throw ResourceError(format_span(s.span) + ": " + e.what());
      } catch (const InvariantError& e) {
        throw InvariantError(format_span(s.span) + ": " + e.what());
      } catch (const ParseError&) {
        throw;
      } catch (const UsageError& e) {
        throw UsageError(format_span(s.span) + ": " + e.what());
      } catch (const std::exception& e) {
        throw InvariantError(format_span(s.span) + ": " + e.what());
      }
    }
    return out;
  }

 private:
  std::optional<Report> statement(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Ring: declare_ring(s); return std::nullopt;
      case StmtKind::Ideal: bind(s.name, Value::of(as_ideal(eval(s.value), "ideal declaration"))); return std::nullopt;
      case StmtKind::Module: bind(s.name, Value::of(as_module(eval(s.value), "module declaration"))); return std::nullopt;
      case StmtKind::Let: bind(s.name, eval(s.value)); return std::nullopt;
      case StmtKind::Command: break;
    }
    auto start = std::chrono::steady_clock::now();
    std::uint64_t hits = cache_ ? cache_->hits() : 0;
    Report r;
    r.command = print_stmt(s);
    r.span = s.span;
    r.provenance = provenance();
    r.result = command(s.value, r.kind);
    r.cache_hits = (cache_ ? cache_->hits() : 0) - hits;
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  Provenance provenance() const {
    Provenance p;
    p.prime = ring()->field().characteristic();
    p.order = ring()->poly().order().name();
    p.res_bound = config_.res_bound;
    p.hom_bound = config_.hom_bound;
    p.degree_bound = config_.degree_bound;
    p.degree_cap = config_.degree_cap;
    p.eta_bound = config_.eta_bound;
    p.seed = *config_.seed;
    return p;
  }

  void declare_ring(const Stmt& s) {
    std::uint32_t p = config_.prime.value_or(s.prime);
    PolyRing P(PrimeField(p), s.variables, parse_monomial_order(config_.order));
    std::vector<Polynomial> rels;
    for (const auto& r : s.relations) rels.push_back(P.parse(r.text));
    RingOptions options;
    options.degree_cap = config_.degree_cap;
    options.cache = cache_;
    rings_[s.name] = QuotientRing::create(P, rels, options);
    active_ = s.name;
    bindings_.erase(s.name);
  }

  void bind(const std::string& name, Value v) { bindings_[name] = std::move(v); }

  const RingPtr& ring() const { return rings_.at(active_); }

  // ---- conversions ----
  [[noreturn]] static void type_error(const std::string& what, const std::string& want) {
    throw UsageError(what + " must be " + want);
  }
  PresentedModule as_module(const Value& v, const std::string& what) const {
    if (v.kind != Value::Kind::Module) type_error(what, "a module");
    return *v.module;
  }
  Ideal as_ideal(const Value& v, const std::string& what) const {
    if (v.kind == Value::Kind::Ideal) return *v.ideal;
    if (v.kind == Value::Kind::Poly) return Ideal(ring(), {*v.poly});
    type_error(what, "an ideal");
  }
  std::int64_t as_int(const Value& v, const std::string& what) const {
    if (v.kind != Value::Kind::Integer) type_error(what, "an integer");
    return v.integer;
  }
  int as_small_int(const Value& v, const std::string& what) const {
    std::int64_t i = as_int(v, what);
    if (i < -100000 || i > 100000) throw UsageError(what + " is out of range");
    return static_cast<int>(i);
  }
  Polynomial as_poly(const Value& v, const std::string& what) const {
    if (v.kind == Value::Kind::Poly) return *v.poly;
    if (v.kind == Value::Kind::Integer) return ring()->reduce(ring()->poly().constant(v.integer));
    type_error(what, "a polynomial");
  }

  // ---- evaluation ----
  Value eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Poly: return eval_poly(e);
      case ExprKind::IdealLit: {
        std::vector<Polynomial> gens;
        for (const auto& a : e.args) gens.push_back(as_poly(eval(a), "ideal generator"));
        return Value::of(Ideal(ring(), gens));
      }
      case ExprKind::List: {
        Value v;
        v.kind = Value::Kind::List;
        for (const auto& a : e.args) v.list.push_back(eval(a));
        return v;
      }
      case ExprKind::Coker: return Value::of(coker(e));
      case ExprKind::Call: return call_value(e);
    }
    throw InvariantError("unknown expression kind");
  }

  Value eval_poly(const Expr& e) {
    static const std::regex integer("-?[0-9]+");
    const auto& vars = ring()->poly().variables();
    if (e.is_identifier() && std::find(vars.begin(), vars.end(), e.text) == vars.end()) {
      if (auto it = bindings_.find(e.text); it != bindings_.end()) return it->second;
      if (e.text == active_) return Value::of(PresentedModule::free(ring(), {0}));
      if (e.text == "k") return Value::of(PresentedModule::residue_field(ring()));
      Value v;
      v.kind = Value::Kind::Symbol;
      v.symbol = e.text;
      return v;
    }
    if (std::regex_match(e.text, integer)) {
      if (e.text.size() > 15) throw UsageError("integer " + e.text + " is too large");
      Value v;
      v.integer = std::stoll(e.text);
      return v;
    }
    Value v;
    v.kind = Value::Kind::Poly;
    v.poly = ring()->reduce(ring()->poly().parse(e.text));
    return v;
  }

  PresentedModule coker(const Expr& e) {
    const Expr& m = e.args.at(0);
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : m.args) {
      if (row.kind != ExprKind::List) throw UsageError("matrix rows must be lists");
      std::vector<Polynomial> r;
      for (const auto& entry : row.args) r.push_back(as_poly(eval(entry), "matrix entry"));
      if (!rows.empty() && r.size() != rows[0].size()) throw UsageError("matrix rows have different lengths");
      rows.push_back(std::move(r));
    }
    std::size_t nr = rows.size(), nc = nr == 0 ? 0 : rows[0].size();
    if (nr == 0 || nc == 0) throw UsageError("empty matrix");
    for (const auto& row : rows) {
      for (const auto& p : row) {
        if (!p.is_zero() && !p.is_homogeneous()) {
          throw UsageError("matrix entry " + ring()->poly().format(p) + " is not homogeneous");
        }
      }
    }
    std::vector<std::optional<int>> rd(nr), cd(nc);
    if (e.twists) {
      if (e.twists->size() != nr) throw UsageError("twists list needs one entry per matrix row");
      for (std::size_t i = 0; i < nr; ++i) rd[i] = (*e.twists)[i];
      propagate(rows, rd, cd);
    } else {
      // Minimal consistent assignment: each connected block of rows and
      // columns gets its lowest row degree at 0.
      for (std::size_t seed = 0; seed < nr; ++seed) {
        if (rd[seed]) continue;
        auto before_r = rd;
        auto before_c = cd;
        rd[seed] = 0;
        propagate(rows, rd, cd);
        int low = 0;
        for (std::size_t i = 0; i < nr; ++i) {
          if (rd[i] && !before_r[i]) low = std::min(low, *rd[i]);
        }
        for (std::size_t i = 0; i < nr; ++i) {
          if (rd[i] && !before_r[i]) *rd[i] -= low;
        }
        for (std::size_t j = 0; j < nc; ++j) {
          if (cd[j] && !before_c[j]) *cd[j] -= low;
        }
      }
    }
    std::vector<int> row_degrees, col_degrees;
    for (auto& r : rd) row_degrees.push_back(*r);
    for (auto& c : cd) col_degrees.push_back(c.value_or(0));
    Matrix mat(ring(), row_degrees, col_degrees);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        if (!rows[i][j].is_zero()) mat.set(i, j, rows[i][j]);
      }
    }
    return PresentedModule(mat);
  }

  // Spreads known degrees through nonzero entries, deg(a_ij) = c_j - r_i.
  static void propagate(const std::vector<std::vector<Polynomial>>& rows, std::vector<std::optional<int>>& rd,
                        std::vector<std::optional<int>>& cd) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          const Polynomial& p = rows[i][j];
          if (p.is_zero()) continue;
          int d = p.degree();
          if (rd[i] && !cd[j]) {
            cd[j] = *rd[i] + d;
            changed = true;
          } else if (cd[j] && !rd[i]) {
            rd[i] = *cd[j] - d;
            changed = true;
          } else if (rd[i] && cd[j] && *cd[j] - *rd[i] != d) {
            throw UsageError("matrix entries have inconsistent degrees");
          }
        }
      }
    }
  }

  void arity(const Expr& e, std::size_t lo, std::size_t hi) const {
    if (e.args.size() < lo || e.args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      throw UsageError(e.text + " takes " + want + " arguments, got " + std::to_string(e.args.size()));
    }
  }

  std::string arg_name(const Expr& e, std::size_t i) const {
    return "argument " + std::to_string(i + 1) + " of " + e.text;
  }
  PresentedModule module_arg(const Expr& e, std::size_t i) { return as_module(eval(e.args[i]), arg_name(e, i)); }
  int int_arg(const Expr& e, std::size_t i, int fallback) {
    if (i >= e.args.size()) return fallback;
    return as_small_int(eval(e.args[i]), arg_name(e, i));
  }
  int nonneg_arg(const Expr& e, std::size_t i, int fallback) {
    int v = int_arg(e, i, fallback);
    if (v < 0) throw UsageError(arg_name(e, i) + " must be non-negative");
    return v;
  }

  Value call_value(const Expr& e) {
    const std::string& f = e.text;
    if (f == "resolve") {
      arity(e, 1, 2);
      return Value::of(minimal_resolution(module_arg(e, 0), nonneg_arg(e, 1, config_.res_bound)));
    }
    if (f == "syzygy") {
      arity(e, 2, 2);
      return Value::of(syzygy_module(module_arg(e, 0), nonneg_arg(e, 1, 0)));
    }
    if (f == "transpose") {
      arity(e, 1, 1);
      return Value::of(transpose(module_arg(e, 0)));
    }
    if (f == "twist") {
      arity(e, 2, 2);
      return Value::of(twist(module_arg(e, 0), int_arg(e, 1, 0)));
    }
    if (f == "sum") {
      arity(e, 1, 64);
      PresentedModule m = module_arg(e, 0);
      for (std::size_t i = 1; i < e.args.size(); ++i) m = direct_sum(m, module_arg(e, i));
      return Value::of(m);
    }
    if (f == "quotient") {
      arity(e, 1, 2);
      if (e.args.size() == 1) return Value::of(as_ideal(eval(e.args[0]), arg_name(e, 0)).quotient());
      Ideal i = as_ideal(eval(e.args[1]), arg_name(e, 1));
      return Value::of(quotient_by(module_arg(e, 0), i.generators()));
    }
    if (f == "free") {
      arity(e, 1, 1);
      Value v = eval(e.args[0]);
      std::vector<int> degs;
      if (v.kind == Value::Kind::List) {
        for (const auto& d : v.list) degs.push_back(as_small_int(d, arg_name(e, 0)));
      } else {
        degs.assign(static_cast<std::size_t>(std::max(0, as_small_int(v, arg_name(e, 0)))), 0);
      }
      return Value::of(PresentedModule::free(ring(), degs));
    }
    throw UsageError(f + " produces a report, not a value");
  }

  LabOptions lab_options() const { return LabOptions{config_.hom_bound, config_.degree_bound}; }

  Json command(const Expr& e, std::string& kind) {
    const std::string& f = e.text;
    kind = f;
    int D = config_.degree_bound;
    if (f == "depth") {
      arity(e, 2, 2);
      Ideal a = as_ideal(eval(e.args[0]), arg_name(e, 0));
      auto cert = depth(a, module_arg(e, 1));
      return Json{{"depth", cert.depth}, {"witness_index", cert.witness_index}, {"vanishing", cert.vanishing}};
    }
    if (f == "resolve" || f == "betti") {
      arity(e, 1, 2);
      Value v = eval(e.args[0]);
      Resolution res = v.kind == Value::Kind::Resolution
                           ? (e.args.size() > 1 ? v.res->extended(nonneg_arg(e, 1, 0)) : *v.res)
                           : minimal_resolution(as_module(v, arg_name(e, 0)), nonneg_arg(e, 1, config_.res_bound));
      Json j{{"betti", betti_json(betti_table(res))}};
      if (f == "resolve") {
        kind = "resolve";
        j["complete"] = res.complete();
        auto pd = res.projective_dimension();
        j["projective_dimension"] = pd ? Json(*pd) : Json(nullptr);
      }
      return j;
    }
    if (f == "tor" || f == "ext") {
      arity(e, 2, 3);
      PresentedModule m = module_arg(e, 0), n = module_arg(e, 1);
      int i_max = nonneg_arg(e, 2, config_.hom_bound);
      return homology_json(f == "tor" ? tor(m, n, i_max, D) : ext(m, n, i_max, D));
    }
    if (f == "eta") {
      arity(e, 2, 3);
      auto est = eta_estimate(module_arg(e, 0), module_arg(e, 1), nonneg_arg(e, 2, config_.eta_bound));
      Json lengths = Json::array();
      for (const auto& l : est.lengths) lengths.push_back(length_json(l));
      return Json{{"value", est.value_text()},
                  {"exact", est.exact},
                  {"period", est.period ? Json(*est.period) : Json(nullptr)},
                  {"defined", est.defined},
                  {"codim", est.codim},
                  {"start", est.start ? Json(*est.start) : Json(nullptr)},
                  {"bound", est.bound},
                  {"estimate", est.last_estimate()},
                  {"trend", est.trend},
                  {"stable_lengths", est.stable_lengths},
                  {"lengths", lengths},
                  {"note", est.note}};
    }
    if (f == "audit") {
      arity(e, 3, 3);
      Ideal a = as_ideal(eval(e.args[0]), arg_name(e, 0));
      auto r = audit_depth_inequality(a, module_arg(e, 1), nonneg_arg(e, 2, 0), lab_options());
      auto b = r.bound();
      return Json{{"verdict", to_string(r.verdict)},
                  {"equality", r.equality},
                  {"ring_depth", r.ring_depth ? Json(r.ring_depth->depth) : Json(nullptr)},
                  {"module_depth", r.module_depth ? Json(r.module_depth->depth) : Json(nullptr)},
                  {"bound", b ? Json(*b) : Json(nullptr)},
                  {"n", r.n},
                  {"rigidity", r.rigidity ? rigidity_json(*r.rigidity) : Json(nullptr)},
                  {"notes", r.notes}};
    }
    if (f == "probe_rigidity") {
      arity(e, 3, 4);
      PresentedModule m = module_arg(e, 0);
      int n = nonneg_arg(e, 1, 1);
      Value tv = eval(e.args[2]);
      std::vector<PresentedModule> tests;
      if (tv.kind == Value::Kind::List) {
        for (const auto& t : tv.list) tests.push_back(as_module(t, "test module"));
      } else {
        tests.push_back(as_module(tv, arg_name(e, 2)));
      }
      return rigidity_json(probe_tor_rigidity(m, n, tests, nonneg_arg(e, 3, config_.hom_bound)));
    }
    if (f == "verify_splitting") return splitting(e);
    if (f == "hilbert") {
      arity(e, 1, 2);
      return hilbert_json(hilbert_function(module_arg(e, 0), nonneg_arg(e, 1, D)));
    }
    if (f == "dim") {
      arity(e, 1, 1);
      return Json{{"dim", krull_dimension(module_arg(e, 0))}};
    }
    if (f == "length") {
      arity(e, 1, 1);
      auto l = module_length(module_arg(e, 0));
      return Json{{"length", length_json(l)}, {"finite", l.has_value()}};
    }
    if (f == "periodicity") {
      arity(e, 1, 2);
      auto r = detect_periodicity(module_arg(e, 0), nonneg_arg(e, 1, config_.res_bound));
      return Json{{"period", r.period ? Json(*r.period) : Json(nullptr)},
                  {"start", r.start},
                  {"twist", r.twist},
                  {"projective_dimension", r.projective_dimension ? Json(*r.projective_dimension) : Json(nullptr)},
                  {"bound", r.bound},
                  {"note", r.note}};
    }
    if (f == "complexity") {
      arity(e, 1, 2);
      auto c = complexity_estimate(module_arg(e, 0), nonneg_arg(e, 1, config_.res_bound));
      return Json{{"complexity", c.complexity}, {"residual", c.residual}, {"totals", c.totals}};
    }
    // value-producing functions report what they built
    Value v = call_value(e);
    if (v.kind == Value::Kind::Resolution) {
      kind = "resolve";
      return Json{{"betti", betti_json(betti_table(*v.res))}};
    }
    kind = "module";
    return module_json(*v.module, D);
  }

  Json splitting(const Expr& e) {
    arity(e, 4, 4);
    PresentedModule n = module_arg(e, 0);
    int len = nonneg_arg(e, 1, 1);
    Value form_v = eval(e.args[3]);
    if (form_v.kind != Value::Kind::Symbol) type_error(arg_name(e, 3), "one of lemma42, cor44, prop28");
    SplittingForm form;
    if (form_v.symbol == "lemma42") {
      form = SplittingForm::Lemma42;
    } else if (form_v.symbol == "cor44") {
      form = SplittingForm::Cor44;
    } else if (form_v.symbol == "prop28") {
      form = SplittingForm::Prop28;
    } else {
      type_error(arg_name(e, 3), "one of lemma42, cor44, prop28");
    }
    Value seq_v = eval(e.args[2]);
    RegularSequence seq;
    if (seq_v.kind == Value::Kind::List) {
      for (const auto& x : seq_v.list) seq.elements.push_back(as_poly(x, "sequence element"));
    } else {
      // search inside the given ideal
      Ideal a = as_ideal(seq_v, arg_name(e, 2));
      int want = form == SplittingForm::Lemma42 ? 1 : len;
      std::vector<PresentedModule> on;
      if (form == SplittingForm::Lemma42) on.push_back(n);
      SearchConfig sc;
      sc.seed = *config_.seed;
      auto found = find_regular_sequence(a, on, want, n, sc);
      if (!found.found()) throw UsageError("no suitable regular sequence found in " + a.format() + ": " + found.note);
      seq = *found.sequence;
    }
    auto r = verify_cut_syzygy_splitting(n, len, seq, form, lab_options());
    Json sequence = Json::array();
    for (const auto& x : r.sequence) sequence.push_back(ring()->poly().format(x));
    Json summands = Json::array();
    for (const auto& s : r.summands) {
      summands.push_back(Json{{"syzygy_index", s.syzygy_index}, {"twist", s.twist}, {"multiplicity", s.multiplicity}});
    }
    Json free_part = Json::array();
    for (const auto& [j, rank] : r.free_part) free_part.push_back({j, rank});
    return Json{{"form", to_string(r.form)},
                {"n", r.n},
                {"sequence", sequence},
                {"equivalent", r.verdict()},
                {"betti_equal", r.comparison.betti_equal},
                {"hilbert_equal", r.comparison.hilbert_equal},
                {"left", r.left_label},
                {"right", r.right_label},
                {"summands", summands},
                {"free_part", free_part},
                {"left_betti", betti_json(r.left.presentation)},
                {"right_betti", betti_json(r.right.presentation)},
                {"left_hilbert", hilbert_json(r.left.hilbert)},
                {"right_hilbert", hilbert_json(r.right.hilbert)},
                {"hypotheses", r.hypotheses}};
  }

  SessionConfig config_;
  std::shared_ptr<ResolutionCache> cache_;
  std::map<std::string, RingPtr> rings_;
  std::string active_;
  std::map<std::string, Value> bindings_;
};

}  // namespace

std::vector<Report> execute_session(const SessionAST& ast, const SessionConfig& config) {
  if (config.order != "grevlex" && config.order != "lex") throw UsageError("order must be grevlex or lex");
  for (int b : {config.res_bound, config.hom_bound, config.degree_bound, config.degree_cap, config.eta_bound}) {
    if (b < 0) throw UsageError("bounds must be non-negative");
  }
  SessionConfig c = config;
  if (!c.seed) c.seed = session_hash(ast);
  return Executor(c).run(ast);
}

}  // namespace syzlab::dsl
