#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "proxlab/dsl/ast.hpp"
#include "proxlab/sigma_baire.hpp"
#include "proxlab/stone.hpp"

namespace proxlab::dsl {

using AlgebraList = std::vector<SetAlgebra>;
using Value = std::variant<Universe, SymSet, SetAlgebra, Proximity, SetSequence, FunctionSpec, FunctionSequence,
                           std::int64_t, AlgebraList>;

enum class ValueType { Universe, Set, Algebra, Proximity, Sequence, Map, MapSequence, Integer, AlgebraList };

inline const char* type_name(ValueType t) {
  switch (t) {
    case ValueType::Universe: return "universe";
    case ValueType::Set: return "set";
    case ValueType::Algebra: return "algebra";
    case ValueType::Proximity: return "proximity";
    case ValueType::Sequence: return "sequence";
    case ValueType::Map: return "map";
    case ValueType::MapSequence: return "map sequence";
    case ValueType::Integer: return "integer";
    case ValueType::AlgebraList: return "algebra list";
  }
  return "?";
}

inline ValueType type_of(const Value& v) { return static_cast<ValueType>(v.index()); }

struct Options {
  std::uint64_t seed = 0;
  std::size_t depth = 16;
  std::optional<std::size_t> samples;
  bool first_counterexample = false;
  bool timing = false;
  bool write_files = true;
};

// ---------------------------------------------------------------------------
// Law catalog
// ---------------------------------------------------------------------------

using Args = std::vector<Value>;
using Runner = std::function<LawReport(const Args&, const Strategy&, const std::vector<std::string>&)>;

struct LawEntry {
  std::string id;
  std::vector<ValueType> params;
  Runner run;
  bool default_proximity = false;  // a leading proximity may be omitted
};

namespace detail {

template <class T>
const T& get(const Args& a, std::size_t i) {
  return std::get<T>(a[i]);
}

inline std::string first(const std::vector<std::string>& subjects) { return subjects.empty() ? std::string() : subjects[0]; }

}  // namespace detail

inline const std::vector<LawEntry>& law_catalog() {
  using VT = ValueType;
  using detail::first;
  using detail::get;
  static const std::vector<LawEntry> catalog{
      {"prox.axioms", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_proximity_axioms(get<Proximity>(a, 0), s, first(n)); }},
      {"prec.props", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_prec_properties(get<Proximity>(a, 0), s, first(n)); }},
      {"prox.kuratowski", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_kuratowski(get<Proximity>(a, 0), s, first(n)); }},
      {"prox.separated", {VT::Proximity}, [](const Args& a, const Strategy&, const auto& n) { return check_separated(get<Proximity>(a, 0), first(n)); }},
      {"prox.near", {VT::Proximity, VT::Set, VT::Set}, [](const Args& a, const Strategy&, const auto& n) { return check_near(get<Proximity>(a, 0), get<SymSet>(a, 1), get<SymSet>(a, 2), n); }, true},
      {"prox.below", {VT::Proximity, VT::Set, VT::Set}, [](const Args& a, const Strategy&, const auto& n) { return check_below(get<Proximity>(a, 0), get<SymSet>(a, 1), get<SymSet>(a, 2), n); }, true},
      {"prox.table_census", {VT::Integer}, [](const Args& a, const Strategy&, const auto&) {
         const auto k = get<std::int64_t>(a, 0);
         if (k < 1 || k > 4) throw Error(ErrorCode::InvalidArgument, "census runs for 1 <= n <= 4");
         return check_table_census(static_cast<std::size_t>(k));
       }},
      {"zero_dim", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return is_zero_dimensional(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.1.1", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_m_delta_algebra(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.1.2", {VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) { return check_algebra_proximity(get<SetAlgebra>(a, 0), s, first(n)); }},
      {"thm.2.1.3", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_proximity_roundtrip(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.1.4", {VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) { return check_algebra_roundtrip(get<SetAlgebra>(a, 0), s, first(n)); }},
      {"thm.2.1.5", {VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) { return check_basis(get<SetAlgebra>(a, 0), s, first(n)); }},
      {"prox.map", {VT::Map, VT::Proximity, VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) {
         return is_proximity_map(get<FunctionSpec>(a, 0), get<Proximity>(a, 1), get<Proximity>(a, 2), s, n);
       }},
      {"thm.2.2", {VT::Map, VT::Algebra, VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) {
         return check_prox_iff_measurable(get<FunctionSpec>(a, 0), get<SetAlgebra>(a, 1), get<SetAlgebra>(a, 2), s, n);
       }},
      {"cor.2.5", {VT::Map, VT::Map, VT::Proximity, VT::Proximity, VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) {
         return check_functoriality(get<FunctionSpec>(a, 0), get<FunctionSpec>(a, 1), get<Proximity>(a, 2), get<Proximity>(a, 3),
                                    get<Proximity>(a, 4), s, n);
       }},
      {"p_aleph1", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return is_p_aleph1(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.3", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_p_aleph1_implies_zerodim(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.4", {VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) { return check_sigma_iff_p_aleph1(get<SetAlgebra>(a, 0), s, first(n)); }},
      {"thm.2.7", {VT::Proximity, VT::Sequence}, [](const Args& a, const Strategy& s, const auto& n) { return is_prec_chain(get<Proximity>(a, 0), get<SetSequence>(a, 1), s.depth, n); }},
      {"cor.2.8", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_cor_zero_sets(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.9", {VT::Proximity, VT::Set}, [](const Args& a, const Strategy& s, const auto& n) { return check_lindelof(get<Proximity>(a, 0), get<SymSet>(a, 1), s, n); }},
      {"coreflection.idempotent", {VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_coreflection_idempotent(get<Proximity>(a, 0), s, first(n)); }},
      {"thm.2.12", {VT::Map, VT::Algebra, VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) {
         return check_factorization(get<FunctionSpec>(a, 0), get<SetAlgebra>(a, 1), get<Proximity>(a, 2), s, n);
       }},
      {"lem.2.14", {VT::Map, VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) { return check_composition_lemma(get<FunctionSpec>(a, 0), get<Proximity>(a, 1), s, n); }},
      {"thm.2.15", {VT::Proximity, VT::MapSequence, VT::Proximity}, [](const Args& a, const Strategy& s, const auto& n) {
         return check_pointwise_closure(get<Proximity>(a, 0), get<FunctionSequence>(a, 1), get<Proximity>(a, 2), s, n);
       }},
      {"smirnov", {VT::Algebra}, [](const Args& a, const Strategy& s, const auto& n) { return check_smirnov_identity(get<SetAlgebra>(a, 0), s, first(n)); }},
      {"stone", {VT::Algebra}, [](const Args& a, const Strategy&, const auto& n) { return check_stone_space(get<SetAlgebra>(a, 0), first(n)); }},
  };
  return catalog;
}

inline const LawEntry* find_law(const std::string& id) {
  for (const auto& e : law_catalog())
    if (e.id == id) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// One law invocation, fully resolved.
struct Invocation {
  const LawEntry* law = nullptr;
  Args args;
  std::vector<std::string> subjects;
  bool first_counterexample = false;
  std::optional<std::string> dot_path;  // stone command
};

struct Elaborated {
  std::vector<Invocation> invocations;
};

class Interpreter {
 public:
  explicit Interpreter(Options opts = {}) : opts_(std::move(opts)) {}

  /// Evaluates every declaration and resolves every command. Errors carry
  /// the location of the offending expression.
  Elaborated elaborate(const Program& p) {
    Elaborated out;
    for (const auto& s : p.statements) {
      if (is_declaration(s.kind)) {
        declare(s);
      } else if (s.kind == StmtKind::Check || s.kind == StmtKind::FindCounterexample) {
        resolve_command(s, out);
      } else if (s.kind == StmtKind::Stone) {
        Expr id;
        id.kind = ExprKind::Ident;
        id.text = s.name;
        id.loc = s.name_loc;
        Invocation inv;
        inv.law = find_law("stone");
        inv.args = {guard(id.loc, [&] { return Value(eval_algebra(id)); })};
        inv.subjects = {s.name};
        inv.dot_path = s.dot_path;
        out.invocations.push_back(std::move(inv));
      }
    }
    return out;
  }

  LawReport execute(const Invocation& inv) const {
    Strategy s = strategy_for(inv.args);
    s.first_counterexample = opts_.first_counterexample || inv.first_counterexample;
    LawReport r;
    try {
      r = inv.law->run(inv.args, s, inv.subjects);
      if (inv.dot_path && opts_.write_files) {
        std::ofstream f(*inv.dot_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + *inv.dot_path);
        f << emit_dot(StoneSpace(std::get<SetAlgebra>(inv.args[0])));
        r.note("dot written to " + *inv.dot_path);
      }
    } catch (const Error& e) {
      r = LawReport{};
      r.law = inv.law->id;
      r.subjects = inv.subjects;
      r.status = Status::Refused;
      r.witnesses.push_back({"error", std::string(e.name()) + ": " + e.what()});
    }
    r.seed = opts_.seed;
    if (!opts_.timing) r.elapsed_ms = 0.0;
    return r;
  }

  std::vector<LawReport> run(const Elaborated& e) const {
    std::vector<LawReport> out;
    for (const auto& inv : e.invocations) out.push_back(execute(inv));
    return out;
  }

  const Value* lookup(const std::string& name) const {
    const auto it = env_.find(name);
    return it == env_.end() ? nullptr : &it->second;
  }

 private:
  template <class F>
  static auto guard(Location at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      throw DslError(at, std::string(e.name()) + ": " + e.what());
    }
  }

  Strategy strategy_for(const Args& args) const {
    std::optional<Universe> u;
    for (const auto& a : args) {
      if (u) break;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Proximity> || std::is_same_v<T, SetAlgebra> || std::is_same_v<T, SymSet>)
              u = v.universe();
            else if constexpr (std::is_same_v<T, FunctionSpec>)
              u = v.domain();
            else if constexpr (std::is_same_v<T, FunctionSequence>)
              u = v.domain();
          },
          a);
    }
    Strategy s = u && !u->is_finite() ? (opts_.samples ? Strategy::sampled(opts_.seed, *opts_.samples) : Strategy::family())
                                     : Strategy::exhaustive();
    s.seed = opts_.seed;
    s.depth = opts_.depth;
    return s;
  }

  [[noreturn]] static void type_error(const Expr& e, ValueType want, const std::string& got) {
    throw DslError(e.loc, "expected a " + std::string(type_name(want)) + ", " + render(e) + " is " + got);
  }

  const Value& bound(const Expr& e) const {
    const auto* v = lookup(e.text);
    if (!v) throw DslError(e.loc, "unknown identifier " + e.text);
    return *v;
  }

  template <class T>
  const T* bound_as(const Expr& e, ValueType want) const {
    if (e.kind != ExprKind::Ident) return nullptr;
    const auto& v = bound(e);
    if (const auto* t = std::get_if<T>(&v)) return t;
    type_error(e, want, std::string("a ") + type_name(type_of(v)));
  }

  static const Expr& arg_at(const Expr& call, std::size_t i) {
    if (i >= call.args.size()) throw DslError(call.loc, call.text + " needs at least " + std::to_string(i + 1) + " arguments");
    return call.args[i];
  }

  static void arity(const Expr& call, std::size_t lo, std::size_t hi) {
    if (call.args.size() < lo || call.args.size() > hi)
      throw DslError(call.loc, call.text + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                                   " arguments, got " + std::to_string(call.args.size()));
  }

  static bool is_call(const Expr& e, const char* name) { return e.kind == ExprKind::Call && e.text == name; }

  // --- scalars -------------------------------------------------------------

  std::int64_t eval_int(const Expr& e) const {
    if (e.kind == ExprKind::Number && e.text.find('/') == std::string::npos) return guard(e.loc, [&] {
        const auto q = parse_rational(e.text);
        return q.numerator();
      });
    if (const auto* i = bound_as<std::int64_t>(e, ValueType::Integer)) return *i;
    throw DslError(e.loc, "expected an integer, found " + render(e));
  }

  static Rational eval_rational(const Expr& e) {
    if (e.kind != ExprKind::Number) throw DslError(e.loc, "expected a number, found " + render(e));
    return guard(e.loc, [&] { return parse_rational(e.text); });
  }

  static Point eval_point(const Expr& e, const Universe& u) {
    if (e.kind == ExprKind::Infinity) {
      if (!u.with_infinity) throw DslError(e.loc, "inf is not a point of " + u.render());
      return Infinity{};
    }
    const auto q = eval_rational(e);
    if (u.is_interval()) return q;
    if (q.denominator() != 1) throw DslError(e.loc, render(e) + " is not a point of " + u.render());
    const Point p{q.numerator()};
    if (!point_in_universe(u, p)) throw DslError(e.loc, render(e) + " is not a point of " + u.render());
    return p;
  }

  // --- universes -----------------------------------------------------------

  Universe eval_universe(const Expr& e) const {
    if (e.kind == ExprKind::Ident) {
      if (e.text == "integers") return Universe::integers();
      if (e.text == "integers with_infinity") return Universe::integers(true);
      if (e.text == "unit_interval") return Universe::unit_interval();
      if (const auto* u = bound_as<Universe>(e, ValueType::Universe)) return *u;
    }
    if (is_call(e, "finite")) {
      arity(e, 1, 1);
      const auto n = eval_int(e.args[0]);
      if (n < 1 || n > static_cast<std::int64_t>(Universe::max_finite_size))
        throw DslError(e.args[0].loc, "finite universes have 1 to 63 points");
      return Universe::finite(static_cast<std::size_t>(n));
    }
    throw DslError(e.loc, "expected a universe, found " + render(e));
  }

  // --- sets ----------------------------------------------------------------

  std::optional<Universe> infer_universe(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::Ident: {
        const auto* v = lookup(e.text);
        if (!v) return std::nullopt;
        if (const auto* s = std::get_if<SymSet>(v)) return s->universe();
        if (const auto* u = std::get_if<Universe>(v)) return *u;
        return std::nullopt;
      }
      case ExprKind::Interval: return Universe::unit_interval();
      case ExprKind::Call:
        if (e.text == "empty" || e.text == "full") {
          if (!e.args.empty()) return eval_universe(e.args[0]);
        }
        [[fallthrough]];
      case ExprKind::Binary:
      case ExprKind::Complement:
        for (const auto& a : e.args)
          if (auto u = infer_universe(a)) return u;
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  SymSet eval_set(const Expr& e, std::optional<Universe> hint) const {
    if (!hint) hint = infer_universe(e);
    if (!hint) hint = current_;
    switch (e.kind) {
      case ExprKind::Ident: {
        const auto& v = bound(e);
        if (const auto* s = std::get_if<SymSet>(&v)) return *s;
        if (const auto* u = std::get_if<Universe>(&v)) return SymSet::full(*u);
        type_error(e, ValueType::Set, std::string("a ") + type_name(type_of(v)));
      }
      case ExprKind::SetLiteral: {
        if (!hint) throw DslError(e.loc, "no universe in scope for " + render(e));
        std::vector<Point> pts;
        for (const auto& a : e.args) pts.push_back(eval_point(a, *hint));
        return guard(e.loc, [&] { return SymSet::of(*hint, pts); });
      }
      case ExprKind::Interval: {
        const auto lo = eval_rational(e.args[0]), hi = eval_rational(e.args[1]);
        return guard(e.loc, [&] { return SymSet::intervals({Interval{lo, hi, e.lo_closed, e.hi_closed}}); });
      }
      case ExprKind::Binary: {
        const auto a = eval_set(e.args[0], hint);
        const auto b = eval_set(e.args[1], a.universe());
        return guard(e.loc, [&] {
          if (e.text == "-") return a - b;
          if (e.text == "∩" || e.text == "&") return a & b;
          return a | b;
        });
      }
      case ExprKind::Complement: return eval_set(e.args[0], hint).complement();
      case ExprKind::Call: {
        if (e.text == "complement") {
          arity(e, 1, 1);
          return eval_set(e.args[0], hint).complement();
        }
        if (e.text == "empty" || e.text == "full") {
          arity(e, 0, 1);
          const auto u = e.args.empty() ? hint : std::optional<Universe>(eval_universe(e.args[0]));
          if (!u) throw DslError(e.loc, "no universe in scope for " + render(e));
          return e.text == "empty" ? SymSet::empty(*u) : SymSet::full(*u);
        }
        if (e.text == "periodic") {
          const auto* p = e.arg("p");
          const auto* r = e.arg("residues");
          if (!p || !r || r->kind != ExprKind::SetLiteral) throw DslError(e.loc, "periodic needs p=INT and residues={...}");
          Universe u = hint && hint->is_integers() ? *hint : Universe::integers();
          std::vector<std::int64_t> res;
          for (const auto& x : r->args) res.push_back(eval_int(x));
          const auto period = eval_int(*p);
          return guard(e.loc, [&] { return SymSet::periodic(u, period, res); });
        }
        throw DslError(e.loc, "unknown set constructor " + e.text);
      }
      default: throw DslError(e.loc, "expected a set, found " + render(e));
    }
  }

  // --- algebras and proximities --------------------------------------------

  SetAlgebra eval_algebra(const Expr& e) const {
    if (const auto* m = bound_as<SetAlgebra>(e, ValueType::Algebra)) return *m;
    if (e.kind != ExprKind::Call) throw DslError(e.loc, "expected an algebra, found " + render(e));
    return guard(e.loc, [&]() -> SetAlgebra {
      if (e.text == "atoms" || e.text == "generated") {
        if (e.args.empty()) throw DslError(e.loc, e.text + " needs at least one set");
        std::optional<Universe> u;
        for (const auto& a : e.args)
          if (!u) u = infer_universe(a);
        std::vector<SymSet> sets;
        for (const auto& a : e.args) sets.push_back(eval_set(a, u));
        const auto univ = sets.front().universe();
        return e.text == "atoms" ? SetAlgebra::from_atoms(univ, sets) : SetAlgebra::generated(univ, sets);
      }
      if (e.text == "finite_cofinite") {
        arity(e, 1, 2);
        bool pinned = false;
        if (e.args.size() == 2) {
          if (e.args[1].kind != ExprKind::Ident || e.args[1].text != "pinned") throw DslError(e.args[1].loc, "expected 'pinned'");
          pinned = true;
        }
        return SetAlgebra::finite_cofinite(eval_universe(e.args[0]), pinned);
      }
      if (e.text == "powerset") {
        arity(e, 1, 1);
        return SetAlgebra::power_set(eval_universe(e.args[0]));
      }
      if (e.text == "from_proximity") {
        arity(e, 1, 1);
        return algebra_from_proximity(eval_proximity(e.args[0]));
      }
      if (e.text == "baire") {
        arity(e, 1, 1);
        return proximally_baire(eval_proximity(e.args[0]));
      }
      if (e.text == "quotient") {
        arity(e, 2, 2);
        const auto m = eval_algebra(e.args[0]);
        if (e.args[1].kind == ExprKind::Ident && e.args[1].text == "finite_sets") return quotient_algebra(m, Ideal::finite_sets());
        return quotient_algebra(m, Ideal::principal(eval_set(e.args[1], m.universe())));
      }
      throw DslError(e.loc, "unknown algebra constructor " + e.text);
    });
  }

  Proximity eval_proximity(const Expr& e) const {
    if (e.kind == ExprKind::Ident) {
      const auto& v = bound(e);
      if (const auto* d = std::get_if<Proximity>(&v)) return *d;
      if (const auto* m = std::get_if<SetAlgebra>(&v)) return Proximity::from_algebra(*m);
      type_error(e, ValueType::Proximity, std::string("a ") + type_name(type_of(v)));
    }
    if (e.kind != ExprKind::Call) throw DslError(e.loc, "expected a proximity, found " + render(e));
    return guard(e.loc, [&]() -> Proximity {
      if (e.text == "discrete" || e.text == "one_point" || e.text == "metric") {
        arity(e, 1, 1);
        const auto u = eval_universe(e.args[0]);
        if (e.text == "discrete") return Proximity::discrete(u);
        if (e.text == "one_point") return Proximity::one_point(u);
        return Proximity::metric(u);
      }
      if (e.text == "from_algebra") {
        arity(e, 1, 1);
        return Proximity::from_algebra(eval_algebra(e.args[0]));
      }
      if (e.text == "subspace") {
        arity(e, 2, 2);
        const auto d = eval_proximity(e.args[0]);
        return Proximity::subspace(d, eval_set(e.args[1], d.universe()));
      }
      if (e.text == "coreflection") {
        arity(e, 1, 1);
        return coreflection(eval_proximity(e.args[0]));
      }
      return Proximity::from_algebra(eval_algebra(e));
    });
  }

  // --- sequences -------------------------------------------------------------

  SetSequence eval_seq(const Expr& e) const {
    if (const auto* z = bound_as<SetSequence>(e, ValueType::Sequence)) return *z;
    if (e.kind != ExprKind::Call) throw DslError(e.loc, "expected a sequence, found " + render(e));
    return guard(e.loc, [&]() -> SetSequence {
      if (e.text == "shrink_tail") {
        const auto* core = e.arg("core");
        const auto* tail = e.arg("tail");
        if (!core || !tail || e.args.size() != 2) throw DslError(e.loc, "shrink_tail needs core=SET and tail=SET");
        const auto c = eval_set(*core, std::nullopt);
        return SetSequence::shrink_tail(c, eval_set(*tail, c.universe()));
      }
      if (e.text == "prefixes" || e.text == "constant" || e.text == "neighborhoods" || e.text == "erosions") {
        arity(e, 1, 1);
        const auto s = eval_set(e.args[0], std::nullopt);
        if (e.text == "prefixes") return SetSequence::prefixes(s);
        if (e.text == "constant") return SetSequence::constant(s);
        if (e.text == "neighborhoods") return SetSequence::neighbourhoods(s);
        return SetSequence::erosions(s);
      }
      if (e.text == "list") {
        const auto* tail = e.arg("tail");
        if (!tail) throw DslError(e.loc, "list needs tail=SET");
        const auto t = eval_set(*tail, std::nullopt);
        std::vector<SymSet> terms;
        for (std::size_t i = 0; i < e.args.size(); ++i)
          if (e.keys[i].empty()) terms.push_back(eval_set(e.args[i], t.universe()));
        return SetSequence::list(std::move(terms), t);
      }
      throw DslError(e.loc, "unknown sequence constructor " + e.text);
    });
  }

  // --- maps ----------------------------------------------------------------

  FunctionSpec eval_fn(const Expr& e) const {
    if (const auto* f = bound_as<FunctionSpec>(e, ValueType::Map)) return *f;
    if (e.kind != ExprKind::Call) throw DslError(e.loc, "expected a map, found " + render(e));
    return guard(e.loc, [&]() -> FunctionSpec {
      if (e.text == "table") {
        arity(e, 2, 2);
        const auto dom = eval_universe(e.args[0]), cod = eval_universe(e.args[1]);
        if (!dom.is_finite()) throw DslError(e.args[0].loc, "table needs a finite domain");
        std::vector<std::optional<Point>> values(dom.size);
        for (const auto& [k, v] : e.body) {
          const auto x = eval_int(k);
          if (x < 0 || static_cast<std::size_t>(x) >= dom.size) throw DslError(k.loc, render(k) + " is not a point of " + dom.render());
          values[static_cast<std::size_t>(x)] = eval_point(v, cod);
        }
        std::vector<Point> vs;
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (!values[i]) throw DslError(e.loc, "table has no value at " + std::to_string(i));
          vs.push_back(*values[i]);
        }
        return FunctionSpec::table(dom, cod, vs);
      }
      if (e.text == "chi") {
        arity(e, 1, 2);
        const auto s = eval_set(e.args[0], std::nullopt);
        return FunctionSpec::characteristic(s, e.args.size() == 2 ? eval_universe(e.args[1]) : Universe::unit_interval());
      }
      if (e.text == "identity") {
        arity(e, 1, 1);
        return FunctionSpec::identity(eval_universe(e.args[0]));
      }
      if (e.text == "shift") {
        arity(e, 2, 2);
        return FunctionSpec::shift(eval_universe(e.args[0]), eval_int(e.args[1]));
      }
      if (e.text == "decay") {
        const auto s = eval_set(arg_at(e, 0), std::nullopt);
        const auto* ex = e.arg("e");
        const auto k = ex ? eval_int(*ex) : 1;
        if (k < 1) throw DslError(ex->loc, "exponent must be positive");
        return FunctionSpec::decay(s, static_cast<unsigned>(k));
      }
      if (e.text == "pl") {
        std::vector<std::pair<Rational, Rational>> knots;
        for (const auto& [k, v] : e.body) knots.emplace_back(eval_rational(k), eval_rational(v));
        return FunctionSpec::piecewise_linear(std::move(knots));
      }
      if (e.text == "compose") {
        arity(e, 2, 2);
        return FunctionSpec::compose(eval_fn(e.args[0]), eval_fn(e.args[1]));
      }
      if (e.text == "constant") {
        arity(e, 3, 3);
        const auto dom = eval_universe(e.args[0]), cod = eval_universe(e.args[1]);
        return FunctionSpec::constant(dom, cod, eval_point(e.args[2], cod));
      }
      if (e.text == "step") {
        arity(e, 2, 2);
        const auto dom = eval_universe(e.args[0]), cod = eval_universe(e.args[1]);
        std::vector<FunctionSpec::Piece> ps;
        for (const auto& [k, v] : e.body) ps.push_back({eval_set(k, dom), eval_point(v, cod)});
        return FunctionSpec::pieces(dom, cod, std::move(ps));
      }
      if (e.text == "residue_map") {
        const auto dom = eval_universe(arg_at(e, 0)), cod = eval_universe(arg_at(e, 1));
        const auto* p = e.arg("p");
        if (!p) throw DslError(e.loc, "residue_map needs p=INT");
        const auto period = eval_int(*p);
        if (period < 1 || period > 64) throw DslError(p->loc, "period must be between 1 and 64");
        std::vector<std::optional<Point>> res(static_cast<std::size_t>(period));
        std::vector<std::pair<Point, Point>> exceptions;
        for (const auto& [k, v] : e.body) {
          if (k.kind == ExprKind::Infinity) {
            exceptions.emplace_back(Infinity{}, eval_point(v, cod));
            continue;
          }
          const auto r = eval_int(k);
          if (r < 0 || r >= period) throw DslError(k.loc, "residue " + render(k) + " out of range");
          res[static_cast<std::size_t>(r)] = eval_point(v, cod);
        }
        std::vector<Point> values;
        for (std::size_t r = 0; r < res.size(); ++r) {
          if (!res[r]) throw DslError(e.loc, "residue_map has no value for residue " + std::to_string(r));
          values.push_back(*res[r]);
        }
        return FunctionSpec::residue_map(dom, cod, period, values, exceptions);
      }
      throw DslError(e.loc, "unknown map constructor " + e.text);
    });
  }

  FunctionSequence eval_fnseq(const Expr& e) const {
    if (const auto* f = bound_as<FunctionSequence>(e, ValueType::MapSequence)) return *f;
    if (e.kind != ExprKind::Call) throw DslError(e.loc, "expected a map sequence, found " + render(e));
    return guard(e.loc, [&]() -> FunctionSequence {
      if (e.text == "powers") {
        arity(e, 1, 1);
        return FunctionSequence::powers(eval_fn(e.args[0]));
      }
      if (e.text == "constant") {
        arity(e, 1, 1);
        return FunctionSequence::constant(eval_fn(e.args[0]));
      }
      if (e.text == "eventually") {
        const auto* lim = e.arg("limit");
        if (!lim) throw DslError(e.loc, "eventually needs limit=MAP");
        std::vector<FunctionSpec> head;
        for (std::size_t i = 0; i < e.args.size(); ++i)
          if (e.keys[i].empty()) head.push_back(eval_fn(e.args[i]));
        return FunctionSequence::eventually(std::move(head), eval_fn(*lim));
      }
      throw DslError(e.loc, "unknown map sequence constructor " + e.text);
    });
  }

  Value eval_as(ValueType t, const Expr& e, const std::optional<Universe>& hint) const {
    switch (t) {
      case ValueType::Universe: return eval_universe(e);
      case ValueType::Set: return eval_set(e, hint);
      case ValueType::Algebra: {
        if (is_call(e, "all_algebras")) {
          arity(e, 1, 1);
          const auto n = eval_int(e.args[0]);
          if (n < 1 || n > 6) throw DslError(e.args[0].loc, "all_algebras runs for 1 <= n <= 6");
          return all_algebras(static_cast<std::size_t>(n));
        }
        return eval_algebra(e);
      }
      case ValueType::Proximity: {
        if (is_call(e, "all_algebras")) return eval_as(ValueType::Algebra, e, hint);
        return eval_proximity(e);
      }
      case ValueType::Sequence: return eval_seq(e);
      case ValueType::Map: return eval_fn(e);
      case ValueType::MapSequence: return eval_fnseq(e);
      case ValueType::Integer: return eval_int(e);
      case ValueType::AlgebraList: return eval_as(ValueType::Algebra, e, hint);
    }
    throw DslError(e.loc, "bad type");
  }

  // --- statements ------------------------------------------------------------

  void declare(const Stmt& s) {
    if (env_.count(s.name)) throw DslError(s.name_loc, "duplicate identifier " + s.name);
    Value v;
    switch (s.kind) {
      case StmtKind::Universe:
        v = eval_universe(s.value);
        current_ = std::get<Universe>(v);
        break;
      case StmtKind::Set: {
        std::optional<Universe> hint;
        if (s.scope) hint = eval_universe(*s.scope);
        const auto set = eval_set(s.value, hint);
        if (hint && !(set.universe() == *hint))
          throw DslError(s.value.loc, "universe mismatch: " + render(s.value) + " lives in " + set.universe().render());
        v = set;
        break;
      }
      case StmtKind::Algebra: v = eval_algebra(s.value); break;
      case StmtKind::Proximity:
        v = eval_proximity(s.value);
        last_proximity_ = s.name;
        break;
      case StmtKind::Seq: v = eval_seq(s.value); break;
      case StmtKind::Fn: v = eval_fn(s.value); break;
      case StmtKind::FnSeq: v = eval_fnseq(s.value); break;
      default: break;
    }
    env_.emplace(s.name, std::move(v));
  }

  void resolve_command(const Stmt& s, Elaborated& out) const {
    const auto* law = find_law(s.name);
    if (!law) throw DslError(s.name_loc, "unknown law id " + s.name);
    std::vector<Expr> args = s.args;
    if (law->default_proximity && args.size() + 1 == law->params.size()) {
      if (!last_proximity_) throw DslError(s.name_loc, s.name + " needs a proximity and none is declared");
      Expr d;
      d.kind = ExprKind::Ident;
      d.text = *last_proximity_;
      d.loc = s.name_loc;
      args.insert(args.begin(), d);
    }
    if (args.size() != law->params.size()) {
      std::string sig;
      for (const auto t : law->params) sig += std::string(sig.empty() ? "" : ", ") + type_name(t);
      throw DslError(s.name_loc, s.name + " expects " + std::to_string(law->params.size()) + " arguments (" + sig + "), got " +
                                     std::to_string(args.size()));
    }
    // Sets take their universe from the first structured argument.
    std::optional<Universe> hint;
    Args values;
    std::optional<std::size_t> sweep;
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto v = eval_as(law->params[i], args[i], hint);
      if (const auto* d = std::get_if<Proximity>(&v)) hint = hint ? hint : std::optional<Universe>(d->universe());
      if (const auto* m = std::get_if<SetAlgebra>(&v)) hint = hint ? hint : std::optional<Universe>(m->universe());
      if (std::holds_alternative<AlgebraList>(v)) {
        if (sweep) throw DslError(args[i].loc, "only one argument may sweep over algebras");
        sweep = i;
      }
      values.push_back(std::move(v));
    }
    std::vector<std::string> subjects;
    for (const auto& a : args) subjects.push_back(render(a));
    if (!sweep) {
      out.invocations.push_back({law, values, subjects, s.kind == StmtKind::FindCounterexample, std::nullopt});
      return;
    }
    const auto list = std::get<AlgebraList>(values[*sweep]);
    for (const auto& m : list) {
      Args inst = values;
      auto names = subjects;
      if (law->params[*sweep] == ValueType::Proximity)
        inst[*sweep] = Proximity::from_algebra(m);
      else
        inst[*sweep] = m;
      names[*sweep] = m.render();
      out.invocations.push_back({law, std::move(inst), std::move(names), s.kind == StmtKind::FindCounterexample, std::nullopt});
    }
  }

  Options opts_;
  std::map<std::string, Value> env_;
  std::optional<Universe> current_;
  std::optional<std::string> last_proximity_;
};

}  // namespace proxlab::dsl
