#include "oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

namespace ctxdl::testing {

namespace {

Elems domain_of(const PlainModel& m) {
  Elems d;
  for (int x = 0; x < m.size; ++x) d.insert(x);
  return d;
}

int individual(const PlainModel& m, const Term& t) {
  auto it = m.individuals.find(t.name());
  if (it == m.individuals.end()) throw std::out_of_range("oracle: no individual " + t.name());
  return it->second;
}

Pairs closure_of(const Pairs& r, const PlainModel& m, bool reflexive) {
  Pairs out = r;
  if (reflexive)
    for (int x = 0; x < m.size; ++x) out.insert({x, x});
  bool grew = true;
  while (grew) {
    grew = false;
    Pairs next = out;
    for (const auto& [x, y] : out)
      for (const auto& [y2, z] : out)
        if (y == y2) next.insert({x, z});
    if (next.size() != out.size()) {
      out = std::move(next);
      grew = true;
    }
  }
  return out;
}

std::size_t successors_in(const Pairs& r, int x, const Elems& c) {
  std::size_t n = 0;
  for (const auto& [a, b] : r)
    if (a == x && c.count(b)) ++n;
  return n;
}

void walk(const ConceptExpr& e, Vocabulary& v);

void walk(const RoleExpr& r, Vocabulary& v) {
  switch (r.kind()) {
    case RoleKind::Atom: v.roles.insert(r.term().name()); return;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      walk(r.left(), v);
      walk(r.right(), v);
      return;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: walk(r.left(), v); return;
    case RoleKind::Product:
      walk(r.product_left(), v);
      walk(r.product_right(), v);
      return;
  }
}

void walk(const ConceptExpr& e, Vocabulary& v) {
  switch (e.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom: return;
    case ConceptKind::TopCtx: v.ctx_ids.insert(e.ctx_id()); return;
    case ConceptKind::Atom: v.concepts.insert(e.term().name()); return;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      walk(e.left(), v);
      walk(e.right(), v);
      return;
    case ConceptKind::Neg: walk(e.left(), v); return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      walk(e.role(), v);
      walk(e.filler(), v);
      return;
    case ConceptKind::Nominals:
      for (const auto& t : e.members()) v.individuals.insert(t.name());
      return;
  }
}

}  // namespace

PlainModel plain(const Interpretation& interp) {
  PlainModel m;
  m.size = static_cast<int>(interp.size());
  for (const auto& [t, e] : interp.individuals()) m.individuals[t.name()] = static_cast<int>(e);
  for (const auto& [t, s] : interp.concepts()) m.concepts[t.name()] = to_elems(s);
  for (const auto& [t, r] : interp.roles()) m.roles[t.name()] = to_pairs(r);
  for (const auto& [id, s] : interp.top_ctxs()) m.top_ctx[id] = to_elems(s);
  return m;
}

Interpretation to_interpretation(const PlainModel& m) {
  Interpretation out(static_cast<std::size_t>(m.size));
  for (const auto& [n, e] : m.individuals) out.set_individual(Term::parse(n), static_cast<Element>(e));
  for (const auto& [n, s] : m.concepts) {
    ElementSet set;
    for (int x : s) set.insert(static_cast<Element>(x));
    out.set_concept(Term::parse(n), set);
  }
  for (const auto& [n, r] : m.roles) {
    PairSet pairs;
    for (const auto& [x, y] : r) pairs.insert(static_cast<Element>(x), static_cast<Element>(y));
    out.set_role(Term::parse(n), pairs);
  }
  for (const auto& [id, s] : m.top_ctx) {
    ElementSet set;
    for (int x : s) set.insert(static_cast<Element>(x));
    out.set_top_ctx(id, set);
  }
  return out;
}

Elems to_elems(ElementSet s) {
  Elems out;
  for (int x = 0; x < static_cast<int>(kMaxDomainSize); ++x)
    if ((s.bits() >> x) & 1ULL) out.insert(x);
  return out;
}

Pairs to_pairs(PairSet s) {
  Pairs out;
  for (int x = 0; x < static_cast<int>(kMaxDomainSize); ++x)
    for (int y = 0; y < static_cast<int>(kMaxDomainSize); ++y)
      if ((s.bits() >> (x * 8 + y)) & 1ULL) out.insert({x, y});
  return out;
}

Elems oracle_concept(const ConceptExpr& e, const PlainModel& m, bool refl) {
  const Elems d = domain_of(m);
  Elems out;
  switch (e.kind()) {
    case ConceptKind::Top: return d;
    case ConceptKind::Bottom: return {};
    case ConceptKind::TopCtx: return m.top_ctx.at(e.ctx_id());
    case ConceptKind::Atom: return m.concepts.at(e.term().name());
    case ConceptKind::Union: {
      Elems a = oracle_concept(e.left(), m, refl), b = oracle_concept(e.right(), m, refl);
      for (int x : d)
        if (a.count(x) || b.count(x)) out.insert(x);
      return out;
    }
    case ConceptKind::Intersection: {
      Elems a = oracle_concept(e.left(), m, refl), b = oracle_concept(e.right(), m, refl);
      for (int x : d)
        if (a.count(x) && b.count(x)) out.insert(x);
      return out;
    }
    case ConceptKind::Neg: {
      Elems a = oracle_concept(e.left(), m, refl);
      for (int x : d)
        if (!a.count(x)) out.insert(x);
      return out;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast: {
      Pairs r = oracle_role(e.role(), m, refl);
      Elems c = oracle_concept(e.filler(), m, refl);
      for (int x : d) {
        bool in = false;
        if (e.kind() == ConceptKind::Exists) {
          for (int y : d) in = in || (r.count({x, y}) && c.count(y));
        } else if (e.kind() == ConceptKind::Forall) {
          in = true;
          for (int y : d) in = in && (!r.count({x, y}) || c.count(y));
        } else if (e.kind() == ConceptKind::AtMost) {
          in = successors_in(r, x, c) <= e.cardinality();
        } else {
          in = successors_in(r, x, c) >= e.cardinality();
        }
        if (in) out.insert(x);
      }
      return out;
    }
    case ConceptKind::Nominals:
      for (const auto& t : e.members()) out.insert(individual(m, t));
      return out;
  }
  return out;
}

Pairs oracle_role(const RoleExpr& r, const PlainModel& m, bool refl) {
  const Elems d = domain_of(m);
  Pairs out;
  switch (r.kind()) {
    case RoleKind::Atom: return m.roles.at(r.term().name());
    case RoleKind::Union: {
      Pairs a = oracle_role(r.left(), m, refl), b = oracle_role(r.right(), m, refl);
      out = a;
      out.insert(b.begin(), b.end());
      return out;
    }
    case RoleKind::Intersection: {
      Pairs a = oracle_role(r.left(), m, refl), b = oracle_role(r.right(), m, refl);
      for (const auto& p : a)
        if (b.count(p)) out.insert(p);
      return out;
    }
    case RoleKind::Neg: {
      Pairs a = oracle_role(r.left(), m, refl);
      for (int x : d)
        for (int y : d)
          if (!a.count({x, y})) out.insert({x, y});
      return out;
    }
    case RoleKind::Inverse:
      for (const auto& [x, y] : oracle_role(r.left(), m, refl)) out.insert({y, x});
      return out;
    case RoleKind::Compose: {
      Pairs a = oracle_role(r.left(), m, refl), b = oracle_role(r.right(), m, refl);
      for (int x : d)
        for (int z : d)
          for (int y : d)
            if (a.count({x, y}) && b.count({y, z})) out.insert({x, z});
      return out;
    }
    case RoleKind::Closure: return closure_of(oracle_role(r.left(), m, refl), m, refl);
    case RoleKind::Product: {
      Elems a = oracle_concept(r.product_left(), m, refl), b = oracle_concept(r.product_right(), m, refl);
      for (int x : a)
        for (int y : b) out.insert({x, y});
      return out;
    }
  }
  return out;
}

bool oracle_satisfies(const PlainModel& m, const Axiom& axiom) {
  return std::visit(
      [&](const auto& ax) -> bool {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          Elems sup = oracle_concept(ax.sup, m);
          for (int x : oracle_concept(ax.sub, m))
            if (!sup.count(x)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          Pairs sup = oracle_role(ax.sup, m);
          for (const auto& p : oracle_role(ax.sub, m))
            if (!sup.count(p)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return oracle_concept(ax.expr, m).count(individual(m, ax.individual)) > 0;
        } else {
          return oracle_role(ax.expr, m).count({individual(m, ax.subject), individual(m, ax.object)}) > 0;
        }
      },
      axiom);
}

bool oracle_is_model(const PlainModel& m, const Ontology& o) {
  for (const auto& ax : o.axioms())
    if (!oracle_satisfies(m, ax)) return false;
  return true;
}

Vocabulary vocabulary_of(const Ontology& o) {
  Vocabulary v;
  for (const auto& axiom : o.axioms()) {
    std::visit(
        [&](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            walk(ax.sub, v);
            walk(ax.sup, v);
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            walk(ax.sub, v);
            walk(ax.sup, v);
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            walk(ax.expr, v);
            v.individuals.insert(ax.individual.name());
          } else {
            walk(ax.expr, v);
            v.individuals.insert(ax.subject.name());
            v.individuals.insert(ax.object.name());
          }
        },
        axiom);
  }
  return v;
}

Vocabulary merge(Vocabulary a, const Vocabulary& b) {
  a.individuals.insert(b.individuals.begin(), b.individuals.end());
  a.concepts.insert(b.concepts.begin(), b.concepts.end());
  a.roles.insert(b.roles.begin(), b.roles.end());
  a.ctx_ids.insert(b.ctx_ids.begin(), b.ctx_ids.end());
  return a;
}

double enumeration_cost(const Vocabulary& v, int n) {
  return std::pow(n, v.individuals.size()) * std::pow(2.0, n * (v.concepts.size() + v.ctx_ids.size())) *
         std::pow(2.0, n * n * v.roles.size());
}

std::optional<int> brute_force_model_size(const Ontology& o, int bound) {
  const Vocabulary v = vocabulary_of(o);
  for (int n = 1; n <= bound; ++n) {
    if (enumerate_models(v, n, [&](const PlainModel& m) { return oracle_is_model(m, o); })) return n;
  }
  return std::nullopt;
}

bool brute_force_countermodel(const Ontology& premises, const Ontology& conclusion, int bound) {
  const Vocabulary v = merge(vocabulary_of(premises), vocabulary_of(conclusion));
  for (int n = 1; n <= bound; ++n) {
    auto found = enumerate_models(v, n, [&](const PlainModel& m) {
      return oracle_is_model(m, premises) && !oracle_is_model(m, conclusion);
    });
    if (found) return true;
  }
  return false;
}

}  // namespace ctxdl::testing
