#include "ctxdl/relativize.hpp"

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

RoleExpr top_pair(const std::string& id) {
  return RoleExpr::product(ConceptExpr::top_ctx(id), ConceptExpr::top_ctx(id));
}

}  // namespace

ConceptExpr relativize_concept(const ConceptExpr& c, const std::string& id) {
  const auto top = [&id] { return ConceptExpr::top_ctx(id); };
  switch (c.kind()) {
    case ConceptKind::Top: return top();
    case ConceptKind::Bottom:
    case ConceptKind::Atom:
    case ConceptKind::Nominals: return c;
    case ConceptKind::TopCtx:
      if (c.ctx_id() == id) throw AlreadyRelativized("already relativized for context " + id);
      return c;
    case ConceptKind::Union:
      return ConceptExpr::union_of(relativize_concept(c.left(), id), relativize_concept(c.right(), id));
    case ConceptKind::Intersection:
      return ConceptExpr::intersection_of(relativize_concept(c.left(), id), relativize_concept(c.right(), id));
    case ConceptKind::Neg:
      return ConceptExpr::intersection_of(ConceptExpr::negation(relativize_concept(c.left(), id)), top());
    case ConceptKind::Exists:
      return ConceptExpr::exists(relativize_role(c.role(), id), relativize_concept(c.filler(), id));
    case ConceptKind::Forall:
      return ConceptExpr::intersection_of(
          ConceptExpr::forall(relativize_role(c.role(), id), relativize_concept(c.filler(), id)), top());
    // Like forall, atmost and atleast 0 hold for an element without
    // successors, so they would also hold for fresh elements unless confined.
    case ConceptKind::AtMost:
      return ConceptExpr::intersection_of(
          ConceptExpr::at_most(c.cardinality(), relativize_role(c.role(), id), relativize_concept(c.filler(), id)),
          top());
    case ConceptKind::AtLeast: {
      auto out = ConceptExpr::at_least(c.cardinality(), relativize_role(c.role(), id), relativize_concept(c.filler(), id));
      return c.cardinality() == 0 ? ConceptExpr::intersection_of(out, top()) : out;
    }
  }
  return c;
}

RoleExpr relativize_role(const RoleExpr& r, const std::string& id) {
  switch (r.kind()) {
    case RoleKind::Atom: return r;
    case RoleKind::Union: return RoleExpr::union_of(relativize_role(r.left(), id), relativize_role(r.right(), id));
    case RoleKind::Intersection:
      return RoleExpr::intersection_of(relativize_role(r.left(), id), relativize_role(r.right(), id));
    case RoleKind::Compose: return RoleExpr::compose(relativize_role(r.left(), id), relativize_role(r.right(), id));
    case RoleKind::Inverse: return RoleExpr::inverse(relativize_role(r.left(), id));
    case RoleKind::Neg:
      return RoleExpr::intersection_of(RoleExpr::negation(relativize_role(r.left(), id)), top_pair(id));
    case RoleKind::Closure:
      return RoleExpr::intersection_of(RoleExpr::closure(relativize_role(r.left(), id)), top_pair(id));
    case RoleKind::Product:
      return RoleExpr::product(relativize_concept(r.product_left(), id), relativize_concept(r.product_right(), id));
  }
  return r;
}

Axiom relativize_axiom(const Axiom& axiom, const std::string& id) {
  return std::visit(
      [&id](const auto& ax) -> Axiom {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return ConceptInclusion{relativize_concept(ax.sub, id), relativize_concept(ax.sup, id)};
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return RoleInclusion{relativize_role(ax.sub, id), relativize_role(ax.sup, id)};
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return ConceptAssertion{relativize_concept(ax.expr, id), ax.individual};
        } else {
          return RoleAssertion{relativize_role(ax.expr, id), ax.subject, ax.object};
        }
      },
      axiom);
}

std::vector<Axiom> relativization_extras(const Term& t, const std::string& id) {
  const ConceptExpr top = ConceptExpr::top_ctx(id);
  return {
      ConceptInclusion{ConceptExpr::atom(t), top},
      ConceptAssertion{top, t},
      ConceptInclusion{ConceptExpr::exists(RoleExpr::atom(t), ConceptExpr::top()), top},
      ConceptInclusion{ConceptExpr::top(), ConceptExpr::forall(RoleExpr::atom(t), top)},
  };
}

Ontology relativize_ontology(const Ontology& ontology, const std::string& id) {
  for (const auto& t : ontology.signature()) {
    if (t.kind() != TermKind::NonContextual) {
      throw ContextualTermInSignature("term " + t.name() + " is not non-contextual");
    }
  }
  Ontology out;
  for (const auto& ax : ontology.axioms()) out.add(relativize_axiom(ax, id));
  for (const auto& t : ontology.signature()) {
    for (const auto& extra : relativization_extras(t, id)) out.add(extra);
  }
  return out;
}

}  // namespace ctxdl
