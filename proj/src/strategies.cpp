#include "ctxdl/strategies.hpp"

#include <functional>
#include <set>

#include "ctxdl/errors.hpp"
#include "ctxdl/relativize.hpp"

namespace ctxdl {

namespace {

// Term substitution over expressions. `individual` applies to assertion
// arguments and nominal members, `symbol` to concept and role atoms.
struct TermMap {
  std::function<Term(const Term&)> individual;
  std::function<Term(const Term&)> symbol;
  std::function<std::optional<ConceptExpr>(const std::string&)> top_ctx;
};

RoleExpr rewrite(const RoleExpr& r, const TermMap& m);

ConceptExpr rewrite(const ConceptExpr& c, const TermMap& m) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom: return c;
    case ConceptKind::TopCtx:
      if (m.top_ctx) {
        if (auto replaced = m.top_ctx(c.ctx_id())) return *replaced;
      }
      return c;
    case ConceptKind::Atom: return m.symbol ? ConceptExpr::atom(m.symbol(c.term())) : c;
    case ConceptKind::Union: return ConceptExpr::union_of(rewrite(c.left(), m), rewrite(c.right(), m));
    case ConceptKind::Intersection: return ConceptExpr::intersection_of(rewrite(c.left(), m), rewrite(c.right(), m));
    case ConceptKind::Neg: return ConceptExpr::negation(rewrite(c.left(), m));
    case ConceptKind::Exists: return ConceptExpr::exists(rewrite(c.role(), m), rewrite(c.filler(), m));
    case ConceptKind::Forall: return ConceptExpr::forall(rewrite(c.role(), m), rewrite(c.filler(), m));
    case ConceptKind::AtMost:
      return ConceptExpr::at_most(c.cardinality(), rewrite(c.role(), m), rewrite(c.filler(), m));
    case ConceptKind::AtLeast:
      return ConceptExpr::at_least(c.cardinality(), rewrite(c.role(), m), rewrite(c.filler(), m));
    case ConceptKind::Nominals: {
      if (!m.individual) return c;
      std::vector<Term> members;
      for (const auto& t : c.members()) members.push_back(m.individual(t));
      return ConceptExpr::nominals(std::move(members));
    }
  }
  return c;
}

RoleExpr rewrite(const RoleExpr& r, const TermMap& m) {
  switch (r.kind()) {
    case RoleKind::Atom: return m.symbol ? RoleExpr::atom(m.symbol(r.term())) : r;
    case RoleKind::Union: return RoleExpr::union_of(rewrite(r.left(), m), rewrite(r.right(), m));
    case RoleKind::Intersection: return RoleExpr::intersection_of(rewrite(r.left(), m), rewrite(r.right(), m));
    case RoleKind::Compose: return RoleExpr::compose(rewrite(r.left(), m), rewrite(r.right(), m));
    case RoleKind::Neg: return RoleExpr::negation(rewrite(r.left(), m));
    case RoleKind::Inverse: return RoleExpr::inverse(rewrite(r.left(), m));
    case RoleKind::Closure: return RoleExpr::closure(rewrite(r.left(), m));
    case RoleKind::Product: return RoleExpr::product(rewrite(r.product_left(), m), rewrite(r.product_right(), m));
  }
  return r;
}

Axiom rewrite(const Axiom& axiom, const TermMap& m) {
  auto ind = [&m](const Term& t) { return m.individual ? m.individual(t) : t; };
  return std::visit(
      [&](const auto& ax) -> Axiom {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return ConceptInclusion{rewrite(ax.sub, m), rewrite(ax.sup, m)};
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return RoleInclusion{rewrite(ax.sub, m), rewrite(ax.sup, m)};
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return ConceptAssertion{rewrite(ax.expr, m), ind(ax.individual)};
        } else {
          return RoleAssertion{rewrite(ax.expr, m), ind(ax.subject), ind(ax.object)};
        }
      },
      axiom);
}

void require_non_contextual(const Signature& sig, const char* where) {
  for (const auto& t : sig) {
    if (t.kind() != TermKind::NonContextual) {
      throw ContextualTermInSignature(std::string("term ") + t.name() + " in the " + where +
                                      " is not non-contextual");
    }
  }
}

// Terms in individual position of an ABox axiom.
Signature individual_positions(const Axiom& axiom) {
  if (!is_abox(axiom)) return {};
  return individuals_of({axiom});
}

std::map<Term, Term> identity_map(const Axiom& axiom) {
  std::map<Term, Term> out;
  for (const auto& t : signature_of(axiom)) out.emplace(t, t);
  return out;
}

StatementImage nd_terms(const AnnotatedStatement& in) {
  const ContextualAnnotation& ca = in.annotation;
  const RenamingScheme ren(ca.ctx_id);
  const Term anchor = AnchorScheme::context_anchor(ca);
  const Term top = ren.top_term();
  TermMap m;
  m.individual = [&ren](const Term& t) { return ren.rename(t); };
  m.symbol = m.individual;
  m.top_ctx = [&ca, &top](const std::string& id) -> std::optional<ConceptExpr> {
    if (id != ca.ctx_id) return std::nullopt;
    return ConceptExpr::atom(top);
  };

  StatementImage img;
  const Signature sig = signature_of(in.axiom);
  img.st.push_back(rewrite(relativize_axiom(in.axiom, ca.ctx_id), m));
  for (const auto& t : sig) {
    for (const auto& extra : relativization_extras(t, ca.ctx_id)) img.st.push_back(rewrite(extra, m));
  }
  for (const auto& t : sig) img.st.push_back(role_assertion(vocab::is_contextual_part_of(), ren.rename(t), t));
  for (const auto& t : sig) img.st.push_back(role_assertion(vocab::is_in_context(), ren.rename(t), anchor));
  for (const auto& t : sig) img.signature_map.emplace(t, ren.rename(t));
  img.cx = cx_of_annotation(ca, anchor);
  img.anchor = anchor;
  return img;
}

StatementImage nd_fluents(const AnnotatedStatement& in) {
  const ContextualAnnotation& ca = in.annotation;
  const RenamingScheme ren(ca.ctx_id);
  const Term anchor = AnchorScheme::context_anchor(ca);
  const Signature individuals = individual_positions(in.axiom);
  TermMap m;
  m.individual = [&ren](const Term& t) { return ren.rename(t); };

  StatementImage img;
  img.st.push_back(is_abox(in.axiom) ? rewrite(in.axiom, m) : in.axiom);
  for (const auto& t : individuals) img.st.push_back(role_assertion(vocab::is_contextual_part_of(), ren.rename(t), t));
  for (const auto& t : individuals) img.st.push_back(role_assertion(vocab::is_in_context(), ren.rename(t), anchor));
  img.signature_map = identity_map(in.axiom);
  for (const auto& t : individuals) img.signature_map.at(t) = ren.rename(t);
  img.cx = cx_of_annotation(ca, anchor);
  img.anchor = anchor;
  return img;
}

StatementImage reify(Strategy strategy, const AnnotatedStatement& in, std::vector<Warning>* warnings) {
  StatementImage img;
  const auto* ra = std::get_if<RoleAssertion>(&in.axiom);
  if (ra == nullptr || ra->expr.kind() != RoleKind::Atom) {
    if (ra != nullptr && warnings != nullptr) {
      warnings->push_back({Warning::Kind::NonAtomicAssertion,
                           "role assertion over a complex role left unannotated: " + to_text(in.axiom),
                           {},
                           in.axiom});
    }
    img.st.push_back(in.axiom);
    img.signature_map = identity_map(in.axiom);
    return img;
  }

  const Term& r = ra->expr.term();
  const Term& x = ra->subject;
  const Term& y = ra->object;
  const Term a = AnchorScheme::statement_anchor(in.axiom, in.annotation);
  img.signature_map = identity_map(in.axiom);
  switch (strategy) {
    case Strategy::RdfReification:
      img.st.push_back(role_assertion(vocab::subject(), a, x));
      img.st.push_back(role_assertion(vocab::predicate(), a, r));
      img.st.push_back(role_assertion(vocab::object(), a, y));
      break;
    case Strategy::NAryTwoRole:
      img.st.push_back(role_assertion(nary_first(r), x, a));
      img.st.push_back(role_assertion(nary_second(r), a, y));
      if (r != x && r != y) img.signature_map.at(r) = nary_first(r);
      break;
    case Strategy::NAryConceptAnchored:
      img.st.push_back(concept_assertion(nary_concept(r), a));
      img.st.push_back(role_assertion(nary_first(r), a, x));
      img.st.push_back(role_assertion(nary_second(r), a, y));
      if (r != x && r != y) img.signature_map.at(r) = nary_first(r);
      break;
    case Strategy::SingletonProperty: {
      img.st.push_back(role_assertion(a, x, y));
      ConceptExpr left = ConceptExpr::nominals({x});
      ConceptExpr right = ConceptExpr::exists(RoleExpr::atom(a), ConceptExpr::nominals({y}));
      img.st.push_back(ConceptInclusion{left, right});
      img.st.push_back(ConceptInclusion{right, left});
      img.st.push_back(role_assertion(vocab::singleton_property_of(), a, r));
      break;
    }
    default: break;
  }
  img.cx = cx_of_annotation(in.annotation, a);
  img.anchor = a;
  return img;
}

}  // namespace

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::NdTerms: return "ndterms";
    case Strategy::NdFluents: return "ndfluents";
    case Strategy::RdfReification: return "rdf";
    case Strategy::NAryTwoRole: return "nary";
    case Strategy::NAryConceptAnchored: return "nary-concept";
    case Strategy::SingletonProperty: return "singleton";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool is_reification(Strategy strategy) noexcept {
  return strategy != Strategy::NdTerms && strategy != Strategy::NdFluents;
}

namespace vocab {
Term is_contextual_part_of() { return Term::non_contextual("isContextualPartOf"); }
Term is_in_context() { return Term::non_contextual("isInContext"); }
Term subject() { return Term::non_contextual("subject"); }
Term predicate() { return Term::non_contextual("predicate"); }
Term object() { return Term::non_contextual("object"); }
Term singleton_property_of() { return Term::non_contextual("singletonPropertyOf"); }
}  // namespace vocab

Term RenamingScheme::rename(const Term& t) const { return Term(t.name() + "@" + ctx_id_, TermKind::Contextual); }

Term RenamingScheme::top_term() const { return Term("top@" + ctx_id_, TermKind::Contextual); }

Term AnchorScheme::context_anchor(const ContextualAnnotation& annotation) {
  return Term("ctx@" + annotation.ctx_id, TermKind::Anchor);
}

Term AnchorScheme::statement_anchor(const Axiom& axiom, const ContextualAnnotation& annotation) {
  return Term("st@" + annotation.ctx_id + "@" + content_hash(to_text(axiom)), TermKind::Anchor);
}

Term nary_first(const Term& role) { return Term::non_contextual(role.name() + "#1"); }
Term nary_second(const Term& role) { return Term::non_contextual(role.name() + "#2"); }
Term nary_concept(const Term& role) { return Term::non_contextual("C#" + role.name()); }

std::vector<Axiom> cx_of_annotation(const ContextualAnnotation& annotation, const Term& replacement) {
  TermMap m;
  m.individual = [&](const Term& t) { return t == annotation.anchor ? replacement : t; };
  std::vector<Axiom> out;
  out.reserve(annotation.abox.size());
  for (const auto& ax : annotation.abox) out.push_back(rewrite(ax, m));
  return out;
}

StatementImage contextualize_statement(Strategy strategy, const AnnotatedStatement& input,
                                       std::vector<Warning>* warnings) {
  require_non_contextual(signature_of(input.axiom), "statement");
  require_non_contextual(input.annotation.signature(), "annotation");
  switch (strategy) {
    case Strategy::NdTerms: return nd_terms(input);
    case Strategy::NdFluents: return nd_fluents(input);
    default: return reify(strategy, input, warnings);
  }
}

Contextualized contextualize(Strategy strategy, const AnnotatedOntology& input) {
  require_non_contextual(input.ontology.signature(), "ontology");
  require_non_contextual(input.annotation.signature(), "annotation");
  Contextualized out;
  if (strategy == Strategy::NdTerms) {
    std::vector<Term> shared;
    const Signature ca_sig = input.annotation.signature();
    for (const auto& t : input.ontology.signature()) {
      if (ca_sig.contains(t)) shared.push_back(t);
    }
    if (!shared.empty()) {
      std::string list;
      for (const auto& t : shared) list += (list.empty() ? "" : ", ") + t.name();
      out.warnings.push_back({Warning::Kind::SignatureOverlap,
                              "ontology and annotation share terms: " + list, shared, std::nullopt});
    }
  }
  for (const auto& ax : input.ontology.axioms()) {
    StatementImage img = contextualize_statement(strategy, {ax, input.annotation}, &out.warnings);
    for (const auto& a : img.st) out.ontology.add(a);
    for (const auto& a : img.cx) out.ontology.add(a);
  }
  for (const auto& t : input.ontology.signature()) out.ontology.declare(t);
  return out;
}

Contextualized contextualize(Strategy strategy, const AnnotatedStatement& input) {
  return contextualize(strategy, AnnotatedOntology{Ontology({input.axiom}), input.annotation});
}

Contextualized combine_contexts(const std::vector<AnnotatedOntology>& inputs, Strategy strategy) {
  std::set<std::string> ids;
  for (const auto& in : inputs) {
    if (!ids.insert(in.annotation.ctx_id).second) {
      throw DuplicateContextId("context id " + in.annotation.ctx_id + " is used twice");
    }
  }
  Contextualized out;
  for (const auto& in : inputs) {
    Contextualized part = contextualize(strategy, in);
    out.ontology.add_all(part.ontology);
    out.warnings.insert(out.warnings.end(), part.warnings.begin(), part.warnings.end());
  }
  return out;
}

}  // namespace ctxdl
