#pragma once

// Relativization: confines every constraint of an ontology to the ctxtop
// concept of one context, leaving the rest of the domain unconstrained.

#include <string>
#include <vector>

#include "ctxdl/core.hpp"

namespace ctxdl {

// Top becomes ctxtop[id]; negations, universal restrictions, atmost, atleast
// 0 and closures get an extra conjunct with ctxtop[id] (ctxtop[id] x
// ctxtop[id] for roles). Terms, nominals and the ctxtop of other contexts
// are left alone. Throws AlreadyRelativized if ctxtop[id]
// occurs in the input.
ConceptExpr relativize_concept(const ConceptExpr& concept_expr, const std::string& ctx_id);
RoleExpr relativize_role(const RoleExpr& role, const std::string& ctx_id);
Axiom relativize_axiom(const Axiom& axiom, const std::string& ctx_id);

// The four axioms tying term t to ctxtop[id]:
//   t sub ctxtop[id] . ctxtop[id](t) . exists(t, top) sub ctxtop[id] . top sub forall(t, ctxtop[id])
std::vector<Axiom> relativization_extras(const Term& t, const std::string& ctx_id);

// Relativized axioms in order, followed by the extras of every term of
// Sig(O) in signature order. Throws ContextualTermInSignature if some term
// of Sig(O) is not non-contextual.
Ontology relativize_ontology(const Ontology& ontology, const std::string& ctx_id);

}  // namespace ctxdl
