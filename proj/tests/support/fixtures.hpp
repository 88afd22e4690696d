#pragma once

// The running example: a statement about Babylon, its validity/provenance
// annotation, and the small ontologies built around it.

#include <string>

#include "ctxdl/annotation.hpp"
#include "ctxdl/core.hpp"

namespace ctxdl::testing {

inline Term T(const std::string& name) { return Term::parse(name); }
inline ConceptExpr A(const std::string& name) { return ConceptExpr::atom(T(name)); }
inline RoleExpr R(const std::string& name) { return RoleExpr::atom(T(name)); }

// validity(a, t), Interval(t), from(t, 609BC), to(t, 539BC), prov(a, w),
// name(w, wikipedia), Wiki(w); context id CA.
std::vector<Axiom> babylon_annotation_abox();
ContextualAnnotation babylon_annotation(const std::string& ctx_id = "CA");

// capital(babylon, babylonianEmpire)
Axiom capital_assertion();

// exists(capitalOf, top) sub forall(inv(capitalOf), bottom)
Axiom irreflexivity_axiom();
// irreflexivity plus capitalOf(babylon, babylon): no model.
Ontology irreflexive_seed();

// capitalOf rsub cityOf . capitalOf(babylon, babylonianEmpire)
Ontology entailment_premises();
// cityOf(babylon, babylonianEmpire)
Ontology entailment_conclusion();

// Path to a file under tests/golden.
std::string golden_path(const std::string& file);
std::string read_text(const std::string& path);

}  // namespace ctxdl::testing
