#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ctxdl::testing {

std::vector<Axiom> babylon_annotation_abox() {
  return {
      role_assertion(T("validity"), T("a"), T("t")),
      concept_assertion(T("Interval"), T("t")),
      role_assertion(T("from"), T("t"), T("609BC")),
      role_assertion(T("to"), T("t"), T("539BC")),
      role_assertion(T("prov"), T("a"), T("w")),
      role_assertion(T("name"), T("w"), T("wikipedia")),
      concept_assertion(T("Wiki"), T("w")),
  };
}

ContextualAnnotation babylon_annotation(const std::string& ctx_id) {
  AnnotationOptions opts;
  opts.ctx_id = ctx_id;
  return validate_annotation(T("a"), babylon_annotation_abox(), opts);
}

Axiom capital_assertion() { return role_assertion(T("capital"), T("babylon"), T("babylonianEmpire")); }

Axiom irreflexivity_axiom() {
  return ConceptInclusion{ConceptExpr::exists(R("capitalOf"), ConceptExpr::top()),
                          ConceptExpr::forall(RoleExpr::inverse(R("capitalOf")), ConceptExpr::bottom())};
}

Ontology irreflexive_seed() {
  return Ontology({irreflexivity_axiom(), role_assertion(T("capitalOf"), T("babylon"), T("babylon"))});
}

Ontology entailment_premises() {
  return Ontology({RoleInclusion{R("capitalOf"), R("cityOf")},
                   role_assertion(T("capitalOf"), T("babylon"), T("babylonianEmpire"))});
}

Ontology entailment_conclusion() { return Ontology({role_assertion(T("cityOf"), T("babylon"), T("babylonianEmpire"))}); }

std::string golden_path(const std::string& file) { return std::string(CTXDL_TEST_DIR) + "/golden/" + file; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace ctxdl::testing
