#include <gtest/gtest.h>

#include "ctxdl/errors.hpp"
#include "ctxdl/relativize.hpp"
#include "ctxdl/search.hpp"
#include "ctxdl/textio.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace ctxdl;
namespace fx = ctxdl::testing;
using ctxdl::testing::A;
using ctxdl::testing::R;
using ctxdl::testing::T;

namespace {

const ConceptExpr kTop = ConceptExpr::top_ctx("K");

}  // namespace

TEST(RelativizeConcept, Rules) {
  EXPECT_EQ(relativize_concept(ConceptExpr::top(), "K"), kTop);
  EXPECT_EQ(relativize_concept(ConceptExpr::bottom(), "K"), ConceptExpr::bottom());
  EXPECT_EQ(relativize_concept(A("C"), "K"), A("C"));
  EXPECT_EQ(relativize_concept(ConceptExpr::negation(A("C")), "K"),
            ConceptExpr::intersection_of(ConceptExpr::negation(A("C")), kTop));
  EXPECT_EQ(relativize_concept(ConceptExpr::forall(R("r"), A("C")), "K"),
            ConceptExpr::intersection_of(ConceptExpr::forall(R("r"), A("C")), kTop));
  EXPECT_EQ(relativize_concept(ConceptExpr::exists(R("r"), ConceptExpr::top()), "K"),
            ConceptExpr::exists(R("r"), kTop));
  auto nom = ConceptExpr::nominals({T("a")});
  EXPECT_EQ(relativize_concept(nom, "K"), nom);
}

TEST(RelativizeRole, Rules) {
  const auto box = RoleExpr::product(kTop, kTop);
  EXPECT_EQ(relativize_role(R("r"), "K"), R("r"));
  EXPECT_EQ(relativize_role(RoleExpr::inverse(R("r")), "K"), RoleExpr::inverse(R("r")));
  EXPECT_EQ(relativize_role(RoleExpr::negation(R("r")), "K"),
            RoleExpr::intersection_of(RoleExpr::negation(R("r")), box));
  EXPECT_EQ(relativize_role(RoleExpr::closure(R("r")), "K"),
            RoleExpr::intersection_of(RoleExpr::closure(R("r")), box));
  EXPECT_EQ(relativize_role(RoleExpr::product(ConceptExpr::top(), A("C")), "K"), RoleExpr::product(kTop, A("C")));
}

TEST(Relativize, RefusesTwice) {
  auto once = relativize_concept(ConceptExpr::negation(A("C")), "K");
  EXPECT_THROW(relativize_concept(once, "K"), AlreadyRelativized);
  EXPECT_NO_THROW(relativize_concept(once, "L"));
}

TEST(Relativize, Extras) {
  auto extras = relativization_extras(T("t"), "K");
  ASSERT_EQ(extras.size(), 4U);
  EXPECT_EQ(to_text(extras[0]), "t sub ctxtop[K]");
  EXPECT_EQ(to_text(extras[1]), "ctxtop[K](t)");
  EXPECT_EQ(to_text(extras[2]), "exists(t, top) sub ctxtop[K]");
  EXPECT_EQ(to_text(extras[3]), "top sub forall(t, ctxtop[K])");
}

TEST(RelativizeOntology, IrreflexivityGolden) {
  Ontology rel = relativize_ontology(Ontology({fx::irreflexivity_axiom()}), "Ca");
  auto golden = parse_document(fx::read_text(fx::golden_path("relativized.dl")));
  ASSERT_EQ(golden.ontologies().size(), 1U);
  EXPECT_TRUE(same_axioms(rel, golden.ontologies()[0]->ontology));
  EXPECT_EQ(rel.size(), 5U);
}

TEST(RelativizeOntology, RejectsContextualTerms) {
  EXPECT_THROW(relativize_ontology(Ontology({concept_assertion(T("C"), T("a@K"))}), "K"), ContextualTermInSignature);
}

// Properties of the construction, checked on random ontologies.
class RelativizationProperties : public ::testing::TestWithParam<std::uint64_t> {};

// A model of O, with ctxtop[K] set to the whole domain, is a model of Rel(O).
TEST_P(RelativizationProperties, ModelsLiftWithFullTopCtx) {
  fx::Gen gen(GetParam());
  gen.ctx_ids.clear();
  for (int i = 0; i < 30; ++i) {
    Ontology o = gen.ontology(3, 2);
    auto v = find_model(o, 2);
    auto* s = std::get_if<SatisfiableAt>(&v);
    if (!s) continue;
    Interpretation m = s->model;
    m.set_top_ctx("K", m.domain());
    EXPECT_TRUE(is_model(m, relativize_ontology(o, "K"))) << i;
  }
}

// Restricting a model of Rel(O) to ctxtop[K] gives a model of O, and adding
// fresh elements keeps it a model of Rel(O).
TEST_P(RelativizationProperties, RestrictionAndExtension) {
  fx::Gen gen(GetParam() + 100);
  gen.ctx_ids.clear();
  for (int i = 0; i < 30; ++i) {
    Ontology o = gen.ontology(3, 2);
    Ontology rel = relativize_ontology(o, "K");
    auto v = find_model(rel, 3);
    auto* s = std::get_if<SatisfiableAt>(&v);
    if (!s) continue;
    ElementSet inside = *s->model.top_ctx("K");
    ASSERT_FALSE(inside.empty());
    EXPECT_TRUE(is_model(restrict_domain(s->model, inside), o)) << i;
    EXPECT_TRUE(is_model(extend_domain(s->model, 2), rel)) << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RelativizationProperties, ::testing::Values(5, 6, 7));
