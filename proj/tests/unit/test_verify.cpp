#include <gtest/gtest.h>

#include "ctxdl/errors.hpp"
#include "ctxdl/verify.hpp"
#include "fixtures.hpp"

using namespace ctxdl;
namespace fx = ctxdl::testing;
using ctxdl::testing::A;
using ctxdl::testing::R;
using ctxdl::testing::T;

namespace {

// oneof(a) is a singleton C that b is both in and out of, unless a = b.
Ontology nominal_seed() {
  return Ontology({ConceptInclusion{A("C"), ConceptExpr::nominals({T("a")})}, concept_assertion(T("C"), T("b")),
                   ConceptAssertion{ConceptExpr::negation(ConceptExpr::nominals({T("a")})), T("b")}});
}

}  // namespace

TEST(Names, PropertyAndOutcome) {
  EXPECT_EQ(parse_property("soundness"), Property::Soundness);
  EXPECT_EQ(parse_property("inconsistency"), Property::InconsistencyPreservation);
  EXPECT_EQ(parse_property("entailment"), Property::EntailmentPreservation);
  EXPECT_FALSE(parse_property("x").has_value());
  EXPECT_EQ(to_string(PropertyOutcome::InconclusiveAtBound), "inconclusive");
}

TEST(Soundness, RunningExampleHoldsForEveryStrategy) {
  Ontology o({fx::capital_assertion()});
  for (Strategy s : kAllStrategies) {
    auto r = check_soundness(s, o, fx::babylon_annotation(), 3);
    EXPECT_EQ(r.outcome, PropertyOutcome::Holds) << to_string(s);
    EXPECT_TRUE(r.witnesses().empty());
  }
}

TEST(Soundness, InconsistentInputIsInconclusive) {
  auto r = check_soundness(Strategy::NdTerms, fx::irreflexive_seed(), fx::babylon_annotation(), 2);
  EXPECT_EQ(r.outcome, PropertyOutcome::InconclusiveAtBound);
  EXPECT_FALSE(r.conclusion_verdict.has_value());
}

TEST(Inconsistency, IrreflexivitySeed) {
  auto ca = fx::babylon_annotation();
  auto nd = check_inconsistency_preservation(Strategy::NdTerms, fx::irreflexive_seed(), ca, 3);
  EXPECT_EQ(nd.outcome, PropertyOutcome::Holds);
  auto rdf = check_inconsistency_preservation(Strategy::RdfReification, fx::irreflexive_seed(), ca, 3);
  EXPECT_EQ(rdf.outcome, PropertyOutcome::Violated);
  auto w = rdf.witnesses();
  ASSERT_EQ(w.size(), 1U);
  EXPECT_TRUE(is_model(w[0], contextualize(Strategy::RdfReification,
                                           AnnotatedOntology{fx::irreflexive_seed(), ca})
                                 .ontology));
}

TEST(Inconsistency, NdFluentsBreaksOnNominals) {
  auto ca = fx::babylon_annotation();
  EXPECT_TRUE(std::holds_alternative<NoModelUpTo>(find_model(nominal_seed(), 3)));
  EXPECT_EQ(check_inconsistency_preservation(Strategy::NdFluents, nominal_seed(), ca, 3).outcome,
            PropertyOutcome::Violated);
  EXPECT_EQ(check_inconsistency_preservation(Strategy::NdTerms, nominal_seed(), ca, 3).outcome, PropertyOutcome::Holds);
}

TEST(Inconsistency, ConsistentInputIsInconclusive) {
  auto r = check_inconsistency_preservation(Strategy::NdTerms, Ontology({fx::capital_assertion()}),
                                            fx::babylon_annotation(), 2);
  EXPECT_EQ(r.outcome, PropertyOutcome::InconclusiveAtBound);
}

TEST(Entailment, RoleInclusionExample) {
  auto ca = fx::babylon_annotation();
  auto nd = check_entailment_preservation(Strategy::NdTerms, fx::entailment_premises(),
                                          fx::entailment_conclusion(), ca, 3);
  EXPECT_EQ(nd.outcome, PropertyOutcome::Holds);
  auto rdf = check_entailment_preservation(Strategy::RdfReification, fx::entailment_premises(),
                                           fx::entailment_conclusion(), ca, 3);
  EXPECT_EQ(rdf.outcome, PropertyOutcome::Violated);
  ASSERT_EQ(rdf.witnesses().size(), 1U);
}

TEST(Entailment, RefusesNonEntailedPremises) {
  EXPECT_THROW(check_entailment_preservation(Strategy::NdTerms, fx::entailment_conclusion(),
                                             fx::entailment_premises(), fx::babylon_annotation(), 2),
               PremiseNotEntailed);
}

TEST(Extensibility, RelativizedOntologyExtends) {
  // Exactly one element in the domain: extending breaks it.
  Ontology one({ConceptInclusion{ConceptExpr::top(), ConceptExpr::nominals({T("a")})}});
  auto p = probe_domain_extensibility(one, 1, 1);
  EXPECT_EQ(p.result, ExtensibilityProbe::Result::CounterexampleFound);
  auto q = probe_domain_extensibility(Ontology({concept_assertion(T("C"), T("a"))}), 1, 2);
  EXPECT_EQ(q.result, ExtensibilityProbe::Result::ExtensibleObserved);
  auto r = probe_domain_extensibility(fx::irreflexive_seed(), 2, 1);
  EXPECT_EQ(r.result, ExtensibilityProbe::Result::NoModelAtBase);
  EXPECT_THROW(probe_domain_extensibility(one, 7, 2), std::invalid_argument);
}

TEST(Corpus, DeterministicAndWellFormed) {
  auto c1 = generate_corpus(42, 20, 4, 4);
  auto c2 = generate_corpus(42, 20, 4, 4);
  ASSERT_EQ(c1.size(), 20U);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    EXPECT_TRUE(c1[i].ontology == c2[i].ontology);
    EXPECT_EQ(c1[i].annotation.ctx_id, "g" + std::to_string(i));
    EXPECT_LE(c1[i].ontology.size(), 4U);
    for (const auto& t : c1[i].ontology.signature()) EXPECT_FALSE(c1[i].annotation.signature().contains(t));
  }
  EXPECT_THROW(generate_corpus(1, 1, 6, 1), std::invalid_argument);
  EXPECT_THROW(generate_corpus(1, 1, 1, 7), std::invalid_argument);
}

TEST(Corpus, SoundnessNeverViolatedForNdTerms) {
  int holds = 0;
  for (const auto& item : generate_corpus(7, 25, 3, 3)) {
    auto r = check_soundness(Strategy::NdTerms, item.ontology, item.annotation, 2);
    EXPECT_NE(r.outcome, PropertyOutcome::Violated);
    holds += r.outcome == PropertyOutcome::Holds;
  }
  EXPECT_GT(holds, 0);
}
