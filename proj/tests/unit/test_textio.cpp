#include <gtest/gtest.h>

#include "ctxdl/errors.hpp"
#include "ctxdl/textio.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace ctxdl;
namespace fx = ctxdl::testing;
using ctxdl::testing::T;

TEST(Parse, OntologyBlock) {
  auto doc = parse_document(
      "# comment\n"
      "ontology ex {\n"
      "  exists(capitalOf, top) sub forall(inv(capitalOf), bottom) .\n"
      "  capitalOf(babylon, babylon) .  # trailing\n"
      "}\n");
  auto os = doc.ontologies();
  ASSERT_EQ(os.size(), 1U);
  EXPECT_EQ(os[0]->name, "ex");
  EXPECT_TRUE(os[0]->ontology == fx::irreflexive_seed());
  EXPECT_EQ(os[0]->span.line, 2U);
  ASSERT_EQ(os[0]->axiom_spans.size(), 2U);
  EXPECT_EQ(os[0]->axiom_spans[1].line, 4U);
  EXPECT_EQ(os[0]->axiom_spans[1].column, 3U);
}

TEST(Parse, AnnotationBlock) {
  auto doc = parse_document(fx::read_text(std::string(CTXDL_TEST_DIR) + "/../data/ctx.dl"));
  auto as = doc.annotations();
  ASSERT_EQ(as.size(), 1U);
  EXPECT_EQ(as[0]->anchor, T("a"));
  EXPECT_EQ(as[0]->abox, fx::babylon_annotation_abox());
  auto ca = as[0]->to_annotation();
  EXPECT_EQ(ca.ctx_id, "CA");
}

TEST(Parse, ModelBlock) {
  auto doc = parse_document(
      "model m {\n  domain 2 .\n  indiv a = 1 .\n  conc C = {0, 1} .\n  conc ctxtop[K] = {} .\n"
      "  role r = {(0, 1), (1, 1)} .\n}\n");
  auto ms = doc.models();
  ASSERT_EQ(ms.size(), 1U);
  const auto& m = ms[0]->model;
  EXPECT_EQ(m.size(), 2U);
  EXPECT_EQ(m.individual(T("a")), 1U);
  EXPECT_EQ(m.concept_of(T("C")), ElementSet::full(2));
  EXPECT_EQ(m.top_ctx("K"), ElementSet{});
  EXPECT_EQ(m.role_of(T("r")), (PairSet{{0, 1}, {1, 1}}));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_document("ontology x {\n  C(a)\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.column(), 1U);
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
  }
  EXPECT_THROW(parse_document("ontology x { sub(a) . }"), ParseError);
  EXPECT_THROW(parse_document("ontology x { C sub . }"), ParseError);
  EXPECT_THROW(parse_document("annotation A anchor a { C sub D . }"), ParseError);
  EXPECT_THROW(parse_document("model m { domain 9 . }"), ParseError);
  EXPECT_THROW(parse_document("model m { domain 2 . indiv a = 2 . }"), ParseError);
  EXPECT_THROW(parse_document("oops"), ParseError);
  EXPECT_THROW(parse_document("ontology x { C(a) . "), ParseError);
}

TEST(Serialize, CanonicalLayout) {
  Ontology o({fx::capital_assertion()});
  EXPECT_EQ(serialize(o, "out"), "ontology out {\n  capital(babylon, babylonianEmpire) .\n}\n");
  Interpretation m(1);
  m.set_individual(T("a"), 0);
  m.set_concept(T("C"), ElementSet{0});
  m.set_top_ctx("K", ElementSet{});
  m.set_role(T("r"), PairSet{{0, 0}});
  EXPECT_EQ(serialize(m, "m"),
            "model m {\n  domain 1 .\n  indiv a = 0 .\n  conc C = {0} .\n  conc ctxtop[K] = {} .\n"
            "  role r = {(0, 0)} .\n}\n");
}

TEST(Serialize, DataFilesAreCanonical) {
  for (const char* f : {"babylon.dl", "premise.dl", "conclusion.dl"}) {
    std::string text = fx::read_text(std::string(CTXDL_TEST_DIR) + "/../data/" + f);
    EXPECT_EQ(serialize(parse_document(text)), text) << f;
  }
}

class RoundTrip : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RoundTrip, SerializeThenParseIsIdentity) {
  fx::Gen gen(GetParam());
  for (int i = 0; i < 50; ++i) {
    SourceDocument doc = gen.document();
    std::string text = serialize(doc);
    SourceDocument back = parse_document(text);
    ASSERT_TRUE(same_content(doc, back)) << text;
    ASSERT_EQ(serialize(back), text);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundTrip, ::testing::Values(1, 2, 3));
