#pragma once

// The .dl text format: ontology, annotation and model blocks.
//
//   ontology ex {
//     exists(capitalOf, top) sub forall(inv(capitalOf), bottom) .
//     capitalOf(babylon, babylonianEmpire) .
//   }
//   annotation CA anchor a {
//     validity(a, t) .
//     Interval(t) .
//   }
//   model m {
//     domain 2 .
//     indiv a = 0 .
//     conc C = {0, 1} .
//     conc ctxtop[CA] = {0} .
//     role R = {(0, 1)} .
//   }
//
// '#' at the start of a token comments out the rest of the line.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctxdl/annotation.hpp"
#include "ctxdl/core.hpp"
#include "ctxdl/semantics.hpp"

namespace ctxdl {

struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct OntologyBlock {
  std::string name;
  Ontology ontology;
  Span span;
  std::vector<Span> axiom_spans;
};

struct AnnotationBlock {
  std::string name;
  Term anchor;
  std::vector<Axiom> abox;
  Span span;
  std::vector<Span> axiom_spans;

  // Validated annotation; the block name is the context id.
  ContextualAnnotation to_annotation(bool extended = false) const;
};

struct ModelBlock {
  std::string name;
  Interpretation model;
  Span span;
};

using Block = std::variant<OntologyBlock, AnnotationBlock, ModelBlock>;

struct SourceDocument {
  std::vector<Block> blocks;

  std::vector<const OntologyBlock*> ontologies() const;
  std::vector<const AnnotationBlock*> annotations() const;
  std::vector<const ModelBlock*> models() const;
};

// Same blocks with the same content; spans are ignored.
bool same_content(const SourceDocument& a, const SourceDocument& b);

// Throws ParseError with the position of the offending token.
SourceDocument parse_document(std::string_view text);

// Canonical text: one axiom or statement per line, two-space indent, blocks
// separated by a blank line. Model denotations are listed in term order.
std::string serialize(const SourceDocument& doc);
std::string serialize(const Ontology& ontology, const std::string& name = "out");
std::string serialize(const Interpretation& model, const std::string& name = "m");
std::string serialize_annotation(const std::string& name, const Term& anchor, const std::vector<Axiom>& abox);

}  // namespace ctxdl
