#pragma once

// Contextual annotations: an ABox describing a context, attached to the
// statements it annotates through a distinguished anchor individual.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxdl/core.hpp"

namespace ctxdl {

struct ContextualAnnotation {
  Term anchor;
  std::vector<Axiom> abox;
  // Signature of the ABox without the anchor. Includes concept and role names.
  Signature sigma;
  // Used for renaming (t@ctxId) and for the context's ctxtop concept.
  std::string ctx_id;
  bool extended = false;

  // sigma plus the anchor, if the anchor occurs in the ABox.
  Signature signature() const;
};

struct AnnotatedStatement {
  Axiom axiom;
  ContextualAnnotation annotation;
};

struct AnnotatedOntology {
  Ontology ontology;
  ContextualAnnotation annotation;
};

// True iff a = b, or a chain of role assertions links them (in either
// direction). Both must occur as assertion arguments in the ABox.
bool connected_individuals(const std::vector<Axiom>& abox, const Term& a, const Term& b);

// Terms used as assertion arguments (and, for extended ABoxes, nominal members).
Signature individuals_of(const std::vector<Axiom>& abox);

struct AnnotationOptions {
  // Defaults to a hash of the annotation's canonical text.
  std::optional<std::string> ctx_id;
  // Allows assertions over complex concepts and roles.
  bool extended = false;
};

// Checks the annotation conditions and fills in sigma and the context id.
// Throws NotAnABox on inclusions, ValidationError on complex assertions
// (unless extended) or a bad anchor / context id, and Disconnected when
// some individual is not connected to the anchor.
ContextualAnnotation validate_annotation(const Term& anchor, const std::vector<Axiom>& abox,
                                         const AnnotationOptions& options = {});

// Context ids are nonempty and use [A-Za-z0-9_#].
bool is_valid_context_id(std::string_view id) noexcept;

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string content_hash(std::string_view text);

std::string default_context_id(const Term& anchor, const std::vector<Axiom>& abox);

}  // namespace ctxdl
