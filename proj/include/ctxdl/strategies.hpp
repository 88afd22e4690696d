#pragma once

// Contextualization strategies: each maps an annotated statement or ontology
// to one plain ontology holding both the statement and its context.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxdl/annotation.hpp"
#include "ctxdl/core.hpp"

namespace ctxdl {

enum class Strategy : std::uint8_t {
  NdTerms,
  NdFluents,
  RdfReification,
  NAryTwoRole,
  NAryConceptAnchored,
  SingletonProperty,
};

inline constexpr Strategy kAllStrategies[] = {
    Strategy::NdTerms,     Strategy::NdFluents,           Strategy::RdfReification,
    Strategy::NAryTwoRole, Strategy::NAryConceptAnchored, Strategy::SingletonProperty,
};

// ndterms | ndfluents | rdf | nary | nary-concept | singleton
std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

// True for the strategies that reify single role assertions.
bool is_reification(Strategy strategy) noexcept;

// Reserved vocabulary of the strategies.
namespace vocab {
Term is_contextual_part_of();
Term is_in_context();
Term subject();
Term predicate();
Term object();
Term singleton_property_of();
}  // namespace vocab

// t -> t@ctxId. Throws InvalidTerm for names whose renaming is not a
// contextual term (ctx, st).
class RenamingScheme {
 public:
  explicit RenamingScheme(std::string ctx_id) : ctx_id_(std::move(ctx_id)) {}
  const std::string& ctx_id() const noexcept { return ctx_id_; }
  Term rename(const Term& t) const;
  // The concept term standing for ctxtop[ctxId] after renaming.
  Term top_term() const;

 private:
  std::string ctx_id_;
};

class AnchorScheme {
 public:
  // ctx@ctxId
  static Term context_anchor(const ContextualAnnotation& annotation);
  // st@ctxId@<hash of the axiom's text>
  static Term statement_anchor(const Axiom& axiom, const ContextualAnnotation& annotation);
};

// N-ary relation vocabulary: R#1, R#2 and the concept C#R.
Term nary_first(const Term& role);
Term nary_second(const Term& role);
Term nary_concept(const Term& role);

// The annotation's ABox with the anchor replaced by `replacement` in every
// individual position.
std::vector<Axiom> cx_of_annotation(const ContextualAnnotation& annotation, const Term& replacement);

struct Warning {
  enum class Kind : std::uint8_t { SignatureOverlap, NonAtomicAssertion };
  Kind kind;
  std::string message;
  std::vector<Term> terms;
  std::optional<Axiom> axiom;
};

// What one statement turns into.
struct StatementImage {
  std::vector<Axiom> st;
  std::vector<Axiom> cx;
  // The term replacing the annotation anchor; unset when the statement
  // passes through unannotated.
  std::optional<Term> anchor;
  // Injective map from Sig(axiom) into Sig(st).
  std::map<Term, Term> signature_map;
};

StatementImage contextualize_statement(Strategy strategy, const AnnotatedStatement& input,
                                       std::vector<Warning>* warnings = nullptr);

struct Contextualized {
  Ontology ontology;
  std::vector<Warning> warnings;
};

// Union of the statement images in axiom order, each St followed by its Cx.
// The output also declares Sig(O). Throws ContextualTermInSignature when the
// ontology or the annotation uses a term that is not non-contextual.
Contextualized contextualize(Strategy strategy, const AnnotatedOntology& input);
Contextualized contextualize(Strategy strategy, const AnnotatedStatement& input);

// Union of contextualize over the inputs, in order. Throws DuplicateContextId.
Contextualized combine_contexts(const std::vector<AnnotatedOntology>& inputs, Strategy strategy);

}  // namespace ctxdl
