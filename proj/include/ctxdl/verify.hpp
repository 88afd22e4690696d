#pragma once

// Bounded checks of the properties a contextualization should have, and a
// generator for the corpora they run over. Every verdict is relative to a
// domain-size bound.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ctxdl/annotation.hpp"
#include "ctxdl/core.hpp"
#include "ctxdl/search.hpp"
#include "ctxdl/strategies.hpp"

namespace ctxdl {

enum class Property : std::uint8_t { Soundness, InconsistencyPreservation, EntailmentPreservation };
enum class PropertyOutcome : std::uint8_t { Holds, Violated, InconclusiveAtBound };

// soundness | inconsistency | entailment
std::string_view to_string(Property property) noexcept;
std::optional<Property> parse_property(std::string_view name) noexcept;
// holds | violated | inconclusive
std::string_view to_string(PropertyOutcome outcome) noexcept;

struct PropertyReport {
  Property property;
  Strategy strategy;
  std::vector<Verdict> premise_verdicts;
  // Absent when a premise already made the check vacuous.
  std::optional<Verdict> conclusion_verdict;
  PropertyOutcome outcome;
  std::size_t bound;

  // The interpretation backing a violation: the models of the premises for
  // soundness, the model of the output for inconsistency preservation, the
  // countermodel for entailment preservation.
  std::vector<Interpretation> witnesses() const;
};

// Consistent O and annotation ABox (at the bound) must give a consistent
// output. The output is searched up to bound + |premise models|, capped at
// the maximum domain size.
PropertyReport check_soundness(Strategy strategy, const Ontology& ontology, const ContextualAnnotation& annotation,
                               std::size_t bound, const SearchOptions& options = {});

// An O without models up to the bound must give an output without models up
// to the same bound.
PropertyReport check_inconsistency_preservation(Strategy strategy, const Ontology& ontology,
                                                const ContextualAnnotation& annotation, std::size_t bound,
                                                const SearchOptions& options = {});

// O1 |= O2 (at the bound) must carry over to the outputs. Throws
// PremiseNotEntailed if O1 |= O2 fails at the bound.
PropertyReport check_entailment_preservation(Strategy strategy, const Ontology& premises,
                                             const Ontology& conclusion, const ContextualAnnotation& annotation,
                                             std::size_t bound, const SearchOptions& options = {});

struct ExtensibilityProbe {
  enum class Result : std::uint8_t { ExtensibleObserved, CounterexampleFound, NoModelAtBase };
  Ontology ontology;
  std::size_t base_size;
  Result result;
  // The base model; for CounterexampleFound it is the one whose extension fails.
  std::optional<Interpretation> model;
};

std::string_view to_string(ExtensibilityProbe::Result result) noexcept;

// Finds a model with base_size elements and re-checks the same denotations
// over base_size + extra_elements elements.
ExtensibilityProbe probe_domain_extensibility(const Ontology& ontology, std::size_t base_size,
                                              std::size_t extra_elements, const SearchOptions& options = {});

struct CorpusItem {
  Ontology ontology;
  ContextualAnnotation annotation;
};

// Deterministic random ontologies over at most max_terms terms and
// max_axioms axioms (expressions up to depth 2), each paired with a
// connected atomic annotation whose signature is disjoint from the
// ontology's. Requires max_terms <= 5 and max_axioms <= 6.
std::vector<CorpusItem> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t max_terms,
                                        std::size_t max_axioms);

}  // namespace ctxdl
