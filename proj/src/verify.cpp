#include "ctxdl/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

Ontology abox_ontology(const ContextualAnnotation& annotation) { return Ontology(annotation.abox); }

const SatisfiableAt* as_model(const Verdict& v) { return std::get_if<SatisfiableAt>(&v); }

}  // namespace

std::string_view to_string(Property property) noexcept {
  switch (property) {
    case Property::Soundness: return "soundness";
    case Property::InconsistencyPreservation: return "inconsistency";
    case Property::EntailmentPreservation: return "entailment";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) noexcept {
  for (Property p : {Property::Soundness, Property::InconsistencyPreservation, Property::EntailmentPreservation}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(PropertyOutcome outcome) noexcept {
  switch (outcome) {
    case PropertyOutcome::Holds: return "holds";
    case PropertyOutcome::Violated: return "violated";
    case PropertyOutcome::InconclusiveAtBound: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(ExtensibilityProbe::Result result) noexcept {
  switch (result) {
    case ExtensibilityProbe::Result::ExtensibleObserved: return "extensible-observed";
    case ExtensibilityProbe::Result::CounterexampleFound: return "counterexample-found";
    case ExtensibilityProbe::Result::NoModelAtBase: return "no-model-at-base";
  }
  return "?";
}

std::vector<Interpretation> PropertyReport::witnesses() const {
  std::vector<Interpretation> out;
  if (outcome != PropertyOutcome::Violated) return out;
  if (property == Property::Soundness) {
    for (const auto& v : premise_verdicts) {
      if (const auto* m = as_model(v)) out.push_back(m->model);
    }
  } else if (conclusion_verdict) {
    if (const auto* m = as_model(*conclusion_verdict)) out.push_back(m->model);
    if (const auto* n = std::get_if<NotEntailed>(&*conclusion_verdict)) out.push_back(n->countermodel);
  }
  return out;
}

PropertyReport check_soundness(Strategy strategy, const Ontology& ontology, const ContextualAnnotation& annotation,
                               std::size_t bound, const SearchOptions& options) {
  PropertyReport report{Property::Soundness, strategy, {}, std::nullopt, PropertyOutcome::InconclusiveAtBound, bound};
  report.premise_verdicts.push_back(find_model(ontology, bound, options));
  report.premise_verdicts.push_back(find_model(abox_ontology(annotation), bound, options));
  const auto* mo = as_model(report.premise_verdicts[0]);
  const auto* ma = as_model(report.premise_verdicts[1]);
  if (mo == nullptr || ma == nullptr) return report;

  const std::size_t extended = std::min(bound + mo->size + ma->size, kMaxDomainSize);
  Ontology output = contextualize(strategy, AnnotatedOntology{ontology, annotation}).ontology;
  report.conclusion_verdict = find_model(output, extended, options);
  report.bound = extended;
  report.outcome = as_model(*report.conclusion_verdict) ? PropertyOutcome::Holds : PropertyOutcome::Violated;
  return report;
}

PropertyReport check_inconsistency_preservation(Strategy strategy, const Ontology& ontology,
                                                const ContextualAnnotation& annotation, std::size_t bound,
                                                const SearchOptions& options) {
  PropertyReport report{Property::InconsistencyPreservation, strategy, {}, std::nullopt,
                        PropertyOutcome::InconclusiveAtBound, bound};
  report.premise_verdicts.push_back(find_model(ontology, bound, options));
  if (as_model(report.premise_verdicts[0])) return report;

  Ontology output = contextualize(strategy, AnnotatedOntology{ontology, annotation}).ontology;
  report.conclusion_verdict = find_model(output, bound, options);
  report.outcome = as_model(*report.conclusion_verdict) ? PropertyOutcome::Violated : PropertyOutcome::Holds;
  return report;
}

PropertyReport check_entailment_preservation(Strategy strategy, const Ontology& premises,
                                             const Ontology& conclusion, const ContextualAnnotation& annotation,
                                             std::size_t bound, const SearchOptions& options) {
  PropertyReport report{Property::EntailmentPreservation, strategy, {}, std::nullopt,
                        PropertyOutcome::InconclusiveAtBound, bound};
  report.premise_verdicts.push_back(check_entailment(premises, conclusion, bound, options));
  if (std::holds_alternative<NotEntailed>(report.premise_verdicts[0])) {
    throw PremiseNotEntailed("the premises do not entail the conclusion up to domain size " + std::to_string(bound));
  }
  Ontology left = contextualize(strategy, AnnotatedOntology{premises, annotation}).ontology;
  Ontology right = contextualize(strategy, AnnotatedOntology{conclusion, annotation}).ontology;
  report.conclusion_verdict = check_entailment(left, right, bound, options);
  report.outcome = std::holds_alternative<NotEntailed>(*report.conclusion_verdict) ? PropertyOutcome::Violated
                                                                                    : PropertyOutcome::Holds;
  return report;
}

ExtensibilityProbe probe_domain_extensibility(const Ontology& ontology, std::size_t base_size,
                                              std::size_t extra_elements, const SearchOptions& options) {
  if (base_size == 0 || extra_elements == 0) throw std::invalid_argument("base size and extra elements must be positive");
  if (base_size + extra_elements > kMaxDomainSize) throw std::invalid_argument("extended domain exceeds the maximum size");
  ExtensibilityProbe probe{ontology, base_size, ExtensibilityProbe::Result::NoModelAtBase, std::nullopt};
  probe.model = find_model_at(ontology, base_size, options);
  if (!probe.model) return probe;
  Interpretation bigger = extend_domain(*probe.model, extra_elements);
  probe.result = is_model(bigger, ontology, options.closure) ? ExtensibilityProbe::Result::ExtensibleObserved
                                                             : ExtensibilityProbe::Result::CounterexampleFound;
  return probe;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, std::size_t max_terms, std::size_t max_axioms)
      : rng_(seed), max_terms_(max_terms), max_axioms_(max_axioms) {}

  CorpusItem item(std::size_t index) {
    static const char* const kPool[] = {"p", "q", "r", "s", "u"};
    terms_.clear();
    const std::size_t nterms = 1 + pick(max_terms_);
    for (std::size_t i = 0; i < nterms; ++i) terms_.push_back(Term::non_contextual(kPool[i]));

    Ontology ontology;
    const std::size_t naxioms = 1 + pick(max_axioms_);
    while (ontology.size() < naxioms) ontology.add(axiom());
    return {std::move(ontology), annotation(index)};
  }

 private:
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  const Term& term() { return terms_[pick(terms_.size())]; }

  ConceptExpr concept_expr(int depth) {
    const std::size_t choice = pick(depth == 0 ? 4 : 12);
    switch (choice) {
      case 0:
      case 1: return ConceptExpr::atom(term());
      case 2: return pick(2) == 0 ? ConceptExpr::top() : ConceptExpr::bottom();
      case 3: return ConceptExpr::nominals({term()});
      case 4: return ConceptExpr::union_of(concept_expr(depth - 1), concept_expr(depth - 1));
      case 5: return ConceptExpr::intersection_of(concept_expr(depth - 1), concept_expr(depth - 1));
      case 6:
      case 7: return ConceptExpr::negation(concept_expr(depth - 1));
      case 8: return ConceptExpr::exists(role_expr(depth - 1), concept_expr(depth - 1));
      case 9: return ConceptExpr::forall(role_expr(depth - 1), concept_expr(depth - 1));
      case 10: return ConceptExpr::at_most(pick(3), role_expr(depth - 1), concept_expr(depth - 1));
      default: return ConceptExpr::at_least(pick(3), role_expr(depth - 1), concept_expr(depth - 1));
    }
  }

  RoleExpr role_expr(int depth) {
    const std::size_t choice = pick(depth == 0 ? 1 : 9);
    switch (choice) {
      case 0:
      case 1: return RoleExpr::atom(term());
      case 2: return RoleExpr::union_of(role_expr(depth - 1), role_expr(depth - 1));
      case 3: return RoleExpr::intersection_of(role_expr(depth - 1), role_expr(depth - 1));
      case 4: return RoleExpr::negation(role_expr(depth - 1));
      case 5: return RoleExpr::inverse(role_expr(depth - 1));
      case 6: return RoleExpr::compose(role_expr(depth - 1), role_expr(depth - 1));
      case 7: return RoleExpr::closure(role_expr(depth - 1));
      default: return RoleExpr::product(concept_expr(depth - 1), concept_expr(depth - 1));
    }
  }

  Axiom axiom() {
    switch (pick(4)) {
      case 0: return ConceptInclusion{concept_expr(2), concept_expr(2)};
      case 1: return RoleInclusion{role_expr(1), role_expr(1)};
      case 2: return ConceptAssertion{concept_expr(1), term()};
      default: return RoleAssertion{role_expr(1), term(), term()};
    }
  }

  // A connected atomic ABox around the anchor; its names never clash with the pool.
  ContextualAnnotation annotation(std::size_t index) {
    static const char* const kRoles[] = {"validity", "prov", "source"};
    static const char* const kConcepts[] = {"Interval", "Wiki"};
    const Term anchor = Term::non_contextual("ctxa");
    std::vector<Term> individuals{anchor};
    std::vector<Axiom> abox;
    const std::size_t n = 1 + pick(3);
    for (std::size_t i = 0; i < n; ++i) {
      if (pick(2) == 0) {
        Term from = individuals[pick(individuals.size())];
        Term to = Term::non_contextual("ctxv" + std::to_string(individuals.size()));
        individuals.push_back(to);
        abox.push_back(role_assertion(Term::non_contextual(kRoles[pick(3)]), from, to));
      } else {
        abox.push_back(concept_assertion(Term::non_contextual(kConcepts[pick(2)]),
                                         individuals[pick(individuals.size())]));
      }
    }
    AnnotationOptions opts;
    opts.ctx_id = "g" + std::to_string(index);
    return validate_annotation(anchor, abox, opts);
  }

  std::mt19937_64 rng_;
  std::size_t max_terms_;
  std::size_t max_axioms_;
  std::vector<Term> terms_;
};

}  // namespace

std::vector<CorpusItem> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t max_terms,
                                        std::size_t max_axioms) {
  if (max_terms == 0 || max_terms > 5) throw std::invalid_argument("max_terms must be in [1, 5]");
  if (max_axioms == 0 || max_axioms > 6) throw std::invalid_argument("max_axioms must be in [1, 6]");
  Generator gen(seed, max_terms, max_axioms);
  std::vector<CorpusItem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.item(i));
  return out;
}

}  // namespace ctxdl
