#pragma once

// Bounded model and countermodel search. Every answer is relative to a
// domain-size bound: a negative verdict says nothing about larger domains.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ctxdl/core.hpp"
#include "ctxdl/semantics.hpp"

namespace ctxdl {

struct SatisfiableAt {
  Interpretation model;
  std::size_t size;
};

struct NoModelUpTo {
  std::size_t bound;
};

struct NotEntailed {
  Interpretation countermodel;
};

struct NoCounterexampleUpTo {
  std::size_t bound;
};

using Verdict = std::variant<SatisfiableAt, NoModelUpTo, NotEntailed, NoCounterexampleUpTo>;

// "satisfiable at 2", "no model up to 3", ...
std::string describe(const Verdict& verdict);

// 10^9 unless CTXDL_BUDGET holds a positive integer.
std::uint64_t default_search_budget();

struct SearchOptions {
  // Search nodes allowed per query before BoundTooLarge is thrown.
  std::uint64_t budget = default_search_budget();
  // Pins the first individual to element 0. Changes witnesses, never verdicts.
  bool symmetry_breaking = false;
  ClosureMode closure = ClosureMode::ReflexiveTransitive;
};

// Smallest n in [1, max_size] with a model of O, else NoModelUpTo(max_size).
// Witnesses give every term of Sig(O) and every ctxtop id of O a denotation.
Verdict find_model(const Ontology& ontology, std::size_t max_size, const SearchOptions& options = {});

// A model with exactly `size` elements, if there is one.
std::optional<Interpretation> find_model_at(const Ontology& ontology, std::size_t size,
                                            const SearchOptions& options = {});

// Looks for a model of `premises` that violates some axiom of `conclusion`,
// trying sizes 1..max_size in order. Conclusion axioms already among the
// premises are skipped.
Verdict check_entailment(const Ontology& premises, const Ontology& conclusion, std::size_t max_size,
                         const SearchOptions& options = {});

}  // namespace ctxdl
