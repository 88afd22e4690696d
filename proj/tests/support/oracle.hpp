#pragma once

// Reference semantics for tests. Deliberately naive: std::set values, one
// comprehension per constructor, closure by iterating to a fixpoint. Nothing
// here calls into the evaluator or the search it is meant to check.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ctxdl/core.hpp"
#include "ctxdl/semantics.hpp"

namespace ctxdl::testing {

using Elems = std::set<int>;
using Pairs = std::set<std::pair<int, int>>;

struct PlainModel {
  int size = 0;
  std::map<std::string, int> individuals;
  std::map<std::string, Elems> concepts;
  std::map<std::string, Pairs> roles;
  std::map<std::string, Elems> top_ctx;
};

// Copies the denotations out through the public getters.
PlainModel plain(const Interpretation& interp);
Interpretation to_interpretation(const PlainModel& model);

Elems oracle_concept(const ConceptExpr& expr, const PlainModel& m, bool reflexive_closure = true);
Pairs oracle_role(const RoleExpr& expr, const PlainModel& m, bool reflexive_closure = true);
bool oracle_satisfies(const PlainModel& m, const Axiom& axiom);
bool oracle_is_model(const PlainModel& m, const Ontology& o);

Elems to_elems(ElementSet s);
Pairs to_pairs(PairSet s);

// Names by position of use, found by walking the syntax independently.
struct Vocabulary {
  std::set<std::string> individuals;
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> ctx_ids;
};
Vocabulary vocabulary_of(const Ontology& o);
Vocabulary merge(Vocabulary a, const Vocabulary& b);

// Exhaustive enumeration over the vocabulary at one domain size. Returns
// the first model for which `accept` holds. Cost is n^|ind| * 2^(n|conc|) *
// 2^(n^2|role|), so callers keep things tiny.
template <typename Accept>
std::optional<PlainModel> enumerate_models(const Vocabulary& v, int size, Accept accept);

// Smallest size in [1, bound] with a model, by enumeration.
std::optional<int> brute_force_model_size(const Ontology& o, int bound);
// True if some model of `premises` of size <= bound violates some axiom of
// `conclusion`.
bool brute_force_countermodel(const Ontology& premises, const Ontology& conclusion, int bound);

// Number of enumeration points; used to skip inputs that would take too long.
double enumeration_cost(const Vocabulary& v, int size);

}  // namespace ctxdl::testing

#include "oracle_enumerate.inl"
