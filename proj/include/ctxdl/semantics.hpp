#pragma once

// Finite interpretations and the evaluation of expressions and axioms over
// them. Domains have at most kMaxDomainSize elements, which lets element sets
// and binary relations live in single 64-bit masks.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxdl/core.hpp"

namespace ctxdl {

inline constexpr std::size_t kMaxDomainSize = 8;

using Element = std::uint32_t;

class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements);

  // {0, ..., size-1}
  static ElementSet full(std::size_t size);

  bool contains(Element e) const noexcept { return e < kMaxDomainSize && ((bits_ >> e) & 1U) != 0; }
  void insert(Element e);
  void erase(Element e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<Element> elements() const;

  friend ElementSet operator|(ElementSet a, ElementSet b) noexcept { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) noexcept { return ElementSet(a.bits_ & b.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Ordered pairs over a domain of at most 8 elements; (x, y) is bit 8x + y.
class PairSet {
 public:
  constexpr PairSet() = default;
  constexpr explicit PairSet(std::uint64_t bits) : bits_(bits) {}
  PairSet(std::initializer_list<std::pair<Element, Element>> pairs);

  static PairSet full(std::size_t size);
  static PairSet identity(std::size_t size);
  static PairSet product(ElementSet left, ElementSet right);

  static constexpr unsigned index(Element x, Element y) noexcept { return x * kMaxDomainSize + y; }

  bool contains(Element x, Element y) const noexcept;
  void insert(Element x, Element y);
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_subset_of(PairSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  // Successors of x.
  ElementSet row(Element x) const noexcept { return ElementSet((bits_ >> (x * kMaxDomainSize)) & 0xFFU); }
  std::vector<std::pair<Element, Element>> pairs() const;

  friend PairSet operator|(PairSet a, PairSet b) noexcept { return PairSet(a.bits_ | b.bits_); }
  friend PairSet operator&(PairSet a, PairSet b) noexcept { return PairSet(a.bits_ & b.bits_); }
  friend bool operator==(PairSet, PairSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

PairSet inverse_of(PairSet r) noexcept;
PairSet compose(PairSet r, PairSet s) noexcept;
// Reflexive-transitive closure over {0..size-1}.
PairSet reflexive_transitive_closure(PairSet r, std::size_t size) noexcept;
PairSet transitive_closure(PairSet r) noexcept;

// How closure(R) is read. The default includes every (x, x) of the domain.
enum class ClosureMode : std::uint8_t { ReflexiveTransitive, TransitiveOnly };

// A finite interpretation: domain {0..size-1}, and per term an individual
// denotation, a concept denotation and a role denotation, each optional.
// ctxtop[id] concepts get their own denotations keyed by context id.
class Interpretation {
 public:
  explicit Interpretation(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  ElementSet domain() const noexcept { return ElementSet::full(size_); }

  void set_individual(const Term& term, Element e);
  void set_concept(const Term& term, ElementSet set);
  void set_role(const Term& term, PairSet pairs);
  void set_top_ctx(const std::string& ctx_id, ElementSet set);

  std::optional<Element> individual(const Term& term) const;
  std::optional<ElementSet> concept_of(const Term& term) const;
  std::optional<PairSet> role_of(const Term& term) const;
  std::optional<ElementSet> top_ctx(const std::string& ctx_id) const;

  const std::map<Term, Element>& individuals() const noexcept { return individuals_; }
  const std::map<Term, ElementSet>& concepts() const noexcept { return concepts_; }
  const std::map<Term, PairSet>& roles() const noexcept { return roles_; }
  const std::map<std::string, ElementSet>& top_ctxs() const noexcept { return top_ctxs_; }

  // Gives every term of sig all three denotations; missing ones become 0, {} and {}.
  void complete(const Signature& sig);
  void complete_top_ctx(const std::set<std::string>& ctx_ids);

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::size_t size_;
  std::map<Term, Element> individuals_;
  std::map<Term, ElementSet> concepts_;
  std::map<Term, PairSet> roles_;
  std::map<std::string, ElementSet> top_ctxs_;
};

// Same denotations over a domain grown by `extra` fresh elements.
Interpretation extend_domain(const Interpretation& interp, std::size_t extra);

// Sub-interpretation on `keep`, renumbered in increasing order. Concepts and
// roles are intersected with the kept part; individuals outside it are
// dropped. Throws InvalidInterpretation if `keep` is empty.
Interpretation restrict_domain(const Interpretation& interp, ElementSet keep);

ElementSet eval_concept(const ConceptExpr& expr, const Interpretation& interp,
                        ClosureMode closure = ClosureMode::ReflexiveTransitive);
PairSet eval_role(const RoleExpr& expr, const Interpretation& interp,
                  ClosureMode closure = ClosureMode::ReflexiveTransitive);

bool satisfies(const Interpretation& interp, const Axiom& axiom,
               ClosureMode closure = ClosureMode::ReflexiveTransitive);
bool is_model(const Interpretation& interp, const Ontology& ontology,
              ClosureMode closure = ClosureMode::ReflexiveTransitive);

// Terms per position of use, for pruning the denotations a search must fix.
struct TermUsage {
  bool as_individual = false;
  bool as_concept = false;
  bool as_role = false;
};

std::map<Term, TermUsage> usage_of(const std::vector<Axiom>& axioms);

}  // namespace ctxdl
