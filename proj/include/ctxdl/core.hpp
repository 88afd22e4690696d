#pragma once

// Terms, concept and role expressions, axioms and ontologies.
//
// Every value here is immutable once built. Expressions are trees of shared
// nodes, so copying one is cheap and copies may be handed to other threads.

#include <compare>
#include <cstdint>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctxdl {

enum class TermKind : std::uint8_t { NonContextual, Contextual, Anchor };

std::string_view to_string(TermKind kind) noexcept;

// Words of the concrete syntax; none of them can name a term.
bool is_reserved_word(std::string_view word) noexcept;

// An atomic name. The same term may be used as an individual, a concept and
// a role at once.
//
// Names use [A-Za-z0-9_#@], never start with '#', and their shape must agree
// with the kind:
//   NonContextual  no '@'                     babylon, capital#1
//   Contextual     contains '@'               babylon@CA
//   Anchor         starts with ctx@ or st@    ctx@CA, st@CA@00af...
class Term {
 public:
  Term(std::string name, TermKind kind);

  // Infers the kind from the shape of the name.
  static Term parse(std::string name);
  static Term non_contextual(std::string name) { return Term(std::move(name), TermKind::NonContextual); }

  const std::string& name() const noexcept { return name_; }
  TermKind kind() const noexcept { return kind_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  std::string name_;
  TermKind kind_;
};

// Kind implied by the shape of a name, or nothing if the name is not usable.
std::optional<TermKind> infer_term_kind(std::string_view name) noexcept;

class RoleExpr;

enum class ConceptKind : std::uint8_t {
  Top,
  Bottom,
  TopCtx,
  Atom,
  Union,
  Intersection,
  Neg,
  Exists,
  Forall,
  AtMost,
  AtLeast,
  Nominals,
};

enum class RoleKind : std::uint8_t {
  Atom,
  Union,
  Intersection,
  Neg,
  Inverse,
  Compose,
  Closure,
  Product,
};

class ConceptExpr {
 public:
  static ConceptExpr top();
  static ConceptExpr bottom();
  // The relativization concept of a context; not a term.
  static ConceptExpr top_ctx(std::string ctx_id);
  static ConceptExpr atom(Term term);
  static ConceptExpr union_of(ConceptExpr left, ConceptExpr right);
  static ConceptExpr intersection_of(ConceptExpr left, ConceptExpr right);
  static ConceptExpr negation(ConceptExpr operand);
  static ConceptExpr exists(RoleExpr role, ConceptExpr filler);
  static ConceptExpr forall(RoleExpr role, ConceptExpr filler);
  static ConceptExpr at_most(std::size_t n, RoleExpr role, ConceptExpr filler);
  static ConceptExpr at_least(std::size_t n, RoleExpr role, ConceptExpr filler);
  // Members must be nonempty and duplicate-free.
  static ConceptExpr nominals(std::vector<Term> members);

  ConceptKind kind() const noexcept;

  // Accessors are only meaningful for the matching kind; others throw.
  const std::string& ctx_id() const;            // TopCtx
  const Term& term() const;                     // Atom
  const ConceptExpr& left() const;              // Union, Intersection, Neg (operand)
  const ConceptExpr& right() const;             // Union, Intersection
  const RoleExpr& role() const;                 // Exists, Forall, AtMost, AtLeast
  const ConceptExpr& filler() const;            // Exists, Forall, AtMost, AtLeast
  std::size_t cardinality() const;              // AtMost, AtLeast
  const std::vector<Term>& members() const;     // Nominals

  friend bool operator==(const ConceptExpr& a, const ConceptExpr& b);
  friend std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b);

  struct Node;

 private:
  explicit ConceptExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class RoleExpr {
 public:
  static RoleExpr atom(Term term);
  static RoleExpr union_of(RoleExpr left, RoleExpr right);
  static RoleExpr intersection_of(RoleExpr left, RoleExpr right);
  static RoleExpr negation(RoleExpr operand);
  static RoleExpr inverse(RoleExpr operand);
  static RoleExpr compose(RoleExpr left, RoleExpr right);
  static RoleExpr closure(RoleExpr operand);
  static RoleExpr product(ConceptExpr left, ConceptExpr right);

  RoleKind kind() const noexcept;

  const Term& term() const;                    // Atom
  const RoleExpr& left() const;                // Union, Intersection, Compose, Neg/Inverse/Closure (operand)
  const RoleExpr& right() const;               // Union, Intersection, Compose
  const ConceptExpr& product_left() const;     // Product
  const ConceptExpr& product_right() const;    // Product

  friend bool operator==(const RoleExpr& a, const RoleExpr& b);
  friend std::strong_ordering operator<=>(const RoleExpr& a, const RoleExpr& b);

  struct Node;

 private:
  explicit RoleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// C sub D
struct ConceptInclusion {
  ConceptExpr sub;
  ConceptExpr sup;
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
  friend auto operator<=>(const ConceptInclusion&, const ConceptInclusion&) = default;
};

// R rsub S
struct RoleInclusion {
  RoleExpr sub;
  RoleExpr sup;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
  friend auto operator<=>(const RoleInclusion&, const RoleInclusion&) = default;
};

// C(a)
struct ConceptAssertion {
  ConceptExpr expr;
  Term individual;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
  friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
};

// R(a, b)
struct RoleAssertion {
  RoleExpr expr;
  Term subject;
  Term object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

using Axiom = std::variant<ConceptInclusion, RoleInclusion, ConceptAssertion, RoleAssertion>;

inline bool is_abox(const Axiom& axiom) noexcept {
  return std::holds_alternative<ConceptAssertion>(axiom) || std::holds_alternative<RoleAssertion>(axiom);
}

// Shorthands for the common atomic forms.
Axiom concept_assertion(const Term& concept_name, const Term& individual);
Axiom role_assertion(const Term& role_name, const Term& subject, const Term& object);

using Signature = std::set<Term>;

// Terms occurring in an expression or axiom. TopCtx contributes nothing.
Signature signature_of(const ConceptExpr& expr);
Signature signature_of(const RoleExpr& expr);
Signature signature_of(const Axiom& axiom);

void collect_signature(const ConceptExpr& expr, Signature& out);
void collect_signature(const RoleExpr& expr, Signature& out);
void collect_signature(const Axiom& axiom, Signature& out);

// Context ids of every TopCtx node occurring in x.
std::set<std::string> top_ctx_ids(const ConceptExpr& expr);
std::set<std::string> top_ctx_ids(const RoleExpr& expr);
std::set<std::string> top_ctx_ids(const Axiom& axiom);

// An ordered, duplicate-free set of axioms plus a declared signature that
// always contains the signature of every axiom.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(const std::vector<Axiom>& axioms);

  // Returns false if the axiom was already present.
  bool add(const Axiom& axiom);
  void add_all(const Ontology& other);
  void declare(const Term& term);

  bool contains(const Axiom& axiom) const { return index_.contains(axiom); }
  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  const Signature& signature() const noexcept { return signature_; }
  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }

  // Structural equality: same axioms in the same order, same signature.
  friend bool operator==(const Ontology& a, const Ontology& b) {
    return a.axioms_ == b.axioms_ && a.signature_ == b.signature_;
  }

 private:
  std::vector<Axiom> axioms_;
  std::set<Axiom> index_;
  Signature signature_;
};

// Same axiom set, ignoring insertion order.
bool same_axioms(const Ontology& a, const Ontology& b);

// Canonical concrete-syntax rendering (the textio grammar).
std::string to_text(const Term& term);
std::string to_text(const ConceptExpr& expr);
std::string to_text(const RoleExpr& expr);
std::string to_text(const Axiom& axiom);

}  // namespace ctxdl
