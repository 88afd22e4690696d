#include "ctxdl/core.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

constexpr std::array<std::string_view, 28> kReservedWords = {
    "ontology", "annotation", "anchor", "model",  "domain",  "indiv", "conc",    "role",
    "sub",      "rsub",       "top",    "bottom", "ctxtop",  "and",   "or",      "not",
    "exists",   "forall",     "atmost", "atleast", "oneof",  "rand",  "ror",     "rnot",
    "inv",      "comp",       "closure", "product",
};

bool is_name_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '#' ||
         c == '@';
}

}  // namespace

std::string_view to_string(TermKind kind) noexcept {
  switch (kind) {
    case TermKind::NonContextual: return "non-contextual";
    case TermKind::Contextual: return "contextual";
    case TermKind::Anchor: return "anchor";
  }
  return "?";
}

bool is_reserved_word(std::string_view word) noexcept {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) != kReservedWords.end();
}

std::optional<TermKind> infer_term_kind(std::string_view name) noexcept {
  if (name.empty() || name.front() == '#' || is_reserved_word(name)) return std::nullopt;
  if (!std::all_of(name.begin(), name.end(), is_name_char)) return std::nullopt;
  if (name.starts_with("ctx@") || name.starts_with("st@")) return TermKind::Anchor;
  if (name.find('@') != std::string_view::npos) {
    if (name.front() == '@' || name.back() == '@') return std::nullopt;
    return TermKind::Contextual;
  }
  return TermKind::NonContextual;
}

Term::Term(std::string name, TermKind kind) : name_(std::move(name)), kind_(kind) {
  auto inferred = infer_term_kind(name_);
  if (!inferred) throw InvalidTerm("invalid term name '" + name_ + "'");
  if (*inferred != kind_) {
    throw InvalidTerm("term name '" + name_ + "' has the shape of a " + std::string(to_string(*inferred)) +
                      " term, not a " + std::string(to_string(kind_)) + " one");
  }
}

Term Term::parse(std::string name) {
  auto kind = infer_term_kind(name);
  if (!kind) throw InvalidTerm("invalid term name '" + name + "'");
  return Term(std::move(name), *kind);
}

// ---------------------------------------------------------------------------
// Expression nodes

struct ConceptExpr::Node {
  ConceptKind kind;
  std::string ctx_id;
  std::optional<Term> term;
  std::vector<Term> members;
  std::size_t n = 0;
  std::optional<ConceptExpr> left;
  std::optional<ConceptExpr> right;
  std::optional<RoleExpr> role;
};

struct RoleExpr::Node {
  RoleKind kind;
  std::optional<Term> term;
  std::optional<RoleExpr> left;
  std::optional<RoleExpr> right;
  std::optional<ConceptExpr> cleft;
  std::optional<ConceptExpr> cright;
};

ConceptExpr ConceptExpr::top() {
  static const ConceptExpr instance(std::make_shared<const Node>(Node{ConceptKind::Top}));
  return instance;
}

ConceptExpr ConceptExpr::bottom() {
  static const ConceptExpr instance(std::make_shared<const Node>(Node{ConceptKind::Bottom}));
  return instance;
}

ConceptExpr ConceptExpr::top_ctx(std::string ctx_id) {
  if (ctx_id.empty()) throw InvalidExpression("ctxtop needs a nonempty context id");
  Node node{ConceptKind::TopCtx};
  node.ctx_id = std::move(ctx_id);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::atom(Term term) {
  Node node{ConceptKind::Atom};
  node.term = std::move(term);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::union_of(ConceptExpr left, ConceptExpr right) {
  Node node{ConceptKind::Union};
  node.left = std::move(left);
  node.right = std::move(right);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::intersection_of(ConceptExpr left, ConceptExpr right) {
  Node node{ConceptKind::Intersection};
  node.left = std::move(left);
  node.right = std::move(right);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::negation(ConceptExpr operand) {
  Node node{ConceptKind::Neg};
  node.left = std::move(operand);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::exists(RoleExpr role, ConceptExpr filler) {
  Node node{ConceptKind::Exists};
  node.role = std::move(role);
  node.left = std::move(filler);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::forall(RoleExpr role, ConceptExpr filler) {
  Node node{ConceptKind::Forall};
  node.role = std::move(role);
  node.left = std::move(filler);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::at_most(std::size_t n, RoleExpr role, ConceptExpr filler) {
  Node node{ConceptKind::AtMost};
  node.n = n;
  node.role = std::move(role);
  node.left = std::move(filler);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::at_least(std::size_t n, RoleExpr role, ConceptExpr filler) {
  Node node{ConceptKind::AtLeast};
  node.n = n;
  node.role = std::move(role);
  node.left = std::move(filler);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptExpr ConceptExpr::nominals(std::vector<Term> members) {
  if (members.empty()) throw InvalidExpression("oneof needs at least one member");
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) throw InvalidExpression("duplicate oneof member " + members[i].name());
    }
  }
  Node node{ConceptKind::Nominals};
  node.members = std::move(members);
  return ConceptExpr(std::make_shared<const Node>(std::move(node)));
}

ConceptKind ConceptExpr::kind() const noexcept { return node_->kind; }

const std::string& ConceptExpr::ctx_id() const {
  if (kind() != ConceptKind::TopCtx) throw InvalidExpression("not a ctxtop concept");
  return node_->ctx_id;
}

const Term& ConceptExpr::term() const {
  if (kind() != ConceptKind::Atom) throw InvalidExpression("not an atomic concept");
  return *node_->term;
}

const ConceptExpr& ConceptExpr::left() const {
  switch (kind()) {
    case ConceptKind::Union:
    case ConceptKind::Intersection:
    case ConceptKind::Neg: return *node_->left;
    default: throw InvalidExpression("concept has no left operand");
  }
}

const ConceptExpr& ConceptExpr::right() const {
  if (kind() != ConceptKind::Union && kind() != ConceptKind::Intersection) {
    throw InvalidExpression("concept has no right operand");
  }
  return *node_->right;
}

const RoleExpr& ConceptExpr::role() const {
  if (!node_->role) throw InvalidExpression("concept has no role");
  return *node_->role;
}

const ConceptExpr& ConceptExpr::filler() const {
  if (!node_->role) throw InvalidExpression("concept has no filler");
  return *node_->left;
}

std::size_t ConceptExpr::cardinality() const {
  if (kind() != ConceptKind::AtMost && kind() != ConceptKind::AtLeast) {
    throw InvalidExpression("concept has no cardinality");
  }
  return node_->n;
}

const std::vector<Term>& ConceptExpr::members() const {
  if (kind() != ConceptKind::Nominals) throw InvalidExpression("not a oneof concept");
  return node_->members;
}

RoleExpr RoleExpr::atom(Term term) {
  Node node{RoleKind::Atom};
  node.term = std::move(term);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::union_of(RoleExpr left, RoleExpr right) {
  Node node{RoleKind::Union};
  node.left = std::move(left);
  node.right = std::move(right);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::intersection_of(RoleExpr left, RoleExpr right) {
  Node node{RoleKind::Intersection};
  node.left = std::move(left);
  node.right = std::move(right);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::negation(RoleExpr operand) {
  Node node{RoleKind::Neg};
  node.left = std::move(operand);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::inverse(RoleExpr operand) {
  Node node{RoleKind::Inverse};
  node.left = std::move(operand);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::compose(RoleExpr left, RoleExpr right) {
  Node node{RoleKind::Compose};
  node.left = std::move(left);
  node.right = std::move(right);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::closure(RoleExpr operand) {
  Node node{RoleKind::Closure};
  node.left = std::move(operand);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleExpr RoleExpr::product(ConceptExpr left, ConceptExpr right) {
  Node node{RoleKind::Product};
  node.cleft = std::move(left);
  node.cright = std::move(right);
  return RoleExpr(std::make_shared<const Node>(std::move(node)));
}

RoleKind RoleExpr::kind() const noexcept { return node_->kind; }

const Term& RoleExpr::term() const {
  if (kind() != RoleKind::Atom) throw InvalidExpression("not an atomic role");
  return *node_->term;
}

const RoleExpr& RoleExpr::left() const {
  if (!node_->left) throw InvalidExpression("role has no left operand");
  return *node_->left;
}

const RoleExpr& RoleExpr::right() const {
  if (!node_->right) throw InvalidExpression("role has no right operand");
  return *node_->right;
}

const ConceptExpr& RoleExpr::product_left() const {
  if (kind() != RoleKind::Product) throw InvalidExpression("not a concept product");
  return *node_->cleft;
}

const ConceptExpr& RoleExpr::product_right() const {
  if (kind() != RoleKind::Product) throw InvalidExpression("not a concept product");
  return *node_->cright;
}

// ---------------------------------------------------------------------------
// Structural ordering

std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  switch (a.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom: return std::strong_ordering::equal;
    case ConceptKind::TopCtx: return x.ctx_id <=> y.ctx_id;
    case ConceptKind::Atom: return *x.term <=> *y.term;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      if (auto c = *x.left <=> *y.left; c != 0) return c;
      return *x.right <=> *y.right;
    case ConceptKind::Neg: return *x.left <=> *y.left;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      if (auto c = x.n <=> y.n; c != 0) return c;
      if (auto c = *x.role <=> *y.role; c != 0) return c;
      return *x.left <=> *y.left;
    case ConceptKind::Nominals: return x.members <=> y.members;
  }
  return std::strong_ordering::equal;
}

bool operator==(const ConceptExpr& a, const ConceptExpr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const RoleExpr& a, const RoleExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  switch (a.kind()) {
    case RoleKind::Atom: return *x.term <=> *y.term;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      if (auto c = *x.left <=> *y.left; c != 0) return c;
      return *x.right <=> *y.right;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: return *x.left <=> *y.left;
    case RoleKind::Product:
      if (auto c = *x.cleft <=> *y.cleft; c != 0) return c;
      return *x.cright <=> *y.cright;
  }
  return std::strong_ordering::equal;
}

bool operator==(const RoleExpr& a, const RoleExpr& b) { return (a <=> b) == 0; }

Axiom concept_assertion(const Term& concept_name, const Term& individual) {
  return ConceptAssertion{ConceptExpr::atom(concept_name), individual};
}

Axiom role_assertion(const Term& role_name, const Term& subject, const Term& object) {
  return RoleAssertion{RoleExpr::atom(role_name), subject, object};
}

// ---------------------------------------------------------------------------
// Signatures

void collect_signature(const ConceptExpr& expr, Signature& out) {
  switch (expr.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::TopCtx: return;
    case ConceptKind::Atom: out.insert(expr.term()); return;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      collect_signature(expr.left(), out);
      collect_signature(expr.right(), out);
      return;
    case ConceptKind::Neg: collect_signature(expr.left(), out); return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      collect_signature(expr.role(), out);
      collect_signature(expr.filler(), out);
      return;
    case ConceptKind::Nominals: out.insert(expr.members().begin(), expr.members().end()); return;
  }
}

void collect_signature(const RoleExpr& expr, Signature& out) {
  switch (expr.kind()) {
    case RoleKind::Atom: out.insert(expr.term()); return;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      collect_signature(expr.left(), out);
      collect_signature(expr.right(), out);
      return;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: collect_signature(expr.left(), out); return;
    case RoleKind::Product:
      collect_signature(expr.product_left(), out);
      collect_signature(expr.product_right(), out);
      return;
  }
}

void collect_signature(const Axiom& axiom, Signature& out) {
  std::visit(
      [&out](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion> || std::is_same_v<T, RoleInclusion>) {
          collect_signature(ax.sub, out);
          collect_signature(ax.sup, out);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          collect_signature(ax.expr, out);
          out.insert(ax.individual);
        } else {
          collect_signature(ax.expr, out);
          out.insert(ax.subject);
          out.insert(ax.object);
        }
      },
      axiom);
}

Signature signature_of(const ConceptExpr& expr) {
  Signature out;
  collect_signature(expr, out);
  return out;
}

Signature signature_of(const RoleExpr& expr) {
  Signature out;
  collect_signature(expr, out);
  return out;
}

Signature signature_of(const Axiom& axiom) {
  Signature out;
  collect_signature(axiom, out);
  return out;
}

namespace {

void collect_ctx_ids(const RoleExpr& expr, std::set<std::string>& out);

void collect_ctx_ids(const ConceptExpr& expr, std::set<std::string>& out) {
  switch (expr.kind()) {
    case ConceptKind::TopCtx: out.insert(expr.ctx_id()); return;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      collect_ctx_ids(expr.left(), out);
      collect_ctx_ids(expr.right(), out);
      return;
    case ConceptKind::Neg: collect_ctx_ids(expr.left(), out); return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      collect_ctx_ids(expr.role(), out);
      collect_ctx_ids(expr.filler(), out);
      return;
    default: return;
  }
}

void collect_ctx_ids(const RoleExpr& expr, std::set<std::string>& out) {
  switch (expr.kind()) {
    case RoleKind::Atom: return;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      collect_ctx_ids(expr.left(), out);
      collect_ctx_ids(expr.right(), out);
      return;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: collect_ctx_ids(expr.left(), out); return;
    case RoleKind::Product:
      collect_ctx_ids(expr.product_left(), out);
      collect_ctx_ids(expr.product_right(), out);
      return;
  }
}

}  // namespace

std::set<std::string> top_ctx_ids(const ConceptExpr& expr) {
  std::set<std::string> out;
  collect_ctx_ids(expr, out);
  return out;
}

std::set<std::string> top_ctx_ids(const RoleExpr& expr) {
  std::set<std::string> out;
  collect_ctx_ids(expr, out);
  return out;
}

std::set<std::string> top_ctx_ids(const Axiom& axiom) {
  std::set<std::string> out;
  std::visit(
      [&out](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion> || std::is_same_v<T, RoleInclusion>) {
          collect_ctx_ids(ax.sub, out);
          collect_ctx_ids(ax.sup, out);
        } else {
          collect_ctx_ids(ax.expr, out);
        }
      },
      axiom);
  return out;
}

// ---------------------------------------------------------------------------
// Ontology

Ontology::Ontology(const std::vector<Axiom>& axioms) {
  for (const auto& axiom : axioms) add(axiom);
}

bool Ontology::add(const Axiom& axiom) {
  if (!index_.insert(axiom).second) return false;
  axioms_.push_back(axiom);
  collect_signature(axiom, signature_);
  return true;
}

void Ontology::add_all(const Ontology& other) {
  for (const auto& axiom : other.axioms_) add(axiom);
  signature_.insert(other.signature_.begin(), other.signature_.end());
}

void Ontology::declare(const Term& term) { signature_.insert(term); }

bool same_axioms(const Ontology& a, const Ontology& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.axioms().begin(), a.axioms().end(), [&b](const Axiom& ax) { return b.contains(ax); });
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_text(const Term& term) { return term.name(); }

std::string to_text(const ConceptExpr& expr) {
  switch (expr.kind()) {
    case ConceptKind::Top: return "top";
    case ConceptKind::Bottom: return "bottom";
    case ConceptKind::TopCtx: return "ctxtop[" + expr.ctx_id() + "]";
    case ConceptKind::Atom: return expr.term().name();
    case ConceptKind::Union: return "or(" + to_text(expr.left()) + ", " + to_text(expr.right()) + ")";
    case ConceptKind::Intersection: return "and(" + to_text(expr.left()) + ", " + to_text(expr.right()) + ")";
    case ConceptKind::Neg: return "not(" + to_text(expr.left()) + ")";
    case ConceptKind::Exists: return "exists(" + to_text(expr.role()) + ", " + to_text(expr.filler()) + ")";
    case ConceptKind::Forall: return "forall(" + to_text(expr.role()) + ", " + to_text(expr.filler()) + ")";
    case ConceptKind::AtMost:
      return "atmost(" + std::to_string(expr.cardinality()) + ", " + to_text(expr.role()) + ", " +
             to_text(expr.filler()) + ")";
    case ConceptKind::AtLeast:
      return "atleast(" + std::to_string(expr.cardinality()) + ", " + to_text(expr.role()) + ", " +
             to_text(expr.filler()) + ")";
    case ConceptKind::Nominals: {
      std::string out = "oneof(";
      for (std::size_t i = 0; i < expr.members().size(); ++i) {
        if (i > 0) out += ", ";
        out += expr.members()[i].name();
      }
      return out + ")";
    }
  }
  return {};
}

std::string to_text(const RoleExpr& expr) {
  switch (expr.kind()) {
    case RoleKind::Atom: return expr.term().name();
    case RoleKind::Union: return "ror(" + to_text(expr.left()) + ", " + to_text(expr.right()) + ")";
    case RoleKind::Intersection: return "rand(" + to_text(expr.left()) + ", " + to_text(expr.right()) + ")";
    case RoleKind::Neg: return "rnot(" + to_text(expr.left()) + ")";
    case RoleKind::Inverse: return "inv(" + to_text(expr.left()) + ")";
    case RoleKind::Compose: return "comp(" + to_text(expr.left()) + ", " + to_text(expr.right()) + ")";
    case RoleKind::Closure: return "closure(" + to_text(expr.left()) + ")";
    case RoleKind::Product:
      return "product(" + to_text(expr.product_left()) + ", " + to_text(expr.product_right()) + ")";
  }
  return {};
}

std::string to_text(const Axiom& axiom) {
  return std::visit(
      [](const auto& ax) -> std::string {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return to_text(ax.sub) + " sub " + to_text(ax.sup);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return to_text(ax.sub) + " rsub " + to_text(ax.sup);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return to_text(ax.expr) + "(" + ax.individual.name() + ")";
        } else {
          return to_text(ax.expr) + "(" + ax.subject.name() + ", " + ax.object.name() + ")";
        }
      },
      axiom);
}

}  // namespace ctxdl
