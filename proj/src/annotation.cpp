#include "ctxdl/annotation.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

void collect_nominal_members(const ConceptExpr& c, Signature& out);

void collect_nominal_members(const RoleExpr& r, Signature& out) {
  switch (r.kind()) {
    case RoleKind::Atom: return;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      collect_nominal_members(r.left(), out);
      collect_nominal_members(r.right(), out);
      return;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: collect_nominal_members(r.left(), out); return;
    case RoleKind::Product:
      collect_nominal_members(r.product_left(), out);
      collect_nominal_members(r.product_right(), out);
      return;
  }
}

void collect_nominal_members(const ConceptExpr& c, Signature& out) {
  switch (c.kind()) {
    case ConceptKind::Nominals: out.insert(c.members().begin(), c.members().end()); return;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      collect_nominal_members(c.left(), out);
      collect_nominal_members(c.right(), out);
      return;
    case ConceptKind::Neg: collect_nominal_members(c.left(), out); return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      collect_nominal_members(c.role(), out);
      collect_nominal_members(c.filler(), out);
      return;
    default: return;
  }
}

// Union-find over the individuals of an ABox.
class Components {
 public:
  explicit Components(const std::vector<Axiom>& abox) {
    for (const auto& ax : abox) {
      if (const auto* ra = std::get_if<RoleAssertion>(&ax)) {
        unite(ra->subject, ra->object);
      } else if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) {
        find(ca->individual);
      }
    }
  }

  bool occurs(const Term& t) const { return parent_.contains(t); }

  Term find(const Term& t) {
    auto it = parent_.find(t);
    if (it == parent_.end()) {
      parent_.emplace(t, t);
      return t;
    }
    if (it->second == t) return t;
    Term root = find(it->second);
    parent_.at(t) = root;
    return root;
  }

  void unite(const Term& a, const Term& b) {
    Term ra = find(a);
    Term rb = find(b);
    if (ra != rb) parent_.at(rb) = ra;
  }

 private:
  std::map<Term, Term> parent_;
};

bool is_atomic_assertion(const Axiom& ax) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) return ca->expr.kind() == ConceptKind::Atom;
  if (const auto* ra = std::get_if<RoleAssertion>(&ax)) return ra->expr.kind() == RoleKind::Atom;
  return false;
}

}  // namespace

Signature ContextualAnnotation::signature() const {
  Signature out = sigma;
  for (const auto& ax : abox) collect_signature(ax, out);
  return out;
}

bool connected_individuals(const std::vector<Axiom>& abox, const Term& a, const Term& b) {
  Components comps(abox);
  if (!comps.occurs(a) || !comps.occurs(b)) return false;
  return comps.find(a) == comps.find(b);
}

Signature individuals_of(const std::vector<Axiom>& abox) {
  Signature out;
  for (const auto& ax : abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) {
      out.insert(ca->individual);
      collect_nominal_members(ca->expr, out);
    } else if (const auto* ra = std::get_if<RoleAssertion>(&ax)) {
      out.insert(ra->subject);
      out.insert(ra->object);
      collect_nominal_members(ra->expr, out);
    }
  }
  return out;
}

bool is_valid_context_id(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '#';
  });
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string default_context_id(const Term& anchor, const std::vector<Axiom>& abox) {
  std::string text = "anchor " + anchor.name() + "\n";
  for (const auto& ax : abox) text += to_text(ax) + "\n";
  return content_hash(text);
}

ContextualAnnotation validate_annotation(const Term& anchor, const std::vector<Axiom>& abox,
                                         const AnnotationOptions& options) {
  if (anchor.kind() != TermKind::NonContextual) {
    throw ValidationError("anchor " + anchor.name() + " must be a non-contextual term");
  }
  for (const auto& ax : abox) {
    if (!is_abox(ax)) throw NotAnABox("not an ABox axiom: " + to_text(ax));
    if (!options.extended && !is_atomic_assertion(ax)) {
      throw ValidationError("assertion over a complex expression: " + to_text(ax));
    }
  }

  Components comps(abox);
  Signature individuals = individuals_of(abox);
  std::vector<std::string> disconnected;
  for (const auto& t : individuals) {
    if (t == anchor) continue;
    if (!comps.occurs(t) || !comps.occurs(anchor) || comps.find(t) != comps.find(anchor)) {
      disconnected.push_back(t.name());
    }
  }
  if (!disconnected.empty()) {
    std::string list;
    for (const auto& name : disconnected) list += (list.empty() ? "" : ", ") + name;
    throw Disconnected("not connected to anchor " + anchor.name() + ": " + list, std::move(disconnected));
  }

  ContextualAnnotation out{anchor, abox, {}, {}, options.extended};
  for (const auto& ax : abox) collect_signature(ax, out.sigma);
  out.sigma.erase(anchor);
  out.ctx_id = options.ctx_id ? *options.ctx_id : default_context_id(anchor, abox);
  if (!is_valid_context_id(out.ctx_id)) throw ValidationError("invalid context id '" + out.ctx_id + "'");
  return out;
}

}  // namespace ctxdl
