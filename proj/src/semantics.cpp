#include "ctxdl/semantics.hpp"

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

void check_element(Element e) {
  if (e >= kMaxDomainSize) {
    throw InvalidInterpretation("element " + std::to_string(e) + " exceeds the maximum domain size");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<Element> elements) {
  for (Element e : elements) insert(e);
}

ElementSet ElementSet::full(std::size_t size) {
  return ElementSet(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
}

void ElementSet::insert(Element e) {
  check_element(e);
  bits_ |= std::uint64_t{1} << e;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (Element e = 0; e < kMaxDomainSize; ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

PairSet::PairSet(std::initializer_list<std::pair<Element, Element>> pairs) {
  for (auto [x, y] : pairs) insert(x, y);
}

PairSet PairSet::full(std::size_t size) { return product(ElementSet::full(size), ElementSet::full(size)); }

PairSet PairSet::identity(std::size_t size) {
  std::uint64_t bits = 0;
  for (Element x = 0; x < size; ++x) bits |= std::uint64_t{1} << index(x, x);
  return PairSet(bits);
}

PairSet PairSet::product(ElementSet left, ElementSet right) {
  std::uint64_t bits = 0;
  for (Element x = 0; x < kMaxDomainSize; ++x) {
    if (left.contains(x)) bits |= right.bits() << (x * kMaxDomainSize);
  }
  return PairSet(bits);
}

bool PairSet::contains(Element x, Element y) const noexcept {
  if (x >= kMaxDomainSize || y >= kMaxDomainSize) return false;
  return ((bits_ >> index(x, y)) & 1U) != 0;
}

void PairSet::insert(Element x, Element y) {
  check_element(x);
  check_element(y);
  bits_ |= std::uint64_t{1} << index(x, y);
}

std::vector<std::pair<Element, Element>> PairSet::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < kMaxDomainSize; ++x) {
    for (Element y = 0; y < kMaxDomainSize; ++y) {
      if (contains(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

PairSet inverse_of(PairSet r) noexcept {
  std::uint64_t out = 0;
  std::uint64_t bits = r.bits();
  while (bits != 0) {
    unsigned i = static_cast<unsigned>(std::countr_zero(bits));
    bits &= bits - 1;
    unsigned x = i / kMaxDomainSize;
    unsigned y = i % kMaxDomainSize;
    out |= std::uint64_t{1} << PairSet::index(y, x);
  }
  return PairSet(out);
}

PairSet compose(PairSet r, PairSet s) noexcept {
  std::uint64_t out = 0;
  for (Element x = 0; x < kMaxDomainSize; ++x) {
    std::uint64_t mids = r.row(x).bits();
    std::uint64_t row = 0;
    while (mids != 0) {
      Element z = static_cast<Element>(std::countr_zero(mids));
      mids &= mids - 1;
      row |= s.row(z).bits();
    }
    out |= row << (x * kMaxDomainSize);
  }
  return PairSet(out);
}

PairSet transitive_closure(PairSet r) noexcept {
  // Warshall over bit rows.
  std::uint64_t rows[kMaxDomainSize];
  for (Element x = 0; x < kMaxDomainSize; ++x) rows[x] = r.row(x).bits();
  for (Element k = 0; k < kMaxDomainSize; ++k) {
    for (Element x = 0; x < kMaxDomainSize; ++x) {
      if ((rows[x] >> k) & 1U) rows[x] |= rows[k];
    }
  }
  std::uint64_t out = 0;
  for (Element x = 0; x < kMaxDomainSize; ++x) out |= rows[x] << (x * kMaxDomainSize);
  return PairSet(out);
}

PairSet reflexive_transitive_closure(PairSet r, std::size_t size) noexcept {
  return transitive_closure(r) | PairSet::identity(size);
}

// ---------------------------------------------------------------------------

Interpretation::Interpretation(std::size_t size) : size_(size) {
  if (size == 0) throw InvalidInterpretation("the domain of an interpretation must be nonempty");
  if (size > kMaxDomainSize) {
    throw InvalidInterpretation("domain size " + std::to_string(size) + " exceeds the maximum of " +
                                std::to_string(kMaxDomainSize));
  }
}

void Interpretation::set_individual(const Term& term, Element e) {
  if (e >= size_) throw InvalidInterpretation("element " + std::to_string(e) + " is outside the domain");
  individuals_.insert_or_assign(term, e);
}

void Interpretation::set_concept(const Term& term, ElementSet set) {
  if (!set.is_subset_of(domain())) throw InvalidInterpretation("concept " + term.name() + " leaves the domain");
  concepts_.insert_or_assign(term, set);
}

void Interpretation::set_role(const Term& term, PairSet pairs) {
  if (!pairs.is_subset_of(PairSet::full(size_))) {
    throw InvalidInterpretation("role " + term.name() + " leaves the domain");
  }
  roles_.insert_or_assign(term, pairs);
}

void Interpretation::set_top_ctx(const std::string& ctx_id, ElementSet set) {
  if (!set.is_subset_of(domain())) throw InvalidInterpretation("ctxtop[" + ctx_id + "] leaves the domain");
  top_ctxs_.insert_or_assign(ctx_id, set);
}

std::optional<Element> Interpretation::individual(const Term& term) const {
  auto it = individuals_.find(term);
  if (it == individuals_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementSet> Interpretation::concept_of(const Term& term) const {
  auto it = concepts_.find(term);
  if (it == concepts_.end()) return std::nullopt;
  return it->second;
}

std::optional<PairSet> Interpretation::role_of(const Term& term) const {
  auto it = roles_.find(term);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementSet> Interpretation::top_ctx(const std::string& ctx_id) const {
  auto it = top_ctxs_.find(ctx_id);
  if (it == top_ctxs_.end()) return std::nullopt;
  return it->second;
}

void Interpretation::complete(const Signature& sig) {
  for (const auto& term : sig) {
    individuals_.try_emplace(term, 0);
    concepts_.try_emplace(term, ElementSet{});
    roles_.try_emplace(term, PairSet{});
  }
}

void Interpretation::complete_top_ctx(const std::set<std::string>& ctx_ids) {
  for (const auto& id : ctx_ids) top_ctxs_.try_emplace(id, ElementSet{});
}

Interpretation extend_domain(const Interpretation& interp, std::size_t extra) {
  Interpretation out(interp.size() + extra);
  for (const auto& [t, e] : interp.individuals()) out.set_individual(t, e);
  for (const auto& [t, s] : interp.concepts()) out.set_concept(t, s);
  for (const auto& [t, r] : interp.roles()) out.set_role(t, r);
  for (const auto& [id, s] : interp.top_ctxs()) out.set_top_ctx(id, s);
  return out;
}

Interpretation restrict_domain(const Interpretation& interp, ElementSet keep) {
  keep = keep & interp.domain();
  if (keep.empty()) throw InvalidInterpretation("cannot restrict to an empty domain");
  std::vector<Element> kept = keep.elements();
  std::vector<std::optional<Element>> renumber(kMaxDomainSize);
  for (std::size_t i = 0; i < kept.size(); ++i) renumber[kept[i]] = static_cast<Element>(i);

  auto map_set = [&](ElementSet s) {
    ElementSet out;
    for (Element e : (s & keep).elements()) out.insert(*renumber[e]);
    return out;
  };

  Interpretation out(kept.size());
  for (const auto& [t, e] : interp.individuals()) {
    if (renumber[e]) out.set_individual(t, *renumber[e]);
  }
  for (const auto& [t, s] : interp.concepts()) out.set_concept(t, map_set(s));
  for (const auto& [t, r] : interp.roles()) {
    PairSet mapped;
    for (auto [x, y] : r.pairs()) {
      if (renumber[x] && renumber[y]) mapped.insert(*renumber[x], *renumber[y]);
    }
    out.set_role(t, mapped);
  }
  for (const auto& [id, s] : interp.top_ctxs()) out.set_top_ctx(id, map_set(s));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Element individual_or_throw(const Term& term, const Interpretation& interp) {
  auto e = interp.individual(term);
  if (!e) throw UnmappedTerm(term.name());
  return *e;
}

}  // namespace

ElementSet eval_concept(const ConceptExpr& expr, const Interpretation& interp, ClosureMode closure) {
  const ElementSet domain = interp.domain();
  switch (expr.kind()) {
    case ConceptKind::Top: return domain;
    case ConceptKind::Bottom: return ElementSet{};
    case ConceptKind::TopCtx: {
      auto s = interp.top_ctx(expr.ctx_id());
      if (!s) throw UnmappedTerm("ctxtop[" + expr.ctx_id() + "]");
      return *s;
    }
    case ConceptKind::Atom: {
      auto s = interp.concept_of(expr.term());
      if (!s) throw UnmappedTerm(expr.term().name());
      return *s;
    }
    case ConceptKind::Union:
      return eval_concept(expr.left(), interp, closure) | eval_concept(expr.right(), interp, closure);
    case ConceptKind::Intersection:
      return eval_concept(expr.left(), interp, closure) & eval_concept(expr.right(), interp, closure);
    case ConceptKind::Neg:
      return ElementSet(domain.bits() & ~eval_concept(expr.left(), interp, closure).bits());
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast: {
      PairSet r = eval_role(expr.role(), interp, closure);
      ElementSet c = eval_concept(expr.filler(), interp, closure);
      ElementSet out;
      for (Element x = 0; x < interp.size(); ++x) {
        ElementSet succ = r.row(x);
        bool member = false;
        switch (expr.kind()) {
          case ConceptKind::Exists: member = !(succ & c).empty(); break;
          case ConceptKind::Forall: member = succ.is_subset_of(c); break;
          case ConceptKind::AtMost: member = (succ & c).size() <= expr.cardinality(); break;
          default: member = (succ & c).size() >= expr.cardinality(); break;
        }
        if (member) out.insert(x);
      }
      return out;
    }
    case ConceptKind::Nominals: {
      ElementSet out;
      for (const auto& member : expr.members()) out.insert(individual_or_throw(member, interp));
      return out;
    }
  }
  return ElementSet{};
}

PairSet eval_role(const RoleExpr& expr, const Interpretation& interp, ClosureMode closure) {
  switch (expr.kind()) {
    case RoleKind::Atom: {
      auto r = interp.role_of(expr.term());
      if (!r) throw UnmappedTerm(expr.term().name());
      return *r;
    }
    case RoleKind::Union: return eval_role(expr.left(), interp, closure) | eval_role(expr.right(), interp, closure);
    case RoleKind::Intersection:
      return eval_role(expr.left(), interp, closure) & eval_role(expr.right(), interp, closure);
    case RoleKind::Neg:
      return PairSet(PairSet::full(interp.size()).bits() & ~eval_role(expr.left(), interp, closure).bits());
    case RoleKind::Inverse: return inverse_of(eval_role(expr.left(), interp, closure));
    case RoleKind::Compose:
      return compose(eval_role(expr.left(), interp, closure), eval_role(expr.right(), interp, closure));
    case RoleKind::Closure: {
      PairSet inner = eval_role(expr.left(), interp, closure);
      return closure == ClosureMode::ReflexiveTransitive ? reflexive_transitive_closure(inner, interp.size())
                                                         : transitive_closure(inner);
    }
    case RoleKind::Product:
      return PairSet::product(eval_concept(expr.product_left(), interp, closure),
                              eval_concept(expr.product_right(), interp, closure));
  }
  return PairSet{};
}

bool satisfies(const Interpretation& interp, const Axiom& axiom, ClosureMode closure) {
  return std::visit(
      [&](const auto& ax) -> bool {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return eval_concept(ax.sub, interp, closure).is_subset_of(eval_concept(ax.sup, interp, closure));
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return eval_role(ax.sub, interp, closure).is_subset_of(eval_role(ax.sup, interp, closure));
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return eval_concept(ax.expr, interp, closure).contains(individual_or_throw(ax.individual, interp));
        } else {
          Element a = individual_or_throw(ax.subject, interp);
          Element b = individual_or_throw(ax.object, interp);
          return eval_role(ax.expr, interp, closure).contains(a, b);
        }
      },
      axiom);
}

bool is_model(const Interpretation& interp, const Ontology& ontology, ClosureMode closure) {
  for (const auto& axiom : ontology.axioms()) {
    if (!satisfies(interp, axiom, closure)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void note_role_usage(const RoleExpr& expr, std::map<Term, TermUsage>& out);

void note_concept_usage(const ConceptExpr& expr, std::map<Term, TermUsage>& out) {
  switch (expr.kind()) {
    case ConceptKind::Atom: out[expr.term()].as_concept = true; return;
    case ConceptKind::Union:
    case ConceptKind::Intersection:
      note_concept_usage(expr.left(), out);
      note_concept_usage(expr.right(), out);
      return;
    case ConceptKind::Neg: note_concept_usage(expr.left(), out); return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      note_role_usage(expr.role(), out);
      note_concept_usage(expr.filler(), out);
      return;
    case ConceptKind::Nominals:
      for (const auto& m : expr.members()) out[m].as_individual = true;
      return;
    default: return;
  }
}

void note_role_usage(const RoleExpr& expr, std::map<Term, TermUsage>& out) {
  switch (expr.kind()) {
    case RoleKind::Atom: out[expr.term()].as_role = true; return;
    case RoleKind::Union:
    case RoleKind::Intersection:
    case RoleKind::Compose:
      note_role_usage(expr.left(), out);
      note_role_usage(expr.right(), out);
      return;
    case RoleKind::Neg:
    case RoleKind::Inverse:
    case RoleKind::Closure: note_role_usage(expr.left(), out); return;
    case RoleKind::Product:
      note_concept_usage(expr.product_left(), out);
      note_concept_usage(expr.product_right(), out);
      return;
  }
}

}  // namespace

std::map<Term, TermUsage> usage_of(const std::vector<Axiom>& axioms) {
  std::map<Term, TermUsage> out;
  for (const auto& axiom : axioms) {
    std::visit(
        [&out](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            note_concept_usage(ax.sub, out);
            note_concept_usage(ax.sup, out);
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            note_role_usage(ax.sub, out);
            note_role_usage(ax.sup, out);
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            note_concept_usage(ax.expr, out);
            out[ax.individual].as_individual = true;
          } else {
            note_role_usage(ax.expr, out);
            out[ax.subject].as_individual = true;
            out[ax.object].as_individual = true;
          }
        },
        axiom);
  }
  return out;
}

}  // namespace ctxdl
