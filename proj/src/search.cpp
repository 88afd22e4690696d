#include "ctxdl/search.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "ctxdl/errors.hpp"

// The search works on facets: the individual, concept or role denotation of
// one term (or a ctxtop concept). Each facet holds lower and upper bounds,
// so every expression evaluates to a (lo, hi) pair and every axiom to
// true / false / unknown. Branching splits one bit (or one individual
// value) at a time. Before branching a node probes every open bit and
// forces the ones whose other value falsifies an axiom. Failures return the
// facets they depend on so that branches which cannot matter are skipped,
// and axioms that no longer share an open facet are solved separately.

namespace ctxdl {

namespace {

using FacetSet = boost::dynamic_bitset<>;

enum class FacetKind : std::uint8_t { Individual, Concept, Role };

struct FacetState {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // candidate elements for individuals
};

enum class Op : std::uint8_t {
  Top,
  Bottom,
  ConceptVar,
  Union,
  Intersection,
  Neg,
  Exists,
  Forall,
  AtMost,
  AtLeast,
  Nominals,
  RoleVar,
  RoleUnion,
  RoleIntersection,
  RoleNeg,
  Inverse,
  Compose,
  Closure,
  Product,
};

struct ExprNode {
  Op op;
  int left = -1;
  int right = -1;
  std::uint32_t facet = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> members;
};

struct Bounds {
  std::uint64_t lo;
  std::uint64_t hi;
};

enum class Tri : std::uint8_t { False, True, Unknown };

enum class Form : std::uint8_t { ConceptSub, RoleSub, ConceptAssert, RoleAssert };

struct Constraint {
  Form form;
  int left = -1;
  int right = -1;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool negated = false;
  std::vector<std::uint32_t> facets;
  FacetSet facet_set;
};

struct Outcome {
  bool ok;
  FacetSet conflict;
};

struct Forced {
  std::uint32_t facet;
  FacetSet reason;
};

std::uint64_t row_of(std::uint64_t bits, unsigned x) { return (bits >> (x * kMaxDomainSize)) & 0xFFU; }

class Search {
 public:
  Search(const std::vector<Axiom>& axioms, const std::vector<Axiom>& negated, std::size_t size,
         const SearchOptions& options, std::uint64_t& nodes)
      : size_(size), options_(options), nodes_(nodes) {
    domain_ = ElementSet::full(size).bits();
    role_domain_ = PairSet::full(size).bits();
    identity_ = PairSet::identity(size).bits();

    std::vector<Axiom> all = axioms;
    all.insert(all.end(), negated.begin(), negated.end());
    for (const auto& [term, usage] : usage_of(all)) {
      if (usage.as_individual) individual_facet_[term] = add_facet(FacetKind::Individual, term.name());
      if (usage.as_concept) concept_facet_[term] = add_facet(FacetKind::Concept, term.name());
      if (usage.as_role) role_facet_[term] = add_facet(FacetKind::Role, term.name());
    }
    for (const auto& axiom : all) {
      for (const auto& id : top_ctx_ids(axiom)) {
        if (!top_ctx_facet_.contains(id)) top_ctx_facet_[id] = add_facet(FacetKind::Concept, "ctxtop[" + id + "]");
      }
    }
    if (options.symmetry_breaking) {
      for (std::uint32_t f = 0; f < kinds_.size(); ++f) {
        if (kinds_[f] == FacetKind::Individual) {
          state_[f].hi = 1;
          break;
        }
      }
    }
    for (const auto& axiom : axioms) add_constraint(axiom, false);
    for (const auto& axiom : negated) add_constraint(axiom, true);
  }

  bool run() {
    std::vector<int> all(constraints_.size());
    std::iota(all.begin(), all.end(), 0);
    return solve(all).ok;
  }

  Interpretation witness() const {
    Interpretation out(size_);
    for (const auto& [term, f] : individual_facet_) {
      out.set_individual(term, static_cast<Element>(std::countr_zero(state_[f].hi)));
    }
    for (const auto& [term, f] : concept_facet_) out.set_concept(term, ElementSet(state_[f].lo));
    for (const auto& [term, f] : role_facet_) out.set_role(term, PairSet(state_[f].lo));
    for (const auto& [id, f] : top_ctx_facet_) out.set_top_ctx(id, ElementSet(state_[f].lo));
    return out;
  }

 private:
  std::uint32_t add_facet(FacetKind kind, std::string label) {
    auto f = static_cast<std::uint32_t>(kinds_.size());
    kinds_.push_back(kind);
    labels_.push_back(std::move(label));
    FacetState st;
    st.hi = kind == FacetKind::Role ? role_domain_ : domain_;
    state_.push_back(st);
    return f;
  }

  // ---- compilation

  int push(ExprNode node) {
    nodes_list_.push_back(std::move(node));
    return static_cast<int>(nodes_list_.size() - 1);
  }

  int compile(const ConceptExpr& c) {
    switch (c.kind()) {
      case ConceptKind::Top: return push({Op::Top});
      case ConceptKind::Bottom: return push({Op::Bottom});
      case ConceptKind::TopCtx: {
        ExprNode n{Op::ConceptVar};
        n.facet = top_ctx_facet_.at(c.ctx_id());
        return push(std::move(n));
      }
      case ConceptKind::Atom: {
        ExprNode n{Op::ConceptVar};
        n.facet = concept_facet_.at(c.term());
        return push(std::move(n));
      }
      case ConceptKind::Union:
      case ConceptKind::Intersection: {
        int l = compile(c.left());
        int r = compile(c.right());
        ExprNode n{c.kind() == ConceptKind::Union ? Op::Union : Op::Intersection};
        n.left = l;
        n.right = r;
        return push(std::move(n));
      }
      case ConceptKind::Neg: {
        int l = compile(c.left());
        ExprNode n{Op::Neg};
        n.left = l;
        return push(std::move(n));
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall:
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast: {
        int l = compile(c.role());
        int r = compile(c.filler());
        Op op = c.kind() == ConceptKind::Exists   ? Op::Exists
                : c.kind() == ConceptKind::Forall ? Op::Forall
                : c.kind() == ConceptKind::AtMost ? Op::AtMost
                                                  : Op::AtLeast;
        ExprNode n{op};
        n.left = l;
        n.right = r;
        if (op == Op::AtMost || op == Op::AtLeast) n.n = c.cardinality();
        return push(std::move(n));
      }
      case ConceptKind::Nominals: {
        ExprNode n{Op::Nominals};
        for (const auto& m : c.members()) n.members.push_back(individual_facet_.at(m));
        return push(std::move(n));
      }
    }
    throw std::logic_error("unhandled concept kind");
  }

  int compile(const RoleExpr& r) {
    switch (r.kind()) {
      case RoleKind::Atom: {
        ExprNode n{Op::RoleVar};
        n.facet = role_facet_.at(r.term());
        return push(std::move(n));
      }
      case RoleKind::Union:
      case RoleKind::Intersection:
      case RoleKind::Compose: {
        int l = compile(r.left());
        int rr = compile(r.right());
        ExprNode n{r.kind() == RoleKind::Union          ? Op::RoleUnion
                   : r.kind() == RoleKind::Intersection ? Op::RoleIntersection
                                                        : Op::Compose};
        n.left = l;
        n.right = rr;
        return push(std::move(n));
      }
      case RoleKind::Neg:
      case RoleKind::Inverse:
      case RoleKind::Closure: {
        int l = compile(r.left());
        ExprNode n{r.kind() == RoleKind::Neg ? Op::RoleNeg : r.kind() == RoleKind::Inverse ? Op::Inverse : Op::Closure};
        n.left = l;
        return push(std::move(n));
      }
      case RoleKind::Product: {
        int l = compile(r.product_left());
        int rr = compile(r.product_right());
        ExprNode n{Op::Product};
        n.left = l;
        n.right = rr;
        return push(std::move(n));
      }
    }
    throw std::logic_error("unhandled role kind");
  }

  void note_facets(int node, std::vector<std::uint32_t>& out) const {
    const ExprNode& n = nodes_list_[node];
    if (n.op == Op::ConceptVar || n.op == Op::RoleVar) out.push_back(n.facet);
    for (auto m : n.members) out.push_back(m);
    if (n.left >= 0) note_facets(n.left, out);
    if (n.right >= 0) note_facets(n.right, out);
  }

  void add_constraint(const Axiom& axiom, bool negated) {
    Constraint c;
    c.negated = negated;
    std::visit(
        [&](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            c.form = Form::ConceptSub;
            c.left = compile(ax.sub);
            c.right = compile(ax.sup);
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            c.form = Form::RoleSub;
            c.left = compile(ax.sub);
            c.right = compile(ax.sup);
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            c.form = Form::ConceptAssert;
            c.left = compile(ax.expr);
            c.a = individual_facet_.at(ax.individual);
            c.facets.push_back(c.a);
          } else {
            c.form = Form::RoleAssert;
            c.left = compile(ax.expr);
            c.a = individual_facet_.at(ax.subject);
            c.b = individual_facet_.at(ax.object);
            c.facets.push_back(c.a);
            c.facets.push_back(c.b);
          }
        },
        axiom);
    note_facets(c.left, c.facets);
    if (c.right >= 0) note_facets(c.right, c.facets);
    std::sort(c.facets.begin(), c.facets.end());
    c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
    c.facet_set = FacetSet(kinds_.size());
    for (auto f : c.facets) c.facet_set.set(f);
    constraints_.push_back(std::move(c));
  }

  // ---- three-valued evaluation

  std::uint64_t transpose(std::uint64_t bits) const { return inverse_of(PairSet(bits)).bits(); }

  std::uint64_t closure_of(std::uint64_t bits) const {
    std::uint64_t t = transitive_closure(PairSet(bits)).bits();
    return options_.closure == ClosureMode::ReflexiveTransitive ? (t | identity_) : t;
  }

  Bounds eval(int idx) const {
    const ExprNode& n = nodes_list_[idx];
    switch (n.op) {
      case Op::Top: return {domain_, domain_};
      case Op::Bottom: return {0, 0};
      case Op::ConceptVar:
      case Op::RoleVar: return {state_[n.facet].lo, state_[n.facet].hi};
      case Op::Union:
      case Op::RoleUnion: {
        Bounds l = eval(n.left), r = eval(n.right);
        return {l.lo | r.lo, l.hi | r.hi};
      }
      case Op::Intersection:
      case Op::RoleIntersection: {
        Bounds l = eval(n.left), r = eval(n.right);
        return {l.lo & r.lo, l.hi & r.hi};
      }
      case Op::Neg: {
        Bounds l = eval(n.left);
        return {domain_ & ~l.hi, domain_ & ~l.lo};
      }
      case Op::RoleNeg: {
        Bounds l = eval(n.left);
        return {role_domain_ & ~l.hi, role_domain_ & ~l.lo};
      }
      case Op::Exists:
      case Op::Forall:
      case Op::AtMost:
      case Op::AtLeast: {
        Bounds r = eval(n.left), c = eval(n.right);
        std::uint64_t lo = 0, hi = 0;
        for (unsigned x = 0; x < size_; ++x) {
          std::uint64_t rlo = row_of(r.lo, x), rhi = row_of(r.hi, x);
          bool in_lo = false, in_hi = false;
          switch (n.op) {
            case Op::Exists:
              in_lo = (rlo & c.lo) != 0;
              in_hi = (rhi & c.hi) != 0;
              break;
            case Op::Forall:
              in_lo = (rhi & ~c.lo) == 0;
              in_hi = (rlo & ~c.hi) == 0;
              break;
            case Op::AtMost:
              in_lo = static_cast<std::size_t>(std::popcount(rhi & c.hi)) <= n.n;
              in_hi = static_cast<std::size_t>(std::popcount(rlo & c.lo)) <= n.n;
              break;
            default:
              in_lo = static_cast<std::size_t>(std::popcount(rlo & c.lo)) >= n.n;
              in_hi = static_cast<std::size_t>(std::popcount(rhi & c.hi)) >= n.n;
              break;
          }
          if (in_lo) lo |= std::uint64_t{1} << x;
          if (in_hi) hi |= std::uint64_t{1} << x;
        }
        return {lo, hi};
      }
      case Op::Nominals: {
        std::uint64_t lo = 0, hi = 0;
        for (auto m : n.members) {
          std::uint64_t cand = state_[m].hi;
          hi |= cand;
          if (std::has_single_bit(cand)) lo |= cand;
        }
        return {lo, hi};
      }
      case Op::Inverse: {
        Bounds l = eval(n.left);
        return {transpose(l.lo), transpose(l.hi)};
      }
      case Op::Compose: {
        Bounds l = eval(n.left), r = eval(n.right);
        return {compose(PairSet(l.lo), PairSet(r.lo)).bits(), compose(PairSet(l.hi), PairSet(r.hi)).bits()};
      }
      case Op::Closure: {
        Bounds l = eval(n.left);
        return {closure_of(l.lo), closure_of(l.hi)};
      }
      case Op::Product: {
        Bounds l = eval(n.left), r = eval(n.right);
        return {PairSet::product(ElementSet(l.lo), ElementSet(r.lo)).bits(),
                PairSet::product(ElementSet(l.hi), ElementSet(r.hi)).bits()};
      }
    }
    throw std::logic_error("unhandled op");
  }

  Tri status(const Constraint& c) const {
    Tri t = Tri::Unknown;
    switch (c.form) {
      case Form::ConceptSub:
      case Form::RoleSub: {
        Bounds s = eval(c.left), p = eval(c.right);
        if ((s.hi & ~p.lo) == 0) t = Tri::True;
        else if ((s.lo & ~p.hi) != 0) t = Tri::False;
        break;
      }
      case Form::ConceptAssert: {
        Bounds e = eval(c.left);
        std::uint64_t a = state_[c.a].hi;
        if ((a & ~e.lo) == 0) t = Tri::True;
        else if ((a & e.hi) == 0) t = Tri::False;
        break;
      }
      case Form::RoleAssert: {
        Bounds r = eval(c.left);
        std::uint64_t a = state_[c.a].hi, b = state_[c.b].hi;
        bool all_in = true, none_possible = true;
        for (unsigned x = 0; x < size_; ++x) {
          if (((a >> x) & 1U) == 0) continue;
          if ((b & ~row_of(r.lo, x)) != 0) all_in = false;
          if ((b & row_of(r.hi, x)) != 0) none_possible = false;
        }
        if (all_in) t = Tri::True;
        else if (none_possible) t = Tri::False;
        break;
      }
    }
    if (c.negated && t != Tri::Unknown) t = t == Tri::True ? Tri::False : Tri::True;
    return t;
  }

  // ---- facet state

  bool assigned(std::uint32_t f) const {
    const FacetState& s = state_[f];
    return kinds_[f] == FacetKind::Individual ? std::has_single_bit(s.hi) : s.lo == s.hi;
  }

  std::size_t open_units(std::uint32_t f) const {
    const FacetState& s = state_[f];
    return static_cast<std::size_t>(std::popcount(kinds_[f] == FacetKind::Individual ? s.hi : (s.hi & ~s.lo)));
  }

  void set_state(std::uint32_t f, FacetState s) {
    trail_.emplace_back(f, state_[f]);
    state_[f] = s;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      state_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }

  // Index of a constraint among `ids` that is false under the current state, or -1.
  int first_false(const std::vector<int>& ids) const {
    for (int id : ids) {
      if (status(constraints_[id]) == Tri::False) return id;
    }
    return -1;
  }

  // ---- search

  Outcome fail(FacetSet conflict, std::size_t trail_mark, std::size_t forced_mark) {
    for (std::size_t i = forced_.size(); i > forced_mark; --i) {
      const Forced& fr = forced_[i - 1];
      if (conflict.test(fr.facet)) conflict |= fr.reason;
    }
    undo(trail_mark);
    forced_.resize(forced_mark);
    return {false, std::move(conflict)};
  }

  // Failed-literal probing over the open facets of `active`. Returns a
  // conflict if some facet has no value left.
  std::optional<FacetSet> propagate(const std::vector<int>& active) {
    std::map<std::uint32_t, std::vector<int>> by_facet;
    for (int id : active) {
      for (auto f : constraints_[id].facets) {
        if (!assigned(f)) by_facet[f].push_back(id);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [f, ids] : by_facet) {
        if (assigned(f)) continue;
        FacetState orig = state_[f];
        if (kinds_[f] == FacetKind::Individual) {
          std::uint64_t keep = orig.hi;
          FacetSet reason(kinds_.size());
          for (unsigned v = 0; v < size_; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if ((orig.hi & bit) == 0) continue;
            state_[f].hi = bit;
            int bad = first_false(ids);
            if (bad >= 0) {
              keep &= ~bit;
              reason |= constraints_[bad].facet_set;
            }
          }
          state_[f] = orig;
          if (keep == orig.hi) continue;
          if (keep == 0) return reason;
          set_state(f, {0, keep});
          forced_.push_back({f, std::move(reason)});
          changed = true;
        } else {
          std::uint64_t open = orig.hi & ~orig.lo;
          while (open != 0) {
            std::uint64_t bit = open & (~open + 1);
            open &= open - 1;
            FacetState cur = state_[f];
            if ((cur.hi & ~cur.lo & bit) == 0) continue;
            state_[f] = {cur.lo, cur.hi & ~bit};
            int bad0 = first_false(ids);
            state_[f] = {cur.lo | bit, cur.hi};
            int bad1 = first_false(ids);
            state_[f] = cur;
            if (bad0 < 0 && bad1 < 0) continue;
            if (bad0 >= 0 && bad1 >= 0) return constraints_[bad0].facet_set | constraints_[bad1].facet_set;
            if (bad0 >= 0) {
              set_state(f, {cur.lo | bit, cur.hi});
              forced_.push_back({f, constraints_[bad0].facet_set});
            } else {
              set_state(f, {cur.lo, cur.hi & ~bit});
              forced_.push_back({f, constraints_[bad1].facet_set});
            }
            changed = true;
          }
        }
      }
    }
    return std::nullopt;
  }

  // Splits `ids` into the constraints still open; a false one is returned as a conflict.
  std::optional<FacetSet> filter(std::vector<int>& ids) const {
    std::vector<int> open;
    for (int id : ids) {
      Tri t = status(constraints_[id]);
      if (t == Tri::False) return constraints_[id].facet_set;
      if (t == Tri::Unknown) open.push_back(id);
    }
    ids = std::move(open);
    return std::nullopt;
  }

  std::vector<std::vector<int>> components(const std::vector<int>& ids) const {
    std::vector<std::uint32_t> parent(kinds_.size());
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::int64_t> root_of(ids.size(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::int64_t first = -1;
      for (auto f : constraints_[ids[i]].facets) {
        if (assigned(f)) continue;
        if (first < 0) {
          first = f;
        } else {
          parent[find(f)] = find(static_cast<std::uint32_t>(first));
        }
      }
      root_of[i] = first;
    }
    std::map<std::uint32_t, std::size_t> slot;
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      // Open constraints always have an open facet.
      auto r = find(static_cast<std::uint32_t>(root_of[i]));
      auto [it, inserted] = slot.try_emplace(r, out.size());
      if (inserted) out.emplace_back();
      out[it->second].push_back(ids[i]);
    }
    return out;
  }

  std::uint32_t choose(const std::vector<int>& ids) const {
    std::map<std::uint32_t, std::size_t> occurrences;
    for (int id : ids) {
      for (auto f : constraints_[id].facets) {
        if (!assigned(f)) ++occurrences[f];
      }
    }
    std::uint32_t best = 0;
    std::size_t best_count = 0, best_units = 0;
    bool have = false;
    for (const auto& [f, count] : occurrences) {
      std::size_t units = open_units(f);
      if (!have || count > best_count || (count == best_count && units < best_units)) {
        best = f;
        best_count = count;
        best_units = units;
        have = true;
      }
    }
    return best;
  }

  Outcome solve(std::vector<int> ids) {
    if (++nodes_ > options_.budget) throw BoundTooLarge(options_.budget, size_);
    const std::size_t trail_mark = trail_.size();
    const std::size_t forced_mark = forced_.size();

    if (auto c = filter(ids)) return fail(std::move(*c), trail_mark, forced_mark);
    if (ids.empty()) return {true, {}};
    if (auto c = propagate(ids)) return fail(std::move(*c), trail_mark, forced_mark);
    if (auto c = filter(ids)) return fail(std::move(*c), trail_mark, forced_mark);
    if (ids.empty()) return {true, {}};

    auto parts = components(ids);
    if (parts.size() > 1) {
      for (auto& part : parts) {
        Outcome r = solve(std::move(part));
        if (!r.ok) return fail(std::move(r.conflict), trail_mark, forced_mark);
      }
      return {true, {}};
    }

    const std::uint32_t f = choose(ids);
    const FacetState cur = state_[f];
    std::vector<FacetState> choices;
    if (kinds_[f] == FacetKind::Individual) {
      for (unsigned v = 0; v < size_; ++v) {
        if ((cur.hi >> v) & 1U) choices.push_back({0, std::uint64_t{1} << v});
      }
    } else {
      std::uint64_t open = cur.hi & ~cur.lo;
      std::uint64_t bit = open & (~open + 1);
      choices.push_back({cur.lo, cur.hi & ~bit});
      choices.push_back({cur.lo | bit, cur.hi});
    }
    FacetSet acc(kinds_.size());
    for (const auto& choice : choices) {
      const std::size_t mark = trail_.size();
      set_state(f, choice);
      Outcome r = solve(ids);
      if (r.ok) return r;
      undo(mark);
      if (!r.conflict.test(f)) return fail(std::move(r.conflict), trail_mark, forced_mark);
      acc |= r.conflict;
    }
    return fail(std::move(acc), trail_mark, forced_mark);
  }

  std::size_t size_;
  SearchOptions options_;
  std::uint64_t& nodes_;
  std::uint64_t domain_ = 0;
  std::uint64_t role_domain_ = 0;
  std::uint64_t identity_ = 0;

  std::vector<FacetKind> kinds_;
  std::vector<std::string> labels_;
  std::vector<FacetState> state_;
  std::map<Term, std::uint32_t> individual_facet_;
  std::map<Term, std::uint32_t> concept_facet_;
  std::map<Term, std::uint32_t> role_facet_;
  std::map<std::string, std::uint32_t> top_ctx_facet_;

  std::vector<ExprNode> nodes_list_;
  std::vector<Constraint> constraints_;
  std::vector<std::pair<std::uint32_t, FacetState>> trail_;
  std::vector<Forced> forced_;
};

void check_size(std::size_t size) {
  if (size == 0) throw std::invalid_argument("domain size bound must be at least 1");
  if (size > kMaxDomainSize) {
    throw std::invalid_argument("domain size bound exceeds the maximum of " + std::to_string(kMaxDomainSize));
  }
}

std::set<std::string> ctx_ids_of(const std::vector<Axiom>& axioms) {
  std::set<std::string> out;
  for (const auto& ax : axioms) out.merge(top_ctx_ids(ax));
  return out;
}

std::optional<Interpretation> solve_at(const std::vector<Axiom>& axioms, const std::vector<Axiom>& negated,
                                       std::size_t size, const SearchOptions& options, std::uint64_t& nodes) {
  Search search(axioms, negated, size, options, nodes);
  if (!search.run()) return std::nullopt;
  return search.witness();
}

}  // namespace

std::string describe(const Verdict& verdict) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SatisfiableAt>) {
          return "satisfiable at " + std::to_string(v.size);
        } else if constexpr (std::is_same_v<T, NoModelUpTo>) {
          return "no model up to " + std::to_string(v.bound);
        } else if constexpr (std::is_same_v<T, NotEntailed>) {
          return "not entailed (countermodel of size " + std::to_string(v.countermodel.size()) + ")";
        } else {
          return "no counterexample up to " + std::to_string(v.bound);
        }
      },
      verdict);
}

std::uint64_t default_search_budget() {
  constexpr std::uint64_t kDefault = 1'000'000'000;
  const char* env = std::getenv("CTXDL_BUDGET");
  if (env == nullptr) return kDefault;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefault;
  return value;
}

std::optional<Interpretation> find_model_at(const Ontology& ontology, std::size_t size, const SearchOptions& options) {
  check_size(size);
  std::uint64_t nodes = 0;
  auto model = solve_at(ontology.axioms(), {}, size, options, nodes);
  if (model) {
    model->complete(ontology.signature());
    model->complete_top_ctx(ctx_ids_of(ontology.axioms()));
  }
  return model;
}

Verdict find_model(const Ontology& ontology, std::size_t max_size, const SearchOptions& options) {
  check_size(max_size);
  std::uint64_t nodes = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (auto model = solve_at(ontology.axioms(), {}, n, options, nodes)) {
      model->complete(ontology.signature());
      model->complete_top_ctx(ctx_ids_of(ontology.axioms()));
      return SatisfiableAt{std::move(*model), n};
    }
  }
  return NoModelUpTo{max_size};
}

Verdict check_entailment(const Ontology& premises, const Ontology& conclusion, std::size_t max_size,
                         const SearchOptions& options) {
  check_size(max_size);
  std::vector<Axiom> open;
  for (const auto& ax : conclusion.axioms()) {
    if (!premises.contains(ax)) open.push_back(ax);
  }
  Signature sig = premises.signature();
  sig.insert(conclusion.signature().begin(), conclusion.signature().end());
  std::set<std::string> ids = ctx_ids_of(premises.axioms());
  ids.merge(ctx_ids_of(conclusion.axioms()));

  std::uint64_t nodes = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const auto& beta : open) {
      if (auto model = solve_at(premises.axioms(), {beta}, n, options, nodes)) {
        model->complete(sig);
        model->complete_top_ctx(ids);
        return NotEntailed{std::move(*model)};
      }
    }
  }
  return NoCounterexampleUpTo{max_size};
}

}  // namespace ctxdl
