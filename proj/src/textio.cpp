#include "ctxdl/textio.hpp"

#include <charconv>
#include <initializer_list>
#include <optional>
#include <set>

#include "ctxdl/errors.hpp"

namespace ctxdl {

namespace {

enum class Tok : std::uint8_t { Word, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Span at;
};

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '#' ||
         c == '@';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (is_word_char(c)) {
      Span at{line, col};
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      out.push_back({Tok::Word, std::string(text.substr(i, j - i)), at});
      advance(j - i);
    } else if (std::string_view("(),.{}[]=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), {line, col}});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

const std::set<std::string> kConceptWords = {"top",    "bottom", "ctxtop",  "and",     "or",   "not",
                                             "exists", "forall", "atmost",  "atleast", "oneof"};
const std::set<std::string> kRoleWords = {"rand", "ror", "rnot", "inv", "comp", "closure", "product"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SourceDocument document() {
    SourceDocument doc;
    while (peek().kind != Tok::End) {
      if (at_word("ontology")) {
        doc.blocks.emplace_back(ontology_block());
      } else if (at_word("annotation")) {
        doc.blocks.emplace_back(annotation_block());
      } else if (at_word("model")) {
        doc.blocks.emplace_back(model_block());
      } else {
        fail({"'annotation'", "'model'", "'ontology'"});
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }
  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] void fail(std::initializer_list<std::string> expected) const {
    std::string list;
    for (const auto& e : std::set<std::string>(expected)) list += (list.empty() ? "" : ", ") + e;
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.at.line, t.at.column, "expected " + list + ", found " + found);
  }

  [[noreturn]] static void fail_at(Span at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail({std::string("'") + c + "'"});
    next();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail({"'" + std::string(w) + "'"});
    next();
  }

  // A non-reserved word.
  const Token& ident(const char* what) {
    if (peek().kind != Tok::Word || is_reserved_word(peek().text)) fail({what});
    return next();
  }

  Term term(const char* what = "a term") {
    const Token& t = ident(what);
    try {
      return Term::parse(t.text);
    } catch (const InvalidTerm& e) {
      fail_at(t.at, e.what());
    }
  }

  std::size_t nat() {
    if (peek().kind != Tok::Word) fail({"a number"});
    const Token& t = peek();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail({"a number"});
    next();
    return value;
  }

  std::string context_id() {
    const Token& t = peek();
    if (t.kind != Tok::Word || !is_valid_context_id(t.text)) fail({"a context id"});
    next();
    return t.text;
  }

  // ---- expressions

  ConceptExpr concept_expr() {
    if (peek().kind != Tok::Word) fail({"a concept"});
    const Token t = peek();
    if (!kConceptWords.contains(t.text)) {
      if (is_reserved_word(t.text)) fail({"a concept"});
      return ConceptExpr::atom(term("a concept"));
    }
    next();
    if (t.text == "top") return ConceptExpr::top();
    if (t.text == "bottom") return ConceptExpr::bottom();
    if (t.text == "ctxtop") {
      expect_punct('[');
      std::string id = context_id();
      expect_punct(']');
      return ConceptExpr::top_ctx(std::move(id));
    }
    expect_punct('(');
    ConceptExpr out = ConceptExpr::top();
    if (t.text == "and" || t.text == "or") {
      ConceptExpr l = concept_expr();
      expect_punct(',');
      ConceptExpr r = concept_expr();
      out = t.text == "and" ? ConceptExpr::intersection_of(l, r) : ConceptExpr::union_of(l, r);
    } else if (t.text == "not") {
      out = ConceptExpr::negation(concept_expr());
    } else if (t.text == "exists" || t.text == "forall") {
      RoleExpr r = role_expr();
      expect_punct(',');
      ConceptExpr c = concept_expr();
      out = t.text == "exists" ? ConceptExpr::exists(r, c) : ConceptExpr::forall(r, c);
    } else if (t.text == "atmost" || t.text == "atleast") {
      std::size_t n = nat();
      expect_punct(',');
      RoleExpr r = role_expr();
      expect_punct(',');
      ConceptExpr c = concept_expr();
      out = t.text == "atmost" ? ConceptExpr::at_most(n, r, c) : ConceptExpr::at_least(n, r, c);
    } else {
      std::vector<Term> members{term("an individual")};
      while (at_punct(',')) {
        next();
        Span at = peek().at;
        Term m = term("an individual");
        if (std::find(members.begin(), members.end(), m) != members.end()) {
          fail_at(at, "duplicate nominal member " + m.name());
        }
        members.push_back(std::move(m));
      }
      out = ConceptExpr::nominals(std::move(members));
    }
    expect_punct(')');
    return out;
  }

  RoleExpr role_expr() {
    if (peek().kind != Tok::Word) fail({"a role"});
    const Token t = peek();
    if (!kRoleWords.contains(t.text)) {
      if (is_reserved_word(t.text)) fail({"a role"});
      return RoleExpr::atom(term("a role"));
    }
    next();
    expect_punct('(');
    std::optional<RoleExpr> out;
    if (t.text == "rand" || t.text == "ror" || t.text == "comp") {
      RoleExpr l = role_expr();
      expect_punct(',');
      RoleExpr r = role_expr();
      out = t.text == "rand"  ? RoleExpr::intersection_of(l, r)
            : t.text == "ror" ? RoleExpr::union_of(l, r)
                              : RoleExpr::compose(l, r);
    } else if (t.text == "product") {
      ConceptExpr l = concept_expr();
      expect_punct(',');
      ConceptExpr r = concept_expr();
      out = RoleExpr::product(l, r);
    } else {
      RoleExpr inner = role_expr();
      out = t.text == "rnot" ? RoleExpr::negation(inner)
            : t.text == "inv" ? RoleExpr::inverse(inner)
                              : RoleExpr::closure(inner);
    }
    expect_punct(')');
    return *out;
  }

  Axiom concept_tail(const ConceptExpr& c) {
    if (at_word("sub")) {
      next();
      return ConceptInclusion{c, concept_expr()};
    }
    if (!at_punct('(')) fail({"'('", "'sub'"});
    next();
    Term a = term("an individual");
    expect_punct(')');
    return ConceptAssertion{c, a};
  }

  Axiom role_tail(const RoleExpr& r) {
    if (at_word("rsub")) {
      next();
      return RoleInclusion{r, role_expr()};
    }
    if (!at_punct('(')) fail({"'('", "'rsub'"});
    next();
    Term a = term("an individual");
    expect_punct(',');
    Term b = term("an individual");
    expect_punct(')');
    return RoleAssertion{r, a, b};
  }

  Axiom axiom() {
    if (peek().kind != Tok::Word) fail({"an axiom"});
    const std::string& w = peek().text;
    if (kConceptWords.contains(w)) return concept_tail(concept_expr());
    if (kRoleWords.contains(w)) return role_tail(role_expr());
    if (is_reserved_word(w)) fail({"an axiom"});
    Term t = term();
    if (at_word("sub")) return concept_tail(ConceptExpr::atom(t));
    if (at_word("rsub")) return role_tail(RoleExpr::atom(t));
    if (!at_punct('(')) fail({"'('", "'rsub'", "'sub'"});
    next();
    Term a = term("an individual");
    if (at_punct(')')) {
      next();
      return ConceptAssertion{ConceptExpr::atom(t), a};
    }
    if (!at_punct(',')) fail({"')'", "','"});
    next();
    Term b = term("an individual");
    expect_punct(')');
    return RoleAssertion{RoleExpr::atom(t), a, b};
  }

  // ---- blocks

  OntologyBlock ontology_block() {
    Span at = peek().at;
    next();
    std::string name = ident("a block name").text;
    expect_punct('{');
    OntologyBlock block{name, {}, at, {}};
    while (!at_punct('}')) {
      Span ax_at = peek().at;
      if (peek().kind == Tok::End) fail({"'}'", "an axiom"});
      Axiom ax = axiom();
      expect_punct('.');
      if (block.ontology.add(ax)) block.axiom_spans.push_back(ax_at);
    }
    next();
    return block;
  }

  AnnotationBlock annotation_block() {
    Span at = peek().at;
    next();
    std::string name = context_id();
    if (is_reserved_word(name)) fail_at(at, "reserved word used as annotation name");
    expect_word("anchor");
    Term anchor = term("an anchor term");
    expect_punct('{');
    AnnotationBlock block{name, anchor, {}, at, {}};
    while (!at_punct('}')) {
      Span ax_at = peek().at;
      if (peek().kind == Tok::End) fail({"'}'", "an assertion"});
      Axiom ax = axiom();
      if (!is_abox(ax)) fail_at(ax_at, "annotation blocks only hold assertions");
      expect_punct('.');
      block.abox.push_back(std::move(ax));
      block.axiom_spans.push_back(ax_at);
    }
    next();
    return block;
  }

  ModelBlock model_block() {
    Span at = peek().at;
    next();
    std::string name = ident("a block name").text;
    expect_punct('{');
    expect_word("domain");
    Span size_at = peek().at;
    std::size_t size = nat();
    expect_punct('.');
    std::optional<Interpretation> model;
    try {
      model.emplace(size);
    } catch (const InvalidInterpretation& e) {
      fail_at(size_at, e.what());
    }
    while (!at_punct('}')) {
      Span st_at = peek().at;
      try {
        if (at_word("indiv")) {
          next();
          Term t = term();
          expect_punct('=');
          model->set_individual(t, static_cast<Element>(nat()));
        } else if (at_word("conc")) {
          next();
          if (at_word("ctxtop")) {
            next();
            expect_punct('[');
            std::string id = context_id();
            expect_punct(']');
            expect_punct('=');
            model->set_top_ctx(id, element_set());
          } else {
            Term t = term();
            expect_punct('=');
            model->set_concept(t, element_set());
          }
        } else if (at_word("role")) {
          next();
          Term t = term();
          expect_punct('=');
          model->set_role(t, pair_set());
        } else {
          fail({"'conc'", "'indiv'", "'role'", "'}'"});
        }
      } catch (const InvalidInterpretation& e) {
        fail_at(st_at, e.what());
      }
      expect_punct('.');
    }
    next();
    return ModelBlock{name, std::move(*model), at};
  }

  Element element() {
    std::size_t v = nat();
    if (v >= kMaxDomainSize) throw InvalidInterpretation("element " + std::to_string(v) + " is out of range");
    return static_cast<Element>(v);
  }

  ElementSet element_set() {
    expect_punct('{');
    ElementSet out;
    if (!at_punct('}')) {
      out.insert(element());
      while (at_punct(',')) {
        next();
        out.insert(element());
      }
    }
    expect_punct('}');
    return out;
  }

  PairSet pair_set() {
    expect_punct('{');
    PairSet out;
    auto pair = [&] {
      expect_punct('(');
      Element x = element();
      expect_punct(',');
      Element y = element();
      expect_punct(')');
      out.insert(x, y);
    };
    if (!at_punct('}')) {
      pair();
      while (at_punct(',')) {
        next();
        pair();
      }
    }
    expect_punct('}');
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string set_text(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    out += (first ? "" : ", ") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string pairs_text(PairSet p) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : p.pairs()) {
    out += (first ? "(" : ", (") + std::to_string(x) + ", " + std::to_string(y) + ")";
    first = false;
  }
  return out + "}";
}

std::string block_text(const Block& block) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, OntologyBlock>) {
          return serialize(b.ontology, b.name);
        } else if constexpr (std::is_same_v<T, AnnotationBlock>) {
          return serialize_annotation(b.name, b.anchor, b.abox);
        } else {
          return serialize(b.model, b.name);
        }
      },
      block);
}

}  // namespace

ContextualAnnotation AnnotationBlock::to_annotation(bool extended) const {
  AnnotationOptions opts;
  opts.ctx_id = name;
  opts.extended = extended;
  return validate_annotation(anchor, abox, opts);
}

std::vector<const OntologyBlock*> SourceDocument::ontologies() const {
  std::vector<const OntologyBlock*> out;
  for (const auto& b : blocks) {
    if (const auto* o = std::get_if<OntologyBlock>(&b)) out.push_back(o);
  }
  return out;
}

std::vector<const AnnotationBlock*> SourceDocument::annotations() const {
  std::vector<const AnnotationBlock*> out;
  for (const auto& b : blocks) {
    if (const auto* a = std::get_if<AnnotationBlock>(&b)) out.push_back(a);
  }
  return out;
}

std::vector<const ModelBlock*> SourceDocument::models() const {
  std::vector<const ModelBlock*> out;
  for (const auto& b : blocks) {
    if (const auto* m = std::get_if<ModelBlock>(&b)) out.push_back(m);
  }
  return out;
}

bool same_content(const SourceDocument& a, const SourceDocument& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const Block& x = a.blocks[i];
    const Block& y = b.blocks[i];
    if (x.index() != y.index()) return false;
    bool same = std::visit(
        [&y](const auto& bx) {
          using T = std::decay_t<decltype(bx)>;
          const auto& by = std::get<T>(y);
          if constexpr (std::is_same_v<T, OntologyBlock>) {
            return bx.name == by.name && bx.ontology == by.ontology;
          } else if constexpr (std::is_same_v<T, AnnotationBlock>) {
            return bx.name == by.name && bx.anchor == by.anchor && bx.abox == by.abox;
          } else {
            return bx.name == by.name && bx.model == by.model;
          }
        },
        x);
    if (!same) return false;
  }
  return true;
}

SourceDocument parse_document(std::string_view text) { return Parser(text).document(); }

std::string serialize(const SourceDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    if (i > 0) out += "\n";
    out += block_text(doc.blocks[i]);
  }
  return out;
}

std::string serialize(const Ontology& ontology, const std::string& name) {
  std::string out = "ontology " + name + " {\n";
  for (const auto& ax : ontology.axioms()) out += "  " + to_text(ax) + " .\n";
  return out + "}\n";
}

std::string serialize_annotation(const std::string& name, const Term& anchor, const std::vector<Axiom>& abox) {
  std::string out = "annotation " + name + " anchor " + anchor.name() + " {\n";
  for (const auto& ax : abox) out += "  " + to_text(ax) + " .\n";
  return out + "}\n";
}

std::string serialize(const Interpretation& model, const std::string& name) {
  std::string out = "model " + name + " {\n  domain " + std::to_string(model.size()) + " .\n";
  for (const auto& [t, e] : model.individuals()) out += "  indiv " + t.name() + " = " + std::to_string(e) + " .\n";
  for (const auto& [t, s] : model.concepts()) out += "  conc " + t.name() + " = " + set_text(s) + " .\n";
  for (const auto& [id, s] : model.top_ctxs()) out += "  conc ctxtop[" + id + "] = " + set_text(s) + " .\n";
  for (const auto& [t, r] : model.roles()) out += "  role " + t.name() + " = " + pairs_text(r) + " .\n";
  return out + "}\n";
}

}  // namespace ctxdl
