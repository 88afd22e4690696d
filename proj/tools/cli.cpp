#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctxdl/errors.hpp"
#include "ctxdl/search.hpp"
#include "ctxdl/strategies.hpp"
#include "ctxdl/textio.hpp"
#include "ctxdl/verify.hpp"

namespace ctxdl::cli {

namespace {

namespace fs = std::filesystem;

// Input problems that map to the usage exit status.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

SourceDocument load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

// All ontology blocks of a file, merged in order.
Ontology load_ontology(const std::string& path) {
  SourceDocument doc = load(path);
  auto blocks = doc.ontologies();
  if (blocks.empty()) throw InputError(path + ": no ontology block");
  Ontology out;
  for (const auto* b : blocks) out.add_all(b->ontology);
  return out;
}

ContextualAnnotation load_annotation(const std::string& path) {
  SourceDocument doc = load(path);
  auto blocks = doc.annotations();
  if (blocks.empty()) throw InputError(path + ": no annotation block");
  try {
    return blocks.front()->to_annotation();
  } catch (const ValidationError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_warnings(const std::vector<Warning>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w.message << "\n";
}

void emit_ontology(const Ontology& ontology, const std::string& name, const std::string& out_path,
                   std::ostream& out) {
  std::string text = serialize(ontology, name);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "wrote " << ontology.size() << " axioms to " << out_path << "\n";
  }
}

std::string witness_path_for(const std::string& report_path) {
  fs::path p(report_path);
  p.replace_extension(".witness.model");
  return p.string();
}

struct Flags {
  std::string strategy = "ndterms";
  std::string property;
  std::string ontology;
  std::string annotation;
  std::string premise;
  std::string conclusion;
  std::string output;
  std::string witness;
  std::string report;
  std::vector<std::string> pairs;
  std::size_t bound = 3;
};

Strategy strategy_of(const Flags& f) {
  auto s = parse_strategy(f.strategy);
  if (!s) throw InputError("unknown strategy " + f.strategy);
  return *s;
}

int cmd_contextualize(const Flags& f, std::ostream& out, std::ostream& err) {
  Strategy s = strategy_of(f);
  Contextualized result = contextualize(s, AnnotatedOntology{load_ontology(f.ontology), load_annotation(f.annotation)});
  print_warnings(result.warnings, err);
  emit_ontology(result.ontology, std::string(to_string(s)), f.output, out);
  return kOk;
}

int cmd_models(const Flags& f, std::ostream& out) {
  Ontology o = load_ontology(f.ontology);
  Verdict v = find_model(o, f.bound);
  out << describe(v) << "\n";
  if (const auto* m = std::get_if<SatisfiableAt>(&v)) {
    if (!f.witness.empty()) write_file(f.witness, serialize(m->model, "witness"));
    return kOk;
  }
  return kNegative;
}

int cmd_entails(const Flags& f, std::ostream& out) {
  Verdict v = check_entailment(load_ontology(f.premise), load_ontology(f.conclusion), f.bound);
  out << describe(v) << "\n";
  if (const auto* n = std::get_if<NotEntailed>(&v)) {
    if (!f.witness.empty()) write_file(f.witness, serialize(n->countermodel, "countermodel"));
    return kNegative;
  }
  return kOk;
}

int cmd_check(const Flags& f, std::ostream& out) {
  auto property = parse_property(f.property);
  if (!property) throw InputError("unknown property " + f.property);
  Strategy s = strategy_of(f);
  Ontology o = load_ontology(f.ontology);
  ContextualAnnotation ca = load_annotation(f.annotation);

  PropertyReport report = [&] {
    switch (*property) {
      case Property::Soundness: return check_soundness(s, o, ca, f.bound);
      case Property::InconsistencyPreservation: return check_inconsistency_preservation(s, o, ca, f.bound);
      default:
        if (f.conclusion.empty()) throw InputError("the entailment property needs -C");
        return check_entailment_preservation(s, o, load_ontology(f.conclusion), ca, f.bound);
    }
  }();

  out << to_string(report.property) << " under " << to_string(s) << ": " << to_string(report.outcome)
      << " at bound " << report.bound << "\n";
  for (const auto& v : report.premise_verdicts) out << "  premise: " << describe(v) << "\n";
  if (report.conclusion_verdict) out << "  output: " << describe(*report.conclusion_verdict) << "\n";

  if (!f.report.empty()) {
    nlohmann::json record;
    record["property"] = std::string(to_string(report.property));
    record["strategy"] = std::string(to_string(s));
    record["outcome"] = std::string(to_string(report.outcome));
    record["bound"] = report.bound;
    record["ontology"] = f.ontology;
    record["annotation"] = f.annotation;
    record["premises"] = nlohmann::json::array();
    for (const auto& v : report.premise_verdicts) record["premises"].push_back(describe(v));
    record["output"] = report.conclusion_verdict ? nlohmann::json(describe(*report.conclusion_verdict)) : nullptr;
    record["witness"] = nullptr;
    auto witnesses = report.witnesses();
    if (!witnesses.empty()) {
      std::string text;
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i > 0) text += "\n";
        text += serialize(witnesses[i], "w" + std::to_string(i));
      }
      std::string path = witness_path_for(f.report);
      write_file(path, text);
      record["witness"] = path;
    }
    std::ofstream rep(f.report, std::ios::app);
    if (!rep) throw InputError("cannot write " + f.report);
    rep << record.dump() << "\n";
  }
  return report.outcome == PropertyOutcome::Violated ? kNegative : kOk;
}

int cmd_combine(const Flags& f, std::ostream& out, std::ostream& err) {
  Strategy s = strategy_of(f);
  std::vector<AnnotatedOntology> inputs;
  for (const auto& pair : f.pairs) {
    auto comma = pair.find(',');
    if (comma == std::string::npos) throw InputError("--pair expects ONTOLOGY,ANNOTATION, got " + pair);
    inputs.push_back({load_ontology(pair.substr(0, comma)), load_annotation(pair.substr(comma + 1))});
  }
  Contextualized result = combine_contexts(inputs, s);
  print_warnings(result.warnings, err);
  emit_ontology(result.ontology, "combined", f.output, out);
  return kOk;
}

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  SourceDocument doc = load(f.annotation);
  auto blocks = doc.annotations();
  if (blocks.empty()) throw InputError(f.annotation + ": no annotation block");
  int status = kOk;
  for (const auto* b : blocks) {
    try {
      ContextualAnnotation ca = b->to_annotation();
      out << "annotation " << b->name << ": valid, anchor " << ca.anchor.name() << ", sigma {";
      bool first = true;
      for (const auto& t : ca.sigma) {
        out << (first ? "" : ", ") << t.name();
        first = false;
      }
      out << "}\n";
    } catch (const ValidationError& e) {
      err << "annotation " << b->name << " (line " << b->span.line << "): " << e.what() << "\n";
      status = kNegative;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contextualization of annotated description-logic ontologies", "ctxdl"};
  app.require_subcommand(1);
  Flags f;
  const auto strategies = std::vector<std::string>{"ndterms", "ndfluents", "rdf", "nary", "nary-concept", "singleton"};
  auto add_bound = [&f](CLI::App* sub) {
    sub->add_option("--bound", f.bound, "Largest domain size searched")->check(CLI::Range(1, 6))->capture_default_str();
  };

  auto* ctx = app.add_subcommand("contextualize", "Contextualize an annotated ontology");
  ctx->add_option("--strategy", f.strategy)->required()->check(CLI::IsMember(strategies));
  ctx->add_option("-O,--ontology", f.ontology)->required();
  ctx->add_option("-A,--annotation", f.annotation)->required();
  ctx->add_option("-o,--output", f.output);

  auto* models = app.add_subcommand("models", "Search for a model");
  models->add_option("-O,--ontology", f.ontology)->required();
  models->add_option("--witness", f.witness, "Write the model found here");
  add_bound(models);

  auto* entails = app.add_subcommand("entails", "Search for a countermodel to an entailment");
  entails->add_option("-P,--premise", f.premise)->required();
  entails->add_option("-C,--conclusion", f.conclusion)->required();
  entails->add_option("--witness", f.witness, "Write the countermodel found here");
  add_bound(entails);

  auto* check = app.add_subcommand("check", "Check a property of a strategy on one input");
  check->add_option("--property", f.property)->required()->check(CLI::IsMember({"soundness", "inconsistency", "entailment"}));
  check->add_option("--strategy", f.strategy)->required()->check(CLI::IsMember(strategies));
  check->add_option("-O,--ontology", f.ontology)->required();
  check->add_option("-A,--annotation", f.annotation)->required();
  check->add_option("-C,--conclusion", f.conclusion);
  check->add_option("--report", f.report, "Append a JSON record here");
  add_bound(check);

  auto* combine = app.add_subcommand("combine", "Contextualize several annotated ontologies together");
  combine->add_option("--strategy", f.strategy)->required()->check(CLI::IsMember(strategies));
  combine->add_option("--pair", f.pairs, "ONTOLOGY,ANNOTATION")->required()->allow_extra_args(false);
  combine->add_option("-o,--output", f.output);

  auto* validate = app.add_subcommand("validate", "Validate the annotations of a file");
  validate->add_option("-A,--annotation", f.annotation)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (ctx->parsed()) return cmd_contextualize(f, out, err);
    if (models->parsed()) return cmd_models(f, out);
    if (entails->parsed()) return cmd_entails(f, out);
    if (check->parsed()) return cmd_check(f, out);
    if (combine->parsed()) return cmd_combine(f, out, err);
    if (validate->parsed()) return cmd_validate(f, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundTooLarge& e) {
    err << "error: " << e.what() << "; lower --bound or raise CTXDL_BUDGET\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ctxdl::cli
