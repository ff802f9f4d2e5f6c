#include "eo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <set>
#include <sstream>

#include "eo/errors.hpp"
#include "eo/manchester.hpp"
#include "eo/ontology.hpp"
#include "eo/query.hpp"
#include "eo/recommender.hpp"
#include "eo/turtle.hpp"
#include "eo/vocab.hpp"

namespace eo::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string curie(const Iri& iri, const PrefixMap& prefixes) {
    if (auto c = prefixes.compress(iri))
        return *c;
    return "<" + iri.value + ">";
}

std::string term_text(const Term& term, const PrefixMap& prefixes) {
    return render_term(term, prefixes, nullptr);
}

std::string joined_iris(const std::set<Iri>& iris, const PrefixMap& prefixes) {
    std::vector<std::string> rendered;
    for (const Iri& iri : iris)
        rendered.push_back(curie(iri, prefixes));
    std::sort(rendered.begin(), rendered.end());
    std::string out;
    for (const std::string& r : rendered) {
        if (!out.empty())
            out += ", ";
        out += r;
    }
    return out;
}

const ExplanationTypeSpec& type_from_token_or_fail(const std::string& token) {
    const ExplanationTypeSpec* spec = find_type_by_token(token);
    if (spec == nullptr)
        throw UnknownExplanationTypeError(token);
    return *spec;
}

struct Options {
    std::string format = "table";
    std::string seed_overlay;

    bool structured() const { return format == "structured"; }
};

SeedKnowledgeBase load_seed(const Options& opts, const Ontology& ont) {
    SeedKnowledgeBase kb = seed_kb();
    if (!opts.seed_overlay.empty()) {
        TurtleDocument doc = parse_turtle(read_input(opts.seed_overlay));
        apply_seed_overlay(kb, ont, doc.graph);
    }
    return kb;
}

int cmd_validate(const std::string& path, const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    TurtleDocument doc = parse_turtle(read_input(path));
    Diagnostics diags = validate_graph(ont, doc.graph);

    if (opts.structured()) {
        out << "diagnostics: " << diags.size() << "\n";
        for (const Diagnostic& d : diags) {
            out << "diagnostic:\n";
            out << "  severity: "
                << (d.severity == Diagnostic::Severity::Error ? "error" : "warning") << "\n";
            out << "  code: " << d.code << "\n";
            out << "  message: " << d.message << "\n";
            if (!d.terms.empty()) {
                out << "  terms: ";
                for (std::size_t i = 0; i < d.terms.size(); ++i)
                    out << (i ? ", " : "") << term_text(d.terms[i], ont.prefixes());
                out << "\n";
            }
        }
    } else {
        if (diags.empty())
            out << "ok: no diagnostics\n";
        for (const Diagnostic& d : diags) {
            out << (d.severity == Diagnostic::Severity::Error ? "error" : "warning") << " "
                << d.code << ": " << d.message;
            if (!d.terms.empty()) {
                out << " [";
                for (std::size_t i = 0; i < d.terms.size(); ++i)
                    out << (i ? ", " : "") << term_text(d.terms[i], ont.prefixes());
                out << "]";
            }
            out << "\n";
        }
    }
    return has_errors(diags) ? kExitValidationErrors : kExitOk;
}

Graph strip_asserted_explanation_types(const Graph& graph) {
    std::set<Iri> explanation_classes{vocab::ep("Explanation")};
    for (const ExplanationTypeSpec& spec : explanation_type_specs())
        explanation_classes.insert(spec.class_iri);

    GraphBuilder builder;
    for (const Triple& t : graph.triples()) {
        if (t.predicate == vocab::rdf_type() && is_iri(t.object) &&
            explanation_classes.count(as_iri(t.object)))
            continue;
        builder.insert(t);
    }
    return builder.seal();
}

int cmd_classify(const std::string& path, bool derive_only, bool explain, const Options& opts,
                 std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    TurtleDocument doc = parse_turtle(read_input(path));
    Graph graph = derive_only ? strip_asserted_explanation_types(doc.graph) : doc.graph;

    Reasoner reasoner(ont, graph);
    auto classification = reasoner.classify_explanations();

    for (const auto& [node, types] : classification) {
        std::vector<std::string> tokens;
        for (const Iri& type : types)
            tokens.push_back(find_type_by_iri(type)->token);
        std::sort(tokens.begin(), tokens.end());

        if (opts.structured()) {
            out << "node: " << term_text(node, ont.prefixes()) << "\n";
            for (const std::string& token : tokens)
                out << "  type: " << token << "\n";
        } else {
            out << term_text(node, ont.prefixes()) << ": ";
            for (std::size_t i = 0; i < tokens.size(); ++i)
                out << (i ? ", " : "") << tokens[i];
            out << "\n";
        }
        if (explain) {
            for (const Iri& type : types) {
                MembershipReport report =
                    reasoner.check_membership(node, sufficiency_condition(ont, type));
                out << (opts.structured() ? "  check:\n" : "check:\n");
                int indent = opts.structured() ? 2 : 1;
                std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
                out << pad << "type: " << find_type_by_iri(type)->token << "\n";
                out << pad << "satisfied: " << (report.satisfied ? "true" : "false") << "\n";
                write_trace(out, report.trace, ont.prefixes(), indent);
            }
        }
    }
    return kExitOk;
}

int cmd_check(const std::string& data_path, const std::string& node_curie,
              const std::string& expr_path, const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    TurtleDocument doc = parse_turtle(read_input(data_path));
    ExprPtr expr = parse_manchester(read_input(expr_path), ont.prefixes());
    Term node = ont.prefixes().expand(node_curie);

    Reasoner reasoner(ont, doc.graph);
    MembershipReport report = reasoner.check_membership(node, expr);

    out << "node: " << term_text(report.node, ont.prefixes()) << "\n";
    out << "satisfied: " << (report.satisfied ? "true" : "false") << "\n";
    out << "trace:\n";
    write_trace(out, report.trace, ont.prefixes(), 1);
    return kExitOk;
}

int cmd_sufficiency(const std::string& token, const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    const ExplanationTypeSpec& spec = type_from_token_or_fail(token);
    std::string text = serialize_manchester(*spec.condition, ont.prefixes());
    if (opts.structured()) {
        out << "type: " << spec.token << "\n";
        out << "condition: " << text << "\n";
    } else {
        out << text << "\n";
    }
    return kExitOk;
}

int cmd_methods(const std::string& token, const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    const ExplanationTypeSpec& spec = type_from_token_or_fail(token);
    SeedKnowledgeBase kb = load_seed(opts, ont);
    std::vector<GenerationEntry> entries = methods_for_type(kb, spec.class_iri);
    std::sort(entries.begin(), entries.end());

    auto label_of = [&](const Iri& iri) {
        if (auto label = ont.label(iri))
            return *label;
        return iri.value;
    };

    if (opts.structured()) {
        out << "type: " << spec.token << "\n";
        for (const GenerationEntry& entry : entries) {
            out << "generator:\n";
            out << "  method: " << curie(entry.method, ont.prefixes()) << "\n";
            out << "  label: " << label_of(entry.method) << "\n";
            if (entry.task)
                out << "  task: " << curie(*entry.task, ont.prefixes()) << "\n";
        }
    } else {
        if (entries.empty())
            out << "no known generators\n";
        for (const GenerationEntry& entry : entries)
            out << label_of(entry.method) << "\n";
    }
    return kExitOk;
}

int cmd_questions(const std::string& token, const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    const ExplanationTypeSpec& spec = type_from_token_or_fail(token);
    SeedKnowledgeBase kb = load_seed(opts, ont);
    std::vector<std::string> questions = example_questions(kb, spec.class_iri);

    if (opts.structured()) {
        out << "type: " << spec.token << "\n";
        for (const std::string& q : questions)
            out << "question: " << q << "\n";
    } else {
        for (const std::string& q : questions)
            out << q << "\n";
    }
    return kExitOk;
}

int cmd_recommend(const std::string& profile_path, const std::string& question_path,
                  const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    SeedKnowledgeBase kb = load_seed(opts, ont);
    CapabilityProfile profile = parse_profile(read_input(profile_path), ont);

    if (!question_path.empty()) {
        QuestionDescriptor question = parse_question(read_input(question_path));
        QuestionPlan plan = plan_for_question(ont, kb, profile, question);
        out << "intent: " << intent_token(question.intent) << "\n";
        out << "type: " << plan.token << "\n";
        out << "satisfiable: " << (plan.satisfiable ? "true" : "false") << "\n";
        if (!plan.missing.empty())
            out << "missing: " << joined_iris(plan.missing, ont.prefixes()) << "\n";
        if (plan.plan)
            out << "plan: " << render_plan(ont, *plan.plan) << "\n";
        return kExitOk;
    }

    RecommendationReport report = applicable_types(ont, kb, profile);
    if (opts.structured()) {
        for (const TypeRecommendation& entry : report.entries) {
            out << "type: " << entry.token << "\n";
            out << "  satisfiable: " << (entry.satisfiable ? "true" : "false") << "\n";
            if (!entry.missing.empty())
                out << "  missing: " << joined_iris(entry.missing, ont.prefixes()) << "\n";
            if (entry.plan)
                out << "  plan: " << render_plan(ont, *entry.plan) << "\n";
        }
    } else {
        std::size_t rank = 1;
        for (const TypeRecommendation& entry : report.entries) {
            out << rank++ << ". " << entry.token
                << (entry.satisfiable ? " (satisfiable)" : " (not satisfiable)");
            if (!entry.missing.empty())
                out << " missing: " << joined_iris(entry.missing, ont.prefixes());
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_query(const std::string& query_path, const std::vector<std::string>& data_paths,
              const Options& opts, std::ostream& out) {
    const Ontology& ont = builtin_ontology();
    Query query = parse_query(read_input(query_path));

    std::vector<Graph> graphs;
    for (const std::string& path : data_paths)
        graphs.push_back(parse_turtle(read_input(path)).graph);
    Graph data = graphs.empty() ? Graph{} : merge_graphs(graphs);

    BindingSet bindings = execute(ont, data, query);
    if (opts.structured()) {
        for (const auto& row : bindings.rendered) {
            out << "row:\n";
            for (std::size_t i = 0; i < bindings.variables.size(); ++i)
                out << "  " << bindings.variables[i] << ": " << row[i] << "\n";
        }
    } else {
        for (std::size_t i = 0; i < bindings.variables.size(); ++i)
            out << (i ? "\t" : "") << "?" << bindings.variables[i];
        out << "\n";
        for (const auto& row : bindings.rendered) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "\t" : "") << row[i];
            out << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

void write_trace(std::ostream& out, const TraceNode& trace, const PrefixMap& prefixes,
                 int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << "expression: " << serialize_manchester(*trace.expression, prefixes) << "\n";
    out << pad << "verdict: " << (trace.satisfied ? "satisfied" : "unsatisfied") << "\n";
    if (!trace.witnesses.empty()) {
        out << pad << "witnesses: ";
        for (std::size_t i = 0; i < trace.witnesses.size(); ++i)
            out << (i ? ", " : "") << render_term(trace.witnesses[i], prefixes, nullptr);
        out << "\n";
    }
    if (!trace.note.empty())
        out << pad << "note: " << trace.note << "\n";

    bool restriction = trace.expression->kind() == ClassExpression::Kind::Some ||
                       trace.expression->kind() == ClassExpression::Kind::AtLeast;
    for (std::size_t i = 0; i < trace.children.size(); ++i) {
        if (restriction) {
            out << pad << "candidate: "
                << render_term(trace.candidates[i], prefixes, nullptr) << "\n";
            write_trace(out, trace.children[i], prefixes, indent + 1);
        } else {
            out << pad << "child:\n";
            write_trace(out, trace.children[i], prefixes, indent + 1);
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explanation ontology toolkit"};
    app.name("eoctl");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
    app.add_option("--seed-overlay", opts.seed_overlay,
                   "Turtle overlay with extra generators/questions/context rules");

    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "Check a data file against the schema");
    validate->add_option("file", validate_file, "Turtle file ('-' for stdin)")->required();

    std::string classify_file;
    bool derive_only = false;
    bool explain = false;
    auto* classify = app.add_subcommand("classify", "Derive explanation types for instances");
    classify->add_option("file", classify_file, "Turtle file ('-' for stdin)")->required();
    classify->add_flag("--derive-only", derive_only,
                       "Strip asserted explanation types before classifying");
    classify->add_flag("--explain", explain, "Print membership traces");

    std::string check_data;
    std::string check_node;
    std::string check_expr;
    auto* check = app.add_subcommand("check", "Check one node against a class expression");
    check->add_option("file", check_data, "Turtle file ('-' for stdin)")->required();
    check->add_option("--node", check_node, "Node CURIE to check")->required();
    check->add_option("--expr", check_expr, "Expression file (.mos)")->required();

    std::string sufficiency_type;
    auto* sufficiency = app.add_subcommand("sufficiency", "Print a type's sufficiency condition");
    sufficiency->add_option("type", sufficiency_type, "Explanation type token")->required();

    std::string methods_type;
    auto* methods = app.add_subcommand("methods", "List known generators for a type");
    methods->add_option("type", methods_type, "Explanation type token")->required();

    std::string questions_type;
    auto* questions = app.add_subcommand("questions", "List example questions for a type");
    questions->add_option("type", questions_type, "Explanation type token")->required();

    std::string profile_path;
    std::string question_path;
    auto* recommend = app.add_subcommand("recommend", "Recommend explanation types");
    recommend->add_option("--profile", profile_path, "Capability profile file")->required();
    recommend->add_option("--question", question_path, "Question descriptor file");

    std::string query_path;
    std::vector<std::string> data_paths;
    auto* query = app.add_subcommand("query", "Run a graph-pattern query");
    query->add_option("query", query_path, "Query file ('-' for stdin)")->required();
    query->add_option("data", data_paths, "Turtle data files");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*validate)
            return cmd_validate(validate_file, opts, out);
        if (*classify)
            return cmd_classify(classify_file, derive_only, explain, opts, out);
        if (*check)
            return cmd_check(check_data, check_node, check_expr, opts, out);
        if (*sufficiency)
            return cmd_sufficiency(sufficiency_type, opts, out);
        if (*methods)
            return cmd_methods(methods_type, opts, out);
        if (*questions)
            return cmd_questions(questions_type, opts, out);
        if (*recommend)
            return cmd_recommend(profile_path, question_path, opts, out);
        if (*query)
            return cmd_query(query_path, data_paths, opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: no subcommand\n";
    return kExitInputError;
}

}  // namespace eo::cli
