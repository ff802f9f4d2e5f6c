#include <doctest.h>

#include <sstream>

#include "eo/cli.hpp"
#include "eo/manchester.hpp"
#include "eo/ontology.hpp"
#include "eo/vocab.hpp"
#include "support/fixtures.hpp"

using namespace eo;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sufficiency prints the condition text") {
    auto result = run_cli({"sufficiency", "scientific"});
    CHECK(result.exit_code == cli::kExitOk);
    const Ontology& ont = builtin_ontology();
    std::string expected = serialize_manchester(
        *sufficiency_condition(ont, vocab::eo("ScientificExplanation")), ont.prefixes());
    CHECK(result.out == expected + "\n");

    auto structured = run_cli({"--format", "structured", "sufficiency", "scientific"});
    CHECK(structured.out.rfind("type: scientific\ncondition: ", 0) == 0);
}

TEST_CASE("methods lists the known generators by label") {
    auto result = run_cli({"methods", "trace-based"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out == "Machine learning model: decision trees\nKnowledge-based systems\n");

    auto none = run_cli({"methods", "everyday"});
    CHECK(none.exit_code == cli::kExitOk);
    CHECK(none.out == "no known generators\n");
}

TEST_CASE("questions lists seed questions then the prototypical one") {
    auto result = run_cli({"questions", "counterfactual"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out ==
          "What other factors about the patient does the system know of?\n"
          "What if the major problem was a fasting plasma glucose?\n"
          "What if input A was over 1000?\n");
}

TEST_CASE("classify derives the contrastive type from the stripped fixture") {
    auto result = run_cli({"classify", tests::fixture_path("contrastive_example.ttl"),
                           "--derive-only"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out == ":ContrastiveExpInstance: contrastive\n");

    auto structured = run_cli({"--format", "structured", "classify",
                               tests::fixture_path("contrastive_example.ttl")});
    CHECK(structured.out == "node: :ContrastiveExpInstance\n  type: contrastive\n");
}

TEST_CASE("classify --explain exposes the witnesses") {
    auto result = run_cli({"classify", tests::fixture_path("contrastive_example.ttl"),
                           "--derive-only", "--explain"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out.find("witnesses: :GuidelineEvidence") != std::string::npos);
    CHECK(result.out.find("witnesses: :ContextualKnowledgePatient") != std::string::npos);
}

TEST_CASE("check evaluates an expression file against one node") {
    auto satisfied = run_cli({"check", tests::fixture_path("contrastive_example.ttl"),
                              "--node", ":ContrastiveExpInstance", "--expr",
                              tests::fixture_path("contrastive_condition.mos")});
    CHECK(satisfied.exit_code == cli::kExitOk);
    CHECK(satisfied.out.rfind("node: :ContrastiveExpInstance\nsatisfied: true\n", 0) == 0);
    CHECK(satisfied.out.find("witnesses: :SystemRecExampleB") != std::string::npos);

    std::string statistical = tests::write_temp_file(
        "statistical.mos",
        "ep:isBasedOn some (eo:SystemRecommendation and prov:used some "
        "eo:NumericalEvidence)\n");
    auto unsatisfied = run_cli({"check", tests::fixture_path("contrastive_example.ttl"),
                                "--node", ":ContrastiveExpInstance", "--expr", statistical});
    CHECK(unsatisfied.exit_code == cli::kExitOk);
    CHECK(unsatisfied.out.find("satisfied: false") != std::string::npos);
}

TEST_CASE("validate accepts the fixture and reports its warnings") {
    auto result = run_cli({"validate", tests::fixture_path("contrastive_example.ttl")});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out.find("incomplete-explanation") != std::string::npos);
    CHECK(result.out.find("error") == std::string::npos);
}

TEST_CASE("validate flags fact/foil co-typing with exit 1") {
    std::string path = tests::write_temp_file("cotyped.ttl",
                                              ":evidence a eo:Fact, eo:Foil .\n");
    auto result = run_cli({"validate", path});
    CHECK(result.exit_code == cli::kExitValidationErrors);
    CHECK(result.out.find("disjointness-violation") != std::string::npos);
}

TEST_CASE("recommend ranks contrastive first for the ranking profile") {
    auto result = run_cli({"recommend", "--profile", tests::fixture_path("profile_q4.txt")});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out.rfind("1. contrastive (satisfiable)", 0) == 0);

    auto structured = run_cli({"--format", "structured", "recommend", "--profile",
                               tests::fixture_path("profile_q4.txt")});
    CHECK(structured.out.rfind("type: contrastive\n  satisfiable: true\n", 0) == 0);
}

TEST_CASE("recommend with a question prints the plan") {
    auto result = run_cli({"recommend", "--profile", tests::fixture_path("profile_q5.txt"),
                           "--question", tests::fixture_path("question_q5.txt")});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out ==
          "intent: what-percentage\n"
          "type: statistical\n"
          "satisfiable: true\n"
          "plan: run 'Inductive' AI task with 'Clustering' method to generate numerical "
          "evidence\n");
}

TEST_CASE("query subcommand renders the binding table") {
    auto result = run_cli({"query", tests::fixture_path("scientific_restriction.rq")});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out.rfind("?class\t?restriction\n", 0) == 0);
    CHECK(result.out.find("eo:ScientificExplanation") != std::string::npos);

    auto structured = run_cli({"--format", "structured", "query",
                               tests::fixture_path("scientific_restriction.rq")});
    CHECK(structured.out.find("row:\n  class: eo:ScientificExplanation\n") !=
          std::string::npos);
}

TEST_CASE("query joins extra data files") {
    auto result = run_cli({"query", tests::write_temp_file("recs.rq",
                                                           "select ?x where { ?x a "
                                                           "eo:SystemRecommendation . }\n"),
                           tests::fixture_path("contrastive_example.ttl")});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out == "?x\n:SystemRecExampleA\n:SystemRecExampleB\n");
}

TEST_CASE("seed overlay feeds the seed-driven commands") {
    std::string overlay = tests::write_temp_file(
        "overlay.ttl",
        "eo:EverydayExplanation eo:hasGenerator [ eo:hasGenerationMethod "
        "eo:KnowledgeBasedSystem ] .\n");
    auto result = run_cli({"--seed-overlay", overlay, "methods", "everyday"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out == "Knowledge-based systems\n");
}

TEST_CASE("structured output is byte-stable across runs") {
    std::vector<std::string> args = {"--format", "structured", "classify",
                                     tests::fixture_path("contrastive_example.ttl")};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("input problems exit with code 2") {
    CHECK(run_cli({"nonsense"}).exit_code == cli::kExitInputError);
    CHECK(run_cli({"sufficiency", "no-such-type"}).exit_code == cli::kExitInputError);
    CHECK(run_cli({"validate", "/no/such/file.ttl"}).exit_code == cli::kExitInputError);
    std::string bad = tests::write_temp_file("bad.ttl", "eo:s prov:used .\n");
    auto result = run_cli({"validate", bad});
    CHECK(result.exit_code == cli::kExitInputError);
    CHECK(result.err.find("syntax error") != std::string::npos);
}

TEST_CASE("help is available") {
    auto result = run_cli({"--help"});
    CHECK(result.exit_code == cli::kExitOk);
    CHECK(result.out.find("eoctl") != std::string::npos);
}
