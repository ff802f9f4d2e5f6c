#include <doctest.h>

#include <random>

#include "eo/errors.hpp"
#include "eo/reasoner.hpp"
#include "eo/recommender.hpp"
#include "eo/vocab.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace eo;

namespace {

CapabilityProfile q4_profile() {
    return parse_profile(tests::read_file(tests::fixture_path("profile_q4.txt")),
                         builtin_ontology());
}

CapabilityProfile q5_profile() {
    return parse_profile(tests::read_file(tests::fixture_path("profile_q5.txt")),
                         builtin_ontology());
}

CapabilityProfile supremum_profile() {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile profile;
    profile.producible_classes.insert(ont.classes().begin(), ont.classes().end());
    return profile;
}

std::set<std::string> satisfiable_tokens(const CapabilityProfile& profile) {
    std::set<std::string> out;
    for (const auto& entry :
         applicable_types(builtin_ontology(), seed_kb(), profile).entries)
        if (entry.satisfiable)
            out.insert(entry.token);
    return out;
}

}  // namespace

TEST_CASE("profile documents parse into capability sets") {
    CapabilityProfile profile = q4_profile();
    CHECK(profile.producible_classes ==
          std::set<Iri>{vocab::eo("SystemRecommendation"), vocab::eo("Fact"),
                        vocab::eo("Foil"), vocab::eo("ContextualKnowledge"),
                        vocab::eo("ScientificKnowledge")});
    CHECK(profile.tasks == std::set<Iri>{vocab::eo("AbductiveTask"), vocab::eo("RankingTask")});
    CHECK(profile.methods.empty());
    CHECK_FALSE(profile.mode.has_value());

    CHECK_THROWS_AS(parse_profile("producible_classes: eo:NoSuchThing", builtin_ontology()),
                    UnknownNameError);
    CHECK_THROWS_AS(parse_profile("unexpected: x", builtin_ontology()), SyntaxError);
}

TEST_CASE("question documents parse intent and text") {
    QuestionDescriptor q = parse_question(
        tests::read_file(tests::fixture_path("question_q5.txt")));
    CHECK(q.intent == QuestionIntent::WhatPercentage);
    CHECK(q.text ==
          "Which explanation type can expose numerical evidence about patients on this drug?");
    CHECK_THROWS_AS(parse_question("intent: what-never"), SyntaxError);
    CHECK_THROWS_AS(parse_question("text: no intent given"), SyntaxError);
}

TEST_CASE("each intent maps to exactly one type and back") {
    std::set<Iri> seen;
    REQUIRE(intent_tokens().size() == 9);
    for (const auto& [intent, token] : intent_tokens()) {
        Iri type = type_for_intent(intent);
        CHECK(find_type_by_iri(type) != nullptr);
        CHECK(seen.insert(type).second);
        CHECK(intent_from_token(token) == intent);
    }
    CHECK(seen.size() == 9);
    // spot checks on the binding
    CHECK(type_for_intent(QuestionIntent::WhyThisNotThat) ==
          vocab::eo("ContrastiveExplanation"));
    CHECK(type_for_intent(QuestionIntent::WhatSteps) == vocab::eo("TraceBasedExplanation"));
    CHECK(type_for_intent(QuestionIntent::WhatPercentage) ==
          vocab::eo("StatisticalExplanation"));
}

TEST_CASE("type-level satisfiability over the contextual condition") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile profile;
    profile.producible_classes = {vocab::eo("SystemRecommendation"),
                                  vocab::eo("ContextualKnowledge"), vocab::ep("Situation")};
    AbstractCheck check = abstractly_satisfiable(
        ont, profile, *sufficiency_condition(ont, vocab::eo("ContextualExplanation")));
    CHECK(check.satisfiable);
    CHECK(check.missing.empty());
}

TEST_CASE("the empty profile satisfies none of the nine conditions") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile empty;
    for (const ExplanationTypeSpec& spec : explanation_type_specs()) {
        AbstractCheck check = abstractly_satisfiable(ont, empty, *spec.condition);
        CHECK_FALSE(check.satisfiable);
        CHECK_FALSE(check.missing.empty());
    }
}

TEST_CASE("a trace-less profile is missing exactly the system trace") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile profile;
    profile.producible_classes = {vocab::eo("SystemRecommendation")};
    AbstractCheck check = abstractly_satisfiable(
        ont, profile, *sufficiency_condition(ont, vocab::eo("TraceBasedExplanation")));
    CHECK_FALSE(check.satisfiable);
    CHECK(check.missing == std::set<Iri>{vocab::eo("SystemTrace")});
}

TEST_CASE("subclasses make their superclasses producible") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile profile;
    profile.producible_classes = {vocab::eo("SystemRecommendation"),
                                  vocab::eo("NumericalEvidence")};
    // the statistical condition needs knowledge only through the
    // numerical evidence subclass
    AbstractCheck check = abstractly_satisfiable(
        ont, profile, *sufficiency_condition(ont, vocab::eo("StatisticalExplanation")));
    CHECK(check.satisfiable);
}

TEST_CASE("seed lookups answer the catalog questions") {
    SeedKnowledgeBase kb = seed_kb();
    auto trace = methods_for_type(kb, vocab::eo("TraceBasedExplanation"));
    CHECK(trace.size() == 2);
    auto everyday = methods_for_type(kb, vocab::eo("EverydayExplanation"));
    CHECK(everyday.empty());
    CHECK_THROWS_AS(methods_for_type(kb, vocab::eo("Fact")), UnknownExplanationTypeError);

    auto counterfactual = example_questions(kb, vocab::eo("CounterfactualExplanation"));
    CHECK(counterfactual ==
          std::vector<std::string>{
              "What other factors about the patient does the system know of?",
              "What if the major problem was a fasting plasma glucose?",
              "What if input A was over 1000?"});

    auto simulation = example_questions(kb, vocab::eo("SimulationBasedExplanation"));
    CHECK(simulation == std::vector<std::string>{
                            "What would happen if this recommendation is followed?"});
}

TEST_CASE("the ranking profile of a medication comparison picks contrastive") {
    RecommendationReport report =
        applicable_types(builtin_ontology(), seed_kb(), q4_profile());
    REQUIRE(report.entries.size() == 9);
    CHECK(report.entries.front().token == "contrastive");
    CHECK(report.entries.front().satisfiable);
    CHECK(report.entries.front().context_match);
    CHECK(satisfiable_tokens(q4_profile()) == std::set<std::string>{"contrastive"});
}

TEST_CASE("the empty profile satisfies nothing; the full profile everything") {
    CHECK(satisfiable_tokens(CapabilityProfile{}).empty());
    CHECK(satisfiable_tokens(supremum_profile()).size() == 9);
}

TEST_CASE("satisfiable entries have empty missing sets and vice versa") {
    RecommendationReport report =
        applicable_types(builtin_ontology(), seed_kb(), q4_profile());
    for (const auto& entry : report.entries)
        CHECK(entry.satisfiable == entry.missing.empty());
}

TEST_CASE("the numerical evidence question plans inductive clustering") {
    const Ontology& ont = builtin_ontology();
    QuestionDescriptor q{QuestionIntent::WhatPercentage, ""};
    QuestionPlan plan = plan_for_question(ont, seed_kb(), q5_profile(), q);
    CHECK(plan.token == "statistical");
    CHECK(plan.satisfiable);
    REQUIRE(plan.plan.has_value());
    CHECK(plan.plan->task == vocab::eo("InductiveTask"));
    CHECK(plan.plan->method == vocab::eo("Clustering"));
    CHECK(render_plan(ont, *plan.plan) ==
          "run 'Inductive' AI task with 'Clustering' method to generate numerical evidence");
}

TEST_CASE("a step question without a trace reports the gap") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile profile;
    profile.producible_classes = {vocab::eo("SystemRecommendation")};
    QuestionPlan plan =
        plan_for_question(ont, seed_kb(), profile, {QuestionIntent::WhatSteps, ""});
    CHECK(plan.token == "trace-based");
    CHECK_FALSE(plan.satisfiable);
    CHECK(plan.missing == std::set<Iri>{vocab::eo("SystemTrace")});
    CHECK_FALSE(plan.plan.has_value());
}

TEST_CASE("the contrast question is satisfiable under the ranking profile") {
    QuestionPlan plan = plan_for_question(builtin_ontology(), seed_kb(), q4_profile(),
                                          {QuestionIntent::WhyThisNotThat, ""});
    CHECK(plan.token == "contrastive");
    CHECK(plan.satisfiable);
}

TEST_CASE("profile growth never loses satisfiability") {
    std::mt19937 rng(7401);
    for (int round = 0; round < 40; ++round) {
        auto [small, big] = tests::random_profile_pair(rng);
        auto small_tokens = satisfiable_tokens(small);
        auto big_tokens = satisfiable_tokens(big);
        for (const std::string& token : small_tokens)
            REQUIRE(big_tokens.count(token) == 1);

        const Ontology& ont = builtin_ontology();
        for (const ExplanationTypeSpec& spec : explanation_type_specs()) {
            AbstractCheck before = abstractly_satisfiable(ont, small, *spec.condition);
            AbstractCheck after = abstractly_satisfiable(ont, big, *spec.condition);
            for (const Iri& missing : after.missing)
                REQUIRE(before.missing.count(missing) == 1);
        }
    }
}

TEST_CASE("recommendation reports are deterministic") {
    RecommendationReport a = applicable_types(builtin_ontology(), seed_kb(), q4_profile());
    RecommendationReport b = applicable_types(builtin_ontology(), seed_kb(), q4_profile());
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].token == b.entries[i].token);
        CHECK(a.entries[i].satisfiable == b.entries[i].satisfiable);
        CHECK(a.entries[i].missing == b.entries[i].missing);
    }
}

TEST_CASE("types satisfiable at type level classify on their witness graphs") {
    const Ontology& ont = builtin_ontology();
    CapabilityProfile everything = supremum_profile();
    for (const ExplanationTypeSpec& spec : explanation_type_specs()) {
        REQUIRE(abstractly_satisfiable(ont, everything, *spec.condition).satisfiable);
        auto [graph, root] = tests::witness_graph(*spec.condition);
        auto classification = classify_explanations(ont, graph);
        REQUIRE(classification.count(root) == 1);
        CHECK(classification.at(root).count(spec.class_iri) == 1);
    }
}
