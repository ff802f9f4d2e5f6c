#include <doctest.h>

#include <random>

#include "eo/errors.hpp"
#include "eo/manchester.hpp"
#include "eo/ontology.hpp"
#include "eo/vocab.hpp"
#include "support/generators.hpp"
#include "support/published_texts.hpp"

using namespace eo;

namespace {


ExprPtr parse(const std::string& text) {
    return parse_manchester(text, vocab::default_prefixes());
}

}  // namespace

TEST_CASE("atoms parse to named classes") {
    ExprPtr expr = parse("eo:Fact");
    CHECK(expr->kind() == ClassExpression::Kind::Named);
    CHECK(expr->iri() == vocab::eo("Fact"));
    CHECK(serialize_manchester(*expr, vocab::default_prefixes()) == "eo:Fact");
}

TEST_CASE("published contextual restriction parses to the built-in condition") {
    ExprPtr parsed = parse(tests::kPublishedContextualRestriction);
    ExprPtr builtin =
        sufficiency_condition(builtin_ontology(), vocab::eo("ContextualExplanation"));
    CHECK(parsed->equals(*builtin));
}

TEST_CASE("published scientific restriction parses to the built-in condition") {
    ExprPtr parsed = parse(tests::kPublishedScientificRestriction);
    ExprPtr builtin =
        sufficiency_condition(builtin_ontology(), vocab::eo("ScientificExplanation"));
    CHECK(parsed->equals(*builtin));
}

TEST_CASE("and binds tighter than or") {
    ExprPtr left = parse("eo:Fact and eo:Foil or eo:Study");
    REQUIRE(left->kind() == ClassExpression::Kind::Or);
    REQUIRE(left->operands().size() == 2);
    CHECK(left->operands()[0]->kind() == ClassExpression::Kind::And);
    CHECK(left->operands()[1]->kind() == ClassExpression::Kind::Named);

    ExprPtr grouped = parse("eo:Fact and (eo:Foil or eo:Study)");
    REQUIRE(grouped->kind() == ClassExpression::Kind::And);
    REQUIRE(grouped->operands().size() == 2);
    CHECK(grouped->operands()[1]->kind() == ClassExpression::Kind::Or);
}

TEST_CASE("restriction fillers are primaries") {
    // the atom binds to the restriction, the conjunct stays outside
    ExprPtr expr = parse("ep:isBasedOn some eo:Fact and eo:Foil");
    REQUIRE(expr->kind() == ClassExpression::Kind::And);
    CHECK(expr->operands()[0]->kind() == ClassExpression::Kind::Some);
    CHECK(expr->operands()[1]->kind() == ClassExpression::Kind::Named);
}

TEST_CASE("min cardinality parses and keeps its count") {
    ExprPtr expr = parse("ep:isBasedOn min 2 eo:SystemRecommendation");
    REQUIRE(expr->kind() == ClassExpression::Kind::AtLeast);
    CHECK(expr->cardinality() == 2);
    CHECK(expr->property() == vocab::ep("isBasedOn"));
    CHECK(expr->filler()->iri() == vocab::eo("SystemRecommendation"));
    CHECK(serialize_manchester(*expr, vocab::default_prefixes()) ==
          "ep:isBasedOn min 2 eo:SystemRecommendation");
}

TEST_CASE("nested same-operator groups survive a round trip") {
    ExprPtr nested = ClassExpression::intersection(
        {ClassExpression::named(vocab::eo("Fact")),
         ClassExpression::intersection({ClassExpression::named(vocab::eo("Foil")),
                                        ClassExpression::named(vocab::eo("Study"))})});
    std::string text = serialize_manchester(*nested, vocab::default_prefixes());
    CHECK(parse(text)->equals(*nested));
    // while the flat list is a different tree
    CHECK_FALSE(parse("eo:Fact and eo:Foil and eo:Study")->equals(*nested));
}

TEST_CASE("random expressions round-trip structurally") {
    std::mt19937 rng(7201);
    for (int round = 0; round < 60; ++round) {
        ExprPtr expr = tests::random_expression(rng, 5);
        std::string text = serialize_manchester(*expr, vocab::default_prefixes());
        CAPTURE(text);
        REQUIRE(parse(text)->equals(*expr));
    }
}

TEST_CASE("parsing the same text twice gives equal expressions") {
    ExprPtr a = parse(tests::kPublishedScientificRestriction);
    ExprPtr b = parse(tests::kPublishedScientificRestriction);
    CHECK(a->equals(*b));
}

TEST_CASE("normalized tokens equate published and serialized forms") {
    const Ontology& ont = builtin_ontology();
    auto published = normalize_manchester_tokens(tests::kPublishedContextualRestriction,
                                                 vocab::default_prefixes());
    auto ours = normalize_manchester_tokens(
        serialize_manchester(
            *sufficiency_condition(ont, vocab::eo("ContextualExplanation")), ont.prefixes()),
        vocab::default_prefixes());
    CHECK(published == ours);
}

TEST_CASE("unknown names and prefixes are rejected") {
    CHECK_THROWS_AS(parse("foo:x"), UnknownPrefixError);
    CHECK_THROWS_AS(parse("`No Such Label'"), UnknownNameError);
    CHECK_THROWS_AS(parse("bareword"), UnknownNameError);
}

TEST_CASE("syntax errors report the position") {
    try {
        parse("eo:Fact and");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 12);
    }
    CHECK_THROWS_AS(parse("(eo:Fact"), SyntaxError);
    CHECK_THROWS_AS(parse("ep:isBasedOn min 0 eo:Fact"), SyntaxError);
    CHECK_THROWS_AS(parse("ep:isBasedOn some"), SyntaxError);
}

TEST_CASE("absolute IRIs pass through angle brackets") {
    ExprPtr expr = parse("<http://elsewhere/Thing>");
    CHECK(expr->iri().value == "http://elsewhere/Thing");
    CHECK(serialize_manchester(*expr, vocab::default_prefixes()) ==
          "<http://elsewhere/Thing>");
}
