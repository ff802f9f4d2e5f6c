#ifndef EO_RECOMMENDER_HPP
#define EO_RECOMMENDER_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/ontology.hpp"

namespace eo {

/// What a target system can produce and run. Every IRI must resolve
/// against the ontology's declarations.
struct CapabilityProfile {
    std::set<Iri> producible_classes;
    std::set<Iri> tasks;
    std::set<Iri> methods;
    std::optional<Iri> mode;
};

/// Parse the key-value profile document: fields producible_classes,
/// tasks, methods, mode; values are comma-separated CURIEs.
CapabilityProfile parse_profile(std::string_view text, const Ontology& ont);

/// The nine structured question intents, one per explanation type.
enum class QuestionIntent {
    OtherSituations,   // case-based
    BroaderInfo,       // contextual
    WhyThisNotThat,    // contrastive
    WhatIfInput,       // counterfactual
    WhyMakesSense,     // everyday
    WhatStudies,       // scientific
    WhatIfFollowed,    // simulation-based
    WhatPercentage,    // statistical
    WhatSteps,         // trace-based
};

const std::vector<std::pair<QuestionIntent, std::string>>& intent_tokens();
std::optional<QuestionIntent> intent_from_token(const std::string& token);
const std::string& intent_token(QuestionIntent intent);

/// Intents map 1:1 onto explanation types.
Iri type_for_intent(QuestionIntent intent);

struct QuestionDescriptor {
    QuestionIntent intent;
    std::string text;  // carried, not interpreted
};

/// Parse the key-value question document: fields intent, text.
QuestionDescriptor parse_question(std::string_view text);

/// Type-level satisfiability: a Named class is available when some
/// producible class or task specializes it; restrictions reduce to their
/// fillers (counts unbounded at type level, so min-cardinality behaves
/// like some). `missing` holds the leaf classes of the minimal failing
/// branches; for a union, the branch with the fewest missing leaves
/// (ties broken lexicographically).
struct AbstractCheck {
    bool satisfiable = false;
    std::set<Iri> missing;
};

AbstractCheck abstractly_satisfiable(const Ontology& ont, const CapabilityProfile& profile,
                                     const ClassExpression& expr);

struct GenerationPlan {
    std::optional<Iri> task;
    Iri method;
    std::set<Iri> required_knowledge;
};

/// One human-oriented sentence for a plan, e.g. "run 'Inductive' AI task
/// with 'Clustering' method to generate numerical evidence".
std::string render_plan(const Ontology& ont, const GenerationPlan& plan);

struct TypeRecommendation {
    Iri type;
    std::string token;
    bool satisfiable = false;
    std::set<Iri> missing;
    std::optional<GenerationPlan> plan;
    bool context_match = false;
    std::size_t required_class_count = 0;
};

struct RecommendationReport {
    std::vector<TypeRecommendation> entries;  // ranked
};

/// Seed-KB generator entries for one of the nine types.
/// Throws UnknownExplanationTypeError otherwise.
std::vector<GenerationEntry> methods_for_type(const SeedKnowledgeBase& seed, const Iri& type);

/// Seed example questions plus the type's prototypical question, in that
/// order. Throws UnknownExplanationTypeError for a non-type IRI.
std::vector<std::string> example_questions(const SeedKnowledgeBase& seed, const Iri& type);

/// All nine types evaluated against the profile, satisfiable ones first,
/// ranked by (context-rule match, fewer required classes, token).
RecommendationReport applicable_types(const Ontology& ont, const SeedKnowledgeBase& seed,
                                      const CapabilityProfile& profile);

struct QuestionPlan {
    Iri type;
    std::string token;
    bool satisfiable = false;
    std::set<Iri> missing;
    std::optional<GenerationPlan> plan;
};

/// The explanation type bound to the question's intent, with either a
/// generation plan (when abstractly satisfiable) or the capability gap.
QuestionPlan plan_for_question(const Ontology& ont, const SeedKnowledgeBase& seed,
                               const CapabilityProfile& profile, const QuestionDescriptor& q);

}  // namespace eo

#endif
