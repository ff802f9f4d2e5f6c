#include "eo/recommender.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "eo/errors.hpp"
#include "eo/reasoner.hpp"
#include "eo/vocab.hpp"

namespace eo {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

/// Parse "key: value" lines, '#' comments and blank lines skipped.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        auto colon = stripped.find(':');
        if (colon == std::string::npos)
            throw SyntaxError(line_no, 1, "'key: value' line");
        out.emplace_back(trim(stripped.substr(0, colon)), trim(stripped.substr(colon + 1)));
    }
    return out;
}

Iri resolve_declared(const std::string& curie, const Ontology& ont) {
    Iri iri = ont.prefixes().expand(curie);
    if (!ont.is_declared(iri))
        throw UnknownNameError(curie);
    return iri;
}

}  // namespace

CapabilityProfile parse_profile(std::string_view text, const Ontology& ont) {
    CapabilityProfile profile;
    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "producible_classes") {
            for (const std::string& curie : split_list(value))
                profile.producible_classes.insert(resolve_declared(curie, ont));
        } else if (key == "tasks") {
            for (const std::string& curie : split_list(value))
                profile.tasks.insert(resolve_declared(curie, ont));
        } else if (key == "methods") {
            for (const std::string& curie : split_list(value))
                profile.methods.insert(resolve_declared(curie, ont));
        } else if (key == "mode") {
            std::string curie = trim(value);
            if (!curie.empty())
                profile.mode = resolve_declared(curie, ont);
        } else {
            throw SyntaxError(1, 1, "profile field (producible_classes|tasks|methods|mode)");
        }
    }
    return profile;
}

const std::vector<std::pair<QuestionIntent, std::string>>& intent_tokens() {
    static const std::vector<std::pair<QuestionIntent, std::string>> tokens = {
        {QuestionIntent::OtherSituations, "other-situations"},
        {QuestionIntent::BroaderInfo, "broader-info"},
        {QuestionIntent::WhyThisNotThat, "why-this-not-that"},
        {QuestionIntent::WhatIfInput, "what-if-input"},
        {QuestionIntent::WhyMakesSense, "why-makes-sense"},
        {QuestionIntent::WhatStudies, "what-studies"},
        {QuestionIntent::WhatIfFollowed, "what-if-followed"},
        {QuestionIntent::WhatPercentage, "what-percentage"},
        {QuestionIntent::WhatSteps, "what-steps"},
    };
    return tokens;
}

std::optional<QuestionIntent> intent_from_token(const std::string& token) {
    for (const auto& [intent, text] : intent_tokens())
        if (text == token)
            return intent;
    return std::nullopt;
}

const std::string& intent_token(QuestionIntent intent) {
    for (const auto& [candidate, text] : intent_tokens())
        if (candidate == intent)
            return text;
    throw Error("unmapped intent");
}

Iri type_for_intent(QuestionIntent intent) {
    // Intents are declared in catalog order, as are the type specs.
    const auto& specs = explanation_type_specs();
    auto index = static_cast<std::size_t>(intent);
    if (index >= specs.size())
        throw Error("unmapped intent");
    return specs[index].class_iri;
}

QuestionDescriptor parse_question(std::string_view text) {
    std::optional<QuestionIntent> intent;
    std::string free_text;
    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "intent") {
            intent = intent_from_token(value);
            if (!intent)
                throw SyntaxError(1, 1, "one of the nine intent tokens");
        } else if (key == "text") {
            free_text = value;
        } else {
            throw SyntaxError(1, 1, "question field (intent|text)");
        }
    }
    if (!intent)
        throw SyntaxError(1, 1, "intent field");
    return QuestionDescriptor{*intent, free_text};
}

namespace {

class AbstractEvaluator {
public:
    AbstractEvaluator(const Ontology& ont, const CapabilityProfile& profile)
        : m_ont(ont) {
        for (const Iri& c : profile.producible_classes)
            m_available.insert(c);
        for (const Iri& t : profile.tasks)
            m_available.insert(t);
    }

    AbstractCheck eval(const ClassExpression& expr) const {
        AbstractCheck check;
        switch (expr.kind()) {
            case ClassExpression::Kind::Named: {
                check.satisfiable = class_available(expr.iri());
                if (!check.satisfiable)
                    check.missing.insert(expr.iri());
                return check;
            }
            case ClassExpression::Kind::Some:
            case ClassExpression::Kind::AtLeast:
                // counts are unbounded at type level
                return eval(*expr.filler());
            case ClassExpression::Kind::And: {
                check.satisfiable = true;
                for (const auto& op : expr.operands()) {
                    AbstractCheck child = eval(*op);
                    check.satisfiable = check.satisfiable && child.satisfiable;
                    check.missing.insert(child.missing.begin(), child.missing.end());
                }
                if (check.satisfiable)
                    check.missing.clear();
                return check;
            }
            case ClassExpression::Kind::Or: {
                std::optional<AbstractCheck> best;
                for (const auto& op : expr.operands()) {
                    AbstractCheck child = eval(*op);
                    if (child.satisfiable)
                        return child;
                    if (!best || child.missing.size() < best->missing.size() ||
                        (child.missing.size() == best->missing.size() &&
                         child.missing < best->missing))
                        best = std::move(child);
                }
                return *best;
            }
        }
        return check;
    }

private:
    bool class_available(const Iri& cls) const {
        for (const Iri& have : m_available) {
            if (!m_ont.is_declared_class(have))
                continue;
            if (superclasses(m_ont, have).count(cls))
                return true;
        }
        return false;
    }

    const Ontology& m_ont;
    std::set<Iri> m_available;
};

std::optional<GenerationPlan> plan_for_type(const Ontology& ont, const SeedKnowledgeBase& seed,
                                            const Iri& type) {
    auto it = seed.generators.find(type);
    if (it == seed.generators.end() || it->second.empty())
        return std::nullopt;
    std::vector<GenerationEntry> entries = it->second;
    std::sort(entries.begin(), entries.end());

    GenerationPlan plan;
    plan.task = entries.front().task;
    plan.method = entries.front().method;

    const Iri knowledge = vocab::eo("Knowledge");
    std::set<Iri> leaves;
    sufficiency_condition(ont, type)->collect_named_leaves(leaves);
    for (const Iri& leaf : leaves)
        if (superclasses(ont, leaf).count(knowledge))
            plan.required_knowledge.insert(leaf);
    return plan;
}

bool context_rule_matches(const SeedKnowledgeBase& seed, const CapabilityProfile& profile,
                          const Iri& type) {
    auto it = seed.context_rules.find(type);
    if (it == seed.context_rules.end() || it->second.empty())
        return false;
    for (const Iri& required : it->second) {
        bool have = profile.producible_classes.count(required) != 0 ||
                    profile.tasks.count(required) != 0 ||
                    profile.methods.count(required) != 0 ||
                    (profile.mode && *profile.mode == required);
        if (!have)
            return false;
    }
    return true;
}

}  // namespace

AbstractCheck abstractly_satisfiable(const Ontology& ont, const CapabilityProfile& profile,
                                     const ClassExpression& expr) {
    return AbstractEvaluator(ont, profile).eval(expr);
}

std::vector<GenerationEntry> methods_for_type(const SeedKnowledgeBase& seed, const Iri& type) {
    if (find_type_by_iri(type) == nullptr)
        throw UnknownExplanationTypeError(type.value);
    auto it = seed.generators.find(type);
    if (it == seed.generators.end())
        return {};
    return it->second;
}

std::vector<std::string> example_questions(const SeedKnowledgeBase& seed, const Iri& type) {
    const ExplanationTypeSpec* spec = find_type_by_iri(type);
    if (spec == nullptr)
        throw UnknownExplanationTypeError(type.value);
    std::vector<std::string> out;
    auto it = seed.example_questions.find(type);
    if (it != seed.example_questions.end())
        out = it->second;
    out.push_back(spec->prototypical_question);
    return out;
}

std::string render_plan(const Ontology& ont, const GenerationPlan& plan) {
    auto label_of = [&](const Iri& iri) {
        if (auto label = ont.label(iri))
            return *label;
        return iri.value;
    };

    std::string out;
    if (plan.task) {
        std::string task_label = label_of(*plan.task);
        // "Inductive Task" reads as the task name "Inductive"
        const std::string suffix = " Task";
        if (task_label.size() > suffix.size() &&
            task_label.compare(task_label.size() - suffix.size(), suffix.size(), suffix) == 0)
            task_label.resize(task_label.size() - suffix.size());
        out = "run '" + task_label + "' AI task with '" + label_of(plan.method) + "' method";
    } else {
        out = "use '" + label_of(plan.method) + "' method";
    }
    if (!plan.required_knowledge.empty()) {
        out += " to generate ";
        bool first = true;
        for (const Iri& k : plan.required_knowledge) {
            if (!first)
                out += ", ";
            first = false;
            std::string label = label_of(k);
            for (char& c : label)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            out += label;
        }
    }
    return out;
}

RecommendationReport applicable_types(const Ontology& ont, const SeedKnowledgeBase& seed,
                                      const CapabilityProfile& profile) {
    RecommendationReport report;
    for (const ExplanationTypeSpec& spec : explanation_type_specs()) {
        TypeRecommendation entry;
        entry.type = spec.class_iri;
        entry.token = spec.token;
        AbstractCheck check = abstractly_satisfiable(ont, profile, *spec.condition);
        entry.satisfiable = check.satisfiable;
        entry.missing = std::move(check.missing);
        if (entry.satisfiable)
            entry.plan = plan_for_type(ont, seed, spec.class_iri);
        entry.context_match = context_rule_matches(seed, profile, spec.class_iri);
        std::set<Iri> leaves;
        spec.condition->collect_named_leaves(leaves);
        entry.required_class_count = leaves.size();
        report.entries.push_back(std::move(entry));
    }

    std::stable_sort(report.entries.begin(), report.entries.end(),
                     [](const TypeRecommendation& a, const TypeRecommendation& b) {
                         return std::make_tuple(!a.satisfiable, !a.context_match,
                                                a.required_class_count, a.token) <
                                std::make_tuple(!b.satisfiable, !b.context_match,
                                                b.required_class_count, b.token);
                     });
    return report;
}

QuestionPlan plan_for_question(const Ontology& ont, const SeedKnowledgeBase& seed,
                               const CapabilityProfile& profile, const QuestionDescriptor& q) {
    QuestionPlan out;
    out.type = type_for_intent(q.intent);
    out.token = find_type_by_iri(out.type)->token;
    AbstractCheck check = abstractly_satisfiable(ont, profile, *sufficiency_condition(ont, out.type));
    out.satisfiable = check.satisfiable;
    out.missing = std::move(check.missing);
    if (out.satisfiable)
        out.plan = plan_for_type(ont, seed, out.type);
    return out;
}

}  // namespace eo
