#include "eo/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "eo/errors.hpp"
#include "eo/vocab.hpp"

namespace eo {

Axiom Axiom::sub_class_of(Iri sub, Iri super) {
    Axiom a;
    a.kind = Kind::SubClassOf;
    a.subject = std::move(sub);
    a.super_class = std::move(super);
    return a;
}

Axiom Axiom::sub_class_of(Iri sub, ExprPtr super) {
    Axiom a;
    a.kind = Kind::SubClassOf;
    a.subject = std::move(sub);
    a.expression = std::move(super);
    return a;
}

Axiom Axiom::equivalent_to(Iri cls, ExprPtr expr) {
    Axiom a;
    a.kind = Kind::EquivalentTo;
    a.subject = std::move(cls);
    a.expression = std::move(expr);
    return a;
}

Axiom Axiom::disjoint_classes(std::vector<Iri> classes) {
    Axiom a;
    a.kind = Kind::DisjointClasses;
    a.disjoint = std::move(classes);
    return a;
}

Axiom Axiom::class_declaration(Iri cls) {
    Axiom a;
    a.kind = Kind::ClassDeclaration;
    a.subject = std::move(cls);
    return a;
}

Axiom Axiom::property_declaration(Iri prop) {
    Axiom a;
    a.kind = Kind::PropertyDeclaration;
    a.subject = std::move(prop);
    return a;
}

Ontology::Ontology(std::vector<Axiom> axioms, PrefixMap prefixes,
                   std::map<Iri, std::string> labels, std::map<std::string, Iri> label_aliases,
                   std::map<Iri, Iri> individuals)
    : m_axioms(std::move(axioms)),
      m_prefixes(std::move(prefixes)),
      m_labels(std::move(labels)),
      m_label_aliases(std::move(label_aliases)),
      m_individuals(std::move(individuals)) {
    index_and_validate();
}

bool Ontology::is_declared(const Iri& iri) const {
    return m_classes.count(iri) != 0 || m_properties.count(iri) != 0 ||
           m_individuals.count(iri) != 0;
}

std::optional<std::string> Ontology::label(const Iri& iri) const {
    auto it = m_labels.find(iri);
    if (it == m_labels.end())
        return std::nullopt;
    return it->second;
}

std::vector<ExprPtr> Ontology::subclass_expressions(const Iri& cls) const {
    std::vector<ExprPtr> out;
    for (const Axiom& a : m_axioms)
        if (a.kind == Axiom::Kind::SubClassOf && a.subject == cls && a.expression)
            out.push_back(a.expression);
    return out;
}

std::vector<std::vector<Iri>> Ontology::disjoint_sets() const {
    std::vector<std::vector<Iri>> out;
    for (const Axiom& a : m_axioms)
        if (a.kind == Axiom::Kind::DisjointClasses)
            out.push_back(a.disjoint);
    return out;
}

void Ontology::index_and_validate() {
    for (const Axiom& a : m_axioms) {
        if (a.kind == Axiom::Kind::ClassDeclaration)
            m_classes.insert(a.subject);
        else if (a.kind == Axiom::Kind::PropertyDeclaration)
            m_properties.insert(a.subject);
    }

    auto require_class = [&](const Iri& iri) {
        if (!m_classes.count(iri))
            throw OntologyError("undeclared class in axiom: " + iri.value);
    };
    auto require_expression = [&](const ExprPtr& e) {
        std::set<Iri> leaves;
        e->collect_named_leaves(leaves);
        for (const Iri& c : leaves)
            require_class(c);
        std::set<Iri> props;
        e->collect_properties(props);
        for (const Iri& p : props)
            if (!m_properties.count(p))
                throw OntologyError("undeclared property in axiom: " + p.value);
    };

    for (const Axiom& a : m_axioms) {
        switch (a.kind) {
            case Axiom::Kind::SubClassOf:
                require_class(a.subject);
                if (a.super_class) {
                    require_class(*a.super_class);
                    m_subclass_edges[a.subject].insert(*a.super_class);
                } else if (a.expression) {
                    require_expression(a.expression);
                } else {
                    throw OntologyError("subclass axiom without a superclass");
                }
                break;
            case Axiom::Kind::EquivalentTo:
                require_class(a.subject);
                if (!a.expression)
                    throw OntologyError("equivalence axiom without an expression");
                require_expression(a.expression);
                m_equivalences.emplace_back(a.subject, a.expression);
                break;
            case Axiom::Kind::DisjointClasses:
                for (const Iri& c : a.disjoint)
                    require_class(c);
                break;
            case Axiom::Kind::ClassDeclaration:
            case Axiom::Kind::PropertyDeclaration:
                break;
        }
    }

    for (const auto& [individual, type] : m_individuals)
        require_class(type);

    // reject subclass cycles: DFS with colors
    std::map<Iri, int> color;  // 0 white, 1 grey, 2 black
    auto dfs = [&](auto&& self, const Iri& node) -> void {
        color[node] = 1;
        auto it = m_subclass_edges.find(node);
        if (it != m_subclass_edges.end()) {
            for (const Iri& super : it->second) {
                int c = color.count(super) ? color[super] : 0;
                if (c == 1)
                    throw OntologyError("subclass cycle through " + super.value);
                if (c == 0)
                    self(self, super);
            }
        }
        color[node] = 2;
    };
    for (const auto& [sub, supers] : m_subclass_edges)
        if (!color.count(sub) || color[sub] == 0)
            dfs(dfs, sub);
}

namespace {

std::string to_lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string local_part(const Iri& iri) {
    auto hash = iri.value.rfind('#');
    if (hash != std::string::npos)
        return iri.value.substr(hash + 1);
    auto slash = iri.value.rfind('/');
    if (slash != std::string::npos)
        return iri.value.substr(slash + 1);
    return iri.value;
}

ExprPtr named(const Iri& c) { return ClassExpression::named(c); }
ExprPtr some(const Iri& p, ExprPtr f) { return ClassExpression::some(p, std::move(f)); }
ExprPtr all_of(std::vector<ExprPtr> ops) { return ClassExpression::intersection(std::move(ops)); }
ExprPtr any_of(std::vector<ExprPtr> ops) { return ClassExpression::union_of(std::move(ops)); }

struct Vocab {
    // classes
    Iri Explanation = vocab::ep("Explanation");
    Iri SystemRecommendation = vocab::eo("SystemRecommendation");
    Iri AITask = vocab::eo("AITask");
    Iri DeductiveTask = vocab::eo("DeductiveTask");
    Iri InductiveTask = vocab::eo("InductiveTask");
    Iri AbductiveTask = vocab::eo("AbductiveTask");
    Iri AbstractionTask = vocab::eo("AbstractionTask");
    Iri RankingTask = vocab::eo("RankingTask");
    Iri AIMethod = vocab::eo("AIMethod");
    Iri ReasoningMode = vocab::eo("ReasoningMode");
    Iri User = vocab::eo("User");
    Iri Question = vocab::sio("question");
    Iri ObjectRecord = vocab::eo("ObjectRecord");
    Iri Situation = vocab::ep("Situation");
    Iri ExplanationModality = vocab::eo("ExplanationModality");
    Iri Knowledge = vocab::eo("Knowledge");
    Iri ContextualKnowledge = vocab::eo("ContextualKnowledge");
    Iri ScientificKnowledge = vocab::eo("ScientificKnowledge");
    Iri EverydayKnowledge = vocab::eo("EverydayKnowledge");
    Iri NumericalEvidence = vocab::eo("NumericalEvidence");
    Iri SystemTrace = vocab::eo("SystemTrace");
    Iri AlternativeInput = vocab::eo("AlternativeInput");
    Iri Simulation = vocab::eo("Simulation");
    Iri Fact = vocab::eo("Fact");
    Iri Foil = vocab::eo("Foil");
    Iri ScientificMethod = vocab::eo("ScientificMethod");
    Iri Study = vocab::eo("Study");
    Iri Patient = vocab::sio("patient");
    // explanation types
    Iri CaseBased = vocab::eo("CaseBasedExplanation");
    Iri Contextual = vocab::eo("ContextualExplanation");
    Iri Contrastive = vocab::eo("ContrastiveExplanation");
    Iri Counterfactual = vocab::eo("CounterfactualExplanation");
    Iri Everyday = vocab::eo("EverydayExplanation");
    Iri Scientific = vocab::eo("ScientificExplanation");
    Iri SimulationBased = vocab::eo("SimulationBasedExplanation");
    Iri Statistical = vocab::eo("StatisticalExplanation");
    Iri TraceBased = vocab::eo("TraceBasedExplanation");
    // properties
    Iri isBasedOn = vocab::ep("isBasedOn");
    Iri isConceptualizedBy = vocab::ep("isConceptualizedBy");
    Iri hasSetting = vocab::ep("hasSetting");
    Iri implements = vocab::eo("implements");
    Iri addresses = vocab::eo("addresses");
    Iri inRelationTo = vocab::sio("inRelationTo");
    Iri hasOutput = vocab::sio("hasOutput");
    Iri isInputIn = vocab::sio("isInputIn");
    Iri used = vocab::prov("used");
    Iri wasGeneratedBy = vocab::prov("wasGeneratedBy");
    Iri wasAssociatedWith = vocab::prov("wasAssociatedWith");
    // seed-overlay plumbing properties
    Iri hasGenerator = vocab::eo("hasGenerator");
    Iri hasGenerationTask = vocab::eo("hasGenerationTask");
    Iri hasGenerationMethod = vocab::eo("hasGenerationMethod");
    Iri hasExampleQuestion = vocab::eo("hasExampleQuestion");
    Iri hasContextRequirement = vocab::eo("hasContextRequirement");
    // individuals
    Iri TreatmentPlanning = vocab::eo("TreatmentPlanning");
    Iri DifferentialDiagnosis = vocab::eo("DifferentialDiagnosis");
    Iri PlanCritiquing = vocab::eo("PlanCritiquing");
    Iri KnowledgeBasedSystem = vocab::eo("KnowledgeBasedSystem");
    Iri DecisionTree = vocab::eo("DecisionTree");
    Iri Clustering = vocab::eo("Clustering");
};

const Vocab& v() {
    static const Vocab instance;
    return instance;
}

// Sufficiency conditions for the nine types. R abbreviates
// "isBasedOn some SystemRecommendation" in the notes below.

ExprPtr based_on_recommendation() {
    return some(v().isBasedOn, named(v().SystemRecommendation));
}

ExprPtr case_based_condition() {
    // R and based on an object record related to the situation
    return all_of({based_on_recommendation(),
                   some(v().isBasedOn, all_of({named(v().ObjectRecord),
                                               some(v().inRelationTo, named(v().Situation))}))});
}

ExprPtr contextual_condition() {
    return all_of(
        {based_on_recommendation(),
         any_of({some(v().isBasedOn,
                      all_of({named(v().ContextualKnowledge),
                              some(v().inRelationTo, named(v().Situation))})),
                 some(v().isBasedOn,
                      all_of({named(v().ContextualKnowledge),
                              some(v().inRelationTo, named(v().ObjectRecord))}))})});
}

ExprPtr contrastive_condition() {
    // one recommendation backed by a fact, one backed by a foil
    return all_of({some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                               some(v().used, named(v().Fact))})),
                   some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                               some(v().used, named(v().Foil))}))});
}

ExprPtr counterfactual_condition() {
    // two recommendations, at least one produced from alternative inputs
    return all_of(
        {ClassExpression::at_least(2, v().isBasedOn, named(v().SystemRecommendation)),
         some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                     some(v().used, named(v().AlternativeInput))}))});
}

ExprPtr everyday_condition() {
    return all_of({based_on_recommendation(),
                   some(v().isBasedOn, all_of({named(v().EverydayKnowledge),
                                               some(v().inRelationTo, named(v().User))}))});
}

ExprPtr scientific_evidence() {
    return all_of({named(v().ScientificKnowledge),
                   any_of({some(v().wasGeneratedBy, named(v().Study)),
                           some(v().wasAssociatedWith, named(v().ScientificMethod))})});
}

ExprPtr scientific_condition() {
    // directly based on backed scientific knowledge, or based on a
    // recommendation that used such knowledge
    return any_of(
        {all_of({some(v().isBasedOn, scientific_evidence()), based_on_recommendation()}),
         some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                     some(v().used, scientific_evidence())}))});
}

ExprPtr simulation_based_condition() {
    return all_of({based_on_recommendation(),
                   some(v().isBasedOn, all_of({named(v().Simulation),
                                               some(v().inRelationTo, named(v().Situation))}))});
}

ExprPtr statistical_condition() {
    return some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                       some(v().used, named(v().NumericalEvidence))}));
}

ExprPtr trace_based_condition() {
    return some(v().isBasedOn, all_of({named(v().SystemRecommendation),
                                       some(v().used, named(v().SystemTrace))}));
}

Ontology build_ontology() {
    std::vector<Axiom> axioms;

    const std::vector<Iri> classes = {
        v().Explanation, v().SystemRecommendation, v().AITask, v().DeductiveTask,
        v().InductiveTask, v().AbductiveTask, v().AbstractionTask, v().RankingTask,
        v().AIMethod, v().ReasoningMode, v().User, v().Question, v().ObjectRecord,
        v().Situation, v().ExplanationModality, v().Knowledge, v().ContextualKnowledge,
        v().ScientificKnowledge, v().EverydayKnowledge, v().NumericalEvidence,
        v().SystemTrace, v().AlternativeInput, v().Simulation, v().Fact, v().Foil,
        v().ScientificMethod, v().Study, v().Patient, v().CaseBased, v().Contextual,
        v().Contrastive, v().Counterfactual, v().Everyday, v().Scientific,
        v().SimulationBased, v().Statistical, v().TraceBased,
    };
    for (const Iri& c : classes)
        axioms.push_back(Axiom::class_declaration(c));

    const std::vector<Iri> properties = {
        v().isBasedOn, v().isConceptualizedBy, v().hasSetting, v().implements,
        v().addresses, v().inRelationTo, v().hasOutput, v().isInputIn, v().used,
        v().wasGeneratedBy, v().wasAssociatedWith, vocab::rdf_type(), vocab::rdfs_label(),
        v().hasGenerator, v().hasGenerationTask, v().hasGenerationMethod,
        v().hasExampleQuestion, v().hasContextRequirement,
    };
    for (const Iri& p : properties)
        axioms.push_back(Axiom::property_declaration(p));

    for (const Iri& task :
         {v().DeductiveTask, v().InductiveTask, v().AbductiveTask, v().AbstractionTask,
          v().RankingTask})
        axioms.push_back(Axiom::sub_class_of(task, v().AITask));

    for (const Iri& knowledge :
         {v().ContextualKnowledge, v().ScientificKnowledge, v().EverydayKnowledge,
          v().NumericalEvidence, v().SystemTrace, v().AlternativeInput, v().Simulation})
        axioms.push_back(Axiom::sub_class_of(knowledge, v().Knowledge));

    for (const Iri& type :
         {v().CaseBased, v().Contextual, v().Contrastive, v().Counterfactual, v().Everyday,
          v().Scientific, v().SimulationBased, v().Statistical, v().TraceBased})
        axioms.push_back(Axiom::sub_class_of(type, v().Explanation));

    // What every explanation is based on and conceptualized by.
    axioms.push_back(Axiom::sub_class_of(v().Explanation,
                                         some(v().isBasedOn, named(v().Knowledge))));
    axioms.push_back(Axiom::sub_class_of(v().Explanation,
                                         some(v().isBasedOn, named(v().SystemRecommendation))));
    axioms.push_back(Axiom::sub_class_of(v().Explanation,
                                         some(v().isConceptualizedBy, named(v().AITask))));

    axioms.push_back(Axiom::equivalent_to(v().CaseBased, case_based_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Contextual, contextual_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Contrastive, contrastive_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Counterfactual, counterfactual_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Everyday, everyday_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Scientific, scientific_condition()));
    axioms.push_back(Axiom::equivalent_to(v().SimulationBased, simulation_based_condition()));
    axioms.push_back(Axiom::equivalent_to(v().Statistical, statistical_condition()));
    axioms.push_back(Axiom::equivalent_to(v().TraceBased, trace_based_condition()));

    axioms.push_back(Axiom::disjoint_classes({v().Fact, v().Foil}));

    std::map<Iri, Iri> individuals = {
        {v().TreatmentPlanning, v().ReasoningMode},
        {v().DifferentialDiagnosis, v().ReasoningMode},
        {v().PlanCritiquing, v().ReasoningMode},
        {v().KnowledgeBasedSystem, v().AIMethod},
        {v().DecisionTree, v().AIMethod},
        {v().Clustering, v().AIMethod},
    };

    std::map<Iri, std::string> labels;
    for (const Iri& c : classes)
        labels[c] = vocab::split_camel(local_part(c));
    const std::vector<Iri> data_properties = {
        v().isBasedOn, v().isConceptualizedBy, v().hasSetting, v().implements, v().addresses,
        v().inRelationTo, v().hasOutput, v().isInputIn, v().used, v().wasGeneratedBy,
        v().wasAssociatedWith,
    };
    for (const Iri& p : data_properties)
        labels[p] = to_lower(vocab::split_camel(local_part(p)));
    for (const auto& [individual, type] : individuals)
        labels[individual] = vocab::split_camel(local_part(individual));
    // SIO terms keep their published lowercase labels.
    labels[v().Question] = "question";
    labels[v().Patient] = "patient";
    labels[v().inRelationTo] = "in relation to";
    labels[v().hasOutput] = "has output";
    labels[v().isInputIn] = "is input in";
    // Method individuals carry their catalog answer strings.
    labels[v().KnowledgeBasedSystem] = "Knowledge-based systems";
    labels[v().DecisionTree] = "Machine learning model: decision trees";

    return Ontology(std::move(axioms), vocab::default_prefixes(), std::move(labels),
                    vocab::label_aliases(), std::move(individuals));
}

std::vector<ExplanationTypeSpec> build_type_specs() {
    std::vector<ExplanationTypeSpec> specs;
    specs.push_back(
        {v().CaseBased, "case-based",
         "Provides solutions that are based on actual prior cases that can be presented to "
         "the user to provide compelling support for the system's conclusions, and may "
         "involve analogical reasoning, relying on similarities between features of the case "
         "and of the current situation.",
         "To what other situations has this recommendation been applied?",
         case_based_condition(),
         "formalized: a prior object record in relation to the situation"});
    specs.push_back(
        {v().Contextual, "contextual",
         "Refers to information about items other than the explicit inputs and output, such "
         "as information about the user, situation, and broader environment that affected "
         "the computation.",
         "What broader information about the current situation prompted the suggestion of "
         "this recommendation?",
         contextual_condition(), "published restriction, verbatim"});
    specs.push_back(
        {v().Contrastive, "contrastive",
         "Answers the question \"Why this output instead of that output,\" making a contrast "
         "between the given output and the facts that led to it (inputs and other "
         "considerations), and an alternate output of interest and the foil (facts that "
         "would have led to it).",
         "Why choose option A over option B that I typically choose?",
         contrastive_condition(),
         "formalized: one recommendation backed by a fact, one backed by a foil"});
    specs.push_back(
        {v().Counterfactual, "counterfactual",
         "Addresses the question of what solutions would have been obtained with a different "
         "set of inputs than those used.",
         "What if input A was over 1000?", counterfactual_condition(),
         "formalized: two recommendations, one produced from alternative inputs; introduces "
         "eo:AlternativeInput"});
    specs.push_back(
        {v().Everyday, "everyday",
         "Uses accounts of the real world that appeal to the user, given their general "
         "understanding and knowledge.",
         "Why does option A make sense", everyday_condition(),
         "formalized: everyday knowledge in relation to the user"});
    specs.push_back(
        {v().Scientific, "scientific",
         "References the results of rigorous scientific methods, observations, and "
         "measurements.",
         "What studies have backed this recommendation?", scientific_condition(),
         "published restriction, verbatim"});
    specs.push_back(
        {v().SimulationBased, "simulation-based",
         "Uses an imagined or implemented imitation of a system or process and the results "
         "that emerge from similar inputs.",
         "What would happen if this recommendation is followed?", simulation_based_condition(),
         "formalized: a simulation in relation to the situation; introduces eo:Simulation"});
    specs.push_back(
        {v().Statistical, "statistical",
         "Presents an account of the outcome based on data about the occurrence of events "
         "under specified (e.g., experimental) conditions. Statistical explanations refer to "
         "numerical evidence on the likelihood of factors or processes influencing the "
         "result.",
         "What percentage of people with this condition have recovered?",
         statistical_condition(),
         "formalized: a recommendation that used numerical evidence"});
    specs.push_back(
        {v().TraceBased, "trace-based",
         "Provides the underlying sequence of steps used by the system to arrive at a "
         "specific result, containing the line of reasoning per case and addressing the "
         "question of why and how the application did something.",
         "What steps were taken by the system to generate this recommendation?",
         trace_based_condition(),
         "formalized: a recommendation that used a system trace; introduces eo:SystemTrace"});
    return specs;
}

}  // namespace

const Ontology& builtin_ontology() {
    static const Ontology ont = build_ontology();
    return ont;
}

const std::vector<ExplanationTypeSpec>& explanation_type_specs() {
    static const std::vector<ExplanationTypeSpec> specs = build_type_specs();
    return specs;
}

std::vector<ExplanationTypeSpec> explanation_types(const Ontology&) {
    return explanation_type_specs();
}

ExprPtr sufficiency_condition(const Ontology&, const Iri& type) {
    const ExplanationTypeSpec* spec = find_type_by_iri(type);
    if (spec == nullptr)
        throw UnknownExplanationTypeError(type.value);
    return spec->condition;
}

const ExplanationTypeSpec* find_type_by_token(const std::string& token) {
    for (const ExplanationTypeSpec& spec : explanation_type_specs())
        if (spec.token == token)
            return &spec;
    return nullptr;
}

const ExplanationTypeSpec* find_type_by_iri(const Iri& iri) {
    for (const ExplanationTypeSpec& spec : explanation_type_specs())
        if (spec.class_iri == iri)
            return &spec;
    return nullptr;
}

SeedKnowledgeBase seed_kb() {
    SeedKnowledgeBase kb;
    kb.generators[v().TraceBased] = {
        {std::nullopt, v().KnowledgeBasedSystem},
        {std::nullopt, v().DecisionTree},
    };
    kb.generators[v().Statistical] = {
        {v().InductiveTask, v().Clustering},
    };
    kb.example_questions[v().Counterfactual] = {
        "What other factors about the patient does the system know of?",
        "What if the major problem was a fasting plasma glucose?",
    };
    kb.context_rules[v().Contrastive] = {v().AbductiveTask, v().RankingTask, v().Fact,
                                         v().Foil};
    return kb;
}

void apply_seed_overlay(SeedKnowledgeBase& kb, const Ontology& ont, const Graph& overlay) {
    auto type_of = [&](const Term& t) -> Iri {
        if (!is_iri(t))
            throw UnknownExplanationTypeError("overlay subject is not an IRI");
        const ExplanationTypeSpec* spec = find_type_by_iri(as_iri(t));
        if (spec == nullptr)
            throw UnknownExplanationTypeError(as_iri(t).value);
        return spec->class_iri;
    };

    for (const Triple& t : overlay.triples()) {
        if (t.predicate == v().hasGenerator) {
            Iri type = type_of(t.subject);
            GenerationEntry entry;
            auto tasks = overlay.objects(t.object, v().hasGenerationTask);
            if (!tasks.empty()) {
                if (!is_iri(tasks.front()) || !ont.is_declared(as_iri(tasks.front())))
                    throw UnknownNameError("overlay generation task");
                entry.task = as_iri(tasks.front());
            }
            auto methods = overlay.objects(t.object, v().hasGenerationMethod);
            if (methods.empty() || !is_iri(methods.front()))
                throw Error("overlay generator without eo:hasGenerationMethod");
            if (!ont.is_declared(as_iri(methods.front())))
                throw UnknownNameError(as_iri(methods.front()).value);
            entry.method = as_iri(methods.front());
            auto& entries = kb.generators[type];
            if (std::find(entries.begin(), entries.end(), entry) == entries.end())
                entries.push_back(entry);
        } else if (t.predicate == v().hasExampleQuestion) {
            Iri type = type_of(t.subject);
            if (!is_literal(t.object))
                throw Error("overlay example question must be a literal");
            auto& questions = kb.example_questions[type];
            const std::string& text = as_literal(t.object).text;
            if (std::find(questions.begin(), questions.end(), text) == questions.end())
                questions.push_back(text);
        } else if (t.predicate == v().hasContextRequirement) {
            Iri type = type_of(t.subject);
            if (!is_iri(t.object) || !ont.is_declared(as_iri(t.object)))
                throw UnknownNameError("overlay context requirement");
            kb.context_rules[type].insert(as_iri(t.object));
        }
    }
}

}  // namespace eo
