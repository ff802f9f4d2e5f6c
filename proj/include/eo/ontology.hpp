#ifndef EO_ONTOLOGY_HPP
#define EO_ONTOLOGY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/graph.hpp"
#include "eo/prefix_map.hpp"
#include "eo/term.hpp"

namespace eo {

struct Axiom {
    enum class Kind {
        SubClassOf,          // subject ⊑ super_class | super_expression
        EquivalentTo,        // subject ≡ expression
        DisjointClasses,     // pairwise disjoint set
        ClassDeclaration,
        PropertyDeclaration,
    };

    Kind kind;
    Iri subject;
    std::optional<Iri> super_class;
    ExprPtr expression;
    std::vector<Iri> disjoint;

    static Axiom sub_class_of(Iri sub, Iri super);
    static Axiom sub_class_of(Iri sub, ExprPtr super);
    static Axiom equivalent_to(Iri cls, ExprPtr expr);
    static Axiom disjoint_classes(std::vector<Iri> classes);
    static Axiom class_declaration(Iri cls);
    static Axiom property_declaration(Iri prop);
};

/// Immutable schema: axioms, prefixes, labels, the label alias table and
/// the named individuals. Construction validates that every IRI used in
/// an axiom is declared and that the named subclass graph is acyclic.
class Ontology {
public:
    Ontology(std::vector<Axiom> axioms, PrefixMap prefixes,
             std::map<Iri, std::string> labels, std::map<std::string, Iri> label_aliases,
             std::map<Iri, Iri> individuals);

    const std::vector<Axiom>& axioms() const { return m_axioms; }
    const PrefixMap& prefixes() const { return m_prefixes; }

    bool is_declared_class(const Iri& iri) const { return m_classes.count(iri) != 0; }
    bool is_declared_property(const Iri& iri) const { return m_properties.count(iri) != 0; }
    bool is_declared(const Iri& iri) const;

    const std::set<Iri>& classes() const { return m_classes; }
    const std::set<Iri>& properties() const { return m_properties; }
    /// individual -> asserted type
    const std::map<Iri, Iri>& individuals() const { return m_individuals; }

    std::optional<std::string> label(const Iri& iri) const;
    const std::map<Iri, std::string>& labels() const { return m_labels; }
    const std::map<std::string, Iri>& label_aliases() const { return m_label_aliases; }

    /// Direct named superclasses.
    const std::map<Iri, std::set<Iri>>& subclass_edges() const { return m_subclass_edges; }
    /// (class, equivalent expression) pairs in axiom order.
    const std::vector<std::pair<Iri, ExprPtr>>& equivalences() const { return m_equivalences; }
    /// Expression superclasses of a named class.
    std::vector<ExprPtr> subclass_expressions(const Iri& cls) const;
    std::vector<std::vector<Iri>> disjoint_sets() const;

private:
    void index_and_validate();

    std::vector<Axiom> m_axioms;
    PrefixMap m_prefixes;
    std::map<Iri, std::string> m_labels;
    std::map<std::string, Iri> m_label_aliases;
    std::map<Iri, Iri> m_individuals;

    std::set<Iri> m_classes;
    std::set<Iri> m_properties;
    std::map<Iri, std::set<Iri>> m_subclass_edges;
    std::vector<std::pair<Iri, ExprPtr>> m_equivalences;
};

/// The built-in explanation ontology: class and property hierarchy, the
/// nine explanation types with their sufficiency conditions, disjointness
/// of fact and foil, and the reasoning-mode and method individuals.
const Ontology& builtin_ontology();

/// One of the nine explanation types.
struct ExplanationTypeSpec {
    Iri class_iri;
    std::string token;                 // kebab-case command-line name
    std::string description;
    std::string prototypical_question;
    ExprPtr condition;
    std::string provenance_note;
};

/// The nine specs, in catalog order: case-based, contextual, contrastive,
/// counterfactual, everyday, scientific, simulation-based, statistical,
/// trace-based.
const std::vector<ExplanationTypeSpec>& explanation_type_specs();
std::vector<ExplanationTypeSpec> explanation_types(const Ontology& ont);

/// The equivalent-class expression for one of the nine types.
/// Throws UnknownExplanationTypeError otherwise.
ExprPtr sufficiency_condition(const Ontology& ont, const Iri& type);

const ExplanationTypeSpec* find_type_by_token(const std::string& token);
const ExplanationTypeSpec* find_type_by_iri(const Iri& iri);

/// A way to generate one explanation type: optional AI task plus method.
struct GenerationEntry {
    std::optional<Iri> task;
    Iri method;

    bool operator<(const GenerationEntry& other) const {
        return std::tie(task, method) < std::tie(other.task, other.method);
    }
    bool operator==(const GenerationEntry& other) const {
        return task == other.task && method == other.method;
    }
};

/// Catalog data keyed by explanation-type IRI: known generators, example
/// questions, and the context classes/tasks under which a type applies.
struct SeedKnowledgeBase {
    std::map<Iri, std::vector<GenerationEntry>> generators;
    std::map<Iri, std::vector<std::string>> example_questions;
    std::map<Iri, std::set<Iri>> context_rules;
};

SeedKnowledgeBase seed_kb();

/// Merge an overlay graph (Turtle subset, eo vocabulary) into a seed KB:
///   <type> eo:hasGenerator [ eo:hasGenerationTask <task> ;
///                            eo:hasGenerationMethod <method> ] .
///   <type> eo:hasExampleQuestion "..." .
///   <type> eo:hasContextRequirement <class-or-task> .
void apply_seed_overlay(SeedKnowledgeBase& kb, const Ontology& ont, const Graph& overlay);

}  // namespace eo

#endif
