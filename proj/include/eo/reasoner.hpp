#ifndef EO_REASONER_HPP
#define EO_REASONER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/graph.hpp"
#include "eo/ontology.hpp"
#include "eo/term.hpp"

namespace eo {

/// Evaluation trace mirroring the expression tree. For restrictions,
/// `candidates` are the property's objects on the node, `witnesses` the
/// ones whose filler check succeeded, and `children` the filler traces
/// per candidate (same order as `candidates`).
struct TraceNode {
    ExprPtr expression;
    bool satisfied = false;
    std::vector<Term> candidates;
    std::vector<Term> witnesses;
    std::vector<TraceNode> children;
    std::string note;
};

struct MembershipReport {
    Term node;
    ExprPtr expression;
    bool satisfied = false;
    TraceNode trace;
};

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Warning;
    std::string code;
    std::string message;
    std::vector<Term> terms;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& diags) {
    for (const Diagnostic& d : diags)
        if (d.severity == Diagnostic::Severity::Error)
            return true;
    return false;
}

/// Reflexive-transitive closure over named subclass axioms.
/// Throws UnknownClassError for undeclared classes.
std::set<Iri> superclasses(const Ontology& ont, const Iri& cls);

/// Closed-world instance checking over one sealed graph. All operations
/// are read-only; instances may be shared across threads.
class Reasoner {
public:
    Reasoner(const Ontology& ont, const Graph& graph);

    const Graph& graph() const { return m_graph; }
    const Ontology& ontology() const { return m_ont; }

    std::set<Iri> superclasses(const Iri& cls) const;

    /// Closed-world semantics: Named C holds when an asserted (or, given
    /// `derived`, a derived) type is C or a subclass of C; Some(p, C)
    /// when some object of p on the node satisfies C; AtLeast(n, p, C)
    /// when at least n distinct such objects do; And/Or as usual.
    /// Absent facts are false; there is no negation.
    MembershipReport check_membership(const Term& node, const ExprPtr& expr) const;

    /// Nodes satisfying the expression, in deterministic sorted order.
    std::vector<Term> instances_of(const ExprPtr& expr) const;

    /// Least fixpoint over the equivalence axioms: derive a type for a
    /// node whenever its condition holds, until nothing changes. Maps
    /// each node to every explanation type it ends up in (asserted or
    /// derived); nodes with none are absent.
    std::map<Term, std::set<Iri>> classify_explanations() const;

    /// Errors for disjointness violations; warnings for undeclared
    /// predicates/classes and for explanation instances that fail the
    /// base explanation axioms.
    Diagnostics validate_graph() const;

    /// Membership evaluation with an explicit set of derived types per
    /// node (used by the classification fixpoint; empty map for plain
    /// asserted-type checking).
    bool holds(const Term& node, const ClassExpression& expr,
               const std::map<Term, std::set<Iri>>& derived) const;

private:
    bool named_holds(const Term& node, const Iri& cls,
                     const std::map<Term, std::set<Iri>>& derived) const;
    TraceNode evaluate_trace(const Term& node, const ExprPtr& expr,
                             const std::map<Term, std::set<Iri>>& derived) const;

    const Ontology& m_ont;
    const Graph& m_graph;
    std::map<Iri, std::set<Iri>> m_closure_cache;  // filled at construction
};

/// Free-function forms matching the operation names used elsewhere.
MembershipReport check_membership(const Ontology& ont, const Graph& graph, const Term& node,
                                  const ExprPtr& expr);
std::vector<Term> instances_of(const Ontology& ont, const Graph& graph, const ExprPtr& expr);
std::map<Term, std::set<Iri>> classify_explanations(const Ontology& ont, const Graph& graph);
Diagnostics validate_graph(const Ontology& ont, const Graph& graph);

}  // namespace eo

#endif
