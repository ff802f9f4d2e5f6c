#include "eo/reasoner.hpp"

#include <algorithm>

#include "eo/errors.hpp"
#include "eo/manchester.hpp"
#include "eo/vocab.hpp"

namespace eo {

namespace {

std::set<Iri> compute_closure(const std::map<Iri, std::set<Iri>>& edges, const Iri& cls) {
    std::set<Iri> closure{cls};
    std::vector<Iri> frontier{cls};
    while (!frontier.empty()) {
        Iri current = frontier.back();
        frontier.pop_back();
        auto it = edges.find(current);
        if (it == edges.end())
            continue;
        for (const Iri& super : it->second)
            if (closure.insert(super).second)
                frontier.push_back(super);
    }
    return closure;
}

const std::map<Term, std::set<Iri>>& no_derived() {
    static const std::map<Term, std::set<Iri>> empty;
    return empty;
}

}  // namespace

std::set<Iri> superclasses(const Ontology& ont, const Iri& cls) {
    if (!ont.is_declared_class(cls))
        throw UnknownClassError(cls.value);
    return compute_closure(ont.subclass_edges(), cls);
}

Reasoner::Reasoner(const Ontology& ont, const Graph& graph) : m_ont(ont), m_graph(graph) {
    // Precomputed once so that later queries stay read-only and the
    // reasoner can be shared across threads.
    for (const Iri& cls : ont.classes())
        m_closure_cache[cls] = compute_closure(ont.subclass_edges(), cls);
}

std::set<Iri> Reasoner::superclasses(const Iri& cls) const {
    auto it = m_closure_cache.find(cls);
    if (it == m_closure_cache.end())
        throw UnknownClassError(cls.value);
    return it->second;
}

bool Reasoner::named_holds(const Term& node, const Iri& cls,
                           const std::map<Term, std::set<Iri>>& derived) const {
    auto in_closure = [&](const Iri& type) {
        auto it = m_closure_cache.find(type);
        if (it == m_closure_cache.end())
            return type == cls;  // undeclared types only name themselves
        return it->second.count(cls) != 0;
    };
    for (const Term& o : m_graph.objects(node, vocab::rdf_type()))
        if (is_iri(o) && in_closure(as_iri(o)))
            return true;
    auto it = derived.find(node);
    if (it != derived.end())
        for (const Iri& type : it->second)
            if (in_closure(type))
                return true;
    return false;
}

bool Reasoner::holds(const Term& node, const ClassExpression& expr,
                     const std::map<Term, std::set<Iri>>& derived) const {
    switch (expr.kind()) {
        case ClassExpression::Kind::Named:
            return named_holds(node, expr.iri(), derived);
        case ClassExpression::Kind::And:
            for (const auto& op : expr.operands())
                if (!holds(node, *op, derived))
                    return false;
            return true;
        case ClassExpression::Kind::Or:
            for (const auto& op : expr.operands())
                if (holds(node, *op, derived))
                    return true;
            return false;
        case ClassExpression::Kind::Some:
            for (const Term& o : m_graph.objects(node, expr.property()))
                if (holds(o, *expr.filler(), derived))
                    return true;
            return false;
        case ClassExpression::Kind::AtLeast: {
            unsigned hits = 0;
            for (const Term& o : m_graph.objects(node, expr.property())) {
                if (holds(o, *expr.filler(), derived))
                    ++hits;
                if (hits >= expr.cardinality())
                    return true;
            }
            return false;
        }
    }
    return false;
}

TraceNode Reasoner::evaluate_trace(const Term& node, const ExprPtr& expr,
                                   const std::map<Term, std::set<Iri>>& derived) const {
    TraceNode trace;
    trace.expression = expr;
    switch (expr->kind()) {
        case ClassExpression::Kind::Named: {
            trace.satisfied = named_holds(node, expr->iri(), derived);
            if (!m_ont.is_declared_class(expr->iri()))
                trace.note = "unknown class " + expr->iri().value;
            break;
        }
        case ClassExpression::Kind::And: {
            trace.satisfied = true;
            for (const auto& op : expr->operands()) {
                trace.children.push_back(evaluate_trace(node, op, derived));
                trace.satisfied = trace.satisfied && trace.children.back().satisfied;
            }
            break;
        }
        case ClassExpression::Kind::Or: {
            trace.satisfied = false;
            for (const auto& op : expr->operands()) {
                trace.children.push_back(evaluate_trace(node, op, derived));
                trace.satisfied = trace.satisfied || trace.children.back().satisfied;
            }
            break;
        }
        case ClassExpression::Kind::Some:
        case ClassExpression::Kind::AtLeast: {
            trace.candidates = m_graph.objects(node, expr->property());
            for (const Term& o : trace.candidates) {
                trace.children.push_back(evaluate_trace(o, expr->filler(), derived));
                if (trace.children.back().satisfied)
                    trace.witnesses.push_back(o);
            }
            unsigned required =
                expr->kind() == ClassExpression::Kind::AtLeast ? expr->cardinality() : 1;
            trace.satisfied = trace.witnesses.size() >= required;
            if (!trace.satisfied) {
                if (trace.candidates.empty())
                    trace.note = "no assertions with this property on the node";
                else
                    trace.note = "only " + std::to_string(trace.witnesses.size()) + " of " +
                                 std::to_string(required) + " required fillers found";
            }
            break;
        }
    }
    return trace;
}

MembershipReport Reasoner::check_membership(const Term& node, const ExprPtr& expr) const {
    MembershipReport report;
    report.node = node;
    report.expression = expr;
    report.trace = evaluate_trace(node, expr, no_derived());
    report.satisfied = report.trace.satisfied;
    return report;
}

std::vector<Term> Reasoner::instances_of(const ExprPtr& expr) const {
    std::vector<Term> out;
    for (const Term& node : m_graph.nodes())
        if (holds(node, *expr, no_derived()))
            out.push_back(node);
    return out;
}

std::map<Term, std::set<Iri>> Reasoner::classify_explanations() const {
    const std::vector<Term> universe = m_graph.nodes();
    std::map<Term, std::set<Iri>> derived;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Term& node : universe) {
            for (const auto& [cls, condition] : m_ont.equivalences()) {
                if (derived.count(node) && derived[node].count(cls))
                    continue;
                if (holds(node, *condition, derived)) {
                    derived[node].insert(cls);
                    changed = true;
                }
            }
        }
    }

    std::map<Term, std::set<Iri>> result;
    for (const Term& node : universe) {
        std::set<Iri> memberships;
        for (const ExplanationTypeSpec& spec : explanation_type_specs())
            if (named_holds(node, spec.class_iri, derived))
                memberships.insert(spec.class_iri);
        if (!memberships.empty())
            result[node] = std::move(memberships);
    }
    return result;
}

Diagnostics Reasoner::validate_graph() const {
    Diagnostics out;

    // disjointness violations (asserted types, expanded through the
    // subclass hierarchy)
    for (const Term& node : m_graph.nodes()) {
        std::set<Iri> effective;
        for (const Term& o : m_graph.objects(node, vocab::rdf_type())) {
            if (!is_iri(o))
                continue;
            auto it = m_closure_cache.find(as_iri(o));
            if (it == m_closure_cache.end())
                effective.insert(as_iri(o));
            else
                effective.insert(it->second.begin(), it->second.end());
        }
        for (const auto& dis : m_ont.disjoint_sets()) {
            std::vector<Iri> members;
            for (const Iri& c : dis)
                if (effective.count(c))
                    members.push_back(c);
            if (members.size() >= 2) {
                Diagnostic d;
                d.severity = Diagnostic::Severity::Error;
                d.code = "disjointness-violation";
                d.message = "node is an instance of disjoint classes";
                d.terms.push_back(node);
                for (const Iri& c : members)
                    d.terms.push_back(c);
                out.push_back(std::move(d));
            }
        }
    }

    // undeclared predicates and classes
    std::set<Iri> unknown;
    for (const Triple& t : m_graph.triples()) {
        if (!m_ont.is_declared_property(t.predicate))
            unknown.insert(t.predicate);
        if (t.predicate == vocab::rdf_type() && is_iri(t.object) &&
            !m_ont.is_declared_class(as_iri(t.object)))
            unknown.insert(as_iri(t.object));
    }
    for (const Iri& iri : unknown) {
        Diagnostic d;
        d.severity = Diagnostic::Severity::Warning;
        d.code = "unknown-term";
        d.message = "term is not declared in the ontology";
        d.terms.push_back(iri);
        out.push_back(std::move(d));
    }

    // explanation instances that violate the base explanation axioms
    const Iri explanation = vocab::ep("Explanation");
    for (const Term& node : m_graph.nodes()) {
        if (!named_holds(node, explanation, no_derived()))
            continue;
        for (const ExprPtr& axiom : m_ont.subclass_expressions(explanation)) {
            if (holds(node, *axiom, no_derived()))
                continue;
            Diagnostic d;
            d.severity = Diagnostic::Severity::Warning;
            d.code = "incomplete-explanation";
            d.message = "explanation instance does not satisfy: " +
                        serialize_manchester(*axiom, m_ont.prefixes());
            d.terms.push_back(node);
            out.push_back(std::move(d));
        }
    }

    return out;
}

MembershipReport check_membership(const Ontology& ont, const Graph& graph, const Term& node,
                                  const ExprPtr& expr) {
    return Reasoner(ont, graph).check_membership(node, expr);
}

std::vector<Term> instances_of(const Ontology& ont, const Graph& graph, const ExprPtr& expr) {
    return Reasoner(ont, graph).instances_of(expr);
}

std::map<Term, std::set<Iri>> classify_explanations(const Ontology& ont, const Graph& graph) {
    return Reasoner(ont, graph).classify_explanations();
}

Diagnostics validate_graph(const Ontology& ont, const Graph& graph) {
    return Reasoner(ont, graph).validate_graph();
}

}  // namespace eo
