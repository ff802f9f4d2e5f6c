#include "eo/class_expression.hpp"

#include "eo/errors.hpp"

namespace eo {

ExprPtr ClassExpression::named(Iri iri) {
    auto e = std::shared_ptr<ClassExpression>(new ClassExpression());
    e->m_kind = Kind::Named;
    e->m_iri = std::move(iri);
    return e;
}

ExprPtr ClassExpression::intersection(std::vector<ExprPtr> operands) {
    if (operands.size() < 2)
        throw Error("intersection needs at least two operands");
    auto e = std::shared_ptr<ClassExpression>(new ClassExpression());
    e->m_kind = Kind::And;
    e->m_operands = std::move(operands);
    return e;
}

ExprPtr ClassExpression::union_of(std::vector<ExprPtr> operands) {
    if (operands.size() < 2)
        throw Error("union needs at least two operands");
    auto e = std::shared_ptr<ClassExpression>(new ClassExpression());
    e->m_kind = Kind::Or;
    e->m_operands = std::move(operands);
    return e;
}

ExprPtr ClassExpression::some(Iri property, ExprPtr filler) {
    auto e = std::shared_ptr<ClassExpression>(new ClassExpression());
    e->m_kind = Kind::Some;
    e->m_property = std::move(property);
    e->m_filler = std::move(filler);
    return e;
}

ExprPtr ClassExpression::at_least(unsigned n, Iri property, ExprPtr filler) {
    if (n < 1)
        throw Error("min cardinality must be at least 1");
    auto e = std::shared_ptr<ClassExpression>(new ClassExpression());
    e->m_kind = Kind::AtLeast;
    e->m_cardinality = n;
    e->m_property = std::move(property);
    e->m_filler = std::move(filler);
    return e;
}

const Iri& ClassExpression::iri() const {
    if (m_kind != Kind::Named)
        throw Error("iri() on non-named expression");
    return m_iri;
}

const std::vector<ExprPtr>& ClassExpression::operands() const {
    if (m_kind != Kind::And && m_kind != Kind::Or)
        throw Error("operands() on non-boolean expression");
    return m_operands;
}

const Iri& ClassExpression::property() const {
    if (m_kind != Kind::Some && m_kind != Kind::AtLeast)
        throw Error("property() on non-restriction expression");
    return m_property;
}

const ExprPtr& ClassExpression::filler() const {
    if (m_kind != Kind::Some && m_kind != Kind::AtLeast)
        throw Error("filler() on non-restriction expression");
    return m_filler;
}

unsigned ClassExpression::cardinality() const {
    if (m_kind != Kind::AtLeast)
        throw Error("cardinality() on non-cardinality expression");
    return m_cardinality;
}

bool ClassExpression::equals(const ClassExpression& other) const {
    if (m_kind != other.m_kind)
        return false;
    switch (m_kind) {
        case Kind::Named:
            return m_iri == other.m_iri;
        case Kind::And:
        case Kind::Or: {
            if (m_operands.size() != other.m_operands.size())
                return false;
            for (std::size_t i = 0; i < m_operands.size(); ++i)
                if (!m_operands[i]->equals(*other.m_operands[i]))
                    return false;
            return true;
        }
        case Kind::Some:
            return m_property == other.m_property && m_filler->equals(*other.m_filler);
        case Kind::AtLeast:
            return m_cardinality == other.m_cardinality && m_property == other.m_property &&
                   m_filler->equals(*other.m_filler);
    }
    return false;
}

void ClassExpression::collect_named_leaves(std::set<Iri>& out) const {
    switch (m_kind) {
        case Kind::Named:
            out.insert(m_iri);
            return;
        case Kind::And:
        case Kind::Or:
            for (const auto& op : m_operands)
                op->collect_named_leaves(out);
            return;
        case Kind::Some:
        case Kind::AtLeast:
            m_filler->collect_named_leaves(out);
            return;
    }
}

void ClassExpression::collect_properties(std::set<Iri>& out) const {
    switch (m_kind) {
        case Kind::Named:
            return;
        case Kind::And:
        case Kind::Or:
            for (const auto& op : m_operands)
                op->collect_properties(out);
            return;
        case Kind::Some:
        case Kind::AtLeast:
            out.insert(m_property);
            m_filler->collect_properties(out);
            return;
    }
}

}  // namespace eo
