#ifndef EO_CLASS_EXPRESSION_HPP
#define EO_CLASS_EXPRESSION_HPP

#include <memory>
#include <set>
#include <vector>

#include "eo/term.hpp"

namespace eo {

class ClassExpression;
using ExprPtr = std::shared_ptr<const ClassExpression>;

/// Immutable class-expression tree: named class, intersection, union,
/// existential restriction, minimum cardinality restriction.
class ClassExpression {
public:
    enum class Kind { Named, And, Or, Some, AtLeast };

    static ExprPtr named(Iri iri);
    /// operands.size() >= 2 enforced.
    static ExprPtr intersection(std::vector<ExprPtr> operands);
    static ExprPtr union_of(std::vector<ExprPtr> operands);
    static ExprPtr some(Iri property, ExprPtr filler);
    /// n >= 1 enforced; at_least(1, p, c) means the same as some(p, c).
    static ExprPtr at_least(unsigned n, Iri property, ExprPtr filler);

    Kind kind() const { return m_kind; }

    const Iri& iri() const;                       // Named
    const std::vector<ExprPtr>& operands() const; // And / Or
    const Iri& property() const;                  // Some / AtLeast
    const ExprPtr& filler() const;                // Some / AtLeast
    unsigned cardinality() const;                 // AtLeast

    bool equals(const ClassExpression& other) const;

    /// All named-class IRIs at the leaves.
    void collect_named_leaves(std::set<Iri>& out) const;
    /// All property IRIs on restrictions.
    void collect_properties(std::set<Iri>& out) const;

private:
    ClassExpression() = default;

    Kind m_kind = Kind::Named;
    Iri m_iri;
    Iri m_property;
    unsigned m_cardinality = 0;
    std::vector<ExprPtr> m_operands;
    ExprPtr m_filler;
};

inline bool operator==(const ClassExpression& a, const ClassExpression& b) {
    return a.equals(b);
}

}  // namespace eo

#endif
