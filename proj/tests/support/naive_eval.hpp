#ifndef EO_TESTS_NAIVE_EVAL_HPP
#define EO_TESTS_NAIVE_EVAL_HPP

#include <set>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/graph.hpp"
#include "eo/ontology.hpp"

namespace eo::tests {

// Reference evaluator, deliberately index-free: plain linear scans over
// the triple list and axiom walks for the subclass closure. Used as the
// oracle against the indexed reasoner.

std::set<Iri> naive_superclasses(const Ontology& ont, const Iri& cls);

bool naive_holds(const Ontology& ont, const std::vector<Triple>& triples, const Term& node,
                 const ClassExpression& expr);

std::vector<Term> naive_instances(const Ontology& ont, const std::vector<Triple>& triples,
                                  const ClassExpression& expr);

}  // namespace eo::tests

#endif
