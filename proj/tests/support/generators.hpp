#ifndef EO_TESTS_GENERATORS_HPP
#define EO_TESTS_GENERATORS_HPP

#include <random>
#include <utility>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/graph.hpp"
#include "eo/recommender.hpp"

namespace eo::tests {

/// Declared classes and properties the generators draw from.
const std::vector<Iri>& class_pool();
const std::vector<Iri>& property_pool();

/// Random expression over the pools, depth-bounded.
ExprPtr random_expression(std::mt19937& rng, int max_depth);

/// Random instance graph: <= max_nodes IRI nodes, <= max_triples triples,
/// plus a few leaf blank nodes (each referenced exactly once, so the
/// graph serializes).
Graph random_graph(std::mt19937& rng, std::size_t max_nodes, std::size_t max_triples);

/// A pair (g, g') with g's triples a subset of g''s.
std::pair<Graph, Graph> random_graph_pair(std::mt19937& rng);

/// Random capability profile over declared classes and tasks.
CapabilityProfile random_profile(std::mt19937& rng);

/// A pair (p, p') where p' extends p.
std::pair<CapabilityProfile, CapabilityProfile> random_profile_pair(std::mt19937& rng);

/// A graph constructed to satisfy `expr` at its returned root node:
/// fresh nodes typed per Named leaves, fresh objects per restriction
/// (unions follow their first branch).
std::pair<Graph, Term> witness_graph(const ClassExpression& expr);

}  // namespace eo::tests

#endif
