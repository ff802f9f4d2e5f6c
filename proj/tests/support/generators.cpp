#include "support/generators.hpp"

#include <string>

#include "eo/ontology.hpp"
#include "eo/vocab.hpp"

namespace eo::tests {

namespace {

Iri instance_node(std::size_t i) {
    return Iri{std::string(vocab::kInstance) + "n" + std::to_string(i)};
}

std::size_t pick(std::mt19937& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool chance(std::mt19937& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

const std::vector<Iri>& class_pool() {
    static const std::vector<Iri> pool = [] {
        const Ontology& ont = builtin_ontology();
        return std::vector<Iri>(ont.classes().begin(), ont.classes().end());
    }();
    return pool;
}

const std::vector<Iri>& property_pool() {
    static const std::vector<Iri> pool = {
        vocab::ep("isBasedOn"),     vocab::ep("isConceptualizedBy"), vocab::ep("hasSetting"),
        vocab::eo("implements"),    vocab::eo("addresses"),          vocab::sio("inRelationTo"),
        vocab::sio("hasOutput"),    vocab::sio("isInputIn"),         vocab::prov("used"),
        vocab::prov("wasGeneratedBy"), vocab::prov("wasAssociatedWith"),
    };
    return pool;
}

ExprPtr random_expression(std::mt19937& rng, int max_depth) {
    if (max_depth <= 1 || chance(rng, 0.3))
        return ClassExpression::named(class_pool()[pick(rng, class_pool().size())]);

    switch (pick(rng, 4)) {
        case 0: {
            std::vector<ExprPtr> ops;
            std::size_t n = 2 + pick(rng, 2);
            for (std::size_t i = 0; i < n; ++i)
                ops.push_back(random_expression(rng, max_depth - 1));
            return ClassExpression::intersection(std::move(ops));
        }
        case 1: {
            std::vector<ExprPtr> ops;
            std::size_t n = 2 + pick(rng, 2);
            for (std::size_t i = 0; i < n; ++i)
                ops.push_back(random_expression(rng, max_depth - 1));
            return ClassExpression::union_of(std::move(ops));
        }
        case 2:
            return ClassExpression::some(property_pool()[pick(rng, property_pool().size())],
                                         random_expression(rng, max_depth - 1));
        default:
            return ClassExpression::at_least(
                1 + static_cast<unsigned>(pick(rng, 3)),
                property_pool()[pick(rng, property_pool().size())],
                random_expression(rng, max_depth - 1));
    }
}

Graph random_graph(std::mt19937& rng, std::size_t max_nodes, std::size_t max_triples) {
    GraphBuilder builder;
    std::size_t n_nodes = 1 + pick(rng, max_nodes);
    std::size_t n_triples = pick(rng, max_triples + 1);

    auto node = [&](std::size_t i) { return instance_node(i); };

    for (std::size_t i = 0; i < n_triples; ++i) {
        Term subject = node(pick(rng, n_nodes));
        if (chance(rng, 0.4)) {
            builder.insert(Triple(subject, vocab::rdf_type(),
                                  class_pool()[pick(rng, class_pool().size())]));
        } else {
            Iri predicate = property_pool()[pick(rng, property_pool().size())];
            Term object = chance(rng, 0.1)
                              ? Term{Literal{"v" + std::to_string(pick(rng, 5)), {}}}
                              : Term{node(pick(rng, n_nodes))};
            builder.insert(Triple(subject, predicate, object));
        }
    }

    // a few leaf blanks, each referenced exactly once
    std::size_t n_blanks = pick(rng, 4);
    for (std::size_t i = 0; i < n_blanks; ++i) {
        BlankNode blank{"b" + std::to_string(i)};
        builder.insert(Triple(node(pick(rng, n_nodes)),
                              property_pool()[pick(rng, property_pool().size())], blank));
        builder.insert(Triple(blank, vocab::rdf_type(),
                              class_pool()[pick(rng, class_pool().size())]));
    }
    return builder.seal();
}

std::pair<Graph, Graph> random_graph_pair(std::mt19937& rng) {
    Graph small = random_graph(rng, 20, 60);
    GraphBuilder extended;
    for (const Triple& t : small.triples())
        extended.insert(t);
    std::size_t extra = pick(rng, 40);
    for (std::size_t i = 0; i < extra; ++i) {
        Term subject = instance_node(pick(rng, 30));
        if (chance(rng, 0.5))
            extended.insert(Triple(subject, vocab::rdf_type(),
                                   class_pool()[pick(rng, class_pool().size())]));
        else
            extended.insert(Triple(subject,
                                   property_pool()[pick(rng, property_pool().size())],
                                   instance_node(pick(rng, 30))));
    }
    return {std::move(small), extended.seal()};
}

CapabilityProfile random_profile(std::mt19937& rng) {
    CapabilityProfile profile;
    for (const Iri& c : class_pool())
        if (chance(rng, 0.25))
            profile.producible_classes.insert(c);
    const Ontology& ont = builtin_ontology();
    for (const Iri& task : {vocab::eo("DeductiveTask"), vocab::eo("InductiveTask"),
                            vocab::eo("AbductiveTask"), vocab::eo("AbstractionTask"),
                            vocab::eo("RankingTask")})
        if (ont.is_declared_class(task) && chance(rng, 0.3))
            profile.tasks.insert(task);
    return profile;
}

std::pair<CapabilityProfile, CapabilityProfile> random_profile_pair(std::mt19937& rng) {
    CapabilityProfile base = random_profile(rng);
    CapabilityProfile extended = base;
    for (const Iri& c : class_pool())
        if (chance(rng, 0.2))
            extended.producible_classes.insert(c);
    if (chance(rng, 0.5))
        extended.tasks.insert(vocab::eo("RankingTask"));
    return {std::move(base), std::move(extended)};
}

namespace {

void build_witness(GraphBuilder& builder, const Term& node, const ClassExpression& expr,
                   std::size_t& next_node) {
    switch (expr.kind()) {
        case ClassExpression::Kind::Named:
            builder.insert(Triple(node, vocab::rdf_type(), expr.iri()));
            return;
        case ClassExpression::Kind::And:
            for (const auto& op : expr.operands())
                build_witness(builder, node, *op, next_node);
            return;
        case ClassExpression::Kind::Or:
            build_witness(builder, node, *expr.operands().front(), next_node);
            return;
        case ClassExpression::Kind::Some: {
            Term filler = Iri{std::string(vocab::kInstance) + "w" + std::to_string(next_node++)};
            builder.insert(Triple(node, expr.property(), filler));
            build_witness(builder, filler, *expr.filler(), next_node);
            return;
        }
        case ClassExpression::Kind::AtLeast: {
            for (unsigned i = 0; i < expr.cardinality(); ++i) {
                Term filler =
                    Iri{std::string(vocab::kInstance) + "w" + std::to_string(next_node++)};
                builder.insert(Triple(node, expr.property(), filler));
                build_witness(builder, filler, *expr.filler(), next_node);
            }
            return;
        }
    }
}

}  // namespace

std::pair<Graph, Term> witness_graph(const ClassExpression& expr) {
    GraphBuilder builder;
    Term root = Iri{std::string(vocab::kInstance) + "root"};
    std::size_t next_node = 0;
    build_witness(builder, root, expr, next_node);
    return {builder.seal(), root};
}

}  // namespace eo::tests
