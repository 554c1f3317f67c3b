#pragma once

#include <random>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace testutil {

inline lpa::IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    lpa::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entries[i * c + j];
    return m;
}

inline lpa::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_abs) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-max_abs, max_abs);
    lpa::IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

// Random multigraph on up to max_v vertices; finite multiplicities up to
// max_mult, with probability inf_prob of an infinite entry per edge slot.
inline lpa::Graph random_graph(std::mt19937_64& rng, std::size_t max_v, long max_mult,
                               double edge_prob = 0.5, double inf_prob = 0.0) {
    std::uniform_int_distribution<std::size_t> nv(1, max_v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long> mult(1, max_mult);
    std::size_t n = nv(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    lpa::Graph g(std::move(names));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (coin(rng) >= edge_prob) continue;
            if (inf_prob > 0 && coin(rng) < inf_prob) {
                g.add_edge(i, j, lpa::Multiplicity::infinity());
            } else {
                g.add_edge(i, j, lpa::Multiplicity::finite(mult(rng)));
            }
        }
    }
    return g;
}

// Random graph where every vertex has finite positive out-degree.
inline lpa::Graph random_no_singular_graph(std::mt19937_64& rng, std::size_t max_v, long max_mult) {
    while (true) {
        lpa::Graph g = random_graph(rng, max_v, max_mult, 0.6, 0.0);
        bool ok = true;
        for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) {
            ok = !g.out_multiplicity(v).is_zero();
        }
        if (ok) return g;
    }
}

// Simple graph with duplicated presentation-matrix columns, so the free
// defect m is positive: two regular vertices a, b with col_a = col_b and
// one or two infinite emitters feeding the cycle.
inline lpa::Graph simple_graph_with_free_defect(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> loops(2, 3), feed(1, 2);
    std::uniform_int_distribution<int> emitters(1, 2);
    long t = loops(rng), u = loops(rng);
    int s = emitters(rng);
    std::vector<std::string> names = {"a", "b"};
    for (int i = 0; i < s; ++i) names.push_back("w" + std::to_string(i));
    lpa::Graph g(names);
    g.add_edge(0, 0, lpa::Multiplicity::finite(t));
    g.add_edge(1, 0, lpa::Multiplicity::finite(t - 1));
    g.add_edge(1, 1, lpa::Multiplicity::finite(u));
    g.add_edge(0, 1, lpa::Multiplicity::finite(u - 1));
    for (int i = 0; i < s; ++i) {
        long c = feed(rng);
        g.add_edge(0, 2 + i, lpa::Multiplicity::finite(c));
        g.add_edge(1, 2 + i, lpa::Multiplicity::finite(c));
        g.add_edge(2 + i, 0, lpa::Multiplicity::infinity());
    }
    return g;
}

// Random simple graph with at least one infinite emitter: a directed
// Hamiltonian cycle for strong connectivity, random extra edges, and one
// or two infinite entries. A third of the draws come from the
// duplicated-column family so positive free defect is exercised.
inline lpa::Graph random_simple_infinite_graph(std::mt19937_64& rng, std::size_t max_v) {
    std::uniform_int_distribution<std::size_t> nv(2, max_v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long> mult(1, 3);
    if (coin(rng) < 0.33) return simple_graph_with_free_defect(rng);
    while (true) {
        std::size_t n = nv(rng);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        lpa::Graph g(std::move(names));
        for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, lpa::Multiplicity::finite(mult(rng)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (coin(rng) < 0.3) g.add_edge(i, j, lpa::Multiplicity::finite(mult(rng)));
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        g.add_edge(pick(rng), pick(rng), lpa::Multiplicity::infinity());
        if (coin(rng) < 0.3) g.add_edge(pick(rng), pick(rng), lpa::Multiplicity::infinity());
        if (lpa::is_simple(g) && lpa::has_infinitely_many_edges(g)) return g;
    }
}

}  // namespace testutil
