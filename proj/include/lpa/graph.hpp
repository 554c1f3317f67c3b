#pragma once

#include <cstdint>
#include <stdexcept>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/matrix.hpp"

namespace lpa {

// Edge multiplicity: a non-negative count or infinity. Stored adjacency
// entries are >= 1 or infinite; absent pairs mean 0.
class Multiplicity {
public:
    Multiplicity() = default;
    static Multiplicity finite(std::int64_t n) { return Multiplicity(false, n); }
    static Multiplicity infinity() { return Multiplicity(true, 0); }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && count_ == 0; }
    std::int64_t count() const { return count_; }

    Multiplicity operator+(const Multiplicity& other) const {
        if (infinite_ || other.infinite_) return infinity();
        std::int64_t sum = 0;
        if (__builtin_add_overflow(count_, other.count_, &sum)) {
            throw std::overflow_error("edge multiplicity overflow");
        }
        return finite(sum);
    }

    bool operator==(const Multiplicity& other) const = default;

private:
    Multiplicity(bool inf, std::int64_t n) : infinite_(inf), count_(n) {}
    bool infinite_ = false;
    std::int64_t count_ = 0;
};

struct VertexPartition {
    std::vector<std::size_t> regular;   // indices into Graph::vertices(), in input order
    std::vector<std::size_t> singular;
};

struct BlockDecomposition {
    IntMatrix b;  // regular x regular
    IntMatrix c;  // regular x singular
};

// Finite-vertex directed multigraph with edge multiplicities in N u {inf}.
// Vertex order is input order and fixes every matrix row/column ordering
// derived from the graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertices);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> vertex_index(const std::string& name) const;

    // Adds mult to the (src, dst) entry; multiplicities accumulate.
    void add_edge(std::size_t src, std::size_t dst, Multiplicity mult);

    Multiplicity multiplicity(std::size_t src, std::size_t dst) const;
    const std::map<std::pair<std::size_t, std::size_t>, Multiplicity>& adjacency() const {
        return adjacency_;
    }

    // Total outgoing multiplicity of v (infinite if any out-entry is).
    Multiplicity out_multiplicity(std::size_t v) const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, Multiplicity> adjacency_;
};

// Parses the JSON graph document
//   {"vertices": ["v", ...], "edges": [{"src": "v", "dst": "w", "mult": 2|"inf"}, ...]}
// Multiple edge records for the same (src, dst) accumulate. Throws
// std::invalid_argument on malformed syntax, unknown vertices, duplicate
// vertex names, or zero multiplicities.
Graph parse_graph(const std::string& text);

std::string graph_to_json(const Graph& g);

// A vertex is regular iff its total outgoing multiplicity d satisfies
// 0 < d < infinity; otherwise it is a sink or infinite emitter (singular).
VertexPartition partition_vertices(const Graph& g);

// The finite adjacency blocks indexed by regular rows.
BlockDecomposition blocks(const Graph& g);

// The |vertices| x |regular| stacked matrix with (B^t - I) on top of C^t.
// Row i corresponds to the i-th vertex in (regular, then singular) order,
// column j to the j-th regular vertex.
IntMatrix presentation_matrix(const Graph& g);

// True iff every cycle has an exit, decided as: no directed cycle in the
// sub-multigraph induced on vertices of total out-multiplicity exactly 1.
bool satisfies_condition_l(const Graph& g);

// True iff every vertex reaches every vertex lying on some directed cycle
// (equivalent to the infinite-path formulation at finite vertex count:
// every infinite path revisits a cycle, and reaching one vertex of a cycle
// reaches them all).
bool is_cofinal(const Graph& g);

// Cofinal, Condition (L), and every vertex reaches every singular vertex.
bool is_simple(const Graph& g);

// With finitely many vertices this is equivalent to some adjacency entry
// being infinite.
bool has_infinitely_many_edges(const Graph& g);

// Adds fresh vertices "<v>#s1", "<v>#s2" and the six splice edges
// v->v1, v1->v, v1->v2, v2->v1, v1->v1, v2->v2. Throws on unknown vertex
// or fresh-name collision.
Graph cuntz_splice(const Graph& g, const std::string& vertex);

// Reflexive reachability matrix of the support digraph (paths of length 0
// count).
std::vector<std::vector<bool>> reachability(const Graph& g);

// Vertices lying on some directed cycle.
std::vector<bool> cycle_vertices(const Graph& g);

}  // namespace lpa
