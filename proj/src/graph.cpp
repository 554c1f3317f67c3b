#include "lpa/graph.hpp"

#include <json.hpp>

#include <deque>
#include <stdexcept>

namespace lpa {

using nlohmann::json;

Graph::Graph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vertices_[i], i);
        if (!inserted) {
            throw std::invalid_argument("duplicate vertex name: " + vertices_[i]);
        }
    }
}

std::optional<std::size_t> Graph::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Graph::add_edge(std::size_t src, std::size_t dst, Multiplicity mult) {
    if (src >= vertices_.size() || dst >= vertices_.size()) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (mult.is_zero()) throw std::invalid_argument("zero multiplicity edge");
    auto key = std::make_pair(src, dst);
    auto it = adjacency_.find(key);
    if (it == adjacency_.end()) {
        adjacency_.emplace(key, mult);
    } else {
        it->second = it->second + mult;
    }
}

Multiplicity Graph::multiplicity(std::size_t src, std::size_t dst) const {
    auto it = adjacency_.find({src, dst});
    return it == adjacency_.end() ? Multiplicity::finite(0) : it->second;
}

Multiplicity Graph::out_multiplicity(std::size_t v) const {
    Multiplicity total = Multiplicity::finite(0);
    auto it = adjacency_.lower_bound({v, 0});
    for (; it != adjacency_.end() && it->first.first == v; ++it) {
        total = total + it->second;
    }
    return total;
}

Graph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw std::invalid_argument("malformed graph file: missing \"vertices\" array");
    }
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("malformed graph file: vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    Graph g(std::move(names));

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
            throw std::invalid_argument("malformed graph file: \"edges\" must be an array");
        }
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("src") || !e.contains("dst") || !e.contains("mult")) {
                throw std::invalid_argument("malformed graph file: edge needs src, dst, mult");
            }
            auto src = g.vertex_index(e["src"].get<std::string>());
            if (!src) throw std::invalid_argument("unknown vertex: " + e["src"].get<std::string>());
            auto dst = g.vertex_index(e["dst"].get<std::string>());
            if (!dst) throw std::invalid_argument("unknown vertex: " + e["dst"].get<std::string>());

            Multiplicity mult;
            const auto& m = e["mult"];
            if (m.is_string()) {
                if (m.get<std::string>() != "inf") {
                    throw std::invalid_argument("malformed graph file: mult must be a positive integer or \"inf\"");
                }
                mult = Multiplicity::infinity();
            } else if (m.is_number_integer() && m.get<std::int64_t>() > 0) {
                mult = Multiplicity::finite(m.get<std::int64_t>());
            } else {
                throw std::invalid_argument("zero or invalid multiplicity on edge " +
                                            e["src"].get<std::string>() + " -> " +
                                            e["dst"].get<std::string>());
            }
            g.add_edge(*src, *dst, mult);
        }
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& name : g.vertices()) doc["vertices"].push_back(name);
    doc["edges"] = json::array();
    for (const auto& [key, mult] : g.adjacency()) {
        json e;
        e["src"] = g.vertex_name(key.first);
        e["dst"] = g.vertex_name(key.second);
        if (mult.is_infinite()) {
            e["mult"] = "inf";
        } else {
            e["mult"] = mult.count();
        }
        doc["edges"].push_back(e);
    }
    return doc.dump(2);
}

VertexPartition partition_vertices(const Graph& g) {
    VertexPartition p;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Multiplicity out = g.out_multiplicity(v);
        if (out.is_zero() || out.is_infinite()) {
            p.singular.push_back(v);
        } else {
            p.regular.push_back(v);
        }
    }
    return p;
}

BlockDecomposition blocks(const Graph& g) {
    VertexPartition p = partition_vertices(g);
    BlockDecomposition bd{IntMatrix(p.regular.size(), p.regular.size()),
                          IntMatrix(p.regular.size(), p.singular.size())};
    for (std::size_t i = 0; i < p.regular.size(); ++i) {
        for (std::size_t j = 0; j < p.regular.size(); ++j) {
            bd.b.at(i, j) = g.multiplicity(p.regular[i], p.regular[j]).count();
        }
        for (std::size_t j = 0; j < p.singular.size(); ++j) {
            bd.c.at(i, j) = g.multiplicity(p.regular[i], p.singular[j]).count();
        }
    }
    return bd;
}

IntMatrix presentation_matrix(const Graph& g) {
    VertexPartition p = partition_vertices(g);
    BlockDecomposition bd = blocks(g);
    const std::size_t r = p.regular.size(), s = p.singular.size();
    IntMatrix m(r + s, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            m.at(i, j) = bd.b.at(j, i);
            if (i == j) m.at(i, j) -= 1;
        }
    }
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            m.at(r + i, j) = bd.c.at(j, i);
        }
    }
    return m;
}

bool satisfies_condition_l(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t none = n;
    // A cycle through a vertex of total out-multiplicity >= 2 has an exit,
    // so an exitless cycle lives entirely inside the subgraph induced on
    // vertices of out-multiplicity exactly 1. There every vertex has at
    // most one successor, so cycle detection is a pointer chase.
    std::vector<bool> in_set(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        Multiplicity out = g.out_multiplicity(v);
        in_set[v] = !out.is_infinite() && out.count() == 1;
    }
    std::vector<std::size_t> next(n, none);
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_set[v]) continue;
        for (std::size_t w = 0; w < n; ++w) {
            if (!g.multiplicity(v, w).is_zero()) {
                if (in_set[w]) next[v] = w;
                break;
            }
        }
    }
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on walk, 2 done
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_set[v] || state[v] != 0) continue;
        std::vector<std::size_t> walk;
        std::size_t cur = v;
        while (cur != none && state[cur] == 0) {
            state[cur] = 1;
            walk.push_back(cur);
            cur = next[cur];
        }
        if (cur != none && state[cur] == 1) return false;
        for (std::size_t w : walk) state[w] = 2;
    }
    return true;
}

std::vector<std::vector<bool>> reachability(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        std::deque<std::size_t> queue{v};
        reach[v][v] = true;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (!reach[v][w] && !g.multiplicity(cur, w).is_zero()) {
                    reach[v][w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return reach;
}

std::vector<bool> cycle_vertices(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto reach = reachability(g);
    std::vector<bool> on_cycle(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n && !on_cycle[v]; ++w) {
            if (!g.multiplicity(v, w).is_zero() && reach[w][v]) on_cycle[v] = true;
        }
    }
    return on_cycle;
}

bool is_cofinal(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto reach = reachability(g);
    auto on_cycle = cycle_vertices(g);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (on_cycle[w] && !reach[v][w]) return false;
        }
    }
    return true;
}

bool is_simple(const Graph& g) {
    if (!is_cofinal(g) || !satisfies_condition_l(g)) return false;
    auto reach = reachability(g);
    VertexPartition p = partition_vertices(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t w : p.singular) {
            if (!reach[v][w]) return false;
        }
    }
    return true;
}

bool has_infinitely_many_edges(const Graph& g) {
    for (const auto& [key, mult] : g.adjacency()) {
        if (mult.is_infinite()) return true;
    }
    return false;
}

Graph cuntz_splice(const Graph& g, const std::string& vertex) {
    auto v = g.vertex_index(vertex);
    if (!v) throw std::invalid_argument("unknown vertex: " + vertex);
    std::string v1 = vertex + "#s1";
    std::string v2 = vertex + "#s2";
    if (g.vertex_index(v1) || g.vertex_index(v2)) {
        throw std::invalid_argument("fresh splice vertex name collides with existing vertex");
    }
    std::vector<std::string> names = g.vertices();
    names.push_back(v1);
    names.push_back(v2);
    Graph out(std::move(names));
    for (const auto& [key, mult] : g.adjacency()) {
        out.add_edge(key.first, key.second, mult);
    }
    std::size_t i1 = g.vertex_count(), i2 = g.vertex_count() + 1;
    out.add_edge(*v, i1, Multiplicity::finite(1));   // e1
    out.add_edge(i1, *v, Multiplicity::finite(1));   // e2
    out.add_edge(i1, i2, Multiplicity::finite(1));   // f1
    out.add_edge(i2, i1, Multiplicity::finite(1));   // f2
    out.add_edge(i1, i1, Multiplicity::finite(1));   // h1
    out.add_edge(i2, i2, Multiplicity::finite(1));   // h2
    return out;
}

}  // namespace lpa
