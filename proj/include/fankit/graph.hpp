#pragma once

#include "fankit/vertex_set.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fankit {

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Index of the unordered pair {u, v} among all C(n,2) pairs, row-major over u < v.
inline std::size_t pair_index(int n, Vertex u, Vertex v) {
    if (u > v)
        std::swap(u, v);
    auto uu = static_cast<std::size_t>(u);
    auto nn = static_cast<std::size_t>(n);
    return uu * (2 * nn - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

/// Set of vertex pairs of an n-vertex graph. Used for banned / consumed edges.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n) : n_(n), bits_(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2) {}

    int order() const { return n_; }
    bool contains(Vertex u, Vertex v) const { return bits_.test(pair_index(n_, u, v)); }
    void insert(Vertex u, Vertex v) { bits_.set(pair_index(n_, u, v)); }
    void erase(Vertex u, Vertex v) { bits_.reset(pair_index(n_, u, v)); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

private:
    int n_ = 0;
    boost::dynamic_bitset<std::uint64_t> bits_;
};

/// Undirected simple graph on [0, n). Immutable once built; "edits" return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    long long edge_count() const { return edge_count_; }

    const VertexSet& neighbors(Vertex v) const { return adj_[check(v)]; }
    int degree(Vertex v) const { return adj_[check(v)].count(); }
    bool has_edge(Vertex u, Vertex v) const { return u != v && adj_[check(u)].contains(check(v)); }
    int min_degree() const;
    int max_degree() const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    Graph with_edges_added(const std::vector<Edge>& extra) const;
    Graph with_edges_removed(const EdgeSet& removed) const;
    Graph relabeled(const std::vector<Vertex>& new_label) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    std::size_t check(Vertex v) const;

    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

/// Single-owner mutable construction; `build()` freezes into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const { return n_; }
    bool has_edge(Vertex u, Vertex v) const;
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    Graph build() const;

private:
    int n_;
    std::vector<VertexSet> adj_;
};

// graph6 codec (McKay). A leading ">>graph6<<" header and trailing whitespace are tolerated.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
std::vector<Graph> read_graph6_lines(std::string_view text);

/// Edges {x, y} with x in S and y in T, each edge counted once. e_between(G, S, S) = e_G(S).
long long e_between(const Graph& g, const VertexSet& s, const VertexSet& t);
long long e_within(const Graph& g, const VertexSet& s);
int e_to(const Graph& g, Vertex x, const VertexSet& t);

/// Vertices outside X adjacent to every member of X. X must be nonempty.
VertexSet common_neighbors(const Graph& g, const VertexSet& x);

/// G - v with the remaining vertices relabeled in order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// Exact matching number by branch and bound.
int matching_number(const Graph& g);
/// A maximum matching, or one of size `cap` if that is reached first.
std::vector<Edge> maximum_matching(const Graph& g, int cap = -1);

} // namespace fankit
