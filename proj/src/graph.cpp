#include "fankit/graph.hpp"

#include "fankit/error.hpp"

#include <algorithm>
#include <limits>

namespace fankit {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw DomainError("graph order must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph Graph::cycle(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v < n && n >= 3; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph Graph::path(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

std::size_t Graph::check(Vertex v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    return static_cast<std::size_t>(v);
}

int Graph::min_degree() const {
    if (n_ == 0)
        return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& a : adj_)
        d = std::min(d, a.count());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_)
        d = std::max(d, a.count());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.push_back({u, v});
    return out;
}

Graph Graph::with_edges_added(const std::vector<Edge>& extra) const {
    GraphBuilder b(*this);
    for (auto [u, v] : extra)
        b.add_edge(u, v);
    return b.build();
}

Graph Graph::with_edges_removed(const EdgeSet& removed) const {
    if (removed.order() != n_)
        throw DomainError("edge set belongs to a graph of different order");
    GraphBuilder b(n_);
    for (auto [u, v] : edges())
        if (!removed.contains(u, v))
            b.add_edge(u, v);
    return b.build();
}

Graph Graph::relabeled(const std::vector<Vertex>& new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
        throw DomainError("relabeling must cover every vertex");
    GraphBuilder b(n_);
    for (auto [u, v] : edges())
        b.add_edge(new_label[u], new_label[v]);
    return b.build();
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 0)
        throw DomainError("graph order must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.order()), adj_(g.adj_) {}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[u].contains(v);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("edge endpoint out of range");
    if (u == v)
        throw DomainError("loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("edge endpoint out of range");
    adj_[u].erase(v);
    adj_[v].erase(u);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = n_;
    g.adj_ = adj_;
    long long twice = 0;
    for (const auto& a : adj_)
        twice += a.count();
    g.edge_count_ = twice / 2;
    return g;
}

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw DomainError("vertex set universe does not match graph order");
}

} // namespace

int e_to(const Graph& g, Vertex x, const VertexSet& t) {
    require_universe(g, t);
    return g.neighbors(x).intersection_count(t);
}

long long e_within(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    long long twice = 0;
    for (Vertex x : s)
        twice += g.neighbors(x).intersection_count(s);
    return twice / 2;
}

long long e_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    require_universe(g, s);
    require_universe(g, t);
    long long total = 0;
    for (Vertex x : s)
        total += g.neighbors(x).intersection_count(t);
    // Edges inside S ∩ T were seen from both ends.
    return total - e_within(g, s & t);
}

VertexSet common_neighbors(const Graph& g, const VertexSet& x) {
    require_universe(g, x);
    if (x.empty())
        throw DomainError("common_neighbors needs a nonempty set");
    VertexSet out = VertexSet::full(g.order());
    for (Vertex v : x)
        out &= g.neighbors(v);
    return out - x;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i]))
            if (pos[w] > static_cast<int>(i))
                b.add_edge(static_cast<Vertex>(i), pos[w]);
    return b.build();
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range");
    std::vector<Vertex> keep;
    keep.reserve(static_cast<std::size_t>(g.order() - 1));
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v)
            keep.push_back(w);
    return induced_subgraph(g, keep);
}

} // namespace fankit
