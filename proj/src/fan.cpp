#include "fankit/fan.hpp"

#include "fankit/error.hpp"
#include "fankit/parallel.hpp"

#include <algorithm>
#include <limits>

namespace fankit {

FanSpec::FanSpec(int k_, int r_) : k(k_), r(r_) {
    if (k < 1)
        throw DomainError("fan needs k >= 1");
    if (r < 2)
        throw DomainError("fan needs r >= 2");
}

void FanCopy::normalize() {
    for (auto& b : blades)
        std::sort(b.begin(), b.end());
    std::sort(blades.begin(), blades.end());
}

std::vector<Edge> FanCopy::edges() const {
    std::vector<Edge> out;
    for (const auto& b : blades) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            out.push_back({std::min(center, b[i]), std::max(center, b[i])});
            for (std::size_t j = i + 1; j < b.size(); ++j)
                out.push_back({std::min(b[i], b[j]), std::max(b[i], b[j])});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph build_fan(const FanSpec& spec) {
    GraphBuilder b(spec.vertex_count());
    for (int blade = 0; blade < spec.k; ++blade) {
        std::vector<Vertex> clique{0};
        for (int i = 0; i < spec.blade_size(); ++i)
            clique.push_back(1 + blade * spec.blade_size() + i);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                b.add_edge(clique[i], clique[j]);
    }
    return b.build();
}

bool validate_fan_copy(const Graph& g, const FanCopy& copy, const FanSpec& spec, const EdgeSet* banned) {
    const int n = g.order();
    if (copy.center < 0 || copy.center >= n)
        return false;
    if (static_cast<int>(copy.blades.size()) != spec.k)
        return false;
    VertexSet seen(n);
    seen.insert(copy.center);
    for (const auto& b : copy.blades) {
        if (static_cast<int>(b.size()) != spec.blade_size())
            return false;
        for (Vertex v : b) {
            if (v < 0 || v >= n || seen.contains(v))
                return false;
            seen.insert(v);
        }
    }
    for (auto [u, v] : copy.edges()) {
        if (!g.has_edge(u, v))
            return false;
        if (banned && banned->contains(u, v))
            return false;
    }
    return true;
}

namespace {

// Neighbourhood of u restricted to usable pairs, as rows over the host vertex range.
struct LocalAdjacency {
    VertexSet candidates;
    std::vector<VertexSet> rows;
};

LocalAdjacency local_adjacency(const Graph& g, Vertex u, const EdgeSet* banned) {
    LocalAdjacency a{g.neighbors(u), {}};
    if (!banned || banned->empty())
        return a;
    for (Vertex w : g.neighbors(u))
        if (banned->contains(u, w))
            a.candidates.erase(w);
    a.rows.assign(static_cast<std::size_t>(g.order()), VertexSet());
    for (Vertex w : a.candidates) {
        VertexSet row = g.neighbors(w) & a.candidates;
        for (Vertex x : g.neighbors(w) & a.candidates)
            if (banned->contains(w, x))
                row.erase(x);
        a.rows[w] = std::move(row);
    }
    return a;
}

void extend_cliques(const Graph& g, const LocalAdjacency& adj, int size, Blade& current, const VertexSet& pool,
                    std::vector<Blade>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (Vertex w : pool) {
        const VertexSet& row = adj.rows.empty() ? g.neighbors(w) : adj.rows[w];
        VertexSet next = pool & row;
        // Keep only later vertices so each clique is produced once, ascending.
        for (Vertex x = next.first(); x >= 0 && x <= w; x = next.first())
            next.erase(x);
        current.push_back(w);
        if (static_cast<int>(current.size()) + next.count() >= size)
            extend_cliques(g, adj, size, current, next, out);
        current.pop_back();
    }
}

// Chooses k pairwise disjoint blades in index order. `emit` returns false to stop.
template <class Emit>
bool choose_disjoint(const std::vector<Blade>& blades, int k, std::size_t from, std::vector<std::size_t>& picked,
                     VertexSet& used, Emit&& emit) {
    if (static_cast<int>(picked.size()) == k)
        return emit(picked);
    for (std::size_t i = from; i < blades.size(); ++i) {
        if (blades.size() - i < static_cast<std::size_t>(k) - picked.size())
            break;
        bool clash = false;
        for (Vertex v : blades[i])
            clash = clash || used.contains(v);
        if (clash)
            continue;
        for (Vertex v : blades[i])
            used.insert(v);
        picked.push_back(i);
        bool go_on = choose_disjoint(blades, k, i + 1, picked, used, emit);
        picked.pop_back();
        for (Vertex v : blades[i])
            used.erase(v);
        if (!go_on)
            return false;
    }
    return true;
}

// `distinct`: a single clique has no distinguished center, so for k = 1 list it only
// from its smallest vertex.
std::vector<FanCopy> copies_at(const Graph& g, Vertex u, const FanSpec& spec, std::size_t cap,
                               const EdgeSet* banned, bool distinct = false) {
    std::vector<FanCopy> out;
    if (g.degree(u) < spec.k * spec.blade_size() || cap == 0)
        return out;
    auto blades = blades_at(g, u, spec.blade_size(), banned);
    if (distinct && spec.k == 1)
        std::erase_if(blades, [u](const Blade& b) { return b.front() < u; });
    if (static_cast<int>(blades.size()) < spec.k)
        return out;
    std::vector<std::size_t> picked;
    VertexSet used(g.order());
    choose_disjoint(blades, spec.k, 0, picked, used, [&](const std::vector<std::size_t>& idx) {
        FanCopy c{u, {}};
        for (auto i : idx)
            c.blades.push_back(blades[i]);
        out.push_back(std::move(c));
        return out.size() < cap;
    });
    return out;
}

} // namespace

std::vector<Blade> blades_at(const Graph& g, Vertex u, int blade_size, const EdgeSet* banned) {
    std::vector<Blade> out;
    if (blade_size < 1)
        return out;
    auto adj = local_adjacency(g, u, banned);
    Blade current;
    extend_cliques(g, adj, blade_size, current, adj.candidates, out);
    return out;
}

std::optional<FanCopy> find_fan_centered(const Graph& g, Vertex u, const FanSpec& spec, const EdgeSet* banned) {
    if (u < 0 || u >= g.order())
        throw DomainError("center out of range");
    auto found = copies_at(g, u, spec, 1, banned);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

bool contains_fan(const Graph& g, const FanSpec& spec) {
    if (g.order() < spec.vertex_count() || g.edge_count() < spec.edge_count())
        return false;
    for (Vertex u = 0; u < g.order(); ++u)
        if (find_fan_centered(g, u, spec))
            return true;
    return false;
}

std::vector<FanCopy> enumerate_copies_serial(const Graph& g, const FanSpec& spec, std::optional<std::size_t> limit) {
    const std::size_t cap = limit.value_or(std::numeric_limits<std::size_t>::max());
    std::vector<FanCopy> out;
    for (Vertex u = 0; u < g.order() && out.size() < cap; ++u) {
        auto here = copies_at(g, u, spec, cap - out.size(), nullptr, true);
        out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
    }
    return out;
}

std::vector<FanCopy> enumerate_copies(const Graph& g, const FanSpec& spec, std::optional<std::size_t> limit) {
    const int workers = par::threads();
    if (workers <= 1)
        return enumerate_copies_serial(g, spec, limit);
    const std::size_t cap = limit.value_or(std::numeric_limits<std::size_t>::max());
    const int n = g.order();
    std::vector<std::vector<FanCopy>> per_center(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int u = 0; u < n; ++u)
        per_center[static_cast<std::size_t>(u)] = copies_at(g, u, spec, cap, nullptr, true);
    std::vector<FanCopy> out;
    for (auto& part : per_center) {
        for (auto& c : part) {
            if (out.size() >= cap)
                return out;
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace fankit
