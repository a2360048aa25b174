#include "fankit/decomposition.hpp"

#include "fankit/error.hpp"
#include "fankit/extremal.hpp"
#include "fankit/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace fankit {

Partition::Partition(int parts, std::vector<int> part_of) : parts_(parts), part_of_(std::move(part_of)) {
    if (parts < 1)
        throw DomainError("partition needs at least one part");
    const int n = order();
    sets_.assign(static_cast<std::size_t>(parts), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) {
        const int label = part_of_[static_cast<std::size_t>(v)];
        if (label == -1)
            continue; // unassigned (peeled) vertex
        if (label < 0 || label >= parts)
            throw DomainError("part label out of range");
        sets_[static_cast<std::size_t>(label)].insert(v);
    }
}

long long Partition::internal_edges(const Graph& g) const {
    long long m = 0;
    for (const auto& s : sets_)
        m += e_within(g, s);
    return m;
}

int Partition::internal_degree(const Graph& g, Vertex v) const {
    const int label = part_of(v);
    return label < 0 ? 0 : g.neighbors(v).intersection_count(part(label));
}

Partition Partition::canonical() const {
    std::vector<int> order(static_cast<std::size_t>(parts_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        Vertex fa = sets_[static_cast<std::size_t>(a)].first();
        Vertex fb = sets_[static_cast<std::size_t>(b)].first();
        if (fa < 0 || fb < 0)
            return fb < 0 && fa >= 0;
        return fa < fb;
    });
    std::vector<int> rename(static_cast<std::size_t>(parts_));
    for (int i = 0; i < parts_; ++i)
        rename[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> labels = part_of_;
    for (auto& l : labels)
        if (l >= 0)
            l = rename[static_cast<std::size_t>(l)];
    return {parts_, std::move(labels)};
}

Partition turan_partition(int n, int p) {
    auto sizes = turan_part_sizes(n, p);
    std::vector<int> labels;
    for (int i = 0; i < p; ++i)
        labels.insert(labels.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]), i);
    return {p, std::move(labels)};
}

namespace {

struct CutRun {
    std::vector<int> labels;
    long long cross = 0;
};

// Moves a vertex to the part holding the fewest of its neighbours while that
// strictly increases the cut. Terminates since the cut grows each move.
CutRun local_search(const Graph& g, int parts, std::vector<int> labels) {
    const int n = g.order();
    std::vector<std::vector<int>> towards(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(parts)));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            ++towards[v][static_cast<std::size_t>(labels[w])];
    bool moved = true;
    while (moved) {
        moved = false;
        for (Vertex v = 0; v < n; ++v) {
            auto& row = towards[v];
            const int here = labels[v];
            int target = here;
            for (int j = 0; j < parts; ++j)
                if (row[static_cast<std::size_t>(j)] < row[static_cast<std::size_t>(target)])
                    target = j;
            if (target == here)
                continue;
            labels[v] = target;
            for (Vertex w : g.neighbors(v)) {
                --towards[w][static_cast<std::size_t>(here)];
                ++towards[w][static_cast<std::size_t>(target)];
            }
            moved = true;
        }
    }
    CutRun out{std::move(labels), 0};
    out.cross = Partition(parts, out.labels).cross_edges(g);
    return out;
}

std::vector<int> start_labels(const Graph& g, int parts, std::uint64_t seed, int restart) {
    const int n = g.order();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    if (restart == 0) {
        std::vector<int> count(static_cast<std::size_t>(parts));
        std::vector<int> size(static_cast<std::size_t>(parts));
        for (Vertex v = 0; v < n; ++v) {
            std::fill(count.begin(), count.end(), 0);
            for (Vertex w : g.neighbors(v))
                if (w < v)
                    ++count[static_cast<std::size_t>(labels[w])];
            int best = 0;
            for (int j = 1; j < parts; ++j) {
                auto sj = static_cast<std::size_t>(j);
                auto sb = static_cast<std::size_t>(best);
                if (count[sj] < count[sb] || (count[sj] == count[sb] && size[sj] < size[sb]))
                    best = j;
            }
            labels[v] = best;
            ++size[static_cast<std::size_t>(best)];
        }
        return labels;
    }
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(restart));
    std::uniform_int_distribution<int> pick(0, parts - 1);
    for (auto& l : labels)
        l = pick(rng);
    return labels;
}

Partition best_of(int parts, const std::vector<CutRun>& runs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i].cross > runs[best].cross)
            best = i;
    return Partition(parts, runs[best].labels).canonical();
}

} // namespace

Partition max_cut_partition_serial(const Graph& g, int parts, std::uint64_t seed, int restarts) {
    if (parts < 2)
        throw DomainError("max-cut partition needs at least 2 parts");
    restarts = std::max(restarts, 1);
    std::vector<CutRun> runs;
    for (int i = 0; i < restarts; ++i)
        runs.push_back(local_search(g, parts, start_labels(g, parts, seed, i)));
    return best_of(parts, runs);
}

Partition max_cut_partition(const Graph& g, int parts, std::uint64_t seed, int restarts) {
    const int workers = par::threads();
    if (workers <= 1)
        return max_cut_partition_serial(g, parts, seed, restarts);
    if (parts < 2)
        throw DomainError("max-cut partition needs at least 2 parts");
    restarts = std::max(restarts, 1);
    std::vector<CutRun> runs(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < restarts; ++i)
        runs[static_cast<std::size_t>(i)] = local_search(g, parts, start_labels(g, parts, seed, i));
    return best_of(parts, runs);
}

bool is_locally_max_cut(const Graph& g, const Partition& p) {
    for (Vertex x = 0; x < g.order(); ++x) {
        const int i = p.part_of(x);
        if (i < 0)
            continue;
        const int internal = g.neighbors(x).intersection_count(p.part(i));
        for (int j = 0; j < p.parts(); ++j)
            if (j != i && g.neighbors(x).intersection_count(p.part(j)) < internal)
                return false;
    }
    return true;
}

PeelResult peel_low_degree(const Graph& g, const FanSpec& spec) {
    const int parts = spec.r - 1;
    PeelResult out;
    out.kept.resize(static_cast<std::size_t>(g.order()));
    std::iota(out.kept.begin(), out.kept.end(), 0);
    out.graph = g;
    for (;;) {
        const int n = out.graph.order();
        if (n == 0)
            break;
        const auto floor_deg = turan_min_degree(n, parts);
        Vertex victim = -1;
        for (Vertex v = 0; v < n; ++v)
            if (out.graph.degree(v) < floor_deg && (victim < 0 || out.graph.degree(v) < out.graph.degree(victim)))
                victim = v;
        if (victim < 0)
            break;
        out.removed.push_back(out.kept[static_cast<std::size_t>(victim)]);
        out.kept.erase(out.kept.begin() + victim);
        out.graph = delete_vertex(out.graph, victim);
    }
    out.exhausted = out.graph.order() < spec.vertex_count();
    return out;
}

bool is_active(const Graph& g, const Partition& p, Vertex v, double t2) {
    const int i = p.part_of(v);
    for (int j = 0; j < p.parts(); ++j)
        if (j != i && !(g.neighbors(v).intersection_count(p.part(j)) > t2))
            return false;
    return true;
}

std::vector<VertexStatus> classify_vertices(const Graph& g, const Partition& p, double t1, std::optional<double> t2) {
    if (!(t1 > 0))
        throw DomainError("t1 must be positive");
    std::vector<VertexStatus> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& s = out[static_cast<std::size_t>(v)];
        s.internal_degree = p.internal_degree(g, v);
        s.bad = s.internal_degree > t1;
        s.active = t2 && is_active(g, p, v, *t2);
    }
    return out;
}

PruneResult prune_to_G0(const Graph& g, const Partition& p, const FanSpec& spec, double t1, bool strict) {
    const auto status = classify_vertices(g, p, t1);
    PruneResult out;
    out.internal_before = p.internal_edges(g);
    GraphBuilder b(g);
    const int k = spec.k;
    std::vector<std::pair<Vertex, std::vector<Vertex>>> kept;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& s = status[static_cast<std::size_t>(v)];
        if (!s.bad)
            continue;
        out.bad.push_back(v);
        const int keep = k * ((s.internal_degree + 2 * k - 1) / (2 * k));
        const VertexSet inside = g.neighbors(v) & p.part(p.part_of(v));
        std::vector<Vertex> chosen, spare;
        for (Vertex w : inside)
            (status[static_cast<std::size_t>(w)].bad ? spare : chosen).push_back(w);
        if (static_cast<int>(chosen.size()) < keep) {
            if (strict)
                throw InfeasibleError("pruning infeasible at vertex " + std::to_string(v) + ": needs " +
                                      std::to_string(keep) + " good internal neighbours, has " +
                                      std::to_string(chosen.size()));
            out.short_of_good.push_back(v);
            chosen.insert(chosen.end(), spare.begin(), spare.end());
        }
        chosen.resize(std::min(chosen.size(), static_cast<std::size_t>(keep)));
        for (Vertex w : inside)
            b.remove_edge(v, w);
        kept.emplace_back(v, std::move(chosen));
    }
    // Re-add after all removals so an edge kept by one bad vertex survives the other's pass.
    for (const auto& [v, ws] : kept)
        for (Vertex w : ws)
            b.add_edge(v, w);
    out.g0 = b.build();
    out.internal_after = p.internal_edges(out.g0);
    return out;
}

namespace {

std::string rational(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

} // namespace

BalanceReport check_balance(const Partition& p, double gamma, BalanceMode mode, std::optional<double> bound) {
    BalanceReport out;
    out.mode = mode;
    const long long n = p.order();
    const long long parts = p.parts();
    const long long ceil_avg = (n + parts - 1) / parts;
    out.bound = bound.value_or(2.0 * std::sqrt(gamma) * static_cast<double>(n));
    out.band_low = static_cast<int>(ceil_avg - (parts - 1));
    out.band_high = static_cast<int>(ceil_avg);
    for (int i = 0; i < p.parts(); ++i) {
        const long long size = p.size(i);
        out.sizes.push_back(static_cast<int>(size));
        const long long scaled = size * parts - n; // deviation times parts
        out.deviation.push_back(rational(scaled, parts));
        bool bad = false;
        if (mode == BalanceMode::NearBalance)
            bad = std::abs(static_cast<double>(scaled)) > out.bound * static_cast<double>(parts);
        else
            bad = size < out.band_low || size > out.band_high;
        out.flagged.push_back(bad);
        out.ok = out.ok && !bad;
    }
    return out;
}

std::vector<VertexSet> grow_complete_multipartite(const Graph& g, const VertexSet& a, const Partition& p, int size) {
    if (a.empty())
        throw DomainError("seed set A must be nonempty");
    if (a.count() > size)
        throw DomainError("seed set A is larger than the requested size");
    const int home = p.part_of(a.first());
    for (Vertex v : a)
        if (p.part_of(v) != home)
            throw DomainError("seed set A must lie inside one part");

    std::vector<VertexSet> out(static_cast<std::size_t>(p.parts()), VertexSet(g.order()));
    out[static_cast<std::size_t>(home)] = a;
    VertexSet chosen = a;
    for (int j = 0; j < p.parts(); ++j) {
        if (j == home)
            continue;
        const VertexSet& part = p.part(j);
        VertexSet pool(g.order());
        for (Vertex v : part)
            if (!g.neighbors(v).intersects(part))
                pool.insert(v);
        VertexSet reach = pool & common_neighbors(g, chosen);
        if (reach.count() < size)
            throw InfeasibleError("growth infeasible at part " + std::to_string(j + 1) + ": " +
                                  std::to_string(reach.count()) + " candidates, need " + std::to_string(size));
        VertexSet pick(g.order());
        for (Vertex v = reach.first(); v >= 0 && pick.count() < size; v = reach.next(v))
            pick.insert(v);
        chosen |= pick;
        out[static_cast<std::size_t>(j)] = std::move(pick);
    }
    return out;
}

} // namespace fankit
