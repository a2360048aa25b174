#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

// Fan pattern: vertex 0 is the center, blade b occupies 1 + b(r-1) .. (b+1)(r-1).
std::vector<std::pair<int, int>> pattern_edges(const FanSpec& spec) {
    std::vector<std::pair<int, int>> out;
    const int s = spec.r - 1;
    for (int b = 0; b < spec.k; ++b) {
        std::vector<int> clique{0};
        for (int i = 0; i < s; ++i)
            clique.push_back(1 + b * s + i);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                out.emplace_back(clique[i], clique[j]);
    }
    return out;
}

// Calls visit(image) for every injection of the pattern that maps edges to edges.
// Returns early when visit returns true.
bool injections(const Graph& g, const FanSpec& spec, const std::function<bool(const std::vector<int>&)>& visit) {
    const int m = spec.vertex_count();
    const int n = g.order();
    const auto edges = pattern_edges(spec);
    std::vector<int> image;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool()> rec = [&]() -> bool {
        const int at = static_cast<int>(image.size());
        if (at == m)
            return visit(image);
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (auto [a, b] : edges)
                if (b == at && !g.has_edge(image[static_cast<std::size_t>(a)], v))
                    ok = false;
            if (!ok)
                continue;
            used[static_cast<std::size_t>(v)] = true;
            image.push_back(v);
            if (rec())
                return true;
            image.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    return rec();
}

std::vector<std::pair<int, int>> copy_edges(const FanCopy& c) {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : c.blades) {
        std::vector<int> clique{c.center};
        clique.insert(clique.end(), b.begin(), b.end());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                out.emplace_back(std::min(clique[i], clique[j]), std::max(clique[i], clique[j]));
    }
    return out;
}

} // namespace

std::set<FanCopy> fan_copies_by_injection(const Graph& g, const FanSpec& spec) {
    std::set<FanCopy> out;
    const int s = spec.r - 1;
    injections(g, spec, [&](const std::vector<int>& image) {
        // A lone clique is recorded once, centered at its smallest vertex.
        if (spec.k == 1 && *std::min_element(image.begin(), image.end()) != image[0])
            return false;
        FanCopy c;
        c.center = image[0];
        for (int b = 0; b < spec.k; ++b) {
            std::vector<int> blade(image.begin() + 1 + b * s, image.begin() + 1 + (b + 1) * s);
            std::sort(blade.begin(), blade.end());
            c.blades.push_back(blade);
        }
        std::sort(c.blades.begin(), c.blades.end());
        out.insert(c);
        return false;
    });
    return out;
}

bool contains_fan_by_injection(const Graph& g, const FanSpec& spec) {
    return injections(g, spec, [](const std::vector<int>&) { return true; });
}

int matching_number_by_subsets(const Graph& g) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best || size > g.order() / 2)
            continue;
        std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1))
                continue;
            auto [u, v] = edges[i];
            if (hit[static_cast<std::size_t>(u)] || hit[static_cast<std::size_t>(v)])
                ok = false;
            hit[static_cast<std::size_t>(u)] = hit[static_cast<std::size_t>(v)] = true;
        }
        if (ok)
            best = size;
    }
    return best;
}

int packing_number_exhaustive(const Graph& g, const FanSpec& spec) {
    const auto copies = fan_copies_by_injection(g, spec);
    std::vector<std::vector<std::pair<int, int>>> edge_lists;
    for (const auto& c : copies)
        edge_lists.push_back(copy_edges(c));
    std::set<std::pair<int, int>> used;
    int best = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int taken) {
        best = std::max(best, taken);
        for (std::size_t j = i; j < edge_lists.size(); ++j) {
            const auto& es = edge_lists[j];
            if (std::any_of(es.begin(), es.end(), [&](const auto& e) { return used.count(e); }))
                continue;
            for (const auto& e : es)
                used.insert(e);
            rec(j + 1, taken + 1);
            for (const auto& e : es)
                used.erase(e);
        }
    };
    rec(0, 0);
    return best;
}

long long ex_labeled(int n, const FanSpec& spec) {
    std::vector<fankit::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        const long long e = std::popcount(mask);
        if (e <= best)
            continue;
        std::vector<fankit::Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                es.push_back(pairs[i]);
        if (!contains_fan_by_injection(Graph::from_edges(n, es), spec))
            best = e;
    }
    return best;
}

long long max_cut_exhaustive(const Graph& g, int parts) {
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    long long best = 0;
    const auto edges = g.edges();
    for (;;) {
        long long cut = 0;
        for (auto [u, v] : edges)
            cut += label[static_cast<std::size_t>(u)] != label[static_cast<std::size_t>(v)];
        best = std::max(best, cut);
        int i = 0;
        while (i < n && ++label[static_cast<std::size_t>(i)] == parts)
            label[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            break;
    }
    return best;
}

std::string canonical_by_permutations(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        auto code = fankit::to_graph6(g.relabeled(perm));
        if (code > best)
            best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::size_t count_classes_labeled(int n) {
    std::vector<fankit::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::set<std::string> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<fankit::Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                es.push_back(pairs[i]);
        classes.insert(canonical_by_permutations(Graph::from_edges(n, es)));
    }
    return classes.size();
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<fankit::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                es.push_back({u, v});
    return Graph::from_edges(n, es);
}

Graph shuffled(const Graph& g, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

} // namespace oracle
