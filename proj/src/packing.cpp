#include "fankit/packing.hpp"

#include "fankit/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_map>

namespace fankit {

namespace {

// Flat bitset over copy indices; word-level so the bound loops stay cheap.
class CopySet {
public:
    CopySet() = default;
    explicit CopySet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void fill() {
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        if (n_ % 64)
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_)
            c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::size_t and_count(const CopySet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }
    void or_with(const CopySet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
    }
    void minus(const CopySet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
    }
    // -1 when empty.
    long long first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return static_cast<long long>(i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i])));
        return -1;
    }
    template <class F>
    void for_each_and(const CopySet& o, F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i] & o.w_[i];
            while (x) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Edge ids are compact indices over the edges actually used by some copy.
struct Instance {
    std::vector<FanCopy> copies;
    std::vector<std::vector<int>> copy_edges;
    std::vector<CopySet> edge_copies;
    std::vector<CopySet> conflicts; // copies sharing an edge with c, c included
};

Instance build_instance(const Graph& g, std::vector<FanCopy> copies) {
    const int n = g.order();
    std::unordered_map<std::size_t, int> edge_id;
    std::vector<std::vector<int>> copy_edges;
    copy_edges.reserve(copies.size());
    for (const auto& c : copies) {
        std::vector<int> ids;
        for (auto [u, v] : c.edges()) {
            auto [it, fresh] = edge_id.try_emplace(pair_index(n, u, v), static_cast<int>(edge_id.size()));
            ids.push_back(it->second);
        }
        copy_edges.push_back(std::move(ids));
    }
    const std::size_t m = copies.size();
    std::vector<CopySet> by_edge(edge_id.size(), CopySet(m));
    for (std::size_t c = 0; c < m; ++c)
        for (int e : copy_edges[c])
            by_edge[static_cast<std::size_t>(e)].set(c);

    // Increasing conflict degree, ties by enumeration index.
    std::vector<std::size_t> degree(m);
    for (std::size_t c = 0; c < m; ++c) {
        CopySet hit(m);
        for (int e : copy_edges[c])
            hit.or_with(by_edge[static_cast<std::size_t>(e)]);
        degree[c] = hit.count() - 1;
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[a] < degree[b]; });

    Instance inst;
    inst.copies.reserve(m);
    for (auto c : order) {
        inst.copies.push_back(std::move(copies[c]));
        inst.copy_edges.push_back(std::move(copy_edges[c]));
    }
    inst.edge_copies.assign(edge_id.size(), CopySet(m));
    for (std::size_t c = 0; c < m; ++c)
        for (int e : inst.copy_edges[c])
            inst.edge_copies[static_cast<std::size_t>(e)].set(c);
    inst.conflicts.assign(m, CopySet(m));
    for (std::size_t c = 0; c < m; ++c)
        for (int e : inst.copy_edges[c])
            inst.conflicts[c].or_with(inst.edge_copies[static_cast<std::size_t>(e)]);
    return inst;
}

std::vector<std::size_t> greedy_in_order(const Instance& inst, const std::vector<std::size_t>& order) {
    CopySet blocked(inst.copies.size());
    std::vector<std::size_t> picked;
    for (auto c : order) {
        if (blocked.test(c))
            continue;
        picked.push_back(c);
        blocked.or_with(inst.conflicts[c]);
    }
    return picked;
}

class BranchAndBound {
public:
    BranchAndBound(const Instance& inst, int copy_edges, std::uint64_t node_budget)
        : inst_(inst), eh_(copy_edges), node_budget_(node_budget), need_(inst.copies.size()) {}

    // Multi-cover bound: if every live copy has >= t edges in S then p <= |S| / t.
    long long bound(const CopySet& alive, long long stop_at) {
        const std::size_t m_edges = inst_.edge_copies.size();
        active_.clear();
        for (std::size_t e = 0; e < m_edges; ++e)
            if (inst_.edge_copies[e].and_count(alive) > 0)
                active_.push_back(e);
        long long best = static_cast<long long>(active_.size()) / eh_;
        best = std::min<long long>(best, static_cast<long long>(alive.count()));
        if (best <= stop_at)
            return best;
        const int t_max = std::min(eh_ - 1, 6);
        for (int t = 1; t <= t_max; ++t) {
            CopySet unmet = alive;
            alive.for_each_and(alive, [&](std::size_t c) { need_[c] = t; });
            taken_.assign(active_.size(), 0);
            long long chosen = 0;
            while (!unmet.none() && chosen / t < best) {
                std::size_t pick = 0;
                std::size_t gain = 0;
                for (std::size_t i = 0; i < active_.size(); ++i) {
                    if (taken_[i])
                        continue;
                    auto cover = inst_.edge_copies[active_[i]].and_count(unmet);
                    if (cover > gain) {
                        gain = cover;
                        pick = i;
                    }
                }
                if (gain == 0)
                    break;
                taken_[pick] = 1;
                ++chosen;
                inst_.edge_copies[active_[pick]].for_each_and(unmet, [&](std::size_t c) {
                    if (--need_[c] == 0)
                        unmet.reset(c);
                });
            }
            if (unmet.none())
                best = std::min(best, chosen / t);
            if (best <= stop_at)
                break;
        }
        return best;
    }

    void run(std::vector<std::size_t> incumbent, long long root_bound) {
        best_ = std::move(incumbent);
        root_bound_ = root_bound;
        CopySet alive(inst_.copies.size());
        alive.fill();
        recurse(alive);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool done() const { return aborted_ || static_cast<long long>(best_.size()) >= root_bound_; }

    void recurse(CopySet alive) {
        if (done())
            return;
        if (++nodes_ > node_budget_) {
            aborted_ = true;
            return;
        }
        const long long have = static_cast<long long>(current_.size());
        const long long incumbent = static_cast<long long>(best_.size());
        if (alive.none()) {
            if (have > incumbent)
                best_ = current_;
            return;
        }
        if (have + static_cast<long long>(alive.count()) <= incumbent)
            return;
        if (have + bound(alive, incumbent - have) <= incumbent)
            return;

        const auto c = static_cast<std::size_t>(alive.first());
        CopySet with = alive;
        with.minus(inst_.conflicts[c]);
        current_.push_back(c);
        recurse(with);
        current_.pop_back();

        alive.reset(c);
        recurse(alive);
    }

    const Instance& inst_;
    int eh_;
    std::uint64_t node_budget_;
    std::vector<int> need_;
    std::vector<std::size_t> active_;
    std::vector<char> taken_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    long long root_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

Packing to_packing(const FanSpec& spec, const Instance& inst, std::vector<std::size_t> picked) {
    std::sort(picked.begin(), picked.end(),
              [&](auto a, auto b) { return inst.copies[a] < inst.copies[b]; });
    Packing p{spec, {}};
    for (auto c : picked)
        p.copies.push_back(inst.copies[c]);
    return p;
}

std::vector<std::size_t> shuffled_order(std::size_t m, std::uint64_t seed) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

} // namespace

PackingSearch solve_packing(const Graph& g, const FanSpec& spec, const PackingOptions& opts) {
    PackingSearch out;
    out.packing.spec = spec;
    auto copies = enumerate_copies(g, spec, opts.copy_budget + 1);
    out.copies_enumerated = std::min(copies.size(), opts.copy_budget);
    const long long capacity = g.edge_count() / spec.edge_count();

    if (copies.size() > opts.copy_budget) {
        copies.resize(opts.copy_budget);
        out.copy_budget_hit = true;
    }
    // Bitset memory is edges x copies; refuse before it gets silly.
    const long double cells = static_cast<long double>(g.edge_count()) * static_cast<long double>(copies.size());
    const bool too_big = cells > 4.0e9L;

    if (out.copy_budget_hit || too_big) {
        // Greedy over what was enumerated; conflicts tracked by edge set.
        EdgeSet used(g.order());
        for (auto& c : copies) {
            auto es = c.edges();
            bool free = std::none_of(es.begin(), es.end(), [&](const Edge& e) { return used.contains(e.u, e.v); });
            if (!free)
                continue;
            for (auto e : es)
                used.insert(e.u, e.v);
            out.packing.copies.push_back(c);
        }
        std::sort(out.packing.copies.begin(), out.packing.copies.end());
        out.upper_bound = capacity;
        out.exact = static_cast<long long>(out.packing.size()) >= capacity;
        return out;
    }

    if (copies.empty()) {
        out.exact = true;
        return out;
    }

    const Instance inst = build_instance(g, std::move(copies));
    const std::size_t m = inst.copies.size();

    std::vector<std::size_t> natural(m);
    std::iota(natural.begin(), natural.end(), 0);
    auto incumbent = greedy_in_order(inst, natural);
    for (int s = 0; s < opts.greedy_seeds; ++s) {
        auto alt = greedy_in_order(inst, shuffled_order(m, static_cast<std::uint64_t>(s)));
        if (alt.size() > incumbent.size())
            incumbent = std::move(alt);
    }

    BranchAndBound bb(inst, static_cast<int>(spec.edge_count()), opts.node_budget);
    CopySet all(m);
    all.fill();
    const long long root = bb.bound(all, -1);
    bb.run(incumbent, root);

    out.nodes = bb.nodes();
    out.exact = !bb.aborted();
    out.upper_bound = out.exact ? static_cast<long long>(bb.best().size()) : root;
    out.packing = to_packing(spec, inst, bb.best());
    return out;
}

Packing max_packing(const Graph& g, const FanSpec& spec, const PackingOptions& opts) {
    auto res = solve_packing(g, spec, opts);
    if (!res.exact)
        throw ResourceError("packing budget exhausted (" + std::to_string(res.copies_enumerated) + " copies, " +
                                std::to_string(res.nodes) + " nodes); best lower bound " +
                                std::to_string(res.packing.size()),
                            static_cast<long long>(res.packing.size()));
    return std::move(res.packing);
}

Packing greedy_packing(const Graph& g, const FanSpec& spec, std::uint64_t seed) {
    auto copies = enumerate_copies(g, spec);
    auto order = shuffled_order(copies.size(), seed);
    EdgeSet used(g.order());
    Packing p{spec, {}};
    for (auto i : order) {
        auto es = copies[i].edges();
        if (std::any_of(es.begin(), es.end(), [&](const Edge& e) { return used.contains(e.u, e.v); }))
            continue;
        for (auto e : es)
            used.insert(e.u, e.v);
        p.copies.push_back(copies[i]);
    }
    std::sort(p.copies.begin(), p.copies.end());
    return p;
}

PhiResult phi(const Graph& g, const FanSpec& spec, const PackingOptions& opts) {
    auto res = solve_packing(g, spec, opts);
    PhiResult out;
    out.edges = g.edge_count();
    out.exact = res.exact;
    out.phi = g.edge_count() - static_cast<long long>(res.packing.size()) * (spec.edge_count() - 1);
    out.packing = std::move(res.packing);
    return out;
}

bool is_valid_packing(const Graph& g, const Packing& p) {
    EdgeSet used(g.order());
    for (const auto& c : p.copies) {
        if (!validate_fan_copy(g, c, p.spec))
            return false;
        for (auto [u, v] : c.edges()) {
            if (used.contains(u, v))
                return false;
            used.insert(u, v);
        }
    }
    return true;
}

} // namespace fankit
