#include "fankit/decomposition.hpp"

#include "fankit/error.hpp"
#include "fankit/extremal.hpp"
#include "fankit/packing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fankit {

ExtractionState::ExtractionState(Graph g0, Partition partition, FanSpec spec, std::vector<bool> bad, double t2,
                                 std::uint64_t search_budget)
    : g0_(std::move(g0)), partition_(std::move(partition)), spec_(spec), bad_(std::move(bad)), t2_(t2),
      search_budget_(search_budget), consumed_(g0_.order()) {
    residual_.reserve(static_cast<std::size_t>(g0_.order()));
    for (Vertex v = 0; v < g0_.order(); ++v)
        residual_.push_back(g0_.neighbors(v));
}

int ExtractionState::internal_degree(Vertex v) const {
    const int i = partition_.part_of(v);
    return i < 0 ? 0 : neighbors(v).intersection_count(partition_.part(i));
}

int ExtractionState::cross_degree(Vertex v) const { return neighbors(v).count() - internal_degree(v); }

bool ExtractionState::active(Vertex v) const {
    const int i = partition_.part_of(v);
    for (int j = 0; j < partition_.parts(); ++j)
        if (j != i && !(neighbors(v).intersection_count(partition_.part(j)) > t2_))
            return false;
    return true;
}

long long ExtractionState::residual_internal() const {
    long long twice = 0;
    for (Vertex v = 0; v < g0_.order(); ++v)
        twice += internal_degree(v);
    return twice / 2;
}

Graph ExtractionState::residual_graph() const { return g0_.with_edges_removed(consumed_); }

Graph ExtractionState::residual_part(int i) const {
    const auto members = partition_.part(i).to_vector();
    GraphBuilder b(static_cast<int>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t c = a + 1; c < members.size(); ++c)
            if (has_edge(members[a], members[c]))
                b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(c));
    return b.build();
}

void ExtractionState::consume(const FanCopy& fan) {
    if (!validate_fan_copy(g0_, fan, spec_, &consumed_))
        throw std::logic_error("extracted fan is not a valid copy in the residual graph");
    for (auto [u, v] : fan.edges()) {
        consumed_.insert(u, v);
        residual_[static_cast<std::size_t>(u)].erase(v);
        residual_[static_cast<std::size_t>(v)].erase(u);
    }
    ++extracted_;
}

namespace {

// Backtracking blade growth around a fixed center. Each blade is a seed (one internal
// neighbour of the center in Step 1, a matched pair in Step 2) completed by one good,
// active vertex from every fill part, all pairwise adjacent in the residual graph.
class BladeGrower {
public:
    BladeGrower(const ExtractionState& s, Vertex center, std::vector<int> fill_parts)
        : s_(s), center_(center), fill_parts_(std::move(fill_parts)), used_(s.g0().order()),
          eligible_(s.g0().order()) {
        for (Vertex v = 0; v < s.g0().order(); ++v)
            if (!s.bad(v) && s.partition().part_of(v) >= 0 && s.active(v))
                eligible_.insert(v);
        used_.insert(center);
    }

    // Step 1: seeds are k distinct internal neighbours chosen during the search.
    std::optional<FanCopy> grow_from_neighbours(const std::vector<Vertex>& pool) {
        pool_ = pool;
        fixed_seeds_.clear();
        if (blade_from_pool(0, 0))
            return finish();
        return std::nullopt;
    }

    // Step 2: seeds are fixed matched pairs.
    std::optional<FanCopy> grow_from_pairs(const std::vector<Blade>& pairs) {
        fixed_seeds_ = pairs;
        for (const auto& pr : pairs)
            for (Vertex v : pr)
                used_.insert(v);
        if (blade_fixed(0))
            return finish();
        return std::nullopt;
    }

    bool exhausted() const { return steps_ > s_.search_budget(); }

private:
    FanCopy finish() {
        FanCopy c{center_, blades_};
        c.normalize();
        return c;
    }

    int k() const { return s_.spec().k; }

    bool tick() { return ++steps_ <= s_.search_budget(); }

    bool blade_from_pool(int blade, std::size_t from) {
        if (blade == k())
            return true;
        for (std::size_t i = from; i < pool_.size(); ++i) {
            const Vertex seed = pool_[i];
            if (used_.contains(seed))
                continue;
            if (!tick())
                return false;
            used_.insert(seed);
            blades_.push_back({seed});
            if (fill(blade, 0, [&] { return blade_from_pool(blade + 1, i + 1); }))
                return true;
            blades_.pop_back();
            used_.erase(seed);
        }
        return false;
    }

    bool blade_fixed(int blade) {
        if (blade == k())
            return true;
        blades_.push_back(fixed_seeds_[static_cast<std::size_t>(blade)]);
        if (fill(blade, 0, [&] { return blade_fixed(blade + 1); }))
            return true;
        blades_.pop_back();
        return false;
    }

    template <class Next>
    bool fill(int blade, std::size_t part_idx, Next&& next) {
        if (part_idx == fill_parts_.size())
            return next();
        auto& current = blades_[static_cast<std::size_t>(blade)];
        VertexSet cand = s_.partition().part(fill_parts_[part_idx]) & eligible_ & s_.neighbors(center_);
        for (Vertex v : current)
            cand &= s_.neighbors(v);
        cand -= used_;
        std::vector<Vertex> order = cand.to_vector();
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return s_.cross_degree(a) > s_.cross_degree(b); });
        for (Vertex v : order) {
            if (!tick())
                return false;
            used_.insert(v);
            current.push_back(v);
            if (fill(blade, part_idx + 1, next))
                return true;
            current.pop_back();
            used_.erase(v);
        }
        return false;
    }

    const ExtractionState& s_;
    Vertex center_;
    std::vector<int> fill_parts_;
    VertexSet used_;
    VertexSet eligible_;
    std::vector<Vertex> pool_;
    std::vector<Blade> fixed_seeds_;
    std::vector<Blade> blades_;
    std::uint64_t steps_ = 0;
};

std::vector<int> other_parts(int parts, std::initializer_list<int> skip) {
    std::vector<int> out;
    for (int j = 0; j < parts; ++j)
        if (std::find(skip.begin(), skip.end(), j) == skip.end())
            out.push_back(j);
    return out;
}

} // namespace

std::vector<FanCopy> step1_extract(ExtractionState& state) {
    const Graph& g0 = state.g0();
    const Partition& p = state.partition();
    const int k = state.spec().k;

    // Bad vertices first, then good; each group by descending internal degree, then index.
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g0.order(); ++v)
        if (p.part_of(v) >= 0)
            order.push_back(v);
    std::vector<int> deg0(static_cast<std::size_t>(g0.order()));
    for (Vertex v : order)
        deg0[static_cast<std::size_t>(v)] = state.internal_degree(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (state.bad(a) != state.bad(b))
            return state.bad(a);
        return deg0[a] > deg0[b];
    });

    std::vector<FanCopy> out;
    for (Vertex u : order) {
        // Residual degrees only shrink, so one pass in priority order suffices.
        while (!state.at_limit() && state.internal_degree(u) >= k) {
            const int i = p.part_of(u);
            const auto pool = (state.neighbors(u) & p.part(i)).to_vector();
            BladeGrower grower(state, u, other_parts(p.parts(), {i}));
            auto fan = grower.grow_from_neighbours(pool);
            if (!fan) {
                state.failures.push_back("step 1: no fan centered at " + std::to_string(u) +
                                         (grower.exhausted() ? " (search budget)" : ""));
                break;
            }
            state.consume(*fan);
            out.push_back(std::move(*fan));
        }
    }
    return out;
}

std::vector<FanCopy> step2_extract(ExtractionState& state) {
    const Partition& p = state.partition();
    const int k = state.spec().k;
    std::vector<bool> stuck(static_cast<std::size_t>(p.parts()), false);
    std::vector<FanCopy> out;

    // Lowest part index first; rescan from the start after every extraction.
    for (bool progress = true; progress && !state.at_limit();) {
        progress = false;
        for (int i = 0; i < p.parts() && !progress; ++i) {
            if (stuck[static_cast<std::size_t>(i)])
                continue;
            const auto members = p.part(i).to_vector();
            const auto matching = maximum_matching(state.residual_part(i), k);
            if (static_cast<int>(matching.size()) < k)
                continue;
            std::vector<Blade> pairs;
            for (auto [a, b] : matching)
                pairs.push_back({members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]});

            VertexSet ends(state.g0().order());
            for (const auto& pr : pairs)
                for (Vertex v : pr)
                    ends.insert(v);
            std::optional<FanCopy> fan;
            for (int j0 = 0; j0 < p.parts() && !fan; ++j0) {
                if (j0 == i)
                    continue;
                VertexSet centers = p.part(j0);
                for (Vertex v : ends)
                    centers &= state.neighbors(v);
                std::vector<Vertex> order;
                for (Vertex u : centers)
                    if (!state.bad(u) && state.active(u))
                        order.push_back(u);
                std::stable_sort(order.begin(), order.end(),
                                 [&](Vertex a, Vertex b) { return state.cross_degree(a) > state.cross_degree(b); });
                for (Vertex u : order) {
                    BladeGrower grower(state, u, other_parts(p.parts(), {i, j0}));
                    fan = grower.grow_from_pairs(pairs);
                    if (fan)
                        break;
                }
            }
            if (!fan) {
                state.failures.push_back("step 2: matching in part " + std::to_string(i + 1) +
                                         " has no center and completion");
                stuck[static_cast<std::size_t>(i)] = true;
                continue;
            }
            state.consume(*fan);
            out.push_back(std::move(*fan));
            progress = true;
        }
    }
    return out;
}

void PipelineConfig::validate() const {
    if (t1_override && !(*t1_override > 0))
        throw DomainError("t1 override must be positive");
    if (t2_override && !(*t2_override > 0))
        throw DomainError("t2 override must be positive");
    if (max_iterations < 1)
        throw DomainError("max_iterations must be positive");
}

double default_t1(int n, const FanSpec& spec) {
    const double scaled = std::ceil(static_cast<double>(n) / (16.0 * spec.k * std::pow(spec.r, 3)));
    return std::max({1.0, scaled, static_cast<double>(spec.k - 1)});
}

double default_t2(int n, const FanSpec& spec) {
    return std::max(1.0, std::floor(static_cast<double>(n) / (2.0 * (spec.r - 1))));
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Partition lift_partition(const Partition& p, const std::vector<Vertex>& kept, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        labels[static_cast<std::size_t>(kept[i])] = p.part_of(static_cast<Vertex>(i));
    return {p.parts(), std::move(labels)};
}

FanCopy lift_fan(const FanCopy& f, const std::vector<Vertex>& kept) {
    FanCopy out{kept[static_cast<std::size_t>(f.center)], {}};
    for (const auto& b : f.blades) {
        Blade lifted;
        for (Vertex v : b)
            lifted.push_back(kept[static_cast<std::size_t>(v)]);
        out.blades.push_back(std::move(lifted));
    }
    out.normalize();
    return out;
}

} // namespace

DecompositionReport run_pipeline(const Graph& g, const FanSpec& spec, const PipelineConfig& config) {
    config.validate();
    if (spec.r < 3)
        throw DomainError("the pipeline needs r >= 3");
    DecompositionReport rep;
    rep.spec = spec;
    rep.n = g.order();
    rep.edges = g.edge_count();
    const long long fan_edges = spec.edge_count();
    const int parts = spec.r - 1;
    auto claim = [&](std::string id, bool pass, std::string detail) {
        if (config.assert_claims)
            rep.claims_checked.push_back({std::move(id), pass, std::move(detail)});
    };

    auto peel = peel_low_degree(g, spec);
    rep.peeled = peel.removed;
    rep.reduction_exhausted = peel.exhausted;
    rep.trace.push_back("peel: removed " + std::to_string(peel.removed.size()) + " vertices");
    if (peel.exhausted) {
        // Too small for the constructive argument; fall back to the exact packer.
        auto exact = solve_packing(g, spec);
        rep.fans = exact.packing.copies;
        rep.partition = Partition(parts, std::vector<int>(static_cast<std::size_t>(g.order()), -1));
        rep.phi_upper_bound = rep.edges - static_cast<long long>(rep.fans.size()) * (fan_edges - 1);
        rep.trace.push_back(std::string("reduction exhausted: packing solver used") +
                            (exact.exact ? "" : " (inexact)"));
        return rep;
    }

    const Graph& core = peel.graph;
    const int n = core.order();
    const Partition part = max_cut_partition(core, parts, config.seed, config.restarts);
    rep.partition = lift_partition(part, peel.kept, g.order());
    rep.m = part.internal_edges(core);
    rep.trace.push_back("partition: cross " + std::to_string(core.edge_count() - rep.m) + ", internal " +
                        std::to_string(rep.m));

    const long long g_k = g_surplus(spec.k);
    rep.target = floor_div(rep.m - g_k, fan_edges - 1) + 1;

    if (config.paper_thresholds && spec.k >= 2) {
        const auto c = constants(n, spec);
        rep.t1 = config.t1_override.value_or(c.t1);
        rep.t2 = config.t2_override.value_or(c.t2);
    } else {
        rep.t1 = config.t1_override.value_or(default_t1(n, spec));
        rep.t2 = config.t2_override.value_or(default_t2(n, spec));
    }

    double gamma = 1.0 / std::pow(40.0 * spec.k * std::pow(spec.r, 4), 2);
    std::optional<double> m1;
    if (spec.k >= 2) {
        const auto c = constants(n, spec);
        gamma = c.gamma;
        m1 = c.m1;
    }
    rep.case_id = (m1 && static_cast<double>(rep.m) <= *m1) ? 2 : 1;

    claim("local_max_cut", is_locally_max_cut(core, part),
          "e(x,V_j) >= internal degree for every x and every other part j");
    {
        auto bal = check_balance(part, gamma, BalanceMode::NearBalance, config.balance_bound);
        claim("near_balance", bal.ok, "bound " + fmt_double(bal.bound));
    }
    if (rep.case_id == 2) {
        auto band = check_balance(part, gamma, BalanceMode::TightBand);
        claim("tight_band", band.ok,
              "band [" + std::to_string(band.band_low) + "," + std::to_string(band.band_high) + "]");
    }

    const auto pruned = prune_to_G0(core, part, spec, rep.t1, false);
    rep.bad_count = static_cast<int>(pruned.bad.size());
    rep.m_g0 = pruned.internal_after;
    rep.pruned_internal = pruned.internal_before - pruned.internal_after;
    claim("good_neighbours", pruned.short_of_good.empty(),
          pruned.short_of_good.empty() ? "every bad vertex kept only good neighbours"
                                       : std::to_string(pruned.short_of_good.size()) +
                                             " bad vertices short of good neighbours, first " +
                                             std::to_string(peel.kept[static_cast<std::size_t>(pruned.short_of_good.front())]));
    claim("half_internal_kept", 2 * pruned.internal_after >= pruned.internal_before,
          std::to_string(pruned.internal_after) + " of " + std::to_string(pruned.internal_before));
    rep.trace.push_back("prune: " + std::to_string(pruned.bad.size()) + " bad vertices, " +
                        std::to_string(rep.pruned_internal) + " internal edges dropped");

    std::vector<bool> bad(static_cast<std::size_t>(n), false);
    for (Vertex v : pruned.bad)
        bad[static_cast<std::size_t>(v)] = true;
    ExtractionState state(pruned.g0, part, spec, bad, rep.t2, config.search_budget);
    state.max_fans = static_cast<std::size_t>(config.max_iterations);

    auto s1 = step1_extract(state);
    rep.step1_fans = s1.size();
    auto s2 = step2_extract(state);
    rep.step2_fans = s2.size();
    rep.trace.push_back("step 1: " + std::to_string(s1.size()) + " fans; step 2: " + std::to_string(s2.size()) +
                        " fans");
    for (const auto& f : state.failures)
        rep.trace.push_back(f);

    std::vector<FanCopy> fans = std::move(s1);
    fans.insert(fans.end(), s2.begin(), s2.end());

    rep.internal_edges_consumed = 0;
    for (const auto& f : fans)
        for (auto [u, v] : f.edges())
            if (part.part_of(u) == part.part_of(v))
                ++rep.internal_edges_consumed;
    rep.residual_internal = state.residual_internal();

    claim("growth_succeeded", state.failures.empty(),
          state.failures.empty() ? "every growth succeeded" : state.failures.front());

    bool residual_ok = true;
    std::string residual_detail;
    const long long cap = spec.k >= 2 ? hanson_bound(spec.k - 1, spec.k - 1) : 0;
    for (int i = 0; i < parts; ++i) {
        const Graph inside = state.residual_part(i);
        const bool ok = inside.max_degree() < spec.k && matching_number(inside) < spec.k && inside.edge_count() <= cap;
        residual_ok = residual_ok && ok;
        residual_detail += (i ? "," : "") + std::to_string(inside.edge_count());
    }
    claim("residual_hanson", residual_ok,
          "residual internal edges per part [" + residual_detail + "], cap " + std::to_string(cap));

    const long long kept_internal = rep.m_g0;
    const long long floor_needed = floor_div(kept_internal - static_cast<long long>(parts) * spec.k * (spec.k - 1) +
                                                 spec.k - 1,
                                             spec.k);
    claim("fan_count_accounting", static_cast<long long>(fans.size()) >= floor_needed,
          std::to_string(fans.size()) + " fans, accounting floor " + std::to_string(std::max(0LL, floor_needed)));

    for (const auto& f : fans)
        rep.fans.push_back(lift_fan(f, peel.kept));
    rep.target_met = static_cast<long long>(rep.fans.size()) >= rep.target;
    rep.phi_upper_bound = rep.edges - static_cast<long long>(rep.fans.size()) * (fan_edges - 1);
    return rep;
}

} // namespace fankit
