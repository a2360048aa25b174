#pragma once

#include "fankit/fan.hpp"
#include "fankit/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fankit {

/// Assignment of vertices to parts 0..parts-1 (reported 1-based).
class Partition {
public:
    Partition() = default;
    Partition(int parts, std::vector<int> part_of);

    int parts() const { return parts_; }
    int order() const { return static_cast<int>(part_of_.size()); }
    int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& labels() const { return part_of_; }
    const VertexSet& part(int i) const { return sets_[static_cast<std::size_t>(i)]; }
    int size(int i) const { return sets_[static_cast<std::size_t>(i)].count(); }

    long long internal_edges(const Graph& g) const;
    long long cross_edges(const Graph& g) const { return g.edge_count() - internal_edges(g); }
    int internal_degree(const Graph& g, Vertex v) const;

    /// Parts renumbered by their smallest vertex; empty parts last.
    Partition canonical() const;

private:
    int parts_ = 0;
    std::vector<int> part_of_;
    std::vector<VertexSet> sets_;
};

/// Natural partition of turan_graph(n, p): contiguous blocks, largest first.
Partition turan_partition(int n, int p);

/// Multi-restart single-vertex-move local search for a maximum cut. The result is
/// locally optimal: every x in V_i has e(x, V_j) >= deg_{G[V_i]}(x) for all j != i.
/// Restart 0 starts from a sequential greedy assignment, the rest from seeded random labels.
Partition max_cut_partition(const Graph& g, int parts, std::uint64_t seed, int restarts = 8);
Partition max_cut_partition_serial(const Graph& g, int parts, std::uint64_t seed, int restarts = 8);

bool is_locally_max_cut(const Graph& g, const Partition& p);

struct PeelResult {
    Graph graph;
    std::vector<Vertex> removed; ///< original labels, in deletion order
    std::vector<Vertex> kept;    ///< original label of each surviving vertex
    bool exhausted = false;      ///< ended with fewer than (r-1)k+1 vertices
};

/// Deletes vertices of degree below delta(T_{n',r-1}) until none remain.
PeelResult peel_low_degree(const Graph& g, const FanSpec& spec);

struct VertexStatus {
    int internal_degree = 0;
    bool bad = false;
    bool active = false;
};

/// bad <=> internal degree > t1. `active` is filled only when t2 is given.
std::vector<VertexStatus> classify_vertices(const Graph& g, const Partition& p, double t1,
                                            std::optional<double> t2 = {});
bool is_active(const Graph& g, const Partition& p, Vertex v, double t2);

struct PruneResult {
    Graph g0;
    std::vector<Vertex> bad;
    long long internal_before = 0;
    long long internal_after = 0;
    std::vector<Vertex> short_of_good; ///< lenient mode: bad vertices that also kept bad neighbours
};

/// Keeps k*ceil(d/2k) internal edges to good vertices at each bad vertex, drops its other
/// internal edges. Throws InfeasibleError naming the vertex when too few good neighbours exist,
/// unless `strict` is false: then the shortfall is filled with bad neighbours and recorded.
PruneResult prune_to_G0(const Graph& g, const Partition& p, const FanSpec& spec, double t1, bool strict = true);

/// Residual graph G_s = G_0 minus the edges of the fans found so far.
class ExtractionState {
public:
    ExtractionState(Graph g0, Partition partition, FanSpec spec, std::vector<bool> bad, double t2,
                    std::uint64_t search_budget = 200'000);

    const Graph& g0() const { return g0_; }
    const Partition& partition() const { return partition_; }
    const FanSpec& spec() const { return spec_; }
    const EdgeSet& consumed() const { return consumed_; }
    bool bad(Vertex v) const { return bad_[static_cast<std::size_t>(v)]; }
    double t2() const { return t2_; }

    bool has_edge(Vertex u, Vertex v) const { return residual_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return residual_[static_cast<std::size_t>(v)]; }
    int internal_degree(Vertex v) const;
    int cross_degree(Vertex v) const;
    bool active(Vertex v) const;
    long long residual_internal() const;
    Graph residual_graph() const;
    /// Residual G_s[V_i], relabeled 0..|V_i|-1 in vertex order.
    Graph residual_part(int i) const;

    /// Validates against the current residual, then deletes the fan's edges.
    void consume(const FanCopy& fan);

    std::uint64_t search_budget() const { return search_budget_; }
    std::size_t extracted() const { return extracted_; }
    bool at_limit() const { return extracted_ >= max_fans; }

    std::size_t max_fans = static_cast<std::size_t>(-1);
    std::vector<std::string> failures; ///< blade growth failures, one line each

private:
    Graph g0_;
    Partition partition_;
    FanSpec spec_;
    std::vector<bool> bad_;
    double t2_;
    std::uint64_t search_budget_;
    EdgeSet consumed_;
    std::vector<VertexSet> residual_;
    std::size_t extracted_ = 0;
};

/// Fans centered at vertices with residual internal degree >= k, bad vertices first.
std::vector<FanCopy> step1_extract(ExtractionState& state);
/// Fans whose blades contain a size-k internal matching of one part.
std::vector<FanCopy> step2_extract(ExtractionState& state);

/// Sets B^j (j != part of A) of isolated-in-part vertices spanning, with A, a complete
/// multipartite graph. Entry i of the result is A itself. Throws InfeasibleError.
std::vector<VertexSet> grow_complete_multipartite(const Graph& g, const VertexSet& a, const Partition& p, int size);

enum class BalanceMode { NearBalance, TightBand };

struct BalanceReport {
    BalanceMode mode = BalanceMode::NearBalance;
    std::vector<int> sizes;
    std::vector<std::string> deviation; ///< |V_i| - n/(r-1), exact rational
    std::vector<bool> flagged;
    double bound = 0;                   ///< NearBalance only
    int band_low = 0, band_high = 0;    ///< TightBand only
    bool ok = true;
};

/// NearBalance: flags ||V_i| - n/p| > bound (default 2 sqrt(gamma) n).
/// TightBand: flags |V_i| outside [ceil(n/p) - (p-1), ceil(n/p)].
BalanceReport check_balance(const Partition& p, double gamma, BalanceMode mode = BalanceMode::NearBalance,
                            std::optional<double> bound = {});

struct PipelineConfig {
    std::optional<double> t1_override;
    std::optional<double> t2_override;
    bool paper_thresholds = false;
    int max_iterations = 100'000;
    bool assert_claims = true;
    std::uint64_t seed = 0;
    int restarts = 8;
    std::optional<double> balance_bound;
    std::uint64_t search_budget = 200'000;

    void validate() const;
};

/// Threshold defaults for small n.
double default_t1(int n, const FanSpec& spec);
double default_t2(int n, const FanSpec& spec);

struct ClaimCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct DecompositionReport {
    FanSpec spec;
    int n = 0;
    long long edges = 0;
    std::vector<Vertex> peeled;
    bool reduction_exhausted = false;
    Partition partition; ///< over the original vertex set; peeled vertices get label -1
    long long m = 0;
    long long m_g0 = 0;
    double t1 = 0;
    double t2 = 0;
    int bad_count = 0;
    int case_id = 1;
    std::vector<FanCopy> fans;
    std::size_t step1_fans = 0;
    std::size_t step2_fans = 0;
    long long internal_edges_consumed = 0;
    long long residual_internal = 0;
    long long pruned_internal = 0;
    long long target = 0;
    bool target_met = false;
    std::vector<ClaimCheck> claims_checked;
    long long phi_upper_bound = 0;
    std::vector<std::string> trace;
};

DecompositionReport run_pipeline(const Graph& g, const FanSpec& spec, const PipelineConfig& config = {});

} // namespace fankit
