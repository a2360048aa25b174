#pragma once

#include "fankit/graph.hpp"

#include <optional>
#include <vector>

namespace fankit {

/// The (k,r)-fan: k copies of K_r glued at one vertex, the center.
struct FanSpec {
    int k = 1;
    int r = 3;

    FanSpec() = default;
    FanSpec(int k_, int r_);

    int blade_size() const { return r - 1; }
    int vertex_count() const { return (r - 1) * k + 1; }
    long long edge_count() const { return static_cast<long long>(k) * r * (r - 1) / 2; }

    friend bool operator==(const FanSpec&, const FanSpec&) = default;
};

using Blade = std::vector<Vertex>;

/// One embedded fan. Normalized form: each blade ascending, blades ordered by first vertex.
struct FanCopy {
    Vertex center = -1;
    std::vector<Blade> blades;

    void normalize();
    std::vector<Edge> edges() const;

    friend bool operator==(const FanCopy&, const FanCopy&) = default;
    friend auto operator<=>(const FanCopy&, const FanCopy&) = default;
};

Graph build_fan(const FanSpec& spec);

/// True iff `copy` is a (k,r)-fan of `g` whose edges all avoid `banned`.
bool validate_fan_copy(const Graph& g, const FanCopy& copy, const FanSpec& spec, const EdgeSet* banned = nullptr);

/// Every (r-1)-clique in the neighbourhood of u, using no banned pair, in lexicographic order.
std::vector<Blade> blades_at(const Graph& g, Vertex u, int blade_size, const EdgeSet* banned = nullptr);

/// First fan centered at u in normalized order, or nullopt if none exists (exhaustive).
std::optional<FanCopy> find_fan_centered(const Graph& g, Vertex u, const FanSpec& spec,
                                         const EdgeSet* banned = nullptr);

bool contains_fan(const Graph& g, const FanSpec& spec);

/// All fan copies, each listed once in normalized form, ordered by center then blades.
/// For k = 1 a copy is a plain clique and is listed with its smallest vertex as center.
/// Stops after `limit` copies when given. Parallel over centers.
std::vector<FanCopy> enumerate_copies(const Graph& g, const FanSpec& spec, std::optional<std::size_t> limit = {});
std::vector<FanCopy> enumerate_copies_serial(const Graph& g, const FanSpec& spec,
                                             std::optional<std::size_t> limit = {});

} // namespace fankit
