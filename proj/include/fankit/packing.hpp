#pragma once

#include "fankit/fan.hpp"

#include <cstdint>
#include <vector>

namespace fankit {

struct Packing {
    FanSpec spec;
    std::vector<FanCopy> copies;

    std::size_t size() const { return copies.size(); }
};

struct PackingOptions {
    std::size_t copy_budget = 1'000'000;   ///< max enumerated copies before degrading to a lower bound
    std::uint64_t node_budget = 50'000'000; ///< branch-and-bound nodes before giving up optimality
    int greedy_seeds = 4;                   ///< extra randomized greedy warm starts
};

/// Outcome of the exact solver. When `exact` is false, `packing` is a valid lower
/// bound and `upper_bound` the best certified ceiling.
struct PackingSearch {
    Packing packing;
    bool exact = false;
    long long upper_bound = 0;
    std::uint64_t nodes = 0;
    std::size_t copies_enumerated = 0;
    bool copy_budget_hit = false;
};

PackingSearch solve_packing(const Graph& g, const FanSpec& spec, const PackingOptions& opts = {});

/// Maximum edge-disjoint packing. Throws ResourceError (carrying the lower bound) on budget exhaustion.
Packing max_packing(const Graph& g, const FanSpec& spec, const PackingOptions& opts = {});

/// Maximal packing from a seeded random scan of all copies.
Packing greedy_packing(const Graph& g, const FanSpec& spec, std::uint64_t seed);

/// phi(G,H) = e(G) - p_H(G) (e(H) - 1). When inexact, phi is an upper bound.
struct PhiResult {
    long long phi = 0;
    long long edges = 0;
    Packing packing;
    bool exact = false;
};

PhiResult phi(const Graph& g, const FanSpec& spec, const PackingOptions& opts = {});

/// True iff the copies are valid in g and pairwise edge-disjoint.
bool is_valid_packing(const Graph& g, const Packing& p);

} // namespace fankit
