#pragma once

#include "fankit/fan.hpp"
#include "fankit/graph.hpp"
#include "fankit/packing.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fankit {

/// Canonical relabeling: the labeling whose graph6 code is lexicographically largest
/// among the leaves of an individualization-refinement search. Supports n <= 64.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

inline constexpr int kMaxOracleOrder = 8;

/// One canonical representative per isomorphism class on n vertices, sorted by graph6.
/// Throws ResourceError for n > kMaxOracleOrder.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_graphs_serial(int n);

struct ExResult {
    long long value = 0;
    std::vector<std::string> extremal_graphs; ///< graph6, sorted
};

ExResult ex_bruteforce(int n, const FanSpec& spec);

struct SearchReport {
    int n = 0;
    FanSpec spec;
    std::size_t classes = 0;
    long long ex_value = 0;
    long long phi_value = 0;
    std::vector<std::string> extremal_graphs;
    std::vector<std::string> phi_maximizers;
    bool identity_holds = false;
    bool exact = true;
    /// Uniqueness clause: every phi-maximizer is H-free with ex edges. Set by verify_identity.
    std::optional<bool> uniqueness_holds;
    std::vector<std::string> counterexamples;
};

SearchReport phi_bruteforce(int n, const FanSpec& spec, const PackingOptions& opts = {});
SearchReport verify_identity(int n, const FanSpec& spec, const PackingOptions& opts = {});

/// JSON file cache: map from "n,k,r" to a verify_identity report, stamped with a version.
class OracleCache {
public:
    static constexpr const char* kVersion = "fankit-oracle-1";
    static constexpr const char* kFileName = "fankit-oracle-cache.json";

    explicit OracleCache(std::filesystem::path dir);

    std::optional<SearchReport> lookup(int n, const FanSpec& spec) const;
    void store(const SearchReport& report) const;

    /// verify_identity through the cache.
    SearchReport verify(int n, const FanSpec& spec, const PackingOptions& opts = {}) const;

    const std::filesystem::path& file() const { return file_; }

private:
    std::filesystem::path file_;
};

} // namespace fankit
