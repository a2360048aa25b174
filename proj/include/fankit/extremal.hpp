#pragma once

#include "fankit/fan.hpp"
#include "fankit/graph.hpp"

#include <vector>

namespace fankit {

/// Part sizes of the balanced p-partite split of n, largest first.
std::vector<int> turan_part_sizes(int n, int p);
/// Complete balanced p-partite graph. Parts are contiguous vertex blocks, largest first.
Graph turan_graph(int n, int p);
long long turan_edges(long long n, int p);
/// Minimum degree of T_{n,p}, i.e. floor((p-1) n / p).
long long turan_min_degree(long long n, int p);

/// Surplus of ex(n, F_{k,r}) over ex(n, K_r): k^2 - k (odd k), k^2 - 3k/2 (even k).
long long g_surplus(long long k);

/// The graph planted inside one Turán part: two disjoint K_k (odd k), or the
/// Havel-Hakimi realization of ((k-1) x (2k-2), k-2) on 2k-1 vertices (even k).
Graph embedded_graph(int k);

/// T_{n,r-1} with embedded_graph(k) planted on the first vertices of part 1.
Graph extremal_fan_graph(int n, const FanSpec& spec);

struct ExtremalValue {
    long long value = 0;
    bool valid = false; ///< n >= 16 k^3 r^8, where the closed form is known to be exact.
};

ExtremalValue ex_fan(long long n, const FanSpec& spec);

/// Maximum edge count of a graph with matching number nu and maximum degree delta.
long long hanson_bound(long long nu, long long delta);

/// Threshold constants of the decomposition argument. Real-valued; t2 may be negative at small n.
struct Constants {
    long long n = 0;
    int k = 0;
    int r = 0;
    double gamma = 0;
    double alpha = 0;
    double m1 = 0;
    double m2 = 0;
    double n1 = 0;
    double t1 = 0;
    double t2 = 0;
    double s_upper = 0;
    long long n0 = 0; ///< stability threshold fed into n1; an input, not computed
};

Constants constants(long long n, const FanSpec& spec, long long n0 = 0);

} // namespace fankit
