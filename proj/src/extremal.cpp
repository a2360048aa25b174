#include "fankit/extremal.hpp"

#include "fankit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fankit {

std::vector<int> turan_part_sizes(int n, int p) {
    if (p < 1)
        throw DomainError("Turán graph needs at least one part");
    if (n < 0)
        throw DomainError("Turán graph order must be nonnegative");
    std::vector<int> sizes(static_cast<std::size_t>(p), n / p);
    for (int i = 0; i < n % p; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

Graph turan_graph(int n, int p) {
    auto sizes = turan_part_sizes(n, p);
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < sizes[static_cast<std::size_t>(i)]; ++j)
            part[static_cast<std::size_t>(v++)] = i;
    GraphBuilder b(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (part[x] != part[y])
                b.add_edge(x, y);
    return b.build();
}

long long turan_edges(long long n, int p) {
    if (p < 1)
        throw DomainError("Turán graph needs at least one part");
    const long long q = n / p;
    const long long rem = n % p;
    const long long squares = rem * (q + 1) * (q + 1) + (p - rem) * q * q;
    return (n * n - squares) / 2;
}

long long turan_min_degree(long long n, int p) {
    if (p < 1)
        throw DomainError("Turán graph needs at least one part");
    return n - (n + p - 1) / p;
}

long long g_surplus(long long k) {
    if (k < 1)
        throw DomainError("g(k) needs k >= 1");
    return k % 2 == 1 ? k * k - k : k * k - 3 * k / 2;
}

Graph embedded_graph(int k) {
    if (k < 1)
        throw DomainError("embedded graph needs k >= 1");
    if (k % 2 == 1) {
        GraphBuilder b(2 * k);
        for (int half = 0; half < 2; ++half)
            for (Vertex x = 0; x < k; ++x)
                for (Vertex y = x + 1; y < k; ++y)
                    b.add_edge(half * k + x, half * k + y);
        return b.build();
    }
    // Havel-Hakimi on ((k-1) x (2k-2), k-2): repeatedly saturate the vertex of largest
    // residual degree against the next largest ones, ties towards the lower index.
    const int order = 2 * k - 1;
    std::vector<int> residual(static_cast<std::size_t>(order), k - 1);
    residual.back() = k - 2;
    GraphBuilder b(order);
    auto by_residual = [&](Vertex a, Vertex c) {
        return residual[a] != residual[c] ? residual[a] > residual[c] : a < c;
    };
    std::vector<Vertex> idx(static_cast<std::size_t>(order));
    for (;;) {
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), by_residual);
        const Vertex head = idx.front();
        const int need = residual[head];
        if (need == 0)
            break;
        if (need > order - 1)
            throw DomainError("degree sequence is not graphical");
        for (int i = 1; i <= need; ++i) {
            const Vertex w = idx[static_cast<std::size_t>(i)];
            if (residual[w] == 0 || b.has_edge(head, w))
                throw DomainError("degree sequence is not graphical");
            b.add_edge(head, w);
            --residual[w];
        }
        residual[head] = 0;
    }
    return b.build();
}

Graph extremal_fan_graph(int n, const FanSpec& spec) {
    const auto sizes = turan_part_sizes(n, spec.r - 1);
    const Graph planted = embedded_graph(spec.k);
    if (sizes.front() < planted.order())
        throw DomainError("largest Turán part has " + std::to_string(sizes.front()) + " vertices, need " +
                          std::to_string(planted.order()));
    std::vector<Edge> extra = planted.edges();
    return turan_graph(n, spec.r - 1).with_edges_added(extra);
}

ExtremalValue ex_fan(long long n, const FanSpec& spec) {
    ExtremalValue out;
    out.value = turan_edges(n, spec.r - 1) + g_surplus(spec.k);
    const long double threshold = 16.0L * std::pow(static_cast<long double>(spec.k), 3) *
                                  std::pow(static_cast<long double>(spec.r), 8);
    out.valid = static_cast<long double>(n) >= threshold;
    return out;
}

long long hanson_bound(long long nu, long long delta) {
    if (nu < 1 || delta < 1)
        throw DomainError("Hanson bound needs nu, delta >= 1");
    return nu * delta + (delta / 2) * (nu / ((delta + 1) / 2));
}

Constants constants(long long n, const FanSpec& spec, long long n0) {
    if (n < 1 || spec.k < 2 || spec.r < 3)
        throw DomainError("constants need n >= 1, k >= 2, r >= 3");
    const double k = spec.k;
    const double r = spec.r;
    const double nn = static_cast<double>(n);
    const double e = static_cast<double>(spec.edge_count());
    const double g = static_cast<double>(g_surplus(spec.k));

    Constants c;
    c.n = n;
    c.k = spec.k;
    c.r = spec.r;
    c.n0 = n0;
    c.gamma = 1.0 / std::pow(40.0 * k * std::pow(r, 4), 2);
    c.alpha = std::sqrt(1.0 - (r - 1) / (r - 2) * c.gamma);
    const double numer = (e - 1) * (r - 1) * k * (k - 1) - k * g;
    c.m1 = numer / (e - 1 - k);
    c.m2 = numer / ((e - 1) / 2 - k);
    const double n0d = static_cast<double>(n0);
    c.n1 = 1 + std::max({std::ceil((r - 1) / c.alpha), n0d + n0d * (n0d - 1) / 2,
                         16 * std::pow(k + 1, 3) * std::pow(r, 8) + 6 * std::pow(k + 1, 2) * std::pow(r, 3) * c.m1});
    c.t1 = nn / (16 * k * std::pow(r, 3));
    c.t2 = nn / (r - 1) - 2 * (r - 3) * std::sqrt(c.gamma) * nn - 2 * c.t1 - 2;
    c.s_upper = (r - 2) * (k - 1) / 2 + 1;
    return c;
}

} // namespace fankit
