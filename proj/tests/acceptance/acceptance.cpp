// Acceptance suite: one PASS/FAIL line per criterion. Criterion 9 reruns 1-8 (and a set of
// CLI invocations) at 1 and 8 threads and compares the JSON reports byte for byte.

#include "fankit/cli.hpp"
#include "fankit/decomposition.hpp"
#include "fankit/error.hpp"
#include "fankit/extremal.hpp"
#include "fankit/oracle.hpp"
#include "fankit/packing.hpp"
#include "fankit/parallel.hpp"
#include "fankit/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace fankit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    json report; // deterministic content only; no timings
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void fail(Outcome& o, const std::string& why) {
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

// 1. phi(n,K3) = floor(n^2/4) = ex(n,K3), n = 3..7.
Outcome triangle_identity() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 3; n <= 7; ++n) {
        const auto ex = ex_bruteforce(n, FanSpec(1, 3));
        const auto ph = phi_bruteforce(n, FanSpec(1, 3));
        const long long turan = static_cast<long long>(n) * n / 4;
        o.report.push_back({{"n", n}, {"ex", ex.value}, {"phi", ph.phi_value}, {"exact", ph.exact},
                            {"maximizers", ph.phi_maximizers}});
        if (!ph.exact || ph.phi_value != turan || ex.value != turan)
            fail(o, "n=" + std::to_string(n) + ": phi " + std::to_string(ph.phi_value) + ", ex " +
                        std::to_string(ex.value) + ", n^2/4 " + std::to_string(turan));
    }
    const double secs = seconds_since(t0);
    if (secs > 600)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = "phi = ex = floor(n^2/4) for n=3..7 (" + std::to_string(secs) + " s)";
    return o;
}

// 2. phi(n,K4) = ex(n,K4), n = 4..7.
Outcome k4_identity() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 4; n <= 7; ++n) {
        const auto ex = ex_bruteforce(n, FanSpec(1, 4));
        const auto ph = phi_bruteforce(n, FanSpec(1, 4));
        o.report.push_back({{"n", n}, {"ex", ex.value}, {"phi", ph.phi_value}, {"exact", ph.exact}});
        if (!ph.exact || ph.phi_value != ex.value || ex.value != turan_edges(n, 3))
            fail(o, "n=" + std::to_string(n) + ": phi " + std::to_string(ph.phi_value) + ", ex " +
                        std::to_string(ex.value));
    }
    const double secs = seconds_since(t0);
    if (secs > 600)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = "phi = ex = t(n,3) for n=4..7 (" + std::to_string(secs) + " s)";
    return o;
}

// 3. Exact packing values, each under one second.
Outcome packing_values() {
    Outcome o;
    struct Case {
        std::string name;
        std::function<long long()> value;
        long long expected;
    };
    const std::vector<Case> cases{
        {"p_K3(K5)", [] { return static_cast<long long>(max_packing(Graph::complete(5), FanSpec(1, 3)).size()); }, 2},
        {"p_K3(K7)", [] { return static_cast<long long>(max_packing(Graph::complete(7), FanSpec(1, 3)).size()); }, 7},
        {"p_F23(F43)",
         [] { return static_cast<long long>(max_packing(build_fan(FanSpec(4, 3)), FanSpec(2, 3)).size()); }, 2},
        {"phi(K5,K3)", [] { return phi(Graph::complete(5), FanSpec(1, 3)).phi; }, 6},
        {"phi(K4,K3)", [] { return phi(Graph::complete(4), FanSpec(1, 3)).phi; }, 4},
    };
    double slowest = 0;
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const long long v = c.value();
        const double secs = seconds_since(t0);
        slowest = std::max(slowest, secs);
        o.report[c.name] = v;
        if (v != c.expected)
            fail(o, c.name + " = " + std::to_string(v) + ", expected " + std::to_string(c.expected));
        if (secs >= 1.0)
            fail(o, c.name + " took " + std::to_string(secs) + " s");
    }
    if (o.pass)
        o.detail = "all five values exact, slowest " + std::to_string(slowest) + " s";
    return o;
}

// 4. extremal_fan_graph: edge count, F-freeness, no peeling.
Outcome construction_fidelity() {
    Outcome o;
    const auto t0 = Clock::now();
    int checked = 0;
    for (int k = 2; k <= 4; ++k)
        for (int r = 3; r <= 4; ++r) {
            const FanSpec spec(k, r);
            for (int n = 2 * (r - 1) * k; n <= 14; ++n) {
                const auto g = extremal_fan_graph(n, spec);
                const long long want = turan_edges(n, r - 1) + g_surplus(k);
                const bool free = !contains_fan(g, spec);
                const auto peel = peel_low_degree(g, spec);
                o.report.push_back({{"k", k}, {"r", r}, {"n", n}, {"edges", g.edge_count()}, {"free", free},
                                    {"peeled", peel.removed.size()}, {"graph6", to_graph6(g)}});
                ++checked;
                if (g.edge_count() != want || !free || !peel.removed.empty())
                    fail(o, "(k,r,n)=(" + std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(n) +
                                "): edges " + std::to_string(g.edge_count()) + "/" + std::to_string(want) +
                                (free ? "" : ", contains the fan") +
                                (peel.removed.empty() ? "" : ", peel removed vertices"));
            }
        }
    const double secs = seconds_since(t0);
    if (secs > 120)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(checked) + " constructions exact, fan-free, unpeeled (" + std::to_string(secs) + " s)";
    return o;
}

// 5. Closed forms.
Outcome closed_forms() {
    Outcome o;
    const std::vector<long long> table{0, 1, 6, 10, 20, 27, 42, 52, 72, 85};
    for (int k = 1; k <= 10; ++k) {
        o.report["g"].push_back(g_surplus(k));
        if (g_surplus(k) != table[static_cast<std::size_t>(k - 1)])
            fail(o, "g(" + std::to_string(k) + ") = " + std::to_string(g_surplus(k)));
    }
    const std::vector<std::array<long long, 3>> hanson{{1, 1, 1}, {2, 2, 6}, {3, 3, 10}};
    for (const auto& [nu, delta, f] : hanson) {
        o.report["hanson"].push_back(hanson_bound(nu, delta));
        if (hanson_bound(nu, delta) != f)
            fail(o, "f(" + std::to_string(nu) + "," + std::to_string(delta) + ") = " +
                        std::to_string(hanson_bound(nu, delta)));
    }
    int pairs = 0;
    for (int k = 2; k <= 10; ++k)
        for (int r = 3; r <= 8; ++r) {
            const FanSpec spec(k, r);
            // s_upper = (r-2)(k-1)/2 + 1, compared exactly as 2 s_upper < 2 e(F).
            const long long twice = static_cast<long long>(r - 2) * (k - 1) + 2;
            ++pairs;
            if (!(twice < 2 * spec.edge_count()) ||
                !(constants(1000, spec).s_upper < static_cast<double>(spec.edge_count())))
                fail(o, "s_upper >= e(F) at k=" + std::to_string(k) + ", r=" + std::to_string(r));
        }
    o.report["s_upper_pairs"] = pairs;
    if (o.pass)
        o.detail = "g table, Hanson spot values and s_upper < e(F) on " + std::to_string(pairs) + " pairs";
    return o;
}

// 6. e(G) <= f(nu, Delta) on every class with at most 8 vertices.
Outcome hanson_exhaustive() {
    Outcome o;
    const auto t0 = Clock::now();
    long long classes = 0, tight = 0;
    std::vector<std::string> violations;
    for (int n = 1; n <= 8; ++n) {
        const auto graphs = all_graphs(n);
        const auto count = static_cast<long>(graphs.size());
        std::vector<signed char> status(graphs.size(), 0); // 0 skipped, 1 ok, 2 tight, -1 violation
#pragma omp parallel for schedule(dynamic) num_threads(par::threads())
        for (long i = 0; i < count; ++i) {
            const auto& g = graphs[static_cast<std::size_t>(i)];
            if (g.edge_count() == 0)
                continue;
            const long long f = hanson_bound(matching_number(g), g.max_degree());
            status[static_cast<std::size_t>(i)] = g.edge_count() > f ? -1 : (g.edge_count() == f ? 2 : 1);
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            classes += status[i] != 0;
            tight += status[i] == 2;
            if (status[i] < 0)
                violations.push_back(to_graph6(graphs[i]));
        }
    }
    o.report = {{"classes", classes}, {"tight", tight}, {"violations", violations}};
    const double secs = seconds_since(t0);
    if (!violations.empty())
        fail(o, std::to_string(violations.size()) + " violations, first " + violations.front());
    if (secs > 300)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(classes) + " classes with nu, Delta >= 1, " + std::to_string(tight) +
                   " tight, none above f (" + std::to_string(secs) + " s)";
    return o;
}

struct Instance {
    Graph g;
    FanSpec spec;
    std::vector<Edge> internal;
};

// T_{n,r-1} plus vertex-disjoint internal stars and matching edges, at most `max_m` edges.
Instance planted_instance(std::uint64_t seed, int n, FanSpec spec, int max_m) {
    std::mt19937_64 rng(seed);
    const int p = spec.r - 1;
    const auto part = turan_partition(n, p);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<Edge> internal;
    const int target = std::uniform_int_distribution<int>(1, max_m)(rng);
    auto fresh = [&](int i) {
        std::vector<Vertex> pool;
        for (Vertex v : part.part(i))
            if (!used[static_cast<std::size_t>(v)])
                pool.push_back(v);
        return pool;
    };
    int attempts = 0;
    while (static_cast<int>(internal.size()) < target && attempts++ < 100) {
        const int i = std::uniform_int_distribution<int>(0, p - 1)(rng);
        auto pool = fresh(i);
        std::shuffle(pool.begin(), pool.end(), rng);
        const int room = target - static_cast<int>(internal.size());
        const int deg = std::min(room, std::uniform_int_distribution<int>(1, 4)(rng));
        if (static_cast<int>(pool.size()) < deg + 1)
            continue;
        for (int j = 0; j <= deg; ++j)
            used[static_cast<std::size_t>(pool[static_cast<std::size_t>(j)])] = true;
        for (int j = 1; j <= deg; ++j)
            internal.push_back({std::min(pool[0], pool[static_cast<std::size_t>(j)]),
                                std::max(pool[0], pool[static_cast<std::size_t>(j)])});
    }
    return {turan_graph(n, p).with_edges_added(internal), spec, internal};
}

// Internal edges of a fan with respect to a partition labeling.
int internal_edges_of(const FanCopy& f, const Partition& p) {
    int c = 0;
    for (auto [u, v] : f.edges())
        c += p.part_of(u) >= 0 && p.part_of(u) == p.part_of(v);
    return c;
}

// 7. Pipeline soundness on 100 planted instances.
Outcome pipeline_soundness() {
    Outcome o;
    int compared = 0, skipped = 0;
    long long total_fans = 0;
    PackingOptions budget;
    budget.copy_budget = 200'000;
    budget.node_budget = 2'000'000;
    const std::vector<FanSpec> specs{FanSpec(1, 3), FanSpec(2, 3), FanSpec(3, 3),
                                     FanSpec(1, 4), FanSpec(2, 4), FanSpec(3, 4)};
    for (std::uint64_t s = 0; s < 100; ++s) {
        std::mt19937_64 rng(1000 + s);
        const int n = std::uniform_int_distribution<int>(30, 60)(rng);
        const auto spec = specs[s % specs.size()];
        const auto inst = planted_instance(7919 * s + 17, n, spec, 10);
        PipelineConfig cfg;
        cfg.seed = s;
        const auto rep = run_pipeline(inst.g, spec, cfg);
        total_fans += static_cast<long long>(rep.fans.size());

        std::set<Edge> seen;
        std::string problem;
        for (const auto& f : rep.fans) {
            if (!validate_fan_copy(inst.g, f, spec))
                problem = "invalid fan";
            for (const auto& e : f.edges())
                if (!seen.insert(e).second)
                    problem = "fans share an edge";
            if (internal_edges_of(f, rep.partition) != spec.k)
                problem = "fan with " + std::to_string(internal_edges_of(f, rep.partition)) + " internal edges";
        }
        json row{{"seed", s},      {"n", n}, {"k", spec.k}, {"r", spec.r}, {"m", inst.internal.size()},
                 {"fans", rep.fans.size()}};
        if (n <= 40) {
            const auto exact = solve_packing(inst.g, spec, budget);
            if (exact.exact) {
                ++compared;
                row["p"] = exact.packing.size();
                if (rep.fans.size() > exact.packing.size())
                    problem = "more fans than the packing number";
            } else {
                ++skipped;
                row["p"] = nullptr;
            }
        }
        o.report.push_back(row);
        if (!problem.empty())
            fail(o, "seed " + std::to_string(s) + ": " + problem);
    }
    if (o.pass)
        o.detail = "100 instances, " + std::to_string(total_fans) + " fans, 0 violations; exact packing compared on " +
                   std::to_string(compared) + " (n <= 40), " + std::to_string(skipped) + " over budget";
    return o;
}

// 8. Disjoint internal stars of degree k yield exactly floor(m/k) fans.
Outcome pipeline_effectiveness() {
    Outcome o;
    int runs = 0;
    for (int k : {2, 3})
        for (int r : {3, 4}) {
            const FanSpec spec(k, r);
            const int p = r - 1;
            const auto part = turan_partition(40, p);
            for (int stars = 1; stars * k <= 12; ++stars)
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    std::mt19937_64 rng(seed * 31 + static_cast<std::uint64_t>(stars * 7 + k * 3 + r));
                    std::vector<std::vector<Vertex>> pools;
                    for (int i = 0; i < p; ++i) {
                        auto v = part.part(i).to_vector();
                        std::shuffle(v.begin(), v.end(), rng);
                        pools.push_back(v);
                    }
                    std::vector<std::size_t> next(static_cast<std::size_t>(p), 0);
                    std::vector<Edge> internal;
                    for (int st = 0; st < stars; ++st) {
                        const auto i = static_cast<std::size_t>(st % p);
                        const Vertex c = pools[i][next[i]++];
                        for (int j = 0; j < k; ++j) {
                            const Vertex leaf = pools[i][next[i]++];
                            internal.push_back({std::min(c, leaf), std::max(c, leaf)});
                        }
                    }
                    const auto g = turan_graph(40, p).with_edges_added(internal);
                    PipelineConfig cfg;
                    cfg.seed = seed;
                    const auto rep = run_pipeline(g, spec, cfg);
                    const long long m = static_cast<long long>(internal.size());
                    const long long want = m / k;
                    // Accounting floor: p >= (sum e_G0(V_i) - (r-1)k(k-1)) / k.
                    const long long floor_needed = rep.m_g0 - static_cast<long long>(p) * k * (k - 1);
                    const bool accounting = static_cast<long long>(rep.fans.size()) * k >= floor_needed;
                    ++runs;
                    o.report.push_back({{"k", k}, {"r", r}, {"m", m}, {"seed", seed}, {"fans", rep.fans.size()},
                                        {"m_detected", rep.m}, {"m_g0", rep.m_g0}, {"accounting", accounting}});
                    if (static_cast<long long>(rep.fans.size()) != want || rep.m != m || !accounting)
                        fail(o, "k=" + std::to_string(k) + " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                    " seed " + std::to_string(seed) + ": " + std::to_string(rep.fans.size()) +
                                    " fans, expected " + std::to_string(want));
                }
        }
    if (o.pass)
        o.detail = std::to_string(runs) + " planted instances, each with exactly floor(m/k) fans";
    return o;
}

std::string cli_transcript() {
    const std::vector<std::vector<std::string>> commands{
        {"phi", "--graph6", "C~", "-k", "1", "-r", "3"},
        {"construct", "extremal", "-n", "12", "-k", "3", "-r", "3", "--format", "graph6"},
        {"verify", "-n", "5", "-k", "1", "-r", "3", "--no-cache"},
        {"search", "ex", "-n", "6", "-k", "2", "-r", "3"},
        {"search", "phi", "-n", "7", "-k", "1", "-r", "4", "--no-cache"},
        {"pack", "--graph6", "F~~~w", "-k", "1", "-r", "3"},
        {"bounds", "constants", "-n", "100", "-k", "2", "-r", "3"},
    };
    std::string all;
    for (const auto& c : commands) {
        std::istringstream in;
        std::ostringstream out, err;
        const int code = cli::dispatch(c, in, out, err);
        all += std::to_string(code) + " " + out.str();
    }
    return all;
}

struct Named {
    int id;
    Outcome (*run)();
};

const std::vector<Named> kCriteria{{1, triangle_identity},     {2, k4_identity},        {3, packing_values},
                                   {4, construction_fidelity}, {5, closed_forms},       {6, hanson_exhaustive},
                                   {7, pipeline_soundness},    {8, pipeline_effectiveness}};

} // namespace

int main(int argc, char** argv) {
    bool dump = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--json")
            dump = true;

    bool all_pass = true;
    std::vector<std::string> serial_reports;
    {
        par::ScopedThreads one(1);
        for (const auto& c : kCriteria) {
            Outcome o;
            try {
                o = c.run();
            } catch (const std::exception& e) {
                o.pass = false;
                o.detail = std::string("exception: ") + e.what();
            }
            all_pass = all_pass && o.pass;
            serial_reports.push_back(o.report.dump());
            std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
            if (dump)
                std::cout << o.report.dump() << std::endl;
        }
        serial_reports.push_back(cli_transcript());
    }

    Outcome det;
    {
        const auto t0 = Clock::now();
        par::ScopedThreads eight(8);
        std::vector<int> differing;
        for (std::size_t i = 0; i < kCriteria.size(); ++i) {
            std::string report;
            try {
                report = kCriteria[i].run().report.dump();
            } catch (const std::exception& e) {
                report = std::string("exception: ") + e.what();
            }
            if (report != serial_reports[i])
                differing.push_back(kCriteria[i].id);
        }
        const bool cli_same = cli_transcript() == serial_reports.back();
        if (!differing.empty() || !cli_same) {
            det.pass = false;
            std::string list;
            for (int id : differing)
                list += (list.empty() ? "" : ",") + std::to_string(id);
            det.detail = "reports differ for criteria [" + list + "]" + (cli_same ? "" : " and the CLI transcript");
        } else {
            det.detail = "criteria 1-8 and 7 CLI commands identical at 1 and 8 threads (" +
                         std::to_string(seconds_since(t0)) + " s)";
        }
    }
    all_pass = all_pass && det.pass;
    std::cout << "criterion 9: " << (det.pass ? "PASS" : "FAIL") << " - " << det.detail << std::endl;
    return all_pass ? 0 : 1;
}
