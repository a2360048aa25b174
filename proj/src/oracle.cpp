#include "fankit/oracle.hpp"

#include "fankit/error.hpp"
#include "fankit/parallel.hpp"
#include "fankit/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace fankit {

namespace {

void check_order(int n) {
    if (n < 0)
        throw DomainError("order must be non-negative");
    if (n > kMaxOracleOrder)
        throw ResourceError("exhaustive search supports n <= " + std::to_string(kMaxOracleOrder), 0);
}

// Every graph obtained by adding one vertex to `parent`, canonicalized.
std::vector<std::string> children(const Graph& parent) {
    const int m = parent.order() + 1;
    const auto base = parent.edges();
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << (m - 1));
    for (unsigned s = 0; s < (1u << (m - 1)); ++s) {
        auto edges = base;
        for (int i = 0; i < m - 1; ++i)
            if (s >> i & 1)
                edges.push_back({i, m - 1});
        out.push_back(canonical_graph6(Graph::from_edges(m, edges)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Graph> decode_sorted(std::vector<std::string> codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& c : codes)
        out.push_back(from_graph6(c));
    return out;
}

std::vector<Graph> generate(int n, bool parallel) {
    check_order(n);
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::vector<std::vector<std::string>> per(level.size());
        const auto count = static_cast<long>(level.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(par::threads())
            for (long i = 0; i < count; ++i)
                per[static_cast<std::size_t>(i)] = children(level[static_cast<std::size_t>(i)]);
        } else {
            for (long i = 0; i < count; ++i)
                per[static_cast<std::size_t>(i)] = children(level[static_cast<std::size_t>(i)]);
        }
        std::vector<std::string> all;
        for (auto& v : per)
            all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
        level = decode_sorted(std::move(all));
    }
    return level;
}

} // namespace

std::vector<Graph> all_graphs(int n) { return generate(n, true); }
std::vector<Graph> all_graphs_serial(int n) { return generate(n, false); }

namespace {

ExResult ex_over(const std::vector<Graph>& classes, const FanSpec& spec) {
    const auto count = static_cast<long>(classes.size());
    std::vector<char> free(classes.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(par::threads())
    for (long i = 0; i < count; ++i)
        free[static_cast<std::size_t>(i)] = !contains_fan(classes[static_cast<std::size_t>(i)], spec);

    ExResult res;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (free[i])
            res.value = std::max(res.value, classes[i].edge_count());
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (free[i] && classes[i].edge_count() == res.value)
            res.extremal_graphs.push_back(to_graph6(classes[i]));
    return res;
}

} // namespace

ExResult ex_bruteforce(int n, const FanSpec& spec) { return ex_over(all_graphs(n), spec); }

SearchReport phi_bruteforce(int n, const FanSpec& spec, const PackingOptions& opts) {
    const auto classes = all_graphs(n);
    const auto ex = ex_over(classes, spec);

    SearchReport rep;
    rep.n = n;
    rep.spec = spec;
    rep.classes = classes.size();
    rep.ex_value = ex.value;
    rep.extremal_graphs = ex.extremal_graphs;

    // phi >= ex everywhere it matters, and phi <= e - greedy*(e(H)-1); only classes whose
    // greedy ceiling reaches ex can be maximizers, so only those get the exact solver.
    const long long loss = spec.edge_count() - 1;
    const auto count = static_cast<long>(classes.size());
    std::vector<long long> value(classes.size(), -1);
    std::vector<char> exact(classes.size(), 1);
#pragma omp parallel for schedule(dynamic) num_threads(par::threads())
    for (long i = 0; i < count; ++i) {
        const auto& g = classes[static_cast<std::size_t>(i)];
        if (g.edge_count() < ex.value)
            continue;
        const long long ceiling =
            g.edge_count() - static_cast<long long>(greedy_packing(g, spec, 0).size()) * loss;
        if (ceiling < ex.value)
            continue;
        const auto r = phi(g, spec, opts);
        value[static_cast<std::size_t>(i)] = r.phi;
        exact[static_cast<std::size_t>(i)] = r.exact;
    }

    rep.phi_value = ex.value;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        rep.phi_value = std::max(rep.phi_value, value[i]);
        rep.exact = rep.exact && exact[i];
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (value[i] == rep.phi_value)
            rep.phi_maximizers.push_back(to_graph6(classes[i]));
    rep.identity_holds = rep.phi_value == rep.ex_value;
    return rep;
}

SearchReport verify_identity(int n, const FanSpec& spec, const PackingOptions& opts) {
    auto rep = phi_bruteforce(n, spec, opts);
    const std::set<std::string> extremal(rep.extremal_graphs.begin(), rep.extremal_graphs.end());
    for (const auto& code : rep.phi_maximizers)
        if (!extremal.count(code))
            rep.counterexamples.push_back(code);
    rep.uniqueness_holds = rep.identity_holds && rep.counterexamples.empty();
    return rep;
}

namespace {

std::string cache_key(int n, const FanSpec& spec) {
    return std::to_string(n) + "," + std::to_string(spec.k) + "," + std::to_string(spec.r);
}

json read_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        return json::object();
    auto j = json::parse(in, nullptr, false);
    return j.is_object() ? j : json::object();
}

} // namespace

OracleCache::OracleCache(std::filesystem::path dir) : file_(std::move(dir) / kFileName) {}

std::optional<SearchReport> OracleCache::lookup(int n, const FanSpec& spec) const {
    const auto j = read_cache(file_);
    const auto it = j.find(cache_key(n, spec));
    if (it == j.end() || !it->is_object() || it->value("version", "") != kVersion || !it->contains("report"))
        return std::nullopt;
    try {
        return it->at("report").get<SearchReport>();
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void OracleCache::store(const SearchReport& report) const {
    auto j = read_cache(file_);
    j[cache_key(report.n, report.spec)] = {{"version", kVersion}, {"report", report}};
    std::filesystem::create_directories(file_.parent_path());
    const auto tmp = std::filesystem::path(file_.string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out)
            throw ResourceError("cannot write cache file " + tmp.string(), 0);
        out << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, file_);
}

SearchReport OracleCache::verify(int n, const FanSpec& spec, const PackingOptions& opts) const {
    if (auto hit = lookup(n, spec))
        return *hit;
    auto rep = verify_identity(n, spec, opts);
    if (rep.exact)
        store(rep);
    return rep;
}

} // namespace fankit
