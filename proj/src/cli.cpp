#include "fankit/cli.hpp"

#include "fankit/decomposition.hpp"
#include "fankit/error.hpp"
#include "fankit/extremal.hpp"
#include "fankit/oracle.hpp"
#include "fankit/packing.hpp"
#include "fankit/parallel.hpp"
#include "fankit/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fankit::cli {

namespace {

struct Options {
    std::string graph6;
    std::string file;
    int n = -1;
    int k = 1;
    int r = 3;
    int parts = -1;
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 0;
    std::uint64_t budget = PackingOptions{}.node_budget;
    std::size_t copy_budget = PackingOptions{}.copy_budget;
    std::optional<double> t1, t2, balance_bound;
    bool paper_thresholds = false;
    int restarts = 8;
    int max_iterations = 100'000;
    long long nu = 0, delta = 0, n0 = 0;
    bool no_cache = false;
};

FanSpec make_spec(const Options& o) {
    if (o.k < 1)
        throw DomainError("k must be at least 1");
    if (o.r < 3)
        throw DomainError("r must be at least 3");
    return FanSpec(o.k, o.r);
}

int need_n(const Options& o) {
    if (o.n < 0)
        throw DomainError("-n is required and must be non-negative");
    return o.n;
}

PackingOptions packing_options(const Options& o) {
    PackingOptions p;
    p.node_budget = o.budget;
    p.copy_budget = o.copy_budget;
    return p;
}

std::vector<Graph> read_input(const Options& o, std::istream& in) {
    if (!o.graph6.empty() && !o.file.empty())
        throw DomainError("give exactly one of --graph6 and --file");
    std::string text;
    if (!o.graph6.empty()) {
        text = o.graph6;
    } else if (!o.file.empty()) {
        std::ifstream f(o.file, std::ios::binary);
        if (!f)
            throw DomainError("cannot open " + o.file);
        text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto graphs = read_graph6_lines(text);
    if (graphs.empty())
        throw DomainError("no input graph");
    return graphs;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a)
            return;
    std::string list;
    for (const char* a : allowed)
        list += (list.empty() ? "" : ", ") + std::string(a);
    throw DomainError("format '" + o.format + "' not available here (choose " + list + ")");
}

std::string plain_dot(const Graph& g) {
    std::ostringstream s;
    s << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        s << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        s << "  " << e.u << " -- " << e.v << ";\n";
    s << "}\n";
    return s.str();
}

void emit_graph(const Graph& g, const Options& o, std::ostream& out) {
    check_format(o, {"json", "graph6", "text", "dot"});
    if (o.format == "graph6") {
        out << to_graph6(g) << '\n';
    } else if (o.format == "dot") {
        out << plain_dot(g);
    } else if (o.format == "text") {
        out << g.order() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges())
            out << e.u << ' ' << e.v << '\n';
    } else {
        out << json{{"n", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}}.dump() << '\n';
    }
}

// Emits one report, or an array when several graphs were given.
template <class F>
void emit_each(const std::vector<Graph>& graphs, std::ostream& out, F&& report) {
    if (graphs.size() == 1) {
        out << report(graphs.front()).dump() << '\n';
        return;
    }
    json all = json::array();
    for (const auto& g : graphs)
        all.push_back(report(g));
    out << all.dump() << '\n';
}

std::optional<OracleCache> cache_from_env(const Options& o) {
    if (o.no_cache)
        return std::nullopt;
    const char* dir = std::getenv("FANKIT_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    return OracleCache(dir);
}

SearchReport cached_verify(const Options& o) {
    const auto spec = make_spec(o);
    if (auto cache = cache_from_env(o))
        return cache->verify(need_n(o), spec, packing_options(o));
    return verify_identity(need_n(o), spec, packing_options(o));
}

void add_spec(CLI::App* s, Options& o) {
    s->add_option("-k", o.k, "number of blades")->capture_default_str();
    s->add_option("-r", o.r, "clique order of each blade")->capture_default_str();
}

void add_input(CLI::App* s, Options& o) {
    s->add_option("--graph6", o.graph6, "input graph as a graph6 string");
    s->add_option("--file", o.file, "file of graph6 lines");
}

void add_format(CLI::App* s, Options& o, const std::string& help) {
    s->add_option("--format", o.format, help)->capture_default_str();
}

void add_budget(CLI::App* s, Options& o) {
    s->add_option("--budget", o.budget, "branch-and-bound node budget")->capture_default_str();
    s->add_option("--copy-budget", o.copy_budget, "maximum number of enumerated copies")->capture_default_str();
}

json error_object(const std::string& kind, const std::string& message) {
    return json{{"error", message}, {"kind", kind}};
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Fan decompositions, packings and extremal constructions", "fankit"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads (1 = serial reference)");

    std::function<void()> action;

    auto* construct = app.add_subcommand("construct", "build a named graph");
    construct->require_subcommand(1);
    auto* c_fan = construct->add_subcommand("fan", "the (k,r)-fan itself");
    add_spec(c_fan, o);
    add_format(c_fan, o, "json | graph6 | text | dot");
    c_fan->callback([&] { action = [&] { emit_graph(build_fan(make_spec(o)), o, out); }; });
    auto* c_turan = construct->add_subcommand("turan", "balanced complete multipartite graph");
    c_turan->add_option("-n", o.n, "order")->required();
    c_turan->add_option("--parts", o.parts, "number of parts (default r-1)");
    c_turan->add_option("-r", o.r, "use r-1 parts")->capture_default_str();
    add_format(c_turan, o, "json | graph6 | text | dot");
    c_turan->callback([&] {
        action = [&] {
            const int p = o.parts > 0 ? o.parts : o.r - 1;
            if (p < 1)
                throw DomainError("need at least one part");
            emit_graph(turan_graph(need_n(o), p), o, out);
        };
    });
    auto* c_ext = construct->add_subcommand("extremal", "Turán graph with the extremal planted graph");
    c_ext->add_option("-n", o.n, "order")->required();
    add_spec(c_ext, o);
    add_format(c_ext, o, "json | graph6 | text | dot");
    c_ext->callback([&] { action = [&] { emit_graph(extremal_fan_graph(need_n(o), make_spec(o)), o, out); }; });

    auto* pack = app.add_subcommand("pack", "maximum edge-disjoint fan packing");
    add_input(pack, o);
    add_spec(pack, o);
    add_budget(pack, o);
    add_format(pack, o, "json | text");
    pack->callback([&] {
        action = [&] {
            check_format(o, {"json", "text"});
            const auto spec = make_spec(o);
            const auto graphs = read_input(o, in);
            std::vector<PackingSearch> results;
            for (const auto& g : graphs) {
                auto s = solve_packing(g, spec, packing_options(o));
                if (!s.exact)
                    throw ResourceError("packing budget exhausted; best packing " +
                                            std::to_string(s.packing.size()) + ", ceiling " +
                                            std::to_string(s.upper_bound),
                                        static_cast<long long>(s.packing.size()));
                results.push_back(std::move(s));
            }
            if (o.format == "text") {
                for (const auto& s : results) {
                    out << "p " << s.packing.size() << '\n';
                    for (const auto& c : s.packing.copies) {
                        out << c.center << ':';
                        for (const auto& b : c.blades) {
                            out << ' ';
                            for (std::size_t i = 0; i < b.size(); ++i)
                                out << (i ? "," : "") << b[i];
                        }
                        out << '\n';
                    }
                }
                return;
            }
            std::size_t i = 0;
            emit_each(graphs, out, [&](const Graph&) { return json(results[i++]); });
        };
    });

    auto* phic = app.add_subcommand("phi", "minimum number of parts of a fan decomposition");
    add_input(phic, o);
    add_spec(phic, o);
    add_budget(phic, o);
    add_format(phic, o, "json | text");
    phic->callback([&] {
        action = [&] {
            check_format(o, {"json", "text"});
            const auto spec = make_spec(o);
            const auto graphs = read_input(o, in);
            std::vector<PhiResult> results;
            for (const auto& g : graphs) {
                auto r = phi(g, spec, packing_options(o));
                if (!r.exact)
                    throw ResourceError("packing budget exhausted; phi <= " + std::to_string(r.phi),
                                        static_cast<long long>(r.packing.size()));
                results.push_back(std::move(r));
            }
            if (o.format == "text") {
                for (const auto& r : results)
                    out << "phi " << r.phi << '\n';
                return;
            }
            std::size_t i = 0;
            emit_each(graphs, out, [&](const Graph&) { return json(results[i++]); });
        };
    });

    auto* decompose = app.add_subcommand("decompose", "run the constructive decomposition pipeline");
    add_input(decompose, o);
    add_spec(decompose, o);
    decompose->add_option("--seed", o.seed, "max-cut restart seed")->capture_default_str();
    decompose->add_option("--restarts", o.restarts, "max-cut restarts")->capture_default_str();
    decompose->add_option("--t1", o.t1, "bad-vertex threshold override");
    decompose->add_option("--t2", o.t2, "active-vertex threshold override");
    decompose->add_flag("--paper-thresholds", o.paper_thresholds, "use the literal asymptotic thresholds");
    decompose->add_option("--max-iterations", o.max_iterations, "cap on extracted fans")->capture_default_str();
    decompose->add_option("--balance-bound", o.balance_bound, "near-balance tolerance override");
    add_format(decompose, o, "json | dot | text");
    decompose->callback([&] {
        action = [&] {
            check_format(o, {"json", "dot", "text"});
            const auto spec = make_spec(o);
            PipelineConfig cfg;
            cfg.t1_override = o.t1;
            cfg.t2_override = o.t2;
            cfg.paper_thresholds = o.paper_thresholds;
            cfg.max_iterations = o.max_iterations;
            cfg.seed = o.seed;
            cfg.restarts = o.restarts;
            cfg.balance_bound = o.balance_bound;
            const auto graphs = read_input(o, in);
            if (o.format == "dot") {
                for (const auto& g : graphs)
                    out << to_dot(g, run_pipeline(g, spec, cfg));
                return;
            }
            if (o.format == "text") {
                for (const auto& g : graphs) {
                    const auto rep = run_pipeline(g, spec, cfg);
                    out << "fans " << rep.fans.size() << " target " << rep.target << " phi<= "
                        << rep.phi_upper_bound << '\n';
                    for (const auto& line : rep.trace)
                        out << "  " << line << '\n';
                }
                return;
            }
            emit_each(graphs, out, [&](const Graph& g) { return json(run_pipeline(g, spec, cfg)); });
        };
    });

    auto add_search_common = [&](CLI::App* s) {
        s->add_option("-n", o.n, "order")->required();
        add_spec(s, o);
        add_budget(s, o);
    };
    auto* search = app.add_subcommand("search", "exhaustive search over unlabeled graphs");
    search->require_subcommand(1);
    auto* s_ex = search->add_subcommand("ex", "extremal number by exhaustion");
    add_search_common(s_ex);
    s_ex->callback([&] {
        action = [&] {
            const auto r = ex_bruteforce(need_n(o), make_spec(o));
            json j = r;
            j["n"] = o.n;
            j["spec"] = make_spec(o);
            out << j.dump() << '\n';
        };
    });
    auto* s_phi = search->add_subcommand("phi", "maximum phi over all graphs of order n");
    add_search_common(s_phi);
    s_phi->add_flag("--no-cache", o.no_cache, "ignore FANKIT_CACHE_DIR");
    s_phi->callback([&] {
        action = [&] {
            auto rep = cached_verify(o);
            rep.uniqueness_holds.reset();
            rep.counterexamples.clear();
            json j = rep;
            j.erase("uniqueness_holds");
            j.erase("counterexamples");
            out << j.dump() << '\n';
        };
    });
    auto verify_action = [&] {
        action = [&] { out << json(cached_verify(o)).dump() << '\n'; };
    };
    auto* s_verify = search->add_subcommand("verify", "check phi = ex and the uniqueness clause");
    add_search_common(s_verify);
    s_verify->add_flag("--no-cache", o.no_cache, "ignore FANKIT_CACHE_DIR");
    s_verify->callback(verify_action);
    auto* verify = app.add_subcommand("verify", "same as 'search verify'");
    add_search_common(verify);
    verify->add_flag("--no-cache", o.no_cache, "ignore FANKIT_CACHE_DIR");
    verify->callback(verify_action);

    auto* bounds = app.add_subcommand("bounds", "closed-form quantities");
    bounds->require_subcommand(1);
    auto* b_g = bounds->add_subcommand("g", "surplus g(k)");
    b_g->add_option("-k", o.k, "number of blades")->required();
    b_g->callback([&] {
        action = [&] {
            if (o.k < 1)
                throw DomainError("k must be at least 1");
            out << json{{"k", o.k}, {"g", g_surplus(o.k)}}.dump() << '\n';
        };
    });
    auto* b_h = bounds->add_subcommand("hanson", "max edges given matching number and max degree");
    b_h->add_option("--nu", o.nu, "matching number")->required();
    b_h->add_option("--delta", o.delta, "maximum degree")->required();
    b_h->callback([&] {
        action = [&] {
            out << json{{"nu", o.nu}, {"delta", o.delta}, {"f", hanson_bound(o.nu, o.delta)}}.dump() << '\n';
        };
    });
    auto* b_c = bounds->add_subcommand("constants", "threshold constants of the proof");
    b_c->add_option("-n", o.n, "order")->required();
    add_spec(b_c, o);
    b_c->add_option("--n0", o.n0, "stability threshold fed into n1")->capture_default_str();
    b_c->callback([&] { action = [&] { out << json(constants(need_n(o), make_spec(o), o.n0)).dump() << '\n'; }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        out << error_object("usage", e.what()).dump() << '\n';
        err << app.help();
        return kUsage;
    }

    try {
        if (o.threads < 0)
            throw DomainError("--threads must be positive");
        std::optional<par::ScopedThreads> scoped;
        if (o.threads > 0)
            scoped.emplace(o.threads);
        if (!action)
            throw DomainError("no command given");
        action();
        return kOk;
    } catch (const ParseError& e) {
        json j = error_object("parse", e.what());
        j["offset"] = e.offset();
        out << j.dump() << '\n';
        return kUsage;
    } catch (const InfeasibleError& e) {
        out << error_object("infeasible", e.what()).dump() << '\n';
        return kInfeasible;
    } catch (const ResourceError& e) {
        json j = error_object("budget", e.what());
        j["lower_bound"] = e.lower_bound();
        out << j.dump() << '\n';
        return kBudget;
    } catch (const std::domain_error& e) {
        out << error_object("usage", e.what()).dump() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        out << error_object("usage", e.what()).dump() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        out << error_object("internal", e.what()).dump() << '\n';
        return 1;
    }
}

} // namespace fankit::cli
