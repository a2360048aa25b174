#include "fankit/serialize.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace fankit {

json exact_number(double x) {
    if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9.0e15)
        return static_cast<long long>(x);
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

void to_json(json& j, const FanSpec& s) {
    j = json{{"k", s.k}, {"r", s.r}, {"vertices", s.vertex_count()}, {"edges", s.edge_count()}};
}

void to_json(json& j, const FanCopy& f) { j = json{{"center", f.center}, {"blades", f.blades}}; }

void from_json(const json& j, FanCopy& f) {
    j.at("center").get_to(f.center);
    j.at("blades").get_to(f.blades);
}

void to_json(json& j, const Packing& p) {
    j = json{{"spec", p.spec}, {"size", p.size()}, {"copies", p.copies}};
}

void to_json(json& j, const PackingSearch& s) {
    j = json{{"packing", s.packing},          {"p", s.packing.size()},
             {"exact", s.exact},              {"upper_bound", s.upper_bound},
             {"nodes", s.nodes},              {"copies_enumerated", s.copies_enumerated},
             {"copy_budget_hit", s.copy_budget_hit}};
}

void to_json(json& j, const PhiResult& r) {
    j = json{{"phi", r.phi}, {"edges", r.edges}, {"p", r.packing.size()}, {"exact", r.exact},
             {"packing", r.packing}};
}

void to_json(json& j, const ExtremalValue& v) { j = json{{"ex", v.value}, {"valid", v.valid}}; }

void to_json(json& j, const Constants& c) {
    j = json{{"n", c.n},   {"k", c.k},   {"r", c.r},   {"gamma", c.gamma}, {"alpha", c.alpha},
             {"m1", c.m1}, {"m2", c.m2}, {"n1", c.n1}, {"t1", c.t1},       {"t2", c.t2},
             {"s_upper", c.s_upper},     {"n0", c.n0}};
}

void to_json(json& j, const Partition& p) {
    json labels = json::array();
    for (int l : p.labels())
        labels.push_back(l < 0 ? json(nullptr) : json(l + 1));
    json sizes = json::array();
    for (int i = 0; i < p.parts(); ++i)
        sizes.push_back(p.size(i));
    j = json{{"parts", p.parts()}, {"part_of", labels}, {"sizes", sizes}};
}

void to_json(json& j, const BalanceReport& b) {
    j = json{{"mode", b.mode == BalanceMode::NearBalance ? "near_balance" : "tight_band"},
             {"sizes", b.sizes},
             {"deviation", b.deviation},
             {"flagged", b.flagged},
             {"ok", b.ok}};
    if (b.mode == BalanceMode::NearBalance)
        j["bound"] = exact_number(b.bound);
    else
        j["band"] = {b.band_low, b.band_high};
}

void to_json(json& j, const ClaimCheck& c) { j = json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}}; }

void to_json(json& j, const DecompositionReport& r) {
    j = json{{"spec", r.spec},
             {"n", r.n},
             {"edges", r.edges},
             {"peeled", r.peeled},
             {"reduction_exhausted", r.reduction_exhausted},
             {"partition", r.partition},
             {"m", r.m},
             {"m_g0", r.m_g0},
             {"t1", exact_number(r.t1)},
             {"t2", exact_number(r.t2)},
             {"bad_count", r.bad_count},
             {"case", r.case_id},
             {"fans", r.fans},
             {"fan_count", r.fans.size()},
             {"step1_fans", r.step1_fans},
             {"step2_fans", r.step2_fans},
             {"internal_edges_consumed", r.internal_edges_consumed},
             {"residual_internal", r.residual_internal},
             {"pruned_internal", r.pruned_internal},
             {"target", r.target},
             {"target_met", r.target_met},
             {"claims", r.claims_checked},
             {"phi_upper_bound", r.phi_upper_bound},
             {"trace", r.trace}};
}

void to_json(json& j, const ExResult& r) { j = json{{"ex", r.value}, {"extremal_graphs", r.extremal_graphs}}; }

void to_json(json& j, const SearchReport& r) {
    j = json{{"n", r.n},
             {"spec", r.spec},
             {"classes", r.classes},
             {"ex", r.ex_value},
             {"phi", r.phi_value},
             {"extremal_graphs", r.extremal_graphs},
             {"phi_maximizers", r.phi_maximizers},
             {"identity_holds", r.identity_holds},
             {"exact", r.exact},
             {"counterexamples", r.counterexamples}};
    j["uniqueness_holds"] = r.uniqueness_holds ? json(*r.uniqueness_holds) : json(nullptr);
}

void from_json(const json& j, SearchReport& r) {
    j.at("n").get_to(r.n);
    r.spec = FanSpec(j.at("spec").at("k").get<int>(), j.at("spec").at("r").get<int>());
    j.at("classes").get_to(r.classes);
    j.at("ex").get_to(r.ex_value);
    j.at("phi").get_to(r.phi_value);
    j.at("extremal_graphs").get_to(r.extremal_graphs);
    j.at("phi_maximizers").get_to(r.phi_maximizers);
    j.at("identity_holds").get_to(r.identity_holds);
    j.at("exact").get_to(r.exact);
    j.at("counterexamples").get_to(r.counterexamples);
    const auto& u = j.at("uniqueness_holds");
    r.uniqueness_holds = u.is_null() ? std::nullopt : std::optional<bool>(u.get<bool>());
}

namespace {

constexpr std::array<const char*, 8> kPartColors = {"lightblue", "lightpink",  "palegreen", "khaki",
                                                    "plum",      "lightsalmon", "lightcyan", "wheat"};
constexpr std::array<const char*, 6> kFanColors = {"red", "blue", "darkgreen", "purple", "darkorange", "brown"};

} // namespace

std::string to_dot(const Graph& g, const DecompositionReport& r) {
    std::map<Edge, std::size_t> owner;
    for (std::size_t f = 0; f < r.fans.size(); ++f)
        for (const Edge& e : r.fans[f].edges())
            owner.emplace(e, f);

    std::ostringstream out;
    out << "graph decomposition {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        const int part = v < r.partition.order() ? r.partition.part_of(v) : -1;
        out << "  " << v << " [";
        if (part >= 0)
            out << "fillcolor=" << kPartColors[static_cast<std::size_t>(part) % kPartColors.size()]
                << ", label=\"" << v << "/" << part + 1 << "\"";
        else
            out << "fillcolor=gray";
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (auto it = owner.find(e); it != owner.end())
            out << " [color=" << kFanColors[it->second % kFanColors.size()] << ", penwidth=3]";
        else
            out << " [color=gray70]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace fankit
