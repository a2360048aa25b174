#include "fankit/graph.hpp"

namespace fankit {

namespace {

// Branch and bound: the lowest live vertex is either matched to one of its live
// neighbours or left exposed. Bound: current + (live non-isolated vertices) / 2.
class MatchingSearch {
public:
    MatchingSearch(const Graph& g, int cap) : g_(g), cap_(cap) {}

    std::vector<Edge> run() {
        VertexSet live(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v)
            if (g_.degree(v) > 0)
                live.insert(v);
        ceiling_ = live.count() / 2;
        if (cap_ >= 0 && cap_ < ceiling_)
            ceiling_ = cap_;
        recurse(live);
        return best_;
    }

private:
    void recurse(VertexSet live) {
        if (static_cast<int>(best_.size()) >= ceiling_)
            return;
        // Drop vertices with no live neighbour; they cannot be matched.
        Vertex pivot = -1;
        for (Vertex v : live) {
            if (!g_.neighbors(v).intersects(live)) {
                live.erase(v);
                continue;
            }
            if (pivot < 0)
                pivot = v;
        }
        if (current_.size() > best_.size())
            best_ = current_;
        if (pivot < 0)
            return;
        if (static_cast<int>(current_.size()) + live.count() / 2 <= static_cast<int>(best_.size()))
            return;

        live.erase(pivot);
        for (Vertex w : g_.neighbors(pivot) & live) {
            VertexSet rest = live;
            rest.erase(w);
            current_.push_back({pivot, w});
            recurse(rest);
            current_.pop_back();
            if (static_cast<int>(best_.size()) >= ceiling_)
                return;
        }
        recurse(live);
    }

    const Graph& g_;
    int cap_;
    int ceiling_ = 0;
    std::vector<Edge> current_;
    std::vector<Edge> best_;
};

} // namespace

std::vector<Edge> maximum_matching(const Graph& g, int cap) {
    return MatchingSearch(g, cap).run();
}

int matching_number(const Graph& g) {
    return static_cast<int>(maximum_matching(g).size());
}

} // namespace fankit
