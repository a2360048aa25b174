#include "fankit/error.hpp"
#include "fankit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace fankit {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v))
                adj_[v] |= Mask{1} << w;
    }

    std::vector<Vertex> run() {
        Cells root;
        if (n_ > 0) {
            root.emplace_back();
            for (int v = 0; v < n_; ++v)
                root.back().push_back(v);
        }
        search(std::move(root));
        return best_order_;
    }

private:
    static Mask mask_of(const std::vector<int>& cell) {
        Mask m = 0;
        for (int v : cell)
            m |= Mask{1} << v;
        return m;
    }

    // Split cells by neighbour counts into each splitter cell until stable. The
    // result depends only on the graph and the input order, not on labels.
    void refine(Cells& cells) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const Mask splitter = mask_of(cells[s]);
                for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
                    auto& cell = cells[c];
                    if (cell.size() < 2)
                        continue;
                    auto count = [&](int v) { return std::popcount(adj_[v] & splitter); };
                    const int first = count(cell.front());
                    if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; }))
                        continue;
                    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
                    Cells pieces;
                    for (int v : cell) {
                        if (pieces.empty() || count(pieces.back().front()) != count(v))
                            pieces.emplace_back();
                        pieces.back().push_back(v);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                    changed = true;
                }
            }
        }
    }

    std::string code(const std::vector<Vertex>& order) const {
        std::string bits;
        bits.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back((adj_[order[i]] >> order[j]) & 1 ? '1' : '0');
        return bits;
    }

    bool twins(int a, int b) const {
        const Mask ma = adj_[a] & ~(Mask{1} << b);
        const Mask mb = adj_[b] & ~(Mask{1} << a);
        return ma == mb;
    }

    void search(Cells cells) {
        refine(cells);
        auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (open == cells.end()) {
            std::vector<Vertex> order;
            for (const auto& c : cells)
                order.push_back(c.front());
            auto c = code(order);
            if (!have_best_ || c > best_code_) {
                have_best_ = true;
                best_code_ = std::move(c);
                best_order_ = std::move(order);
            }
            return;
        }
        const auto at = static_cast<std::size_t>(open - cells.begin());
        const std::vector<int> cell = *open;
        std::vector<int> tried;
        for (int v : cell) {
            // Swapping twins is an automorphism fixing everything individualized so far.
            if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); }))
                continue;
            tried.push_back(v);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cell)
                if (w != v)
                    rest.push_back(w);
            next[at] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
            search(std::move(next));
        }
    }

    int n_;
    std::vector<Mask> adj_;
    std::string best_code_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
};

} // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() > 64)
        throw DomainError("canonical form supports at most 64 vertices");
    const auto order = Canonizer(g).run();
    std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        label[static_cast<std::size_t>(order[pos])] = static_cast<Vertex>(pos);
    return g.relabeled(label);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

} // namespace fankit
