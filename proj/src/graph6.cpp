#include "fankit/error.hpp"
#include "fankit/graph.hpp"

#include <cctype>

namespace fankit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t i, std::size_t base) {
    if (i >= s.size())
        throw ParseError("graph6: truncated code", base + i);
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte outside [63,126]", base + i);
    return c - 63;
}

void put_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

} // namespace

Graph from_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty code", base);

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != 126) {
        n = sextet(text, 0, base);
        pos = 1;
    } else if (text.size() > 1 && text[1] == 126) {
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | sextet(text, i, base);
        pos = 8;
    } else {
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | sextet(text, i, base);
        pos = 4;
    }
    if (n > (1 << 20))
        throw ParseError("graph6: order too large", base);

    const auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t want = (bits + 5) / 6;
    if (text.size() - pos != want)
        throw ParseError("graph6: expected " + std::to_string(want) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         base + std::min(text.size(), pos + want));

    GraphBuilder b(static_cast<int>(n));
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int word = sextet(text, pos + k / 6, base);
            if (word & (1 << (5 - k % 6)))
                b.add_edge(i, j);
        }
    }
    return b.build();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    put_size(out, n);
    int word = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + word));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (word << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t offset = 0;
    while (offset < text.size()) {
        auto end = text.find('\n', offset);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(offset, end - offset);
        bool blank = true;
        for (char c : line)
            blank = blank && std::isspace(static_cast<unsigned char>(c));
        if (!blank) {
            try {
                out.push_back(from_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.detail(),
                                 offset + e.offset());
            }
        }
        offset = end + 1;
    }
    return out;
}

} // namespace fankit
