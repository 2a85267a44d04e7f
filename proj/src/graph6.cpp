#include "qx/graph6.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qx {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("empty graph6 string");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw std::invalid_argument("graph6 string truncated");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("invalid graph6 byte");
        return c - 63;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int a = next(), b = next(), c = next();
        n = (static_cast<long>(a) << 12) | (b << 6) | c;
    }
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6 order " + std::to_string(n) +
                                    " outside supported range [1, 64]");

    std::vector<std::pair<int, int>> edges;
    int group = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                group = next();
                bits = 6;
            }
            if (group & (1 << (bits - 1))) edges.emplace_back(i, j);
            --bits;
        }
    }
    if (pos != text.size())
        throw std::invalid_argument("trailing bytes after graph6 payload");
    return Graph(static_cast<int>(n), edges);
}

}  // namespace qx
