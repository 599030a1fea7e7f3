#include "treeramsey/graph6.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "treeramsey/errors.hpp"

namespace treeramsey {

namespace {

constexpr int kOffset = 63;  // printable range is 63..126

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(kOffset + ((value >> (6 * i)) & 0x3f)));
}

class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    int take() {
        if (pos_ >= text_.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text_[pos_++]);
        if (c < kOffset || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - kOffset;
    }

    std::uint64_t take_sextets(int count) {
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(take());
        return v;
    }

    bool done() const { return pos_ == text_.size(); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else if (n <= 258047) {
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - filled))));
    return out;
}

Graph from_graph6(const std::string& text) {
    Reader in(text);
    int first = in.take();
    long long n;
    if (first != '~' - kOffset) {
        n = first;
    } else {
        std::uint64_t head = in.take_sextets(1);
        if (head != static_cast<std::uint64_t>('~' - kOffset)) {
            n = static_cast<long long>((head << 12) | in.take_sextets(2));
        } else {
            n = static_cast<long long>(in.take_sextets(6));
        }
    }
    if (n > Graph::kMaxOrder) throw capacity_error("graph6: order exceeds supported maximum");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (left == 0) {
                acc = in.take();
                left = 6;
            }
            if ((acc >> (left - 1)) & 1) edges.emplace_back(u, v);
            --left;
        }
    }
    if (left > 0 && (acc & ((1 << left) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (!in.done()) throw std::invalid_argument("graph6: trailing bytes");
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace treeramsey
