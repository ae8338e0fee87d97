#include "stk/graph_io.hpp"

#include <istream>
#include <sstream>

namespace stk {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
constexpr int kMaxOrder = 100000;  // sanity guard against absurd headers

void check_byte(unsigned char c, std::size_t pos) {
    if (c < kG6Lo || c > kG6Hi)
        throw ParseError("graph6: byte " + std::to_string(int(c)) + " outside 63..126", pos);
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Hi));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Lo));
    } else {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(kG6Hi));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Lo));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph from_graph6(const std::string& line) {
    if (line.empty()) throw ParseError("graph6: empty record", 0);
    std::size_t pos = 0;
    long long n;
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    check_byte(c0, 0);
    if (c0 != kG6Hi) {
        n = c0 - kG6Lo;
        pos = 1;
    } else {
        // one or two 126 prefix bytes
        int header = (line.size() > 1 && static_cast<unsigned char>(line[1]) == kG6Hi) ? 2 : 1;
        int digits = header == 1 ? 3 : 6;
        if (line.size() < static_cast<std::size_t>(header + digits))
            throw ParseError("graph6: truncated header", line.size());
        n = 0;
        for (int i = 0; i < digits; ++i) {
            unsigned char c = static_cast<unsigned char>(line[header + i]);
            check_byte(c, header + i);
            n = (n << 6) | (c - kG6Lo);
        }
        pos = header + digits;
    }
    if (n > kMaxOrder) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", 0);

    const long long pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (line.size() - pos < body) throw ParseError("graph6: truncated bit field", line.size());
    if (line.size() - pos > body) throw ParseError("graph6: trailing bytes after bit field", pos + body);

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t i = 0; i < body; ++i) {
        unsigned char c = static_cast<unsigned char>(line[pos + i]);
        check_byte(c, pos + i);
        int val = c - kG6Lo;
        for (int s = 5; s >= 0; --s, ++bit) {
            if (bit >= pairs) {
                if ((val >> s) & 1) throw ParseError("graph6: nonzero padding bit", pos + i);
                continue;
            }
            if ((val >> s) & 1) {
                // bit index -> column-major upper-triangle pair (u, v), u < v
                long long b = bit;
                int v = 1;
                while (b >= v) b -= v, ++v;
                edges.emplace_back(static_cast<int>(b), v);
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        g.for_neighbors(u, [&](int v) {
            if (u < v) out << u << ' ' << v << '\n';
        });
    return out.str();
}

Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
    if (n < 0 || n > kMaxOrder) throw ParseError("edge list: bad vertex count", 0);
    if (m < 0) throw ParseError("edge list: bad edge count", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) {
            std::streamoff pos = in.tellg();
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             pos < 0 ? 0 : static_cast<std::size_t>(pos));
        }
        edges.emplace_back(u, v);
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what(), 0);
    }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace stk
