#include "eideal/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

namespace eideal {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

SimpleGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    int n = -1;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            long long count = -1;
            ls >> tag >> count;
            std::string rest;
            if (tag != "n" || count < 0 || ls.fail() || (ls >> rest)) {
                throw ParseError("line " + std::to_string(lineno) +
                                     ": expected header \"n <count>\", got \"" + line + "\"",
                                 lineno);
            }
            if (count > 64) {
                throw ParseError("line " + std::to_string(lineno) +
                                     ": vertex count " + std::to_string(count) +
                                     " exceeds the supported maximum of 64",
                                 lineno);
            }
            n = static_cast<int>(count);
            continue;
        }
        long long u = 0, v = 0;
        std::string rest;
        ls >> u >> v;
        if (ls.fail() || (ls >> rest)) {
            throw ParseError("line " + std::to_string(lineno) + ": malformed edge line \"" +
                                 line + "\"",
                             lineno);
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                                 std::to_string(n) + " in \"" + line + "\"",
                             lineno);
        }
        if (u == v) {
            throw ParseError("line " + std::to_string(lineno) + ": loop edge at vertex " +
                                 std::to_string(u),
                             lineno);
        }
        const auto key = std::make_pair(static_cast<int>(std::min(u, v)),
                                        static_cast<int>(std::max(u, v)));
        if (!seen.insert(key).second) {
            throw ParseError("line " + std::to_string(lineno) + ": duplicate edge " +
                                 std::to_string(key.first) + " " + std::to_string(key.second),
                             lineno);
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing header line \"n <count>\"", lineno);
    return SimpleGraph::from_edges(n, edges);
}

std::string render_edge_list(const SimpleGraph& g) {
    std::ostringstream os;
    os << "n " << g.ambient() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

namespace {

constexpr int kG6Min = 63, kG6Max = 126;

void append_bits(std::string& out, std::uint64_t value, int bits) {
    for (int shift = bits - 6; shift >= 0; shift -= 6) {
        out.push_back(static_cast<char>(((value >> shift) & 0x3F) + kG6Min));
    }
}

}  // namespace

SimpleGraph parse_graph6(const std::string& input) {
    std::string text = input;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kG6Min || c > kG6Max) {
            throw ParseError("invalid graph6 byte at offset " + std::to_string(i), i);
        }
    }
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<unsigned char>(text[0]) - kG6Min;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) {
            throw ParseError("truncated graph6 size field at offset " +
                                 std::to_string(text.size()),
                             text.size());
        }
        for (int k = 1; k <= 3; ++k) {
            n = (n << 6) | (static_cast<unsigned char>(text[k]) - kG6Min);
        }
        pos = 4;
    } else {
        if (text.size() < 8) {
            throw ParseError("truncated graph6 size field at offset " +
                                 std::to_string(text.size()),
                             text.size());
        }
        for (int k = 2; k <= 7; ++k) {
            n = (n << 6) | (static_cast<unsigned char>(text[k]) - kG6Min);
        }
        pos = 8;
    }
    if (n > 64) {
        throw ParseError("graph6 vertex count " + std::to_string(n) +
                             " exceeds the supported maximum of 64",
                         0);
    }
    const std::size_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != pos + nbytes) {
        throw ParseError("graph6 string has wrong length (expected " +
                             std::to_string(pos + nbytes) + " bytes, got " +
                             std::to_string(text.size()) + ")",
                         text.size());
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const unsigned char byte = static_cast<unsigned char>(text[pos + k / 6]) - kG6Min;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    // Padding bits past the triangle must be zero.
    for (; k < nbytes * 6; ++k) {
        const unsigned char byte = static_cast<unsigned char>(text[pos + k / 6]) - kG6Min;
        if ((byte >> (5 - k % 6)) & 1) {
            throw ParseError("nonzero padding bit at offset " + std::to_string(pos + k / 6),
                             pos + k / 6);
        }
    }
    return SimpleGraph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const SimpleGraph& g) {
    const auto verts = g.vertices();
    const std::uint64_t n = verts.size();
    std::vector<int> index(g.ambient() + 1, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Min));
    } else {
        out.push_back('~');
        append_bits(out, n, 18);
    }
    std::uint8_t group = 0;
    int filled = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i) {
            group = static_cast<std::uint8_t>(group << 1);
            if (g.has_edge(verts[i], verts[j])) group |= 1;
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Min));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        group = static_cast<std::uint8_t>(group << (6 - filled));
        out.push_back(static_cast<char>(group + kG6Min));
    }
    return out;
}

}  // namespace eideal
