#include "oddminor/graph_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "oddminor/errors.hpp"

namespace oddminor {

std::string to_text(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

namespace {

// Splits `line` into unsigned integers; false on any non-numeric token.
bool parse_numbers(std::string_view line, std::vector<std::size_t>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{}) return false;
        std::size_t next = static_cast<std::size_t>(ptr - line.data());
        if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r') return false;
        out.push_back(value);
        i = next;
    }
    return true;
}

}  // namespace

Graph parse_graph_text(std::string_view text, std::string_view source) {
    auto fail = [&](const std::string& msg, std::size_t offset, std::size_t line) -> ParseError {
        return ParseError(std::string(source) + ":" + std::to_string(line) + ": " + msg, offset, line);
    };

    std::size_t pos = 0, line_no = 0;
    std::vector<std::size_t> nums;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        std::size_t line_offset = pos;
        pos = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (!parse_numbers(line, nums) || nums.size() != 2)
            throw fail("expected two non-negative integers", line_offset, line_no);
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            have_header = true;
            continue;
        }
        if (nums[0] >= n || nums[1] >= n) throw fail("edge endpoint out of range", line_offset, line_no);
        if (nums[0] == nums[1]) throw fail("self-loop", line_offset, line_no);
        if (edges.size() == m) throw fail("more edge lines than declared", line_offset, line_no);
        edges.push_back(Edge::normalized(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])));
    }
    if (!have_header) throw fail("missing 'n m' header", text.size(), line_no);
    if (edges.size() != m)
        throw fail("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), text.size(),
                   line_no);
    try {
        return Graph(n, std::move(edges));
    } catch (const ParameterError& e) {
        throw fail(e.what(), text.size(), line_no);
    }
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    std::size_t pos = 0;
    auto next6 = [&]() -> unsigned {
        if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos, 1);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", pos, 1);
        ++pos;
        return c - 63u;
    };

    std::size_t n = 0;
    unsigned first = next6();
    if (first < 63) {
        n = first;
    } else {
        std::size_t width = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            width = 6;
        }
        for (std::size_t k = 0; k < width; ++k) n = (n << 6) | next6();
    }

    std::vector<Edge> edges;
    unsigned chunk = 0;
    int bits_left = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (bits_left == 0) {
                chunk = next6();
                bits_left = 6;
            }
            --bits_left;
            if ((chunk >> bits_left) & 1u) edges.push_back({i, j});
        }
    if (pos != text.size()) throw ParseError("graph6: trailing bytes", pos, 1);
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (path.extension() == ".g6") {
        try {
            return parse_graph6(text);
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ": " + e.what(), e.offset(), e.line());
        }
    }
    return parse_graph_text(text, path.string());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << (path.extension() == ".g6" ? to_graph6(g) + "\n" : to_text(g));
}

std::string graph_hash(const Graph& g) {
    const std::string text = to_text(g);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 15]);
    }
    return out;
}

}  // namespace oddminor
