#include "oddminor/certificate_io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

template <class T, class F>
void write_list(std::ostream& out, const std::vector<T>& items, F&& write_item) {
    out << '[';
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out << ", ";
        write_item(items[k]);
    }
    out << ']';
}

}  // namespace

std::string serialize_model(const OddExpansionModel& m, std::string_view graph_hash) {
    std::ostringstream out;
    out << "version: 1\n";
    out << "graph_hash: " << graph_hash << "\n";
    out << "clique_order: " << m.clique_order() << "\n";
    if (!m.flags.empty()) {
        std::vector<std::string> flags = m.flags;
        std::sort(flags.begin(), flags.end());
        out << "flags: ";
        write_list(out, flags, [&](const std::string& f) { out << f; });
        out << "\n";
    }
    if (m.trees.empty()) {
        out << "trees: []\n";
    } else {
        out << "trees:\n";
        for (const auto& tree : m.trees) {
            BranchTree t = tree;
            t.normalize();
            out << "  - vertices: ";
            write_list(out, t.vertices, [&](Vertex v) { out << v; });
            out << "\n    edges: ";
            write_list(out, t.edges, [&](const Edge& e) { out << '[' << e.u << ", " << e.v << ']'; });
            out << "\n";
        }
    }
    out << "coloring: [";
    bool first = true;
    for (const auto& [v, c] : m.coloring) {
        out << (first ? "" : ", ") << '[' << v << ", " << static_cast<int>(c) << ']';
        first = false;
    }
    out << "]\n";
    if (m.connectors) {
        out << "connectors: [";
        first = true;
        for (const auto& [pair, c] : *m.connectors) {
            out << (first ? "" : ", ") << '[' << pair.first << ", " << pair.second << ", " << c.from << ", " << c.to
                << ']';
            first = false;
        }
        out << "]\n";
    }
    return out.str();
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : size_(text.size()) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& path, const std::string& msg) const {
        const auto mark = node.Mark();
        const bool known = mark.pos >= 0;
        throw ParseError("certificate field '" + path + "': " + msg, known ? static_cast<std::size_t>(mark.pos) : size_,
                         known ? static_cast<std::size_t>(mark.line + 1) : 0, path);
    }
    [[noreturn]] void fail_missing(const std::string& path) const {
        throw ParseError("certificate field '" + path + "' is missing", size_, 0, path);
    }

    long long integer(const YAML::Node& node, const std::string& path, long long lo, long long hi) const {
        if (!node.IsScalar()) fail(node, path, "expected an integer");
        long long value = 0;
        try {
            value = node.as<long long>();
        } catch (const YAML::Exception&) {
            fail(node, path, "expected an integer, got '" + node.Scalar() + "'");
        }
        if (value < lo || value > hi)
            fail(node, path, "value " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
        return value;
    }

    Vertex vertex(const YAML::Node& node, const std::string& path) const {
        return static_cast<Vertex>(integer(node, path, 0, 0xffffffffLL));
    }

    const YAML::Node& sequence(const YAML::Node& node, const std::string& path, std::size_t exact = 0) const {
        if (!node.IsSequence()) fail(node, path, "expected a list");
        if (exact && node.size() != exact) fail(node, path, "expected a list of " + std::to_string(exact) + " integers");
        return node;
    }

private:
    std::size_t size_;
};

std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

}  // namespace

Certificate parse_certificate(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        const auto pos = e.mark.pos >= 0 ? static_cast<std::size_t>(e.mark.pos) : text.size();
        throw ParseError("certificate syntax error: " + e.msg, pos, static_cast<std::size_t>(e.mark.line + 1));
    }
    Reader rd(text);
    if (!root.IsMap()) throw ParseError("certificate must be a key-value map", 0, 1);

    static const std::set<std::string> known{"version", "graph_hash", "clique_order", "flags",
                                             "trees",   "coloring",   "connectors"};
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!known.count(key)) rd.fail(kv.first, key, "unknown field");
    }
    auto require = [&](const char* key) {
        YAML::Node node = root[key];
        if (!node) rd.fail_missing(key);
        return node;
    };

    Certificate cert;
    cert.version = static_cast<int>(rd.integer(require("version"), "version", 1, 1));
    {
        auto node = require("graph_hash");
        if (!node.IsScalar()) rd.fail(node, "graph_hash", "expected a hex string");
        cert.graph_hash = node.Scalar();
        if (cert.graph_hash.find_first_not_of("0123456789abcdef") != std::string::npos)
            rd.fail(node, "graph_hash", "expected lowercase hex");
    }
    auto order_node = require("clique_order");
    const auto order = static_cast<std::size_t>(rd.integer(order_node, "clique_order", 0, 1LL << 31));

    auto& model = cert.model;
    if (auto flags = root["flags"]) {
        rd.sequence(flags, "flags");
        for (std::size_t k = 0; k < flags.size(); ++k) {
            if (!flags[k].IsScalar()) rd.fail(flags[k], at("flags", k), "expected a word");
            model.flags.push_back(flags[k].Scalar());
        }
    }

    auto trees = rd.sequence(require("trees"), "trees");
    for (std::size_t t = 0; t < trees.size(); ++t) {
        const auto path = at("trees", t);
        const auto& node = trees[t];
        if (!node.IsMap()) rd.fail(node, path, "expected {vertices, edges}");
        BranchTree tree;
        auto vs = node["vertices"];
        if (!vs) rd.fail(node, path + ".vertices", "missing");
        rd.sequence(vs, path + ".vertices");
        for (std::size_t k = 0; k < vs.size(); ++k) tree.vertices.push_back(rd.vertex(vs[k], at(path + ".vertices", k)));
        auto es = node["edges"];
        if (!es) rd.fail(node, path + ".edges", "missing");
        rd.sequence(es, path + ".edges");
        for (std::size_t k = 0; k < es.size(); ++k) {
            const auto epath = at(path + ".edges", k);
            rd.sequence(es[k], epath, 2);
            tree.edges.push_back(Edge::normalized(rd.vertex(es[k][0], epath + "[0]"), rd.vertex(es[k][1], epath + "[1]")));
        }
        tree.normalize();
        model.trees.push_back(std::move(tree));
    }
    if (order != model.trees.size())
        rd.fail(order_node, "clique_order",
                "declares " + std::to_string(order) + " but " + std::to_string(model.trees.size()) + " trees follow");

    auto coloring = rd.sequence(require("coloring"), "coloring");
    for (std::size_t k = 0; k < coloring.size(); ++k) {
        const auto path = at("coloring", k);
        rd.sequence(coloring[k], path, 2);
        Vertex v = rd.vertex(coloring[k][0], path + "[0]");
        auto c = static_cast<Color>(rd.integer(coloring[k][1], path + "[1]", 1, 2));
        if (!model.coloring.emplace(v, c).second) rd.fail(coloring[k], path, "vertex colored twice");
    }

    if (auto conns = root["connectors"]) {
        rd.sequence(conns, "connectors");
        model.connectors.emplace();
        for (std::size_t k = 0; k < conns.size(); ++k) {
            const auto path = at("connectors", k);
            rd.sequence(conns[k], path, 4);
            auto i = static_cast<std::size_t>(rd.integer(conns[k][0], path + "[0]", 0, 1LL << 31));
            auto j = static_cast<std::size_t>(rd.integer(conns[k][1], path + "[1]", 0, 1LL << 31));
            Connector c{rd.vertex(conns[k][2], path + "[2]"), rd.vertex(conns[k][3], path + "[3]")};
            if (!model.connectors->emplace(TreePair{i, j}, c).second) rd.fail(conns[k], path, "pair listed twice");
        }
    }
    return cert;
}

Certificate read_certificate_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_certificate(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.offset(), e.line(), e.path());
    }
}

void write_certificate_file(const std::filesystem::path& path, const OddExpansionModel& m,
                            std::string_view graph_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize_model(m, graph_hash);
}

}  // namespace oddminor
