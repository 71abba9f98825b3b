#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "oddminor/certificate_io.hpp"
#include "oddminor/constructions.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/graph_io.hpp"
#include "oddminor/oracle.hpp"

using namespace oddminor;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kParam = 2, kTimeout = 3, kHashMismatch = 4 };

struct HashMismatch : Error {
    using Error::Error;
};

struct Common {
    std::string out;
    bool strict = false;
    int jobs = 1;
    double time = 60.0;
    std::uint64_t nodes = 100'000'000;
    std::size_t max_n = 16;
    bool ignore_hash = false;

    SearchBudget budget() const { return {max_n, time, nodes}; }
    SearchOptions options() const { return {jobs, strict}; }
};

void add_search_flags(CLI::App* app, Common& c) {
    app->add_flag("--strict", c.strict, "serial search and strict connector checks");
    app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--time", c.time, "search time limit in seconds")->check(CLI::PositiveNumber);
    app->add_option("--nodes", c.nodes, "search node limit")->check(CLI::PositiveNumber);
    app->add_option("--max-n", c.max_n, "largest graph the exact search accepts")->check(CLI::PositiveNumber);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// "a..b" or "a".
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw ParameterError("empty range " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParameterError("bad range '" + text + "' (expected N or LO..HI)");
    }
}

Graph load_graph(const std::string& path) {
    if (path.empty()) throw ParameterError("missing graph file");
    return read_graph_file(path);
}

// Factor model from a certificate file, or from the exact search.
OddExpansionModel factor_model(const Graph& g, const std::string& cert_path, const Common& c, const char* role) {
    if (!cert_path.empty()) {
        Certificate cert = read_certificate_file(cert_path);
        if (!c.ignore_hash && cert.graph_hash != graph_hash(g))
            throw HashMismatch(std::string(role) + " model " + cert_path + " was issued for another graph");
        return cert.model;
    }
    ExactResult res = odd_hadwiger(g, c.budget(), c.options());
    std::cerr << role << " model: order " << res.value << " (" << to_string(res.status) << ")\n";
    return res.certificate;
}

int emit(const Graph& host, const OddExpansionModel& m, const Common& c, const std::string& host_out) {
    if (!host_out.empty()) write_graph_file(host_out, host);
    const Verdict v = verify_odd_expansion(host, m, {.require_connectors = m.connectors.has_value(), .jobs = c.jobs});
    if (!c.out.empty()) write_certificate_file(c.out, m, graph_hash(host));
    std::cout << v.summary(m.clique_order()) << "\n";
    for (const auto& flag : m.flags) std::cout << "flag " << flag << "\n";
    return v ? kOk : kVerifyFail;
}

struct ConstructArgs {
    std::string id;
    std::size_t s = 0, t = 0, r = 0, n = 0, d = 0;
    std::string ga, gb, ma, mb, kind = "cartesian", host_out;
};

int cmd_construct(const ConstructArgs& a, const Common& c) {
    auto need = [&](std::size_t v, const char* name) {
        if (v == 0) throw ParameterError(a.id + " needs --" + name);
        return v;
    };
    const auto t0 = std::chrono::steady_clock::now();
    int code = kOk;
    if (a.id == "cartesian-complete") {
        const auto s = need(a.s, "s"), t = need(a.t, "t");
        auto base = cartesian_complete_model(s, t);
        code = emit(product(ProductKind::cartesian, complete_graph(s), complete_graph(t)), base.model, c, a.host_out);
    } else if (a.id == "stars") {
        const auto r = need(a.r, "r"), t = need(a.t, "t");
        code = emit(product(ProductKind::strong, star_graph(r), star_graph(t)), star_model(r, t), c, a.host_out);
    } else if (a.id == "direct-k3") {
        const auto t = need(a.t, "t");
        code = emit(product(ProductKind::direct, complete_graph(t), complete_graph(3)), direct_k3_model(t), c,
                    a.host_out);
    } else if (a.id == "direct-general") {
        const auto t = need(a.t, "t"), s = need(a.s, "s");
        code = emit(product(ProductKind::direct, complete_graph(t), complete_graph(s)), direct_general_model(t, s), c,
                    a.host_out);
    } else if (a.id == "hamming") {
        const auto n = need(a.n, "n"), d = need(a.d, "d");
        code = emit(hamming_graph(n, d), hamming_model(n, d), c, a.host_out);
    } else if (a.id == "cartesian-lift" || a.id == "strong" || a.id == "lex" || a.id == "best") {
        const Graph g = load_graph(a.ga), h = load_graph(a.gb);
        const auto mg = factor_model(g, a.ma, c, "first factor");
        const auto mh = factor_model(h, a.mb, c, "second factor");
        if (a.id == "cartesian-lift") {
            auto base = default_cartesian_base(mg.clique_order(), mh.clique_order());
            code = emit(product(ProductKind::cartesian, g, h), cartesian_lift(g, mg, h, mh, base), c, a.host_out);
        } else if (a.id == "strong" || a.id == "lex") {
            const auto kind = a.id == "strong" ? ProductKind::strong : ProductKind::lexicographic;
            code = emit(product(kind, g, h), strong_model(g, mg, h, mh, kind), c, a.host_out);
        } else {
            const auto kind = parse_product_kind(a.kind);
            BestBound best = best_lower_bound(g, mg, h, mh, kind);
            if (!best.model) {
                std::cout << "NONE " << best.route << "\n";
                return kOk;
            }
            std::cout << "route " << best.route << "\n";
            code = emit(product(kind, g, h), *best.model, c, a.host_out);
        }
    } else {
        throw ParameterError("unknown construction '" + a.id + "'");
    }
    std::cerr << "time " << seconds_since(t0) << "s\n";
    return code;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, const Common& c) {
    const Graph g = load_graph(graph_path);
    const Certificate cert = read_certificate_file(cert_path);
    const std::string hash = graph_hash(g);
    if (cert.graph_hash != hash && !c.ignore_hash) {
        std::cerr << "hash mismatch: certificate " << cert.graph_hash << ", graph " << hash << "\n";
        std::cout << "HASH_MISMATCH\n";
        return kHashMismatch;
    }
    const Verdict v = verify_odd_expansion(g, cert.model, {.require_connectors = c.strict, .jobs = c.jobs});
    std::cout << v.summary(cert.model.clique_order()) << "\n";
    return v ? kOk : kVerifyFail;
}

int cmd_exact(const std::string& graph_path, const Common& c) {
    const Graph g = load_graph(graph_path);
    const auto t0 = std::chrono::steady_clock::now();
    const ExactResult res = odd_hadwiger(g, c.budget(), c.options());
    std::cout << "graph_hash " << graph_hash(g) << "\n";
    switch (res.status) {
    case ExactStatus::exact: std::cout << "EXACT " << res.value << "\n"; break;
    case ExactStatus::lower_bound_only: std::cout << "LOWER_BOUND " << res.value << "\n"; break;
    case ExactStatus::timeout: std::cout << "TIMEOUT best=" << res.value << "\n"; break;
    }
    if (res.refutation_order) std::cout << "refuted order " << *res.refutation_order << "\n";
    if (!c.out.empty()) {
        write_certificate_file(c.out, res.certificate, graph_hash(g));
        std::cout << "certificate " << c.out << "\n";
    }
    std::cerr << "nodes " << res.nodes << " time " << seconds_since(t0) << "s\n";
    return res.status == ExactStatus::timeout ? kTimeout : kOk;
}

struct TableArgs {
    std::string which;
    std::string s_range = "2..6", t_range = "2..6", r_range = "1..4";
    bool oracle = false;
};

int cmd_table(const TableArgs& a, const Common& c) {
    struct Row {
        std::string params;
        Graph host;
        OddExpansionModel model;
    };
    std::vector<Row> rows;
    auto [slo, shi] = parse_range(a.s_range);
    auto [tlo, thi] = parse_range(a.t_range);
    auto [rlo, rhi] = parse_range(a.r_range);
    auto label = [](std::initializer_list<std::pair<const char*, int>> kv) {
        std::ostringstream out;
        for (auto [k, v] : kv) out << k << "=" << v << " ";
        return out.str();
    };
    if (a.which == "cartesian-complete") {
        for (int s = slo; s <= shi; ++s)
            for (int t = tlo; t <= thi; ++t)
                rows.push_back({label({{"s", s}, {"t", t}}),
                                product(ProductKind::cartesian, complete_graph(s), complete_graph(t)),
                                cartesian_complete_model(s, t).model});
    } else if (a.which == "direct-k3") {
        for (int t = tlo; t <= thi; ++t)
            rows.push_back({label({{"t", t}}), product(ProductKind::direct, complete_graph(t), complete_graph(3)),
                            direct_k3_model(t)});
    } else if (a.which == "direct-general") {
        for (int t = tlo; t <= thi; ++t)
            for (int s = slo; s <= shi; ++s)
                rows.push_back({label({{"t", t}, {"s", s}}),
                                product(ProductKind::direct, complete_graph(t), complete_graph(s)),
                                direct_general_model(t, s)});
    } else if (a.which == "stars") {
        for (int r = rlo; r <= rhi; ++r)
            for (int t = tlo; t <= thi; ++t)
                rows.push_back({label({{"r", r}, {"t", t}}), product(ProductKind::strong, star_graph(r), star_graph(t)),
                                star_model(r, t)});
    } else {
        throw ParameterError("unknown table '" + a.which + "' (cartesian-complete, direct-k3, direct-general, stars)");
    }

    int code = kOk;
    for (const auto& row : rows) {
        const Verdict v = verify_odd_expansion(row.host, row.model, {.require_connectors = true, .jobs = c.jobs});
        std::cout << row.params << "order=" << row.model.clique_order() << " " << (v ? "PASS" : "FAIL");
        if (!v) code = kVerifyFail;
        if (a.oracle) {
            if (row.host.order() <= c.max_n) {
                const ExactResult res = odd_hadwiger(row.host, c.budget(), c.options());
                std::cout << " oracle=" << (res.status == ExactStatus::exact ? "" : ">=") << res.value;
            } else {
                std::cout << " oracle=-";
            }
        }
        std::cout << "\n";
    }
    return code;
}

int cmd_product(const std::string& kind, const std::string& fa, const std::string& fb, const std::string& out) {
    const Graph p = product(parse_product_kind(kind), load_graph(fa), load_graph(fb));
    if (!out.empty()) write_graph_file(out, p);
    std::cout << "n=" << p.order() << " m=" << p.size() << "\n";
    return kOk;
}

int cmd_named(const std::string& family, const std::vector<int>& params, const std::string& out) {
    const Graph g = make_named_graph(parse_family(family), params);
    if (out.empty())
        std::cout << to_text(g);
    else
        write_graph_file(out, g);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Odd clique minors in graph products: constructions, verifier and exact search"};
    app.require_subcommand(1);
    Common common;

    std::string kind, fa, fb;
    auto* product_cmd = app.add_subcommand("product", "write the product of two graph files");
    product_cmd->add_option("kind", kind, "cartesian | direct | strong | lexicographic")->required();
    product_cmd->add_option("a", fa, "first factor")->required();
    product_cmd->add_option("b", fb, "second factor")->required();
    product_cmd->add_option("--out", common.out, "output graph file");

    std::string family;
    std::vector<int> params;
    auto* named_cmd = app.add_subcommand("named", "write a named graph (complete, star, cycle, path, hamming)");
    named_cmd->add_option("family", family)->required();
    named_cmd->add_option("params", params)->required();
    named_cmd->add_option("--out", common.out, "output graph file");

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "build and self-verify a certificate");
    construct_cmd
        ->add_option("name", ca.id,
                     "cartesian-complete | cartesian-lift | strong | lex | stars | direct-k3 | direct-general | "
                     "hamming | best")
        ->required();
    construct_cmd->add_option("--s", ca.s);
    construct_cmd->add_option("--t", ca.t);
    construct_cmd->add_option("--r", ca.r);
    construct_cmd->add_option("--n", ca.n);
    construct_cmd->add_option("--d", ca.d);
    construct_cmd->add_option("--ga", ca.ga, "first factor graph");
    construct_cmd->add_option("--gb", ca.gb, "second factor graph");
    construct_cmd->add_option("--ma", ca.ma, "first factor certificate (default: exact search)");
    construct_cmd->add_option("--mb", ca.mb, "second factor certificate (default: exact search)");
    construct_cmd->add_option("--kind", ca.kind, "product kind for 'best'");
    construct_cmd->add_option("--out", common.out, "certificate file");
    construct_cmd->add_option("--host-out", ca.host_out, "host graph file");
    construct_cmd->add_flag("--ignore-hash", common.ignore_hash, "accept factor certificates for other graphs");
    add_search_flags(construct_cmd, common);

    std::string graph_path, cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("certificate", cert_path)->required();
    verify_cmd->add_flag("--strict", common.strict, "require a stored connector for every pair");
    verify_cmd->add_flag("--ignore-hash", common.ignore_hash, "skip the graph hash check");
    verify_cmd->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

    auto* exact_cmd = app.add_subcommand("exact", "compute the odd Hadwiger number by exhaustive search");
    exact_cmd->add_option("graph", graph_path)->required();
    exact_cmd->add_option("--out", common.out, "certificate file");
    add_search_flags(exact_cmd, common);

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "tabulate a construction family");
    table_cmd->add_option("which", ta.which, "cartesian-complete | direct-k3 | direct-general | stars")->required();
    table_cmd->add_option("--s", ta.s_range, "range LO..HI");
    table_cmd->add_option("--t", ta.t_range, "range LO..HI");
    table_cmd->add_option("--r", ta.r_range, "range LO..HI");
    table_cmd->add_flag("--oracle", ta.oracle, "add an exact-search column for hosts within --max-n");
    add_search_flags(table_cmd, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*product_cmd) return cmd_product(kind, fa, fb, common.out);
        if (*named_cmd) return cmd_named(family, params, common.out);
        if (*construct_cmd) return cmd_construct(ca, common);
        if (*verify_cmd) return cmd_verify(graph_path, cert_path, common);
        if (*exact_cmd) return cmd_exact(graph_path, common);
        if (*table_cmd) return cmd_table(ta, common);
    } catch (const HashMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHashMismatch;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParam;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParam;
    } catch (const ModelInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParam;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParam;
    }
    return kOk;
}
