// Command line front end: subcommands for the path cover, the reachability
// index, the DP algorithms, anchor generation, synthetic graphs and the
// naive-vs-cover chaining benchmark.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dagchain/anchors.hpp"
#include "dagchain/bench.hpp"
#include "dagchain/chain.hpp"
#include "dagchain/graph.hpp"
#include "dagchain/lcs.hpp"
#include "dagchain/lis.hpp"
#include "dagchain/mpc.hpp"
#include "dagchain/reach.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// Whitespace separated non-negative integer symbol codes; '#' comments.
std::vector<dagchain::Symbol> parse_sequence(const std::string& text) {
    std::vector<dagchain::Symbol> seq;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long s = 0;
        while (ls >> s) {
            if (s < 0) throw std::runtime_error("negative symbol code in sequence file");
            seq.push_back(s);
        }
    }
    return seq;
}

struct CoverContext {
    dagchain::PathCover cover;
    dagchain::ForwardLinks links;
};

CoverContext cover_context(const dagchain::LabeledDag& dag) {
    CoverContext ctx;
    ctx.cover = dagchain::minimum_path_cover(dag);
    const auto l2r = dagchain::last_to_reach(dag, ctx.cover);
    ctx.links = dagchain::forward_links(ctx.cover, l2r);
    return ctx;
}

// All CLI input and output stays in the id space of the graph file; when
// parsing renumbered the nodes, translate in both directions.
struct IdSpace {
    std::vector<int> to_old; // renumbered id -> file id

    explicit IdSpace(const dagchain::ParsedDag& parsed) {
        to_old.assign(parsed.old_to_new.size(), 0);
        for (std::size_t old_id = 1; old_id < parsed.old_to_new.size(); ++old_id)
            to_old[static_cast<std::size_t>(parsed.old_to_new[old_id])] = static_cast<int>(old_id);
        map_in = parsed.old_to_new;
    }
    int original(int v) const { return to_old[static_cast<std::size_t>(v)]; }
    int internal(int v) const {
        if (v < 1 || v >= static_cast<int>(map_in.size()))
            throw std::runtime_error("node id " + std::to_string(v) + " out of range");
        return map_in[static_cast<std::size_t>(v)];
    }

private:
    std::vector<int> map_in; // file id -> renumbered id
};

std::string bench_json_lines(const dagchain::BenchReport& report) {
    std::ostringstream out;
    for (const auto& r : report.records) {
        nlohmann::json j{{"nodes", r.nodes},           {"edges", r.edge_count}, {"k", r.width},
                         {"anchors", r.anchor_count},  {"naive_ms", r.naive_ms}, {"mpc_ms", r.mpc_ms},
                         {"coverage", r.coverage},     {"graph_seed", r.graph_seed}, {"read", r.read_index}};
        out << j.dump() << '\n';
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum path cover boosted dynamic programming on DAGs"};
    app.require_subcommand(1);

    std::string graph_file, seq_file, anchor_file, pairs_file, out_file;
    std::string method = "mpc";
    std::string format = "text";
    bool trace = false, report_width = false;
    int min_len = 1, gen_nodes = 1000, gen_width = 5, gen_alphabet = 4;
    long long max_anchors = -1, extra_edges = -1;
    std::uint64_t seed = 1;

    auto* cmd_mpc = app.add_subcommand("mpc", "minimum path cover of a DAG");
    cmd_mpc->add_option("graph", graph_file)->required();

    auto* cmd_reach = app.add_subcommand("reach", "reachability queries on an arbitrary digraph");
    cmd_reach->add_option("graph", graph_file)->required();
    cmd_reach->add_option("--pairs", pairs_file, "file with one \"x y\" query per line")->required();

    auto* cmd_lis = app.add_subcommand("lis", "longest increasing subsequence over path labels");
    cmd_lis->add_option("graph", graph_file)->required();

    auto* cmd_lcs = app.add_subcommand("lcs", "longest common subsequence between a DAG and a sequence");
    cmd_lcs->add_option("graph", graph_file)->required();
    cmd_lcs->add_option("sequence", seq_file)->required();

    auto* cmd_anchors = app.add_subcommand("anchors", "exact-match anchors between a DAG and a read");
    cmd_anchors->add_option("graph", graph_file)->required();
    cmd_anchors->add_option("sequence", seq_file)->required();
    cmd_anchors->add_option("--min-len", min_len, "minimum anchor length")->default_val(1);
    cmd_anchors->add_option("--max-anchors", max_anchors, "keep only this many longest anchors");
    cmd_anchors->add_option("--out", out_file, "output file (default stdout)");

    auto* cmd_chain = app.add_subcommand("chain", "co-linear chaining of anchors");
    cmd_chain->add_option("graph", graph_file)->required();
    cmd_chain->add_option("anchors", anchor_file)->required();
    cmd_chain->add_option("--method", method, "naive|mpc|overlap")->default_val("mpc");
    cmd_chain->add_flag("--trace", trace, "also print the chain");

    auto* cmd_generate = app.add_subcommand("generate", "synthetic DAG with bounded width");
    cmd_generate->add_option("--nodes", gen_nodes)->default_val(1000);
    cmd_generate->add_option("--width", gen_width)->default_val(5);
    cmd_generate->add_option("--alphabet", gen_alphabet)->default_val(4);
    cmd_generate->add_option("--seed", seed)->default_val(1);
    cmd_generate->add_option("--extra-edges", extra_edges, "cross edge attempts (default: node count)");
    cmd_generate->add_option("--out", out_file, "output file (default stdout)");
    cmd_generate->add_flag("--report-width", report_width, "append the computed width as a comment");

    dagchain::BenchConfig bench_cfg;
    auto* cmd_bench = app.add_subcommand("bench", "naive vs cover-based chaining benchmark");
    cmd_bench->add_option("--sizes", bench_cfg.node_sizes, "graph sizes")->delimiter(',');
    cmd_bench->add_option("--widths", bench_cfg.widths, "target widths")->delimiter(',');
    cmd_bench->add_option("--alphabet", bench_cfg.alphabet)->default_val(4);
    cmd_bench->add_option("--read-length", bench_cfg.read_length)->default_val(1000);
    cmd_bench->add_option("--mutation-rate", bench_cfg.mutation_rate)->default_val(0.02);
    cmd_bench->add_option("--min-len", bench_cfg.min_length)->default_val(1);
    cmd_bench->add_option("--max-anchors", bench_cfg.max_anchors);
    cmd_bench->add_option("--reads", bench_cfg.reads_per_graph)->default_val(1);
    cmd_bench->add_option("--reps", bench_cfg.reps)->default_val(3);
    cmd_bench->add_option("--seed", bench_cfg.seed)->default_val(1);
    cmd_bench->add_option("--extra-edges", bench_cfg.extra_edges);
    cmd_bench->add_option("--out", out_file, "output file (default stdout)");
    cmd_bench->add_option("--format", format, "json|text")->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_mpc) {
            const auto parsed = dagchain::parse_dag(slurp(graph_file));
            const IdSpace ids(parsed);
            const auto cover = dagchain::minimum_path_cover(parsed.dag);
            std::cout << cover.path_count() << '\n';
            for (const auto& path : cover.paths) {
                for (std::size_t i = 0; i < path.size(); ++i) std::cout << (i ? " " : "") << ids.original(path[i]);
                std::cout << '\n';
            }
        } else if (*cmd_reach) {
            const auto g = dagchain::parse_digraph(slurp(graph_file));
            const auto index = dagchain::build_reach_index(g);
            std::istringstream in(slurp(pairs_file));
            std::string line;
            while (std::getline(in, line)) {
                std::size_t i = line.find_first_not_of(" \t\r");
                if (i == std::string::npos || line[i] == '#') continue;
                std::istringstream ls(line);
                int x = 0, y = 0;
                if (!(ls >> x >> y)) throw std::runtime_error("bad query line: " + line);
                std::cout << (index.reaches(x, y) ? 1 : 0) << '\n';
            }
        } else if (*cmd_lis) {
            const auto parsed = dagchain::parse_dag(slurp(graph_file));
            const IdSpace ids(parsed);
            const auto ctx = cover_context(parsed.dag);
            const auto res = dagchain::lis_dag(parsed.dag, ctx.cover, ctx.links);
            std::cout << res.length << '\n';
            for (std::size_t i = 0; i < res.witness.size(); ++i)
                std::cout << (i ? " " : "") << ids.original(res.witness[i].first);
            std::cout << '\n';
        } else if (*cmd_lcs) {
            const auto parsed = dagchain::parse_dag(slurp(graph_file));
            const IdSpace ids(parsed);
            const auto seq = parse_sequence(slurp(seq_file));
            const auto remapped = dagchain::remap_alphabet(parsed.dag, seq);
            const auto ctx = cover_context(remapped.dag);
            const auto res = dagchain::lcs_dag_sequence(remapped.dag, remapped.seq, ctx.cover, ctx.links);
            std::cout << res.length << '\n';
            for (std::size_t i = 0; i < res.witness.size(); ++i)
                std::cout << (i ? " " : "") << ids.original(res.witness[i].first) << ':' << res.witness[i].second;
            std::cout << '\n';
        } else if (*cmd_anchors) {
            const auto parsed = dagchain::parse_dag(slurp(graph_file));
            const IdSpace ids(parsed);
            const auto seq = parse_sequence(slurp(seq_file));
            auto anchors = dagchain::find_anchors(parsed.dag, seq, dagchain::AnchorParams{min_len, max_anchors});
            for (auto& a : anchors)
                for (auto& v : a.path) v = ids.original(v);
            write_out(out_file, dagchain::serialize_anchors(anchors));
        } else if (*cmd_chain) {
            const auto parsed = dagchain::parse_dag(slurp(graph_file));
            const IdSpace ids(parsed);
            auto anchors = dagchain::parse_anchors(slurp(anchor_file));
            for (auto& a : anchors)
                for (auto& v : a.path) v = ids.internal(v);
            dagchain::ChainResult res;
            if (method == "naive") {
                res = dagchain::chain_dag_naive(parsed.dag, anchors);
            } else if (method == "mpc" || method == "overlap") {
                const auto ctx = cover_context(parsed.dag);
                res = method == "mpc" ? dagchain::chain_dag_mpc(parsed.dag, ctx.cover, ctx.links, anchors)
                                      : dagchain::chain_dag_with_overlaps(parsed.dag, ctx.cover, ctx.links, anchors);
            } else {
                throw std::runtime_error("unknown method: " + method);
            }
            std::cout << "coverage " << res.coverage << '\n';
            std::cout << "best " << res.best_index << '\n';
            if (trace) {
                std::cout << "chain";
                for (int j : res.chain) std::cout << ' ' << j;
                std::cout << '\n';
            }
        } else if (*cmd_generate) {
            const auto dag = dagchain::generate_dag(gen_nodes, gen_width, gen_alphabet, seed, extra_edges);
            std::string text = dagchain::serialize(dag);
            if (report_width)
                text += "# width " + std::to_string(dagchain::minimum_path_cover(dag).path_count()) + "\n";
            write_out(out_file, text);
        } else if (*cmd_bench) {
            const auto report = dagchain::run_bench(bench_cfg);
            write_out(out_file, format == "json" ? bench_json_lines(report) : dagchain::render_text(report));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
