#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "enum2c/bruteforce.hpp"
#include "enum2c/diff_io.hpp"
#include "enum2c/engine.hpp"
#include "enum2c/verify.hpp"

using namespace enum2c;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string read_all(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Graph load_graph(const std::string& path) {
    if (path == "-") return parse_graph(read_all(std::cin));
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
    return parse_graph(read_all(f));
}

void print_stats(const EngineStats& st) {
    std::cerr << "components " << st.records << '\n'
              << "oracle_calls " << st.oracle_calls << '\n'
              << "loop_iterations " << st.loop_iterations << '\n'
              << "max_iter_gap " << st.iter_gap_max << '\n'
              << "mean_iter_gap " << st.mean_iter_gap() << '\n'
              << "max_oracle_gap " << st.oracle_gap_max << '\n'
              << "mean_oracle_gap " << st.mean_oracle_gap() << '\n'
              << "max_ops_per_record " << st.ops_max << '\n'
              << "max_delay_ns " << st.delay_max_ns << '\n'
              << "mean_delay_ns " << st.mean_delay_ns() << '\n'
              << "peak_x " << st.peak_x << '\n'
              << "peak_seq " << st.peak_seq << '\n'
              << "peak_idx " << st.peak_idx << '\n'
              << "peak_depth " << st.peak_depth << '\n';
}

int run_enumerate(Mode mode, const std::string& input, const std::string& output,
                  bool want_stats, bool self_check) {
    Graph g;
    try {
        g = load_graph(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const int n = g.num_vertices();

    EngineStats st;
    st.timing = want_stats;
    long long count = 0;
    std::vector<DiffRecord> kept;  // only populated for --self-check
    VertexSet current(n);

    RecordSink sink = [&](const DiffRecord& r) {
        ++count;
        if (self_check) kept.push_back(r);
        if (output == "diff") {
            std::cout << format_record(r) << '\n' << std::flush;
        } else if (output == "full") {
            if (r.is_root()) {
                current.clear();
                for (int v : r.full) current.add(v);
            } else {
                for (const auto& op : r.ops)
                    for (int v : op.vertices)
                        op.sign == '+' ? current.add(v) : current.remove(v);
            }
            bool first = true;
            for (int v : current.sorted_members()) {
                if (!first) std::cout << ' ';
                first = false;
                std::cout << v;
            }
            std::cout << '\n' << std::flush;
        }
        return true;
    };
    enumerate_all(g, mode, sink, &st);
    if (output == "count") std::cout << count << '\n';
    if (want_stats) print_stats(st);

    if (self_check) {
        if (n > 12) {
            std::cerr << "self-check skipped: n > 12\n";
        } else {
            auto streamed = reconstruct(kept);
            std::sort(streamed.begin(), streamed.end());
            auto expected = brute::components(g, mode);
            if (streamed != expected) {
                std::cerr << "self-check FAILED: enumeration disagrees with brute force\n"
                          << "witness graph:\n"
                          << serialize_graph(g);
                return kExitMismatch;
            }
            std::cerr << "self-check ok: " << expected.size() << " components\n";
        }
    }
    return 0;
}

int run_gen(int n, double p, std::uint64_t seed) {
    Graph g;
    try {
        g = random_graph(n, p, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::cout << serialize_graph(g);
    return 0;
}

int run_verify(int n_max, int trials, std::uint64_t seed) {
    if (n_max < 2 || n_max > 12) {
        std::cerr << "error: --n-max must be in [2,12]\n";
        return kExitUsage;
    }
    verify::SuiteOptions opt;
    opt.n_max = n_max;
    opt.trials = trials;
    opt.seed = seed;
    opt.log = &std::cerr;
    auto failure = verify::run_suite(opt);
    if (failure) {
        std::cerr << "verify FAILED [" << failure->check << "]: " << failure->detail << '\n'
                  << "witness graph:\n"
                  << failure->graph_text;
        return kExitMismatch;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming enumeration of vertex sets inducing 2-edge- or "
                 "2-vertex-connected subgraphs"};
    app.require_subcommand(1);

    std::string mode_str, input = "-", output = "diff";
    bool want_stats = false, self_check = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate components of a graph file");
    cmd_enum->add_option("--mode", mode_str, "connectivity mode: e or v")
        ->required()
        ->check(CLI::IsMember({"e", "v"}));
    cmd_enum->add_option("--input", input, "edge-list file, or - for stdin");
    cmd_enum->add_option("--output", output, "output form")
        ->check(CLI::IsMember({"full", "diff", "count"}));
    cmd_enum->add_flag("--stats", want_stats, "print run statistics to stderr");
    cmd_enum->add_flag("--self-check", self_check, "cross-verify against brute force (n <= 12)");

    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    auto* cmd_gen = app.add_subcommand("gen", "write a seeded random graph to stdout");
    cmd_gen->add_option("--n", gen_n, "vertex count")->required();
    cmd_gen->add_option("--p", gen_p, "edge probability");
    cmd_gen->add_option("--seed", gen_seed, "random seed");

    int v_nmax = 5, v_trials = 60;
    std::uint64_t v_seed = 1;
    auto* cmd_verify = app.add_subcommand("verify", "run the self-verification suite");
    cmd_verify->add_option("--n-max", v_nmax, "largest instance size (2..12)");
    cmd_verify->add_option("--trials", v_trials, "number of random instances");
    cmd_verify->add_option("--seed", v_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_enum->parsed())
            return run_enumerate(mode_str == "e" ? Mode::edge : Mode::vertex, input, output,
                                 want_stats, self_check);
        if (cmd_gen->parsed()) return run_gen(gen_n, gen_p, gen_seed);
        if (cmd_verify->parsed()) return run_verify(v_nmax, v_trials, v_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
