// Times the OpenMP subset-scan kernel against the serial reference on the
// same instance and checks they agree.
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "enum2c/bruteforce.hpp"

using namespace enum2c;

namespace {

template <class F>
double time_ms(F&& fn, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock::now();
        fn();
        auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP brute-force component scan"};
    int n = 18, reps = 3;
    double p = 0.25;
    std::uint64_t seed = 1;
    std::string mode_str = "e";
    app.add_option("--n", n, "vertex count (<= 22)");
    app.add_option("--p", p, "edge probability");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--reps", reps, "repetitions, best-of");
    app.add_option("--mode", mode_str, "e or v")->check(CLI::IsMember({"e", "v"}));
    CLI11_PARSE(app, argc, argv);

    Mode mode = mode_str == "e" ? Mode::edge : Mode::vertex;
    Graph g = random_graph(n, p, seed);
    std::cout << "instance: n=" << n << " m=" << g.num_edges() << " mode=" << mode_str << '\n';

    std::vector<VertexList> serial, parallel;
    double t_serial = time_ms([&] { serial = brute::components_serial(g, mode); }, reps);
    double t_parallel = time_ms([&] { parallel = brute::components(g, mode); }, reps);

    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel kernels\n";
        return 1;
    }
    std::cout << "components: " << serial.size() << '\n'
              << "serial:   " << t_serial << " ms\n"
              << "parallel: " << t_parallel << " ms\n"
              << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
    return 0;
}
