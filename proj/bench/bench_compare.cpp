// Times each enumeration kernel serially and with the OpenMP split, and
// insists both routes return the same answer before reporting the speedup.
#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "aspen/enumerate.hpp"
#include "aspen/weight_poly.hpp"

using namespace aspen;

namespace {

struct Workload {
    std::string name;
    std::function<std::string(int)> run;  // threads -> printable result
};

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    const int par = std::max(1u, std::thread::hardware_concurrency());

    const std::vector<Workload> workloads = {
        {"ast_count(7)", [](int t) { return ast_count(7, t).get_str(); }},
        {"asp_genpoly(7,1,9)", [](int t) { return asp_genpoly(7, 1, 9, t).to_string(); }},
        {"magog_genpoly(0,7,5,9)",
         [](int t) { return magog_genpoly({0, 7, 5, 9}, t).to_string(); }},
        {"gog_count(0,7,7,0)", [](int t) { return gog_count({0, 7, 7, 0}, t).get_str(); }},
        {"asm_count(7)", [](int t) { return asm_count(7, t).get_str(); }},
    };

    std::printf("threads: serial 1 vs parallel %d, best of %d runs\n", par, reps);
    bool all_equal = true;
    for (const auto& w : workloads) {
        std::string serial_result, parallel_result;
        const double ts = best_of(reps, [&] { serial_result = w.run(1); });
        const double tp = best_of(reps, [&] { parallel_result = w.run(par); });
        const bool equal = serial_result == parallel_result;
        all_equal = all_equal && equal;
        std::printf("%-26s serial %8.3f ms   parallel %8.3f ms   x%.2f   %s\n", w.name.c_str(),
                    ts * 1e3, tp * 1e3, tp > 0 ? ts / tp : 0.0,
                    equal ? "results equal" : "RESULTS DIFFER");
    }
    if (!all_equal) {
        std::printf("FAIL: parallel kernels disagree with the serial reference\n");
        return 1;
    }
    return 0;
}
