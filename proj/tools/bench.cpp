#include "eisenzero/series.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

namespace {

using namespace eisenzero;
using Clock = std::chrono::steady_clock;

struct Case {
    const char* name;
    EvalResult (*parallel)(const ComplexPoint&, const Weight&, const TruncationPolicy&);
    EvalResult (*serial)(const ComplexPoint&, const Weight&, const TruncationPolicy&);
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 101;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    const Weight w(k);
    const TruncationPolicy policy;

    std::vector<ComplexPoint> grid;
    for (int i = 0; i < 24; ++i) {
        grid.emplace_back(-0.45 + 0.9 * i / 23.0, 0.55 + 0.9 * (i % 7) / 6.0);
    }

    const Case cases[] = {
        {"E_inf ", &eval_E_inf, &ref::eval_E_inf},
        {"E_0   ", &eval_E_0_lattice, &ref::eval_E_0_lattice},
        {"E_half", &eval_E_half_lattice, &ref::eval_E_half_lattice},
    };

    std::printf("k = %d, %zu points, best of %d reps\n", k, grid.size(), reps);
    std::printf("%-7s %12s %12s %10s %12s\n", "series", "parallel/ms", "serial/ms", "speedup",
                "max |diff|");
    for (const Case& c : cases) {
        double best_par = 1e300;
        double best_ser = 1e300;
        double max_diff = 0.0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = Clock::now();
            std::vector<EvalResult> par;
            par.reserve(grid.size());
            for (const ComplexPoint& z : grid) par.push_back(c.parallel(z, w, policy));
            best_par = std::min(best_par, ms_since(t0));

            t0 = Clock::now();
            std::vector<EvalResult> ser;
            ser.reserve(grid.size());
            for (const ComplexPoint& z : grid) ser.push_back(c.serial(z, w, policy));
            best_ser = std::min(best_ser, ms_since(t0));

            for (std::size_t i = 0; i < grid.size(); ++i) {
                max_diff = std::max(max_diff, std::abs(par[i].value - ser[i].value));
            }
        }
        std::printf("%-7s %12.3f %12.3f %9.2fx %12.3e\n", c.name, best_par, best_ser,
                    best_ser / best_par, max_diff);
    }
    return 0;
}
