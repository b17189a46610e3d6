// Timing comparison between the OpenMP kernels and their serial references.
// The serial variants are the testing baseline; this tool reports how much the
// parallel paths gain (or cost) on the current machine and double-checks that
// both produce identical bytes/values.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rqi/cli.hpp"
#include "rqi/relboost.hpp"

using namespace rqi;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_seconds(F&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void print_row(const std::string& name, double serial_s, double parallel_s, double diff) {
    std::printf("%-28s %10.3f s %10.3f s %8.2fx   %10.3g\n", name.c_str(), serial_s,
                parallel_s, parallel_s > 0.0 ? serial_s / parallel_s : 0.0, diff);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run serially\n\n");
#endif
    std::printf("%-28s %12s %12s %9s %12s\n", "kernel", "serial", "parallel", "speedup",
                "max diff");

    for (int nodes : {21, 31}) {
        GaussianPacket g;
        g.nodes_per_axis = nodes;
        DensityMatrix serial_out = gaussian_boosted_spin_density_serial(g);
        DensityMatrix parallel_out = gaussian_boosted_spin_density(g);
        const double diff = serial_out.matrix.max_abs_diff(parallel_out.matrix);

        const double t_serial =
            time_seconds([&] { serial_out = gaussian_boosted_spin_density_serial(g); });
        const double t_parallel =
            time_seconds([&] { parallel_out = gaussian_boosted_spin_density(g); });
        print_row("gaussian packet " + std::to_string(nodes) + "^3", t_serial, t_parallel,
                  diff);
    }

    {
        const SweepSpec spec = preset_sweep("fig2");
        std::string serial_csv, parallel_csv;
        const double t_serial = time_seconds([&] { serial_csv = run_sweep(spec, false); });
        const double t_parallel = time_seconds([&] { parallel_csv = run_sweep(spec, true); });
        print_row("sweep fig2 (49x49 grid)", t_serial, t_parallel,
                  serial_csv == parallel_csv ? 0.0 : 1.0);
    }
    return 0;
}
