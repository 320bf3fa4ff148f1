// Compares the serial reference sweep kernel against the OpenMP one on the
// same grid and checks that they agree bit for bit.

#include "fockps/sweep.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_run(const fockps::SweepSpec& spec, fockps::Execution exec,
                std::vector<fockps::SweepRow>& rows) {
    const auto t0 = std::chrono::steady_clock::now();
    rows = fockps::run_sweep(spec, exec);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const std::vector<fockps::SweepRow>& a, const std::vector<fockps::SweepRow>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(fockps::SweepRow)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    int steps = 400;
    if (argc > 1) steps = std::atoi(argv[1]);
    if (steps < 2) steps = 2;

    fockps::SweepSpec spec;
    spec.mu_min = 1e-3;
    spec.mu_max = 1.0;
    spec.mu_steps = steps;
    spec.eta_min = 1e-3;
    spec.eta_max = 1.0;
    spec.eta_steps = steps;
    spec.delta = std::numbers::pi / 4.0;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "grid: " << steps << " x " << steps << "\n";

    std::vector<fockps::SweepRow> serial_rows, parallel_rows;
    const double t_serial = time_run(spec, fockps::Execution::serial, serial_rows);
    const double t_parallel = time_run(spec, fockps::Execution::parallel, parallel_rows);

    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";

    if (!identical(serial_rows, parallel_rows)) {
        std::cout << "MISMATCH: parallel kernel deviates from the serial reference\n";
        return 1;
    }
    std::cout << "kernels agree bit for bit\n";
    return 0;
}
