// Benchmark comparing the serial reference executor against the OpenMP
// executor on the heavy sample-parallel checks.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vf21/identity.hpp"

int main(int argc, char** argv) {
    int samples = 40;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--samples" && i + 1 < argc) samples = std::atoi(argv[++i]);
        if (a == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    }
    vf21::SuiteConfig cfg;
    cfg.samples = samples;
    cfg.threads = threads;
    cfg.only = {"ybe_r21", "ybe_face_w22", "vertex_face_fused", "dual_vertex_face",
                "s_dual_vertex_face", "ybe_r8", "lop_cross_route"};

    auto time_run = [&](auto&& fn, const char* label) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto reports = fn(cfg);
        const auto t1 = std::chrono::steady_clock::now();
        const double dt = std::chrono::duration<double>(t1 - t0).count();
        std::printf("%-10s %7.3f s   (%zu reports)\n", label, dt, reports.size());
        return reports;
    };

    const auto serial = time_run(vf21::run_suite_serial, "serial");
    const auto parallel = time_run(vf21::run_suite, "openmp");

    bool identical = serial.size() == parallel.size();
    if (identical)
        for (size_t i = 0; i < serial.size(); ++i)
            if (serial[i].check_id != parallel[i].check_id ||
                serial[i].residual != parallel[i].residual)
                identical = false;
#ifdef _OPENMP
    std::printf("threads: %d\n", threads > 0 ? threads : omp_get_max_threads());
#else
    std::printf("threads: OpenMP disabled at build time\n");
#endif
    std::printf("serial/parallel results bit-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
