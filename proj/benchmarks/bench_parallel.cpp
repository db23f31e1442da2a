// Serial versus OpenMP timings for the two embarrassingly parallel layers:
// the per-element cone/basis table and the saturation sweep.

#include "demazure/cone.hpp"
#include "demazure/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace dmz;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

size_t table_workload(const WeylGroup& g, bool parallel) {
    size_t total = 0;
    HilbertBasisOptions opts;
    opts.parallel = parallel;
    std::vector<size_t> sizes(g.order());
    int threads = parallel ? omp_get_max_threads() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t w = 0; w < g.order(); ++w) {
        SemigroupCone cone = cone_build(g, int(w));
        sizes[w] = hilbert_basis(g, cone, opts).basis.size();
    }
    for (size_t s : sizes) total += s;
    return total;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());

    {
        RootDatum f4 = RootDatum::build('F', 4);
        WeylGroup g(f4);
        std::vector<int> sample;  // short elements: cone sizes stay benchmark-friendly
        for (size_t w = 0; w < g.order(); ++w)
            if (g.length(int(w)) <= 4) sample.push_back(int(w));
        size_t serial_total = 0, parallel_total = 0;
        double ts = time_s([&] {
            HilbertBasisOptions o;
            o.parallel = false;
            for (int w : sample) serial_total += hilbert_basis(g, cone_build(g, w), o).basis.size();
        });
        double tp = time_s([&] {
            HilbertBasisOptions o;
            std::vector<size_t> sizes(sample.size());
#pragma omp parallel for schedule(dynamic)
            for (size_t k = 0; k < sample.size(); ++k)
                sizes[k] = hilbert_basis(g, cone_build(g, sample[k]), o).basis.size();
            for (size_t s : sizes) parallel_total += s;
        });
        std::printf("cone table  (%zu short F4 elements): serial %.2fs  parallel %.2fs  speedup %.2fx  (checksum %zu/%zu)\n",
                    sample.size(), ts, tp, ts / tp, serial_total, parallel_total);
        if (serial_total != parallel_total) {
            std::printf("MISMATCH between serial and parallel results\n");
            return 1;
        }
    }

    {
        RootDatum b3 = RootDatum::build('B', 3);
        WeylGroup g(b3);
        std::vector<SweepInstance> instances;
        for (const auto& lam : enumerate_lambdas(3, 2))
            for (size_t w = 0; w < g.order(); w += 4) instances.push_back({lam, int(w)});
        SweepOptions serial;
        serial.parallel = false;
        SweepOptions parallel;
        std::string a, b;
        double ts = time_s([&] { a = dump_json(run_saturation_sweep(g, instances, serial).to_json()); });
        double tp = time_s([&] { b = dump_json(run_saturation_sweep(g, instances, parallel).to_json()); });
        std::printf("sweep  (B3, %zu instances): serial %.2fs  parallel %.2fs  speedup %.2fx  (reports %s)\n",
                    instances.size(), ts, tp, ts / tp, a == b ? "identical" : "DIFFER");
        if (a != b) return 1;
    }

    {
        RootDatum g2 = RootDatum::build('G', 2);
        WeylGroup g(g2);
        double t = time_s([&] { table_workload(g, true); });
        std::printf("full G2 table: %.3fs\n", t);
    }
    return 0;
}
