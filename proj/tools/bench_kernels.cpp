// Timing comparison of the counting paths: OpenMP kernel vs the serial
// kernel vs the naive box-scan oracle.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nzflow/flow_count.hpp"
#include "nzflow/graph_io.hpp"

using namespace nzflow;

namespace {

template <class F>
double ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_graph(const std::string& name, std::int64_t k, bool with_oracle) {
    Multigraph g = example_graph(name);
    CapacityVector kv(static_cast<std::size_t>(g.edge_count()), k);
    auto q = FlowCountQuery::open_nowhere_zero(kv);

    mpz_class par, ser, orc;
    double t_par = ms([&] { par = count_flows(g, q); });
    double t_ser = ms([&] { ser = count_flows_serial(g, q); });
    double t_orc = -1;
    if (with_oracle) t_orc = ms([&] { orc = oracle_count(g, q); });

    std::printf("%-6s k=%-3lld count=%-12s  omp %8.2f ms  serial %8.2f ms",
                name.c_str(), static_cast<long long>(k), par.get_str().c_str(), t_par,
                t_ser);
    if (with_oracle) std::printf("  oracle %8.2f ms", t_orc);
    std::printf("\n");
    if (par != ser || (with_oracle && par != orc)) {
        std::printf("MISMATCH between paths!\n");
        std::exit(1);
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    bench_graph("3k2", 40, true);
    bench_graph("k4", 10, true);
    bench_graph("prism", 2, true);
    bench_graph("prism", 8, false);
    bench_graph("prism", 16, false);
    bench_graph("prism", 24, false);
    bench_graph("prism", 48, false);
    return 0;
}
