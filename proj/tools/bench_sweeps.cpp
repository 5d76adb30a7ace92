// Compares the OpenMP minor sweep against the serial reference on symbolic
// sequence-network weight matrices of growing size.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tnn/logconcavity.hpp"
#include "tnn/matrix.hpp"

using namespace tnn;

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int max_n = 7;
    int repeats = 3;
    if (argc > 1) max_n = std::atoi(argv[1]);
    if (argc > 2) repeats = std::atoi(argv[2]);
    if (max_n < 2 || repeats < 1) {
        std::fprintf(stderr, "usage: %s [max-order >= 2] [repeats >= 1]\n", argv[0]);
        return 2;
    }

    std::printf("%-8s %-6s %12s %12s %8s\n", "order", "minors", "serial[s]", "parallel[s]",
                "speedup");
    for (int n = 3; n <= max_n; ++n) {
        PlanarNetwork net = sequence_network_symbolic(n - 1, n);
        PolyMatrix W = net.weight_matrix();

        long minors = 0;
        for (const auto& I : index_sets_upto(n, n))
            for (const auto& J : index_sets_upto(n, n))
                if (I.size() == J.size()) ++minors;

        double serial = 1e300, parallel = 1e300;
        MinorSweepReport rs, rp;
        for (int r = 0; r < repeats; ++r) {
            serial = std::min(serial, timed([&] { rs = all_minors_subtraction_free_serial(W, n); }));
            parallel = std::min(parallel, timed([&] { rp = all_minors_subtraction_free(W, n); }));
        }
        if (rs.ok != rp.ok || rs.failing_rows != rp.failing_rows ||
            rs.failing_cols != rp.failing_cols) {
            std::fprintf(stderr, "sweep mismatch at order %d\n", n);
            return 1;
        }
        std::printf("%-8d %-6ld %12.4f %12.4f %7.2fx\n", n, minors, serial, parallel,
                    serial / parallel);
    }
    return 0;
}
