// Compares the serial reference enumeration against the parallel one on a few
// rings whose subring lattices are large enough to measure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "maxsub/finring.hpp"
#include "maxsub/subrings.hpp"

using namespace maxsub;

namespace {

double time_ms(const FiniteRing& r, Exec exec, std::size_t reps, std::size_t& count) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (std::size_t i = 0; i < reps; ++i) {
        auto t0 = clock::now();
        auto subs = enumerate_subrings(r, exec);
        auto t1 = clock::now();
        count = subs.size();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t reps = 3;
    if (argc > 1) reps = std::stoul(argv[1]);

    const std::vector<std::string> specs = {
        "product(GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1))",
        "product(GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1))",
        "product(GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1))",
        "product(GF(3,2),GF(3,2))",
        "dual(GF(2,4))",
        "dual(GF(2,2))",
    };

    std::printf("%-64s %8s %12s %12s %9s\n", "spec", "subrings", "serial(ms)", "parallel(ms)",
                "speedup");
    for (const std::string& s : specs) {
        FiniteRing r = FiniteRing::build(s);
        std::size_t ns = 0, np = 0;
        double ts = time_ms(r, Exec::Serial, reps, ns);
        double tp = time_ms(r, Exec::Parallel, reps, np);
        if (ns != np) {
            std::printf("%-64s MISMATCH serial=%zu parallel=%zu\n", s.c_str(), ns, np);
            return 1;
        }
        std::printf("%-64s %8zu %12.2f %12.2f %8.2fx\n", s.c_str(), ns, ts, tp, ts / tp);
    }
    return 0;
}
